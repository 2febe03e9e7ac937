#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noiserect/denoisers.hpp"
#include "noiserect/synthprior.hpp"

namespace noiserect {

// One parsed key=value file. `[section]` headers prefix following keys as
// "section.key"; `#` / `;` lines are comments. Readers mark keys consumed so
// finish() can reject typos instead of silently ignoring them.
class KvFile {
public:
    static KvFile parse(const std::string& text, std::string origin,
                        std::filesystem::path dir = ".");
    static KvFile load(const std::filesystem::path& path);

    bool has(const std::string& key) const;

    std::optional<std::string> take(const std::string& key);
    std::string take_string(const std::string& key, const std::string& fallback);
    double take_double(const std::string& key, double fallback);
    long long take_int(const std::string& key, long long fallback);
    std::uint64_t take_uint(const std::string& key, std::uint64_t fallback);
    std::vector<double> take_doubles(const std::string& key);  // empty if absent
    std::string require(const std::string& key);

    // Throws a config error naming every key no reader asked for.
    void finish() const;

    const std::string& origin() const { return origin_; }
    const std::filesystem::path& dir() const { return dir_; }

private:
    struct Entry {
        std::string key;
        std::string value;
        bool consumed = false;
    };

    Entry* find(const std::string& key);
    const Entry* find(const std::string& key) const;

    std::vector<Entry> entries_;
    std::string origin_;
    std::filesystem::path dir_;
};

// Per-frame rectification weight specification: either the linear ramp
// 1 -> omega_min or an explicit per-frame list.
struct OmegaSpec {
    bool ramp = true;
    double omega_min = 0.5;
    std::vector<double> values;  // used when !ramp; must have exactly L entries

    std::vector<double> expand(int frame_count) const;
};

// Prior specification: a single drifting blob, or an arbitrary mixture loaded
// from a prior text file (see prior_io.hpp).
struct PriorSpec {
    enum class Kind { blob, file };

    Kind kind = Kind::blob;
    BlobScene scene;
    double sigma = 0.3;
    std::filesystem::path file;

    // Validates the prior's grid against the video dims.
    VideoPrior build(int frame_count, const LatentDims& dims) const;
};

// Where the conditioning image comes from: a prior draw, the prior's frame-0
// mean, or a 1-frame latent file.
struct ReferenceSpec {
    enum class Kind { sample, mean, file };

    Kind kind = Kind::sample;
    std::uint64_t seed = 0;
    std::filesystem::path file;

    ImageLatent resolve(const VideoPrior& prior) const;
};

struct RunConfig {
    std::uint64_t seed = 0;
    std::filesystem::path out_dir;
    int export_scale = 1;
    bool dump_trajectory = false;

    int T = 1000;
    double beta_start = 1e-4;
    double beta_end = 0.02;

    std::string sampler_kind = "ddim";
    double eta = 0.0;
    int K = 50;
    double strength = 1.0;

    int L = 16;
    LatentDims dims{1, 16, 16};

    PriorSpec prior;

    double bias_norm = 0.0;
    std::uint64_t bias_seed = 1;
    BiasScaling bias_scaling = BiasScaling::noise_level;

    ReferenceSpec reference;

    OmegaSpec omega;
    double tau_start = 0.0;
    double tau_end = 0.6;

    std::vector<double> condition;
};

RunConfig parse_run_config(KvFile& kv);
RunConfig load_run_config(const std::filesystem::path& path);

enum class SweepAxis { omega_min, tau_end, tau_start, bias_norm };

std::string to_string(SweepAxis axis);
SweepAxis sweep_axis_from_string(const std::string& name);

// The run template plus one swept axis; every (value, seed) pair becomes an
// independent run.
struct SweepSpec {
    RunConfig base;
    SweepAxis axis = SweepAxis::tau_end;
    std::vector<double> values;
    std::vector<std::uint64_t> seeds;
};

SweepSpec load_sweep_spec(const std::filesystem::path& path);

// Returns base with the axis value and run seed substituted.
RunConfig apply_axis(const RunConfig& base, SweepAxis axis, double value, std::uint64_t seed);

}  // namespace noiserect
