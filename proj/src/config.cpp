#include "noiserect/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "noiserect/error.hpp"
#include "noiserect/prior_io.hpp"
#include "noiserect/rectifier.hpp"
#include "noiserect/vlt_io.hpp"

namespace noiserect {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) {
        out.push_back(tok);
    }
    return out;
}

double parse_double_token(const std::string& tok, const std::string& key) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || tok.empty() || errno == ERANGE || !std::isfinite(v)) {
        throw Error::config("config: key '" + key + "': bad number '" + tok + "'");
    }
    return v;
}

long long parse_int_token(const std::string& tok, const std::string& key) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(tok.c_str(), &end, 10);
    if (end != tok.c_str() + tok.size() || tok.empty() || errno == ERANGE) {
        throw Error::config("config: key '" + key + "': bad integer '" + tok + "'");
    }
    return v;
}

std::uint64_t parse_uint_token(const std::string& tok, const std::string& key) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(tok.c_str(), &end, 10);
    if (end != tok.c_str() + tok.size() || tok.empty() || errno == ERANGE ||
        tok.find('-') != std::string::npos) {
        throw Error::config("config: key '" + key + "': bad unsigned integer '" + tok + "'");
    }
    return v;
}

}  // namespace

KvFile KvFile::parse(const std::string& text, std::string origin, std::filesystem::path dir) {
    KvFile kv;
    kv.origin_ = std::move(origin);
    kv.dir_ = std::move(dir);

    std::istringstream iss(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(iss, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') {
            continue;
        }
        if (t.front() == '[') {
            if (t.back() != ']' || t.size() < 3) {
                throw Error::config(kv.origin_ + ":" + std::to_string(lineno) +
                                    ": malformed section header '" + t + "'");
            }
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw Error::config(kv.origin_ + ":" + std::to_string(lineno) +
                                ": expected 'key = value', got '" + t + "'");
        }
        std::string key = trim(t.substr(0, eq));
        if (key.empty()) {
            throw Error::config(kv.origin_ + ":" + std::to_string(lineno) + ": empty key");
        }
        if (!section.empty()) {
            key = section + "." + key;
        }
        if (kv.find(key) != nullptr) {
            throw Error::config(kv.origin_ + ":" + std::to_string(lineno) + ": duplicate key '" +
                                key + "'");
        }
        kv.entries_.push_back({std::move(key), trim(t.substr(eq + 1)), false});
    }
    return kv;
}

KvFile KvFile::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error::io("cannot open config file: " + path.string());
    }
    std::ostringstream oss;
    oss << in.rdbuf();
    auto dir = path.parent_path();
    if (dir.empty()) {
        dir = ".";
    }
    return parse(oss.str(), path.string(), dir);
}

KvFile::Entry* KvFile::find(const std::string& key) {
    for (auto& e : entries_) {
        if (e.key == key) {
            return &e;
        }
    }
    return nullptr;
}

const KvFile::Entry* KvFile::find(const std::string& key) const {
    for (const auto& e : entries_) {
        if (e.key == key) {
            return &e;
        }
    }
    return nullptr;
}

bool KvFile::has(const std::string& key) const { return find(key) != nullptr; }

std::optional<std::string> KvFile::take(const std::string& key) {
    Entry* e = find(key);
    if (e == nullptr) {
        return std::nullopt;
    }
    e->consumed = true;
    return e->value;
}

std::string KvFile::take_string(const std::string& key, const std::string& fallback) {
    auto v = take(key);
    return v ? *v : fallback;
}

double KvFile::take_double(const std::string& key, double fallback) {
    auto v = take(key);
    return v ? parse_double_token(*v, key) : fallback;
}

long long KvFile::take_int(const std::string& key, long long fallback) {
    auto v = take(key);
    return v ? parse_int_token(*v, key) : fallback;
}

std::uint64_t KvFile::take_uint(const std::string& key, std::uint64_t fallback) {
    auto v = take(key);
    return v ? parse_uint_token(*v, key) : fallback;
}

std::vector<double> KvFile::take_doubles(const std::string& key) {
    auto v = take(key);
    std::vector<double> out;
    if (!v) {
        return out;
    }
    for (const auto& tok : split_ws(*v)) {
        out.push_back(parse_double_token(tok, key));
    }
    return out;
}

std::string KvFile::require(const std::string& key) {
    auto v = take(key);
    if (!v) {
        throw Error::config(origin_ + ": missing required key '" + key + "'");
    }
    return *v;
}

void KvFile::finish() const {
    std::string stray;
    for (const auto& e : entries_) {
        if (!e.consumed) {
            stray += (stray.empty() ? "" : ", ") + e.key;
        }
    }
    if (!stray.empty()) {
        throw Error::config(origin_ + ": unknown keys: " + stray);
    }
}

std::vector<double> OmegaSpec::expand(int frame_count) const {
    if (ramp) {
        return omega_ramp(frame_count, omega_min);
    }
    if (static_cast<int>(values.size()) != frame_count) {
        throw Error::config("omega list has " + std::to_string(values.size()) +
                            " entries, video has " + std::to_string(frame_count) + " frames");
    }
    return values;
}

VideoPrior PriorSpec::build(int frame_count, const LatentDims& dims) const {
    if (kind == Kind::blob) {
        if (dims.channels != 1 || scene.height != dims.height || scene.width != dims.width) {
            throw Error::config("prior grid " + std::to_string(scene.height) + "x" +
                                std::to_string(scene.width) +
                                " does not match single-channel video dims");
        }
        return blob_prior(scene, frame_count, sigma);
    }
    VideoPrior prior = load_video_prior(file);
    if (prior.frame_count() != frame_count || !(prior.dims() == dims)) {
        throw Error::shape("prior file " + file.string() +
                           " does not match the configured video shape");
    }
    return prior;
}

ImageLatent ReferenceSpec::resolve(const VideoPrior& prior) const {
    switch (kind) {
        case Kind::sample: {
            SeededRng rng(seed);
            return sample_reference(prior, rng);
        }
        case Kind::mean:
            return prior.components().front().means.frame(0);
        case Kind::file: {
            const VideoLatent v = read_vlt1(file);
            if (v.frame_count() != 1) {
                throw Error::shape("reference file must hold exactly 1 frame, has " +
                                   std::to_string(v.frame_count()));
            }
            return v.frame(0);
        }
    }
    throw Error::config("unreachable reference kind");
}

namespace {

BlobScene parse_scene(KvFile& kv, const std::string& prefix, const LatentDims& dims) {
    BlobScene scene;
    scene.height = dims.height;
    scene.width = dims.width;
    const auto pair_key = [&](const std::string& key,
                              std::pair<double, double> fallback) -> std::pair<double, double> {
        auto vals = kv.take_doubles(prefix + key);
        if (vals.empty()) {
            return fallback;
        }
        if (vals.size() != 2) {
            throw Error::config("config: key '" + prefix + key + "' needs exactly 2 numbers");
        }
        return {vals[0], vals[1]};
    };
    scene.center = pair_key("center", scene.center);
    scene.velocity = pair_key("velocity", scene.velocity);
    scene.radius = kv.take_double(prefix + "radius", scene.radius);
    scene.amplitude = kv.take_double(prefix + "amplitude", scene.amplitude);
    scene.background = kv.take_double(prefix + "background", scene.background);
    return scene;
}

PriorSpec parse_prior(KvFile& kv, const LatentDims& dims) {
    PriorSpec spec;
    const std::string kind = kv.take_string("prior.kind", "blob");
    if (kind == "blob") {
        spec.kind = PriorSpec::Kind::blob;
        spec.scene = parse_scene(kv, "prior.", dims);
        spec.sigma = kv.take_double("prior.sigma", spec.sigma);
        return spec;
    }
    if (kind != "file") {
        throw Error::config("prior.kind must be 'blob' or 'file', got '" + kind + "'");
    }
    spec.kind = PriorSpec::Kind::file;
    spec.file = kv.dir() / kv.require("prior.file");
    return spec;
}

}  // namespace

RunConfig parse_run_config(KvFile& kv) {
    RunConfig cfg;
    cfg.seed = kv.take_uint("run.seed", cfg.seed);
    cfg.out_dir = kv.take_string("run.out_dir", "");
    cfg.export_scale = static_cast<int>(kv.take_int("run.export_scale", cfg.export_scale));
    cfg.dump_trajectory = kv.take_int("run.dump_trajectory", 0) != 0;

    cfg.T = static_cast<int>(kv.take_int("schedule.T", cfg.T));
    cfg.beta_start = kv.take_double("schedule.beta_start", cfg.beta_start);
    cfg.beta_end = kv.take_double("schedule.beta_end", cfg.beta_end);

    cfg.sampler_kind = kv.take_string("sampler.kind", cfg.sampler_kind);
    cfg.eta = kv.take_double("sampler.eta", cfg.eta);
    cfg.K = static_cast<int>(kv.take_int("sampler.K", cfg.K));
    cfg.strength = kv.take_double("sampler.strength", cfg.strength);

    cfg.L = static_cast<int>(kv.take_int("video.L", cfg.L));
    cfg.dims.channels = static_cast<int>(kv.take_int("video.channels", cfg.dims.channels));
    cfg.dims.height = static_cast<int>(kv.take_int("video.height", cfg.dims.height));
    cfg.dims.width = static_cast<int>(kv.take_int("video.width", cfg.dims.width));

    cfg.prior = parse_prior(kv, cfg.dims);

    const std::string dkind = kv.take_string("denoiser.kind", "optimal");
    if (dkind != "optimal") {
        throw Error::config("denoiser.kind must be 'optimal', got '" + dkind + "'");
    }
    cfg.bias_norm = kv.take_double("denoiser.bias_norm", cfg.bias_norm);
    cfg.bias_seed = kv.take_uint("denoiser.bias_seed", cfg.bias_seed);
    const std::string scale = kv.take_string("denoiser.bias_scale", "noise_level");
    if (scale == "none") {
        cfg.bias_scaling = BiasScaling::none;
    } else if (scale == "noise_level") {
        cfg.bias_scaling = BiasScaling::noise_level;
    } else {
        throw Error::config("denoiser.bias_scale must be 'none' or 'noise_level', got '" + scale +
                            "'");
    }

    const std::string rkind = kv.take_string("reference.kind", "sample");
    if (rkind == "sample") {
        cfg.reference.kind = ReferenceSpec::Kind::sample;
    } else if (rkind == "mean") {
        cfg.reference.kind = ReferenceSpec::Kind::mean;
    } else if (rkind == "file") {
        cfg.reference.kind = ReferenceSpec::Kind::file;
        cfg.reference.file = kv.dir() / kv.require("reference.file");
    } else {
        throw Error::config("reference.kind must be 'sample', 'mean' or 'file', got '" + rkind +
                            "'");
    }
    cfg.reference.seed = kv.take_uint("reference.seed", cfg.reference.seed);

    if (auto omega = kv.take("rectifier.omega")) {
        const auto toks = split_ws(*omega);
        if (toks.empty()) {
            throw Error::config("rectifier.omega must not be empty");
        }
        if (toks[0] == "ramp") {
            if (toks.size() != 2) {
                throw Error::config("rectifier.omega ramp form is 'ramp <omega_min>'");
            }
            cfg.omega.ramp = true;
            cfg.omega.omega_min = parse_double_token(toks[1], "rectifier.omega");
        } else if (toks[0] == "list") {
            cfg.omega.ramp = false;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                cfg.omega.values.push_back(parse_double_token(toks[i], "rectifier.omega"));
            }
        } else {
            throw Error::config("rectifier.omega must start with 'ramp' or 'list'");
        }
    }
    cfg.tau_start = kv.take_double("rectifier.tau_start", cfg.tau_start);
    cfg.tau_end = kv.take_double("rectifier.tau_end", cfg.tau_end);

    cfg.condition = kv.take_doubles("condition.values");
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    KvFile kv = KvFile::load(path);
    RunConfig cfg = parse_run_config(kv);
    kv.finish();
    return cfg;
}

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::omega_min: return "omega_min";
        case SweepAxis::tau_end: return "tau_end";
        case SweepAxis::tau_start: return "tau_start";
        case SweepAxis::bias_norm: return "bias_norm";
    }
    return "?";
}

SweepAxis sweep_axis_from_string(const std::string& name) {
    if (name == "omega_min") return SweepAxis::omega_min;
    if (name == "tau_end") return SweepAxis::tau_end;
    if (name == "tau_start") return SweepAxis::tau_start;
    if (name == "bias_norm") return SweepAxis::bias_norm;
    throw Error::config("sweep.axis must be one of omega_min, tau_end, tau_start, bias_norm");
}

SweepSpec load_sweep_spec(const std::filesystem::path& path) {
    KvFile kv = KvFile::load(path);
    SweepSpec spec;
    spec.axis = sweep_axis_from_string(kv.require("sweep.axis"));
    spec.values = kv.take_doubles("sweep.values");
    if (spec.values.empty()) {
        throw Error::config(kv.origin() + ": sweep.values must not be empty");
    }

    const std::string seeds = kv.require("sweep.seeds");
    const auto range = seeds.find("..");
    if (range != std::string::npos) {
        const std::uint64_t lo = parse_uint_token(trim(seeds.substr(0, range)), "sweep.seeds");
        const std::uint64_t hi = parse_uint_token(trim(seeds.substr(range + 2)), "sweep.seeds");
        if (hi < lo) {
            throw Error::config("sweep.seeds range is empty: " + seeds);
        }
        for (std::uint64_t s = lo; s <= hi; ++s) {
            spec.seeds.push_back(s);
        }
    } else {
        for (const auto& tok : split_ws(seeds)) {
            spec.seeds.push_back(parse_uint_token(tok, "sweep.seeds"));
        }
    }
    if (spec.seeds.empty()) {
        throw Error::config(kv.origin() + ": sweep.seeds must not be empty");
    }

    spec.base = parse_run_config(kv);
    kv.finish();
    return spec;
}

RunConfig apply_axis(const RunConfig& base, SweepAxis axis, double value, std::uint64_t seed) {
    RunConfig cfg = base;
    cfg.seed = seed;
    switch (axis) {
        case SweepAxis::omega_min:
            if (!cfg.omega.ramp) {
                throw Error::config("omega_min sweep needs the ramp omega form");
            }
            cfg.omega.omega_min = value;
            break;
        case SweepAxis::tau_end:
            cfg.tau_end = value;
            break;
        case SweepAxis::tau_start:
            cfg.tau_start = value;
            break;
        case SweepAxis::bias_norm:
            cfg.bias_norm = value;
            break;
    }
    return cfg;
}

}  // namespace noiserect
