#include "noiserect/prior_io.hpp"

#include <string>
#include <vector>

#include "noiserect/config.hpp"
#include "noiserect/manifest.hpp"
#include "noiserect/vlt_io.hpp"

namespace noiserect {

VideoPrior load_video_prior(const std::filesystem::path& path) {
    KvFile kv = KvFile::load(path);

    const long long n = kv.take_int("components", 0);
    if (n < 1) {
        throw Error::config(kv.origin() + ": 'components' must be a positive count");
    }
    const long long frames = kv.take_int("frames", 0);
    if (frames < 1) {
        throw Error::config(kv.origin() + ": 'frames' must be a positive count");
    }
    const std::string id = kv.take_string("id", path.stem().string());

    std::vector<VideoPrior::Component> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (long long k = 0; k < n; ++k) {
        const std::string p = std::to_string(k) + ".";
        VideoPrior::Component comp;
        comp.weight = kv.take_double(p + "weight", 1.0);

        VideoLatent means = read_vlt1(kv.dir() / kv.require(p + "means"));
        const std::vector<double> drift = kv.take_doubles(p + "drift");
        if (!drift.empty()) {
            if (means.frame_count() != 1) {
                throw Error::config(kv.origin() + ": component " + std::to_string(k) +
                                    " has a drift vector, so its means file must hold 1 frame");
            }
            comp.means = drift_means(means.frame(0), drift, static_cast<int>(frames));
        } else {
            comp.means = std::move(means);
        }
        if (comp.means.frame_count() != frames) {
            throw Error::shape(kv.origin() + ": component " + std::to_string(k) + " has " +
                               std::to_string(comp.means.frame_count()) + " frames, expected " +
                               std::to_string(frames));
        }

        std::vector<double> variances = kv.take_doubles(p + "variances");
        if (variances.size() == 1) {
            variances.assign(static_cast<std::size_t>(frames), variances[0]);
        } else if (variances.size() != static_cast<std::size_t>(frames)) {
            throw Error::config(kv.origin() + ": component " + std::to_string(k) +
                                " needs 1 or " + std::to_string(frames) + " variances, has " +
                                std::to_string(variances.size()));
        }
        comp.variances = std::move(variances);
        comps.push_back(std::move(comp));
    }
    kv.finish();
    return VideoPrior(std::move(comps), id);
}

void save_video_prior(const VideoPrior& prior, const std::filesystem::path& path) {
    const std::string stem = path.stem().string();
    const auto dir = path.parent_path();

    std::string text;
    text += "components = " + std::to_string(prior.component_count()) + "\n";
    text += "frames = " + std::to_string(prior.frame_count()) + "\n";
    text += "id = " + prior.id() + "\n";
    for (int k = 0; k < prior.component_count(); ++k) {
        const auto& comp = prior.components()[static_cast<std::size_t>(k)];
        const std::string means_name = stem + "_comp" + std::to_string(k) + ".vlt1";
        write_vlt1(dir / means_name, comp.means);
        const std::string p = std::to_string(k) + ".";
        text += p + "weight = " + format_double(comp.weight) + "\n";
        text += p + "means = " + means_name + "\n";
        text += p + "variances = " + format_double_list(comp.variances) + "\n";
    }
    write_file_atomic(path, text);
}

}  // namespace noiserect
