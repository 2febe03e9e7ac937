#include "noiserect/denoisers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace noiserect {

namespace {

constexpr double kLogTwoPi = 1.8378770664093454836;  // log(2*pi)

double log_normal_pdf(double x, double mean, double var) {
    const double d = x - mean;
    return -0.5 * (kLogTwoPi + std::log(var) + d * d / var);
}

std::string format_norm(const VideoLatent& z) {
    double sq = 0.0;
    for (double v : z.data()) sq += v * v;
    std::ostringstream oss;
    oss << "L=" << z.frame_count() << " D=" << z.frame_size() << " |z|=" << std::sqrt(sq);
    return oss.str();
}

// Single-component posterior-mean prediction written into `out`.
void gaussian_eps_star(const VideoLatent& z_t, const VideoPrior::Component& comp, double abar,
                       VideoLatent& out) {
    const double sqrt_abar = std::sqrt(abar);
    const double sqrt_resid = std::sqrt(1.0 - abar);
    const std::size_t fsize = z_t.frame_size();
    for (int f = 0; f < z_t.frame_count(); ++f) {
        const double s2 = comp.variances[f];
        const double gain = abar * s2 / (abar * s2 + 1.0 - abar);
        for (std::size_t i = 0; i < fsize; ++i) {
            const double zv = z_t.at(f, i);
            const double mu = comp.means.at(f, i);
            const double m_post = mu + gain * (zv / sqrt_abar - mu);
            out.at(f, i) = (zv - sqrt_abar * m_post) / sqrt_resid;
        }
    }
}

}  // namespace

// Mixture weights in log-space against the marginal of z_t given component k.
std::vector<double> gmm_responsibilities(const VideoLatent& z_t, const VideoPrior& prior,
                                         const NoiseSchedule& schedule, int t,
                                         const ConditionVector& cond) {
    z_t.require_same_shape(prior.components().front().means, "gmm_responsibilities");
    const double abar = schedule.alpha_bar(t);
    std::vector<double> weights(prior.components().size());
    for (std::size_t k = 0; k < weights.size(); ++k) {
        weights[k] = prior.components()[k].weight;
    }

    // Condition handling: single value selects a component, a length-K vector
    // replaces the weights.
    if (!cond.values.empty()) {
        if (cond.values.size() == 1) {
            const int idx = static_cast<int>(std::llround(cond.values[0]));
            if (idx < 0 || idx >= static_cast<int>(weights.size())) {
                throw Error::shape("gmm denoiser: condition selects component " +
                                   std::to_string(idx) + " of " +
                                   std::to_string(weights.size()));
            }
            std::fill(weights.begin(), weights.end(), 0.0);
            weights[idx] = 1.0;
        } else if (cond.values.size() == weights.size()) {
            double sum = 0.0;
            for (std::size_t k = 0; k < weights.size(); ++k) {
                if (cond.values[k] < 0.0) {
                    throw Error::config("gmm denoiser: condition weights must be >= 0");
                }
                weights[k] = cond.values[k];
                sum += weights[k];
            }
            if (sum <= 0.0) {
                throw Error::config("gmm denoiser: condition weights sum to zero");
            }
        } else {
            throw Error::shape("gmm denoiser: condition length " +
                               std::to_string(cond.values.size()) + " matches neither 1 nor " +
                               std::to_string(weights.size()) + " components");
        }
    }

    std::vector<double> logw(weights.size(), -std::numeric_limits<double>::infinity());
    const double sqrt_abar = std::sqrt(abar);
    const std::size_t fsize = z_t.frame_size();
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] <= 0.0) continue;
        const auto& comp = prior.components()[k];
        double acc = std::log(weights[k]);
        for (int f = 0; f < z_t.frame_count(); ++f) {
            const double var = abar * comp.variances[f] + 1.0 - abar;
            for (std::size_t i = 0; i < fsize; ++i) {
                acc += log_normal_pdf(z_t.at(f, i), sqrt_abar * comp.means.at(f, i), var);
            }
        }
        logw[k] = acc;
    }

    const double max_logw = *std::max_element(logw.begin(), logw.end());
    if (!std::isfinite(max_logw)) {
        throw Error::numeric("gmm denoiser: responsibilities underflow at t=" +
                             std::to_string(t) + " for " + format_norm(z_t));
    }
    double norm = 0.0;
    for (double& w : logw) {
        w = std::exp(w - max_logw);
        norm += w;
    }
    for (double& w : logw) {
        w /= norm;
    }
    return logw;
}

VideoPrior::VideoPrior(std::vector<Component> components, std::string id)
    : components_(std::move(components)), id_(std::move(id)) {
    if (components_.empty()) {
        throw Error::config("VideoPrior: needs at least one component");
    }
    double total = 0.0;
    for (const auto& comp : components_) {
        if (!(comp.weight > 0.0) || !std::isfinite(comp.weight)) {
            throw Error::config("VideoPrior: component weights must be positive");
        }
        if (!components_.front().means.same_shape(comp.means)) {
            throw Error::shape("VideoPrior: component mean shapes disagree");
        }
        if (comp.variances.size() != static_cast<std::size_t>(comp.means.frame_count())) {
            throw Error::shape("VideoPrior: need one variance per frame");
        }
        for (double v : comp.variances) {
            if (!(v > 0.0) || !std::isfinite(v)) {
                throw Error::config("VideoPrior: variances must be positive and finite");
            }
        }
        total += comp.weight;
    }
    for (auto& comp : components_) {
        comp.weight /= total;
    }
}

int VideoPrior::pick_component(SeededRng& rng) const {
    const double u = rng.uniform01();
    double cdf = 0.0;
    for (std::size_t k = 0; k < components_.size(); ++k) {
        cdf += components_[k].weight;
        if (u <= cdf) {
            return static_cast<int>(k);
        }
    }
    return static_cast<int>(components_.size()) - 1;
}

VideoLatent VideoPrior::sample(SeededRng& rng) const {
    const auto& comp = components_[pick_component(rng)];
    VideoLatent out(frame_count(), dims());
    for (int f = 0; f < out.frame_count(); ++f) {
        const double sd = std::sqrt(comp.variances[f]);
        for (std::size_t i = 0; i < out.frame_size(); ++i) {
            out.at(f, i) = comp.means.at(f, i) + sd * rng.normal();
        }
    }
    return out;
}

ImageLatent VideoPrior::sample_frame0(SeededRng& rng) const {
    const auto& comp = components_[pick_component(rng)];
    std::vector<double> data(dims().size());
    const double sd = std::sqrt(comp.variances[0]);
    for (std::size_t i = 0; i < data.size(); ++i) {
        data[i] = comp.means.at(0, i) + sd * rng.normal();
    }
    return ImageLatent(std::move(data), dims());
}

VideoLatent drift_means(const ImageLatent& base, const std::vector<double>& velocity,
                        int frame_count) {
    if (velocity.size() != base.size()) {
        throw Error::shape("drift_means: velocity length must equal D");
    }
    VideoLatent out(frame_count, base.dims());
    for (int f = 0; f < frame_count; ++f) {
        for (std::size_t i = 0; i < base.size(); ++i) {
            out.at(f, i) = base[i] + static_cast<double>(f) * velocity[i];
        }
    }
    return out;
}

DenoiserHandle oracle_noise_denoiser(VideoLatent n) {
    DenoiserHandle handle;
    handle.id = "oracle";
    handle.predict = [n = std::move(n)](const VideoLatent& z_t, const ConditionVector&,
                                        int) -> VideoLatent {
        z_t.require_same_shape(n, "oracle denoiser");
        return n;
    };
    return handle;
}

DenoiserHandle gaussian_optimal_denoiser(const VideoPrior& prior, const NoiseSchedule& schedule) {
    if (prior.component_count() != 1) {
        throw Error::config("gaussian_optimal_denoiser: prior must have exactly one component");
    }
    DenoiserHandle handle;
    handle.id = "gaussian-optimal[" + prior.id() + "]";
    handle.predict = [comp = prior.components().front(), schedule](
                         const VideoLatent& z_t, const ConditionVector&, int t) -> VideoLatent {
        z_t.require_same_shape(comp.means, "gaussian denoiser");
        VideoLatent out(z_t.frame_count(), z_t.dims());
        gaussian_eps_star(z_t, comp, schedule.alpha_bar(t), out);
        return out;
    };
    return handle;
}

DenoiserHandle gmm_optimal_denoiser(const VideoPrior& prior, const NoiseSchedule& schedule) {
    DenoiserHandle handle;
    handle.id = "gmm-optimal[" + prior.id() + "]";
    handle.predict = [prior, schedule](const VideoLatent& z_t, const ConditionVector& cond,
                                       int t) -> VideoLatent {
        z_t.require_same_shape(prior.components().front().means, "gmm denoiser");
        const double abar = schedule.alpha_bar(t);
        const std::vector<double> resp = gmm_responsibilities(z_t, prior, schedule, t, cond);
        VideoLatent out(z_t.frame_count(), z_t.dims());
        VideoLatent scratch(z_t.frame_count(), z_t.dims());
        for (std::size_t k = 0; k < resp.size(); ++k) {
            if (resp[k] == 0.0) continue;
            gaussian_eps_star(z_t, prior.components()[k], abar, scratch);
            for (std::size_t i = 0; i < out.data().size(); ++i) {
                out.data()[i] += resp[k] * scratch.data()[i];
            }
        }
        return out;
    };
    return handle;
}

VideoLatent make_bias_direction(int frame_count, LatentDims dims, double norm,
                                std::uint64_t seed) {
    if (!std::isfinite(norm) || norm < 0.0) {
        throw Error::config("make_bias_direction: norm must be finite and >= 0");
    }
    SeededRng rng(seed);
    VideoLatent dir(frame_count, dims);
    double sq = 0.0;
    for (double& v : dir.data()) {
        v = rng.normal();
        sq += v * v;
    }
    const double len = std::sqrt(sq);
    const double scale = (len > 0.0) ? norm / len : 0.0;
    for (double& v : dir.data()) {
        v *= scale;
    }
    return dir;
}

DenoiserHandle biased_denoiser(DenoiserHandle inner, VideoLatent bias, BiasScaling scaling,
                               const NoiseSchedule& schedule) {
    DenoiserHandle handle;
    double sq = 0.0;
    for (double v : bias.data()) sq += v * v;
    {
        std::ostringstream oss;
        oss << inner.id << "+bias(norm=" << std::sqrt(sq)
            << ",scaling=" << (scaling == BiasScaling::none ? "none" : "noise_level") << ")";
        handle.id = oss.str();
    }
    handle.predict = [inner = std::move(inner), bias = std::move(bias), scaling, schedule](
                         const VideoLatent& z_t, const ConditionVector& cond,
                         int t) -> VideoLatent {
        VideoLatent out = inner.predict(z_t, cond, t);
        out.require_same_shape(bias, "biased denoiser");
        const double scale =
            (scaling == BiasScaling::noise_level) ? std::sqrt(1.0 - schedule.alpha_bar(t)) : 1.0;
        for (std::size_t i = 0; i < out.data().size(); ++i) {
            out.data()[i] += scale * bias.data()[i];
        }
        return out;
    };
    return handle;
}

DenoiserHandle biased_denoiser(DenoiserHandle inner, const ImageLatent& constant_bias,
                               int frame_count, BiasScaling scaling,
                               const NoiseSchedule& schedule) {
    return biased_denoiser(std::move(inner), repeat_image(constant_bias, frame_count), scaling,
                           schedule);
}

McOracleResult mc_oracle_eps(const VideoLatent& z_t, int t, const VideoPrior& prior,
                             const NoiseSchedule& schedule, long samples, SeededRng& rng) {
    if (samples < 1000) {
        throw Error::config("mc_oracle_eps: needs at least 1000 samples");
    }
    z_t.require_same_shape(prior.components().front().means, "mc_oracle_eps");

    const double abar = schedule.alpha_bar(t);
    const double sqrt_abar = std::sqrt(abar);
    const double resid_var = 1.0 - abar;
    const double sqrt_resid = std::sqrt(resid_var);
    const std::size_t n_coords = z_t.total_size();

    std::vector<double> logw(static_cast<std::size_t>(samples));
    std::vector<double> eps(static_cast<std::size_t>(samples) * n_coords);

    for (long s = 0; s < samples; ++s) {
        const VideoLatent z0 = prior.sample(rng);
        double lw = 0.0;
        double* row = eps.data() + static_cast<std::size_t>(s) * n_coords;
        for (std::size_t i = 0; i < n_coords; ++i) {
            const double zv = z_t.data()[i];
            const double mean = sqrt_abar * z0.data()[i];
            lw += log_normal_pdf(zv, mean, resid_var);
            row[i] = (zv - mean) / sqrt_resid;
        }
        logw[static_cast<std::size_t>(s)] = lw;
    }

    const double max_logw = *std::max_element(logw.begin(), logw.end());
    double wsum = 0.0;
    for (double& w : logw) {
        w = std::exp(w - max_logw);
        wsum += w;
    }
    double w2sum = 0.0;
    for (double& w : logw) {
        w /= wsum;
        w2sum += w * w;
    }
    const double ess = 1.0 / w2sum;
    if (ess < 10.0) {
        throw Error::numeric("mc_oracle_eps: degenerate weighting (ESS=" + std::to_string(ess) +
                             ") at t=" + std::to_string(t));
    }

    VideoLatent estimate(z_t.frame_count(), z_t.dims());
    for (long s = 0; s < samples; ++s) {
        const double w = logw[static_cast<std::size_t>(s)];
        const double* row = eps.data() + static_cast<std::size_t>(s) * n_coords;
        for (std::size_t i = 0; i < n_coords; ++i) {
            estimate.data()[i] += w * row[i];
        }
    }

    // Self-normalized IS variance: SE_i^2 = sum_s wbar_s^2 (eps_si - est_i)^2.
    VideoLatent se(z_t.frame_count(), z_t.dims());
    for (long s = 0; s < samples; ++s) {
        const double w2 = logw[static_cast<std::size_t>(s)] * logw[static_cast<std::size_t>(s)];
        const double* row = eps.data() + static_cast<std::size_t>(s) * n_coords;
        for (std::size_t i = 0; i < n_coords; ++i) {
            const double d = row[i] - estimate.data()[i];
            se.data()[i] += w2 * d * d;
        }
    }
    for (double& v : se.data()) {
        v = std::sqrt(v);
    }
    return McOracleResult{std::move(estimate), std::move(se), ess};
}

}  // namespace noiserect
