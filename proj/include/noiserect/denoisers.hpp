#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "noiserect/latent.hpp"
#include "noiserect/schedule.hpp"

namespace noiserect {

// Opaque condition embedding. For mixture priors it selects or reweights
// components: a single value is a component index, a length-K vector replaces
// the mixture weights; anything else (including empty) is ignored by
// single-component denoisers and rejected by mixtures.
struct ConditionVector {
    std::vector<double> values;
};

// Pluggable noise predictor. Implementations must be pure in (z_t, cond, t)
// and shape-preserving; run_reverse checks the shape after every call.
struct DenoiserHandle {
    std::string id;
    std::function<VideoLatent(const VideoLatent& z_t, const ConditionVector& cond, int t)> predict;
};

// Analytic video distribution: mixture of per-frame factorized Gaussians.
// Component k has weight pi_k, per-frame means (an L-frame latent) and a
// per-frame scalar variance. Weights are normalized at construction.
class VideoPrior {
public:
    struct Component {
        double weight;
        VideoLatent means;
        std::vector<double> variances;  // one per frame, all > 0
    };

    VideoPrior(std::vector<Component> components, std::string id);

    const std::vector<Component>& components() const { return components_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    int frame_count() const { return components_.front().means.frame_count(); }
    const LatentDims& dims() const { return components_.front().means.dims(); }
    const std::string& id() const { return id_; }

    // Draws a full video: one uniform for component choice (consumed even for
    // a single component), then 2*L*D raw draws for the normals.
    VideoLatent sample(SeededRng& rng) const;

    // Frame-0 draw only: one uniform plus 2*D raw draws.
    ImageLatent sample_frame0(SeededRng& rng) const;

private:
    int pick_component(SeededRng& rng) const;

    std::vector<Component> components_;
    std::string id_;
};

// Expands a base frame into L frames with means mu^i = mu + i * v.
VideoLatent drift_means(const ImageLatent& base, const std::vector<double>& velocity,
                        int frame_count);

// Test fixture: predicts the stored initial noise regardless of input.
DenoiserHandle oracle_noise_denoiser(VideoLatent n);

// Exact minimizer of the noise-prediction objective for a single-Gaussian
// prior, via joint-Gaussian conditioning. Per coordinate with variance s2:
//   m_post = mu + (abar*s2 / (abar*s2 + 1 - abar)) * (z_t / sqrt(abar) - mu)
//   eps*   = (z_t - sqrt(abar) * m_post) / sqrt(1 - abar)
DenoiserHandle gaussian_optimal_denoiser(const VideoPrior& prior, const NoiseSchedule& schedule);

// Mixture generalization: responsibilities over the whole video latent,
//   log w_k = log pi_k + sum_ij logN(z_t; sqrt(abar)*mu_k, abar*s2_k + 1-abar)
// computed in log-space, then eps* = sum_k r_k * eps*_k.
DenoiserHandle gmm_optimal_denoiser(const VideoPrior& prior, const NoiseSchedule& schedule);

// The mixture posterior over components given z_t at noise level t; sums to 1.
// The condition vector selects (single index) or replaces (length-K vector)
// the mixture weights before conditioning.
std::vector<double> gmm_responsibilities(const VideoLatent& z_t, const VideoPrior& prior,
                                         const NoiseSchedule& schedule, int t,
                                         const ConditionVector& cond);

// Per-timestep scaling of an injected bias.
enum class BiasScaling {
    none,         // bias added as-is at every step
    noise_level,  // scaled by sqrt(1 - abar_t)
};

// Fixed random direction with Euclidean norm `norm` over all L*D entries.
VideoLatent make_bias_direction(int frame_count, LatentDims dims, double norm,
                                std::uint64_t seed);

// Wraps a denoiser so that predict = inner.predict + scale(t) * bias. The
// bias tensor is fixed at construction, making the prediction-bias failure
// mode a controlled input.
DenoiserHandle biased_denoiser(DenoiserHandle inner, VideoLatent bias, BiasScaling scaling,
                               const NoiseSchedule& schedule);

// Convenience: per-frame constant vector broadcast over the temporal axis.
DenoiserHandle biased_denoiser(DenoiserHandle inner, const ImageLatent& constant_bias,
                               int frame_count, BiasScaling scaling,
                               const NoiseSchedule& schedule);

// Brute-force estimate of the optimal noise prediction by self-normalized
// importance sampling over prior draws. Returns the per-coordinate estimate
// and its standard errors. Rejects degenerate weightings (effective sample
// size < 10). Test-side oracle for the analytic denoisers.
struct McOracleResult {
    VideoLatent estimate;
    VideoLatent standard_error;
    double effective_sample_size;
};

McOracleResult mc_oracle_eps(const VideoLatent& z_t, int t, const VideoPrior& prior,
                             const NoiseSchedule& schedule, long samples, SeededRng& rng);

}  // namespace noiserect
