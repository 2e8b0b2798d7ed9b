#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace corridor {

/// Which kernel/sampling branch a (alpha, beta) pair selects.
enum class LawCase {
    Case1,        ///< 0 < alpha < 2, alpha != 1, -1 < beta < 1
    Case2Plus,    ///< 1 < alpha < 2, beta = +1
    Case2Minus,   ///< 1 < alpha < 2, beta = -1
    Case3Cauchy,  ///< alpha = 1, beta = 0
    Wiener,       ///< alpha = 2 (beta forced to 0)
};

const char* to_string(LawCase c);

/// Validated parameters of a strictly stable process.
///
/// Construct through validate_params(); the case tag is the unique branch
/// matching (alpha, beta), and no other combination is representable.
struct StableParams {
    double alpha;
    double beta;
    LawCase law;
};

/// Classifies (alpha, beta) into its case or throws UnsupportedLaw.
/// Supported: alpha in (0,2), alpha != 1, |beta| < 1 (Case1);
/// 1 < alpha < 2 with beta = +/-1 (Case2); alpha = 1, beta = 0 (Case3);
/// alpha = 2, beta = 0 (Wiener).
StableParams validate_params(double alpha, double beta);

/// Characteristic function E[exp(i xi X(tau))] of the process marginal:
///   exp(-tau |xi|^alpha [1 - i beta sign(xi) tan(pi alpha/2)])  (alpha != 1)
///   exp(-tau |xi| [1 + 2 i beta/pi sign(xi) log|xi|])            (alpha  = 1)
/// char_fn(params, tau, 0) = 1.
std::complex<double> char_fn(const StableParams& params, double tau, double xi);

/// Deterministic pseudo-random substream keyed by (seed, stream_id).
///
/// Identical keys reproduce the identical draw sequence; distinct
/// stream_ids give statistically independent substreams, which makes
/// per-path seeding order-independent and safe to parallelize.
/// xoshiro256++ state, initialized by splitmix64 over the key.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t next_u64();
    /// Uniform draw strictly inside (0,1).
    double next_unit();
    /// Standard normal via Box-Muller (two uniforms per draw).
    double next_normal();
    /// Standard exponential.
    double next_exponential();

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t state_[4];
    std::uint64_t seed_;
    std::uint64_t stream_id_;
};

/// One sampled trajectory on a uniform time grid, X(0) = 0.
struct Path {
    std::vector<double> times;   ///< increasing, times[0] = 0
    std::vector<double> values;  ///< values[0] = 0
    double sup_abs = 0.0;        ///< max_k |values[k]|
};

/// Draws increments over windows of fixed length dt, distributed with
/// characteristic function char_fn(params, dt, .).
///
/// Chambers-Mallows-Stuck for the stable branches, scaled by dt^{1/alpha};
/// Gaussian with variance 2 dt for alpha = 2; Cauchy tangent with scale dt
/// for alpha = 1. Law-dependent constants are precomputed at construction.
class IncrementSampler {
public:
    IncrementSampler(const StableParams& params, double dt);
    double operator()(RngStream& rng) const;

private:
    LawCase law_;
    double alpha_;
    double scale_;   // dt^{1/alpha} (or the direct Gaussian/Cauchy scale)
    double theta0_;  // atan(beta tan(pi alpha/2)) / alpha
    double cms_amp_; // (1 + beta^2 tan^2(pi alpha/2))^{1/(2 alpha)}
    double inv_alpha_;
    double cms_exp_; // (1-alpha)/alpha
};

/// One increment over a window of length dt (one-shot IncrementSampler).
double sample_increment(const StableParams& params, double dt, RngStream& rng);

/// Cumulative sums of n_steps independent increments on the uniform grid
/// over [0, t]; fills sup_abs.
Path sample_path(const StableParams& params, double t, int n_steps, RngStream& rng);

}  // namespace corridor
