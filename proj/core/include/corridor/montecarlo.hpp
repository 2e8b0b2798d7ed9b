#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "corridor/stable.hpp"

namespace corridor {

/// The grid supremum underestimates the continuous-time supremum, so the
/// estimated survival probability is biased upward for the continuous event.
enum class BiasNote { UpwardGridBias };

struct SurvivalEstimate {
    double p_hat = 0.0;      ///< exact fraction of surviving paths
    double std_error = 0.0;  ///< sqrt(p_hat (1 - p_hat) / n_paths)
    long n_paths = 0;
    long n_steps = 0;
    BiasNote bias_note = BiasNote::UpwardGridBias;
};

/// One-sided and two-sided hitting-time tails from the same path ensemble:
/// P(T_a > t) uses sup X, P(T_{+-a} > t) uses sup |X|, so the one-sided
/// tail dominates the two-sided one path by path.
struct HittingEstimate {
    SurvivalEstimate one_sided;
    SurvivalEstimate two_sided;
};

/// P(sup_{[0,t]} |X| < a) by simulating n_paths paths of n_steps uniform
/// increments. Deterministic given the seed for any thread count: each path
/// draws from its own (seed, path_index) substream and survivor counting is
/// an integer reduction.
SurvivalEstimate estimate_survival(const StableParams& params, double t, double a,
                                   long n_paths, long n_steps, std::uint64_t seed,
                                   int n_threads = 0);

HittingEstimate estimate_hitting(const StableParams& params, double a, double t,
                                 long n_paths, long n_steps, std::uint64_t seed,
                                 int n_threads = 0);

/// Corridor half-width schedule a(t).
struct Schedule {
    enum class Kind {
        ShrinkingLog,  ///< t^{1/alpha} / log(e + t)
        GrowingLog,    ///< t^{1/alpha} * log(e + t)
        PowerLaw,      ///< (t / T)^{1/alpha}
    };

    Kind kind = Kind::PowerLaw;
    double T = 1.0;  ///< PowerLaw time constant

    double operator()(double t, double alpha) const;
    std::string name() const;

    static Schedule shrinking_log() { return {Kind::ShrinkingLog, 0.0}; }
    static Schedule growing_log() { return {Kind::GrowingLog, 0.0}; }
    static Schedule power_law(double T) { return {Kind::PowerLaw, T}; }
};

/// Classified behavior of the ratio t / a(t)^alpha over the sampled grid.
enum class Regime { RatioDiverges, RatioVanishes, RatioFinite };

const char* to_string(Regime r);

struct RegimeReport {
    Regime regime = Regime::RatioFinite;
    double T = 0.0;  ///< median ratio (meaningful when RatioFinite)
    std::vector<double> t_grid;
    std::vector<double> a_of_t;
    std::vector<double> ratio;  ///< t / a(t)^alpha per grid point
    std::vector<SurvivalEstimate> p_hats;
    /// Limit the classification predicts for p(t, a(t)): 0, 1, or NaN when
    /// the prediction is the symbolic value p_alpha(T).
    double predicted_limit = 0.0;
    /// Sup-process concentration proxies with b(t) = log(e + t): fractions of
    /// paths with U(t) > b(t) t^{1/alpha} resp. U(t) < t^{1/alpha} / b(t);
    /// both should trend to zero.
    std::vector<double> frac_above;
    std::vector<double> frac_below;
    std::string note;
};

/// Runs estimate_survival at each (t, a(t)), classifies the ratio trend
/// (diverges if r_last/r_first > 10, vanishes if < 0.1, else finite with
/// T = median ratio) and reports the concentration proxy fractions.
RegimeReport regime_experiment(const StableParams& params, const Schedule& schedule,
                               std::span<const double> t_grid, long n_paths,
                               long n_steps, std::uint64_t seed, int n_threads = 0);

}  // namespace corridor
