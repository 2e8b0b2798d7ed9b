#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "corridor/montecarlo.hpp"
#include "corridor/spectral.hpp"
#include "corridor/wiener.hpp"

namespace corridor {

enum class Method { ExactSeries, SpectralAsymptotic, MonteCarlo };

const char* to_string(Method m);

/// How a probability estimate quantifies its own uncertainty.
enum class Uncertainty {
    SeriesEps,       ///< truncation bound of the exact series
    StdError,        ///< binomial standard error of the MC fraction
    AsymptoticOnly,  ///< long-time asymptote, no computable error bound
};

struct ProbResult {
    double p = 0.0;
    Method method = Method::ExactSeries;
    Uncertainty uncertainty = Uncertainty::SeriesEps;
    double uncertainty_value = 0.0;  ///< eps or stderr; 0 for asymptotic
};

struct QueryOptions {
    std::optional<Method> force;  ///< empty = automatic routing
    int grid_n = 256;             ///< Nystrom size for the spectral route
    long n_paths = 20000;
    long n_steps = 10000;
    std::uint64_t seed = 0;
    double eps = 1e-10;
    int n_threads = 0;
};

/// Routes p_alpha(t, a) to the best method. The scaling reduction
/// p(t, a) = p(t/a^alpha, 1) is applied first, so the reported value for
/// (t, a) and (t/a^alpha, 1) is bit-identical. Automatic routing:
/// alpha = 2 -> exact series; t/a^alpha >= 6 -> spectral asymptote
/// (eigen data computed once at half-width 1 and cached); otherwise MC.
ProbResult corridor_probability(const StableParams& params, double t, double a,
                                const QueryOptions& options = {});

/// Principal eigenpair at half-width 1 from the process-wide cache,
/// keyed by (alpha, beta, n).
const EigenResult& cached_eigenpair(const StableParams& params, int n = 256,
                                    int n_threads = 0);

/// Delegates to regime_experiment and annotates the report: the diverging
/// regime notes the equivalent condition a(t)/t^{1/alpha} -> 0, and for
/// alpha = 2 the finite-ratio prediction is evaluated through the series.
RegimeReport classify_regime(const StableParams& params, const Schedule& schedule,
                             std::span<const double> t_grid,
                             const QueryOptions& options = {});

}  // namespace corridor
