#include "corridor/corridor.hpp"

#include <cassert>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "corridor/errors.hpp"

namespace corridor {

const char* to_string(Method m) {
    switch (m) {
        case Method::ExactSeries: return "ExactSeries";
        case Method::SpectralAsymptotic: return "SpectralAsymptotic";
        case Method::MonteCarlo: return "MonteCarlo";
    }
    return "?";
}

namespace {

using EigenKey = std::tuple<double, double, int>;
std::map<EigenKey, std::unique_ptr<EigenResult>> g_eigen_cache;
std::mutex g_eigen_mutex;

constexpr double kAsymptoticThreshold = 6.0;

}  // namespace

const EigenResult& cached_eigenpair(const StableParams& params, int n, int n_threads) {
    const EigenKey key{params.alpha, params.beta, n};
    std::lock_guard<std::mutex> lock(g_eigen_mutex);
    auto it = g_eigen_cache.find(key);
    if (it == g_eigen_cache.end()) {
        const KernelModel model(params, 1.0);
        const KernelMatrix matrix = assemble(model, build_grid(n, 1.0), n_threads);
        it = g_eigen_cache
                 .emplace(key, std::make_unique<EigenResult>(principal_eigenpair(matrix)))
                 .first;
    }
    return *it->second;
}

ProbResult corridor_probability(const StableParams& params, double t, double a,
                                const QueryOptions& options) {
    if (!(t > 0.0) || !(a > 0.0))
        throw std::invalid_argument("corridor_probability requires t > 0 and a > 0");

    // scaling reduction first: p(t, a) = p(t/a^alpha, 1)
    const double tr = t / std::pow(a, params.alpha);

    Method method;
    if (options.force) {
        method = *options.force;
        if (method == Method::ExactSeries && params.alpha != 2.0)
            throw std::invalid_argument("ExactSeries is available only for alpha = 2");
    } else if (params.alpha == 2.0) {
        method = Method::ExactSeries;
    } else if (tr >= kAsymptoticThreshold) {
        method = Method::SpectralAsymptotic;
    } else {
        method = Method::MonteCarlo;
    }

    ProbResult result;
    result.method = method;
    switch (method) {
        case Method::ExactSeries:
            result.p = p2_series(tr, options.eps);
            result.uncertainty = Uncertainty::SeriesEps;
            result.uncertainty_value = options.eps;
            break;
        case Method::SpectralAsymptotic: {
            const EigenResult& eig =
                cached_eigenpair(params, options.grid_n, options.n_threads);
            result.p = survival_asymptotic(eig, params, tr, 1.0);
            result.uncertainty = Uncertainty::AsymptoticOnly;
            result.uncertainty_value = 0.0;
            break;
        }
        case Method::MonteCarlo: {
            const SurvivalEstimate est =
                estimate_survival(params, tr, 1.0, options.n_paths, options.n_steps,
                                  options.seed, options.n_threads);
            result.p = est.p_hat;
            result.uncertainty = Uncertainty::StdError;
            result.uncertainty_value = est.std_error;
            break;
        }
    }
    return result;
}

RegimeReport classify_regime(const StableParams& params, const Schedule& schedule,
                             std::span<const double> t_grid,
                             const QueryOptions& options) {
    RegimeReport report =
        regime_experiment(params, schedule, t_grid, options.n_paths, options.n_steps,
                          options.seed, options.n_threads);
    switch (report.regime) {
        case Regime::RatioDiverges:
            report.note += "; ratio divergence is equivalent to a(t)/t^{1/alpha} -> 0";
            break;
        case Regime::RatioFinite:
            if (params.alpha == 2.0)
                report.predicted_limit = p2_series(report.T, options.eps);
            break;
        case Regime::RatioVanishes:
            break;
    }
    return report;
}

}  // namespace corridor
