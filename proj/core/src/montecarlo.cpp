#include "corridor/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <limits>

#include "parallel.hpp"

namespace corridor {

namespace {

double binomial_stderr(double p, long n) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

SurvivalEstimate make_estimate(long survivors, long n_paths, long n_steps) {
    SurvivalEstimate est;
    est.p_hat = static_cast<double>(survivors) / static_cast<double>(n_paths);
    est.std_error = binomial_stderr(est.p_hat, n_paths);
    est.n_paths = n_paths;
    est.n_steps = n_steps;
    est.bias_note = BiasNote::UpwardGridBias;
    return est;
}

}  // namespace

SurvivalEstimate estimate_survival(const StableParams& params, double t, double a,
                                   long n_paths, long n_steps, std::uint64_t seed,
                                   int n_threads) {
    assert(t > 0.0 && a > 0.0 && n_paths >= 1 && n_steps >= 1);
    const IncrementSampler draw(params, t / static_cast<double>(n_steps));
    std::atomic<long> survivors{0};
    detail::parallel_blocks(n_paths, n_threads, [&](long lo, long hi) {
        long local = 0;
        for (long p = lo; p < hi; ++p) {
            RngStream rng(seed, static_cast<std::uint64_t>(p));
            double x = 0.0;
            bool alive = true;
            for (long k = 0; k < n_steps; ++k) {
                x += draw(rng);
                if (x >= a || x <= -a) {
                    alive = false;
                    break;
                }
            }
            if (alive) ++local;
        }
        survivors += local;
    });
    return make_estimate(survivors.load(), n_paths, n_steps);
}

HittingEstimate estimate_hitting(const StableParams& params, double a, double t,
                                 long n_paths, long n_steps, std::uint64_t seed,
                                 int n_threads) {
    assert(t > 0.0 && a > 0.0 && n_paths >= 1 && n_steps >= 1);
    const IncrementSampler draw(params, t / static_cast<double>(n_steps));
    std::atomic<long> one{0}, two{0};
    detail::parallel_blocks(n_paths, n_threads, [&](long lo, long hi) {
        long local_one = 0, local_two = 0;
        for (long p = lo; p < hi; ++p) {
            RngStream rng(seed, static_cast<std::uint64_t>(p));
            double x = 0.0;
            bool below_one = true;  // sup X < a so far
            bool below_two = true;  // sup |X| < a so far
            for (long k = 0; k < n_steps; ++k) {
                x += draw(rng);
                if (x >= a) {
                    below_one = false;
                    below_two = false;
                    break;  // both hitting events decided
                }
                if (x <= -a) below_two = false;
            }
            if (below_one) ++local_one;
            if (below_two) ++local_two;
        }
        one += local_one;
        two += local_two;
    });
    HittingEstimate est;
    est.one_sided = make_estimate(one.load(), n_paths, n_steps);
    est.two_sided = make_estimate(two.load(), n_paths, n_steps);
    return est;
}

double Schedule::operator()(double t, double alpha) const {
    const double root = std::pow(t, 1.0 / alpha);
    switch (kind) {
        case Kind::ShrinkingLog: return root / std::log(M_E + t);
        case Kind::GrowingLog: return root * std::log(M_E + t);
        case Kind::PowerLaw: return std::pow(t / T, 1.0 / alpha);
    }
    return root;
}

std::string Schedule::name() const {
    switch (kind) {
        case Kind::ShrinkingLog: return "shrinking-log";
        case Kind::GrowingLog: return "growing-log";
        case Kind::PowerLaw: return "power-law";
    }
    return "?";
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::RatioDiverges: return "RatioDiverges";
        case Regime::RatioVanishes: return "RatioVanishes";
        case Regime::RatioFinite: return "RatioFinite";
    }
    return "?";
}

RegimeReport regime_experiment(const StableParams& params, const Schedule& schedule,
                               std::span<const double> t_grid, long n_paths,
                               long n_steps, std::uint64_t seed, int n_threads) {
    assert(t_grid.size() >= 3);
    assert(std::is_sorted(t_grid.begin(), t_grid.end()));

    RegimeReport report;
    report.t_grid.assign(t_grid.begin(), t_grid.end());
    for (double t : t_grid) {
        const double a = schedule(t, params.alpha);
        report.a_of_t.push_back(a);
        report.ratio.push_back(t / std::pow(a, params.alpha));

        const double root = std::pow(t, 1.0 / params.alpha);
        const double b = std::log(M_E + t);
        const double hi_cut = b * root;
        const double lo_cut = root / b;

        const IncrementSampler draw(params, t / static_cast<double>(n_steps));
        std::atomic<long> survive{0}, above{0}, below{0};
        detail::parallel_blocks(n_paths, n_threads, [&](long lo, long hi) {
            long ls = 0, la = 0, lb = 0;
            for (long p = lo; p < hi; ++p) {
                RngStream rng(seed, static_cast<std::uint64_t>(p));
                double x = 0.0, sup = 0.0;
                for (long k = 0; k < n_steps; ++k) {
                    x += draw(rng);
                    const double ax = std::abs(x);
                    if (ax > sup) sup = ax;
                    // every counted event is decided once sup clears both cuts
                    if (sup >= a && sup > hi_cut) break;
                }
                if (sup < a) ++ls;
                if (sup > hi_cut) ++la;
                if (sup < lo_cut) ++lb;
            }
            survive += ls;
            above += la;
            below += lb;
        });
        report.p_hats.push_back(make_estimate(survive.load(), n_paths, n_steps));
        report.frac_above.push_back(static_cast<double>(above.load()) / n_paths);
        report.frac_below.push_back(static_cast<double>(below.load()) / n_paths);
    }

    const double growth = report.ratio.back() / report.ratio.front();
    if (growth > 10.0) {
        report.regime = Regime::RatioDiverges;
        report.predicted_limit = 0.0;
    } else if (growth < 0.1) {
        report.regime = Regime::RatioVanishes;
        report.predicted_limit = 1.0;
    } else {
        report.regime = Regime::RatioFinite;
        std::vector<double> sorted = report.ratio;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t mid = sorted.size() / 2;
        report.T = sorted.size() % 2 == 1
                       ? sorted[mid]
                       : 0.5 * (sorted[mid - 1] + sorted[mid]);
        report.predicted_limit = std::numeric_limits<double>::quiet_NaN();
    }
    report.note =
        "finite-horizon, in-probability proxy (concentration fractions use "
        "b(t) = log(e+t)); grid-sampled suprema bias survival upward";
    return report;
}

}  // namespace corridor
