// corridor: survival probabilities of stable processes in a symmetric
// corridor, by exact series, spectral asymptotics, or path simulation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "corridor/corridor.hpp"
#include "corridor/errors.hpp"

using json = nlohmann::ordered_json;
using namespace corridor;

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_out(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

int threads_from_env(int cli_value) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("STABLE_CORRIDOR_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;
}

std::string survival_csv(std::span<const double> ts, std::span<const double> as,
                         std::span<const SurvivalEstimate> ests, std::uint64_t seed) {
    std::ostringstream os;
    os << "t,a,p_hat,stderr,n_paths,n_steps,seed\n";
    for (std::size_t i = 0; i < ests.size(); ++i) {
        os << fmt17(ts[i]) << ',' << fmt17(as[i]) << ',' << fmt17(ests[i].p_hat)
           << ',' << fmt17(ests[i].std_error) << ',' << ests[i].n_paths << ','
           << ests[i].n_steps << ',' << seed << '\n';
    }
    return os.str();
}

struct CommonOpts {
    double alpha = 2.0;
    double beta = 0.0;
    double a = 1.0;
    double t = 1.0;
    long n_paths = 20000;
    long n_steps = 10000;
    int grid_n = 256;
    std::uint64_t seed = 0;
    double eps = 1e-10;
    int threads = 0;
    std::string output;
    std::string format;
};

int run_validate(int threads);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "corridor: probability that a strictly stable process stays inside "
        "|X| < a up to time t, with spectral, series and Monte Carlo routes"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_law = [&](CLI::App* cmd, bool need_t) {
        cmd->add_option("--alpha", o.alpha, "characteristic exponent in (0,2]")->required();
        cmd->add_option("--beta", o.beta, "skewness in [-1,1]")->capture_default_str();
        cmd->add_option("--a", o.a, "corridor half-width")->capture_default_str();
        if (need_t) cmd->add_option("--t", o.t, "time horizon")->required();
        cmd->add_option("--output,-o", o.output, "output file (default stdout)");
        cmd->add_option("--threads", o.threads,
                        "worker cap (default: STABLE_CORRIDOR_THREADS or hardware)");
    };

    // prob
    auto* prob = app.add_subcommand("prob", "corridor survival probability p_alpha(t, a)");
    add_law(prob, true);
    std::string method_str = "auto";
    prob->add_option("--method", method_str, "auto|series|spectral|mc")
        ->check(CLI::IsMember({"auto", "series", "spectral", "mc"}))
        ->capture_default_str();
    prob->add_option("--n", o.grid_n, "Nystrom grid size")->capture_default_str();
    prob->add_option("--n-paths", o.n_paths, "MC paths")->capture_default_str();
    prob->add_option("--n-steps", o.n_steps, "MC steps per path")->capture_default_str();
    prob->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    prob->add_option("--eps", o.eps, "series truncation bound")->capture_default_str();

    // wiener
    auto* wie = app.add_subcommand("wiener", "exact alpha=2 series p_2(t, a)");
    wie->add_option("--t", o.t, "time horizon")->required();
    wie->add_option("--a", o.a, "corridor half-width")->capture_default_str();
    wie->add_option("--eps", o.eps, "series truncation bound")->capture_default_str();
    wie->add_option("--output,-o", o.output, "output file (default stdout)");

    // eigen
    auto* eig = app.add_subcommand(
        "eigen", "principal eigenvalue, eigenfunctions and coefficient g(0) int h");
    add_law(eig, false);
    eig->add_option("--n", o.grid_n, "Nystrom grid size")->capture_default_str();
    eig->add_option("--format", o.format, "json (lambda, coef) or csv (x, g, h samples)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // kernel
    auto* ker = app.add_subcommand("kernel", "tabulate the kernel Phi(x, y, a)");
    add_law(ker, false);
    int nx = 21, ny = 21;
    ker->add_option("--nx", nx, "grid points in x")->capture_default_str();
    ker->add_option("--ny", ny, "grid points in y")->capture_default_str();

    // simulate
    auto* sim = app.add_subcommand("simulate", "Monte Carlo survival / hitting tails");
    add_law(sim, true);
    bool hitting = false;
    sim->add_flag("--hitting", hitting, "also report the one-sided tail P(T_a > t)");
    sim->add_option("--n-paths", o.n_paths, "MC paths")->capture_default_str();
    sim->add_option("--n-steps", o.n_steps, "MC steps per path")->capture_default_str();
    sim->add_option("--seed", o.seed, "RNG seed")->capture_default_str();

    // regime
    auto* reg = app.add_subcommand("regime", "growth-regime experiment for a(t) schedules");
    add_law(reg, false);
    std::string schedule_str = "power-law";
    double schedule_T = 5.0;
    std::vector<double> t_grid{10.0, 100.0, 1000.0};
    reg->add_option("--schedule", schedule_str, "shrinking-log|growing-log|power-law")
        ->check(CLI::IsMember({"shrinking-log", "growing-log", "power-law"}))
        ->capture_default_str();
    reg->add_option("--T", schedule_T, "power-law time constant")->capture_default_str();
    reg->add_option("--t-grid", t_grid, "increasing time grid (>= 3 points)")
        ->delimiter(',')
        ->capture_default_str();
    reg->add_option("--n-paths", o.n_paths, "MC paths per grid point")->capture_default_str();
    reg->add_option("--n-steps", o.n_steps, "MC steps per path")->capture_default_str();
    reg->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
    reg->add_option("--format", o.format, "csv (per-point rows) or json (full report)")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // validate
    auto* val = app.add_subcommand("validate", "run the built-in oracle suite");
    val->add_option("--threads", o.threads, "worker cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const int threads = threads_from_env(o.threads);

    try {
        if (prob->parsed()) {
            const StableParams params = validate_params(o.alpha, o.beta);
            QueryOptions q;
            if (method_str == "series") q.force = Method::ExactSeries;
            else if (method_str == "spectral") q.force = Method::SpectralAsymptotic;
            else if (method_str == "mc") q.force = Method::MonteCarlo;
            q.grid_n = o.grid_n;
            q.n_paths = o.n_paths;
            q.n_steps = o.n_steps;
            q.seed = o.seed;
            q.eps = o.eps;
            q.n_threads = threads;
            const ProbResult r = corridor_probability(params, o.t, o.a, q);
            json j;
            j["alpha"] = params.alpha;
            j["beta"] = params.beta;
            j["a"] = o.a;
            j["t"] = o.t;
            j["p"] = r.p;
            j["method"] = to_string(r.method);
            if (r.uncertainty == Uncertainty::StdError) j["stderr"] = r.uncertainty_value;
            j["seed"] = o.seed;
            write_out(o.output, j.dump() + "\n");
        } else if (wie->parsed()) {
            const double p = p2(o.t, o.a, o.eps);
            json j;
            j["alpha"] = 2.0;
            j["beta"] = 0.0;
            j["a"] = o.a;
            j["t"] = o.t;
            j["p"] = p;
            j["method"] = to_string(Method::ExactSeries);
            j["seed"] = o.seed;
            write_out(o.output, j.dump() + "\n");
        } else if (eig->parsed()) {
            const StableParams params = validate_params(o.alpha, o.beta);
            const KernelModel model(params, o.a);
            const KernelMatrix matrix = assemble(model, build_grid(o.grid_n, o.a), threads);
            const EigenResult res = principal_eigenpair(matrix);
            if (o.format == "csv") {
                std::ostringstream os;
                os << "x,g,h\n";
                for (int i = 0; i < res.grid.size(); ++i)
                    os << fmt17(res.grid.nodes[i]) << ',' << fmt17(res.g[i]) << ','
                       << fmt17(res.h[i]) << '\n';
                write_out(o.output, os.str());
            } else {
                double int_h = 0.0;
                for (int i = 0; i < res.grid.size(); ++i)
                    int_h += res.grid.weights[i] * res.h[i];
                json j;
                j["alpha"] = params.alpha;
                j["beta"] = params.beta;
                j["a"] = o.a;
                j["lambda"] = res.lambda;
                j["coef"] = res.g_zero * int_h;
                j["seed"] = o.seed;
                write_out(o.output, j.dump() + "\n");
            }
        } else if (ker->parsed()) {
            const StableParams params = validate_params(o.alpha, o.beta);
            const KernelModel model(params, o.a);
            std::ostringstream os;
            os << "x,y,phi\n";
            for (int i = 0; i < nx; ++i) {
                const double x = nx == 1 ? 0.0 : -o.a + 2.0 * o.a * i / (nx - 1);
                for (int j = 0; j < ny; ++j) {
                    const double y = ny == 1 ? 0.0 : -o.a + 2.0 * o.a * j / (ny - 1);
                    os << fmt17(x) << ',' << fmt17(y) << ','
                       << fmt17(kernel_eval(model, x, y)) << '\n';
                }
            }
            write_out(o.output, os.str());
        } else if (sim->parsed()) {
            const StableParams params = validate_params(o.alpha, o.beta);
            if (hitting) {
                const HittingEstimate h = estimate_hitting(params, o.a, o.t, o.n_paths,
                                                           o.n_steps, o.seed, threads);
                json j;
                j["alpha"] = params.alpha;
                j["beta"] = params.beta;
                j["a"] = o.a;
                j["t"] = o.t;
                j["one_sided"] = {{"p", h.one_sided.p_hat}, {"stderr", h.one_sided.std_error}};
                j["two_sided"] = {{"p", h.two_sided.p_hat}, {"stderr", h.two_sided.std_error}};
                j["n_paths"] = o.n_paths;
                j["n_steps"] = o.n_steps;
                j["seed"] = o.seed;
                write_out(o.output, j.dump() + "\n");
            } else {
                const SurvivalEstimate est = estimate_survival(
                    params, o.t, o.a, o.n_paths, o.n_steps, o.seed, threads);
                write_out(o.output, survival_csv({{o.t}}, {{o.a}}, {{est}}, o.seed));
            }
        } else if (reg->parsed()) {
            const StableParams params = validate_params(o.alpha, o.beta);
            Schedule schedule;
            if (schedule_str == "shrinking-log") schedule = Schedule::shrinking_log();
            else if (schedule_str == "growing-log") schedule = Schedule::growing_log();
            else schedule = Schedule::power_law(schedule_T);
            QueryOptions q;
            q.n_paths = o.n_paths;
            q.n_steps = o.n_steps;
            q.seed = o.seed;
            q.n_threads = threads;
            const RegimeReport rep = classify_regime(params, schedule, t_grid, q);
            if (o.format == "json") {
                json pts = json::array();
                for (std::size_t i = 0; i < rep.t_grid.size(); ++i) {
                    pts.push_back({{"t", rep.t_grid[i]},
                                   {"a", rep.a_of_t[i]},
                                   {"ratio", rep.ratio[i]},
                                   {"p_hat", rep.p_hats[i].p_hat},
                                   {"stderr", rep.p_hats[i].std_error},
                                   {"frac_above", rep.frac_above[i]},
                                   {"frac_below", rep.frac_below[i]}});
                }
                json j;
                j["alpha"] = params.alpha;
                j["beta"] = params.beta;
                j["schedule"] = schedule.name();
                j["regime"] = to_string(rep.regime);
                if (rep.regime == Regime::RatioFinite) j["T"] = rep.T;
                j["predicted_limit"] = rep.predicted_limit;
                j["points"] = pts;
                j["note"] = rep.note;
                j["seed"] = o.seed;
                write_out(o.output, j.dump() + "\n");
            } else {
                write_out(o.output,
                          survival_csv(rep.t_grid, rep.a_of_t, rep.p_hats, o.seed));
            }
        } else if (val->parsed()) {
            return run_validate(threads);
        }
    } catch (const UnsupportedLaw& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConstantsUnavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NoConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SingularSystem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

namespace {

int run_validate(int threads) {
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        std::cout << (ok ? "[ ok ] " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    // series oracle
    const double p1 = p2_series(1.0, 1e-10);
    check("series p2(1) = 0.10797704", std::abs(p1 - 0.10797704444410901) < 1e-8);

    // Wiener eigen pair vs analytic values
    {
        const StableParams params = validate_params(2.0, 0.0);
        const KernelModel model(params, 1.0);
        const KernelMatrix matrix = assemble(model, build_grid(128, 1.0), threads);
        const EigenResult eig = principal_eigenpair(matrix);
        check("Wiener lambda = 4/pi^2",
              std::abs(eig.lambda - 4.0 / (M_PI * M_PI)) < 1e-6);
        double int_h = 0.0;
        for (int i = 0; i < eig.grid.size(); ++i)
            int_h += eig.grid.weights[i] * eig.h[i];
        check("Wiener coefficient = 4/pi",
              std::abs(eig.g_zero * int_h - 4.0 / M_PI) < 1e-4);
    }

    // kernel scaling across the cases
    {
        const double xs[] = {0.31, -0.62, 0.05};
        const double ys[] = {-0.44, 0.17, 0.88};
        const struct { double alpha, beta; } laws[] = {
            {1.5, 0.0}, {0.7, 0.3}, {1.0, 0.0}, {2.0, 0.0}, {1.5, 1.0}};
        bool ok = true;
        for (const auto& law : laws) {
            const StableParams params = validate_params(law.alpha, law.beta);
            const KernelModel unit(params, 1.0);
            const KernelModel wide(params, 3.0);
            for (int i = 0; i < 3; ++i) {
                const double k1 = kernel_eval(unit, xs[i], ys[i]);
                const double k3 = kernel_eval(wide, 3.0 * xs[i], 3.0 * ys[i]);
                const double want = std::pow(3.0, law.alpha - 1.0) * k1;
                if (std::abs(k3 - want) > 1e-8 * std::max(1.0, std::abs(want)))
                    ok = false;
            }
        }
        check("kernel scaling Phi(ax,ay,a) = a^{alpha-1} Phi(x,y,1)", ok);
    }

    // series vs Monte Carlo with the documented upward grid bias
    {
        const StableParams params = validate_params(2.0, 0.0);
        const SurvivalEstimate est =
            estimate_survival(params, 1.0, 1.0, 20000, 4000, 0, threads);
        const double series = p2_series(1.0, 1e-10);
        const double slack = 3.0 * est.std_error + 0.02;
        check("series vs MC (alpha=2)",
              est.p_hat >= series - 3.0 * est.std_error && est.p_hat <= series + slack);
    }

    if (failures > 0) {
        std::cout << failures << " validation check(s) failed\n";
        return 3;
    }
    std::cout << "all validation checks passed\n";
    return 0;
}

}  // namespace
