#include "corridor/kernels.hpp"

#include <cassert>
#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>

#include "corridor/errors.hpp"

namespace corridor {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kPanelNodes = 32;
// relative offset below which the diagonal neighborhood is handled by the
// analytic two-term tail instead of more panels
constexpr double kTailCut = 1e-7;

double residual(double rho, double mu, double k) {
    return std::sin(M_PI * rho) - k * std::sin(M_PI * (mu - rho));
}

}  // namespace

RhoConstants solve_constants(double alpha, double beta) {
    if (beta == 1.0 || beta == -1.0)
        throw ConstantsUnavailable(
            "constants (mu, rho, C_alpha) are defined for |beta| < 1; "
            "the totally skewed case has its own closed-form kernel");
    const StableParams params = validate_params(alpha, beta);
    if (params.law != LawCase::Case1)
        throw UnsupportedLaw("kernel constants exist only for the general case");

    const double mu = 2.0 - alpha;
    const double k = (1.0 - beta) / (1.0 + beta);
    double lo = std::max(mu - 1.0, 0.0);
    double hi = std::min(mu, 1.0);

    // The admissible bracket is (max(mu-1,0), min(mu,1)); scan for sign
    // changes so an unexpected extra root does not go unnoticed. A scan
    // point can land exactly on the root (beta = 0 puts it at mu/2), so
    // exact zeros are roots, not crossings.
    const int scan = 256;
    int crossings = 0;
    double blo = lo, bhi = hi;
    double exact_root = std::numeric_limits<double>::quiet_NaN();
    double prev = residual(lo, mu, k);
    double prev_r = lo;
    bool through_zero = false;  // sign flip straddling an exact zero is that root
    for (int i = 1; i <= scan; ++i) {
        const double r = lo + (hi - lo) * i / scan;
        const double cur = residual(r, mu, k);
        if (cur == 0.0) {
            if (crossings == 0) exact_root = r;
            ++crossings;
            through_zero = true;
            continue;
        }
        if (!through_zero && prev * cur < 0.0) {
            if (crossings == 0) {
                blo = prev_r;
                bhi = r;
            }
            ++crossings;
        }
        prev = cur;
        prev_r = r;
        through_zero = false;
    }
    if (crossings == 0)
        throw ConstantsUnavailable("no sign change for the rho equation in the admissible bracket");
    if (crossings > 1)
        std::cerr << "corridor: rho equation has " << crossings
                  << " brackets for alpha=" << alpha << " beta=" << beta
                  << "; using the first\n";

    double rho;
    if (!std::isnan(exact_root)) {
        rho = exact_root;
    } else {
        double flo = residual(blo, mu, k);
        for (int it = 0; it < 200 && bhi - blo > 1e-16; ++it) {
            const double mid = 0.5 * (blo + bhi);
            const double fm = residual(mid, mu, k);
            if (fm == 0.0) {
                blo = bhi = mid;
                break;
            }
            if (flo * fm < 0.0) {
                bhi = mid;
            } else {
                blo = mid;
                flo = fm;
            }
        }
        rho = 0.5 * (blo + bhi);
    }
    const double c_alpha = std::sin(M_PI * rho) /
                           (std::sin(M_PI * alpha / 2.0) * (1.0 - beta) *
                            std::tgamma(1.0 - rho) * std::tgamma(1.0 + rho - mu));
    return {mu, rho, c_alpha};
}

// ---------------------------------------------------------------------------
// KernelModel
// ---------------------------------------------------------------------------

struct KernelModel::Detail {
    // general case
    double mu = 0.0, rho = 0.0;
    double prefactor = 0.0;  // C_alpha (2a)^{mu-1}
    GaussRule gj_lower;      // endpoint exponent gamma = rho - mu  (x > y)
    GaussRule gj_upper;      // gamma = -rho                        (x < y)
    double sum0_lower = 0.0;  // sum w_i (1+v_i)^{-mu-gamma} for each branch
    double sum0_upper = 0.0;
    double beta_tail_lower = 0.0;  // B(gamma+1, mu-1) for the kink tail
    double beta_tail_upper = 0.0;
    // totally skewed case
    double case2_pref = 0.0;  // cos(pi alpha/2) / ((2a)^{alpha-1} Gamma(alpha))
};

KernelModel::KernelModel(const StableParams& params, double half_width)
    : params_(params), a_(half_width) {
    assert(half_width > 0.0);
    auto detail = std::make_shared<Detail>();
    const double alpha = params.alpha;
    switch (params.law) {
        case LawCase::Case1: {
            const RhoConstants c = solve_constants(alpha, params.beta);
            constants_ = c;
            detail->mu = c.mu;
            detail->rho = c.rho;
            detail->prefactor = c.c_alpha * std::pow(2.0 * a_, c.mu - 1.0);
            const int n = alpha < 0.4 ? 64 : 32;
            const double g_lower = c.rho - c.mu;
            const double g_upper = -c.rho;
            detail->gj_lower = gauss_jacobi01(n, g_lower);
            detail->gj_upper = gauss_jacobi01(n, g_upper);
            auto sum0 = [&](const GaussRule& r, double delta) {
                double s = 0.0;
                for (std::size_t i = 0; i < r.nodes.size(); ++i)
                    s += r.weights[i] * std::pow(1.0 + r.nodes[i], delta);
                return s;
            };
            detail->sum0_lower = sum0(detail->gj_lower, -c.mu - g_lower);
            detail->sum0_upper = sum0(detail->gj_upper, -c.mu - g_upper);
            auto beta_fn = [&](double g) {
                return std::tgamma(g + 1.0) * std::tgamma(c.mu - 1.0) /
                       std::tgamma(g + c.mu);
            };
            detail->beta_tail_lower = beta_fn(g_lower);
            detail->beta_tail_upper = beta_fn(g_upper);
            break;
        }
        case LawCase::Case2Plus:
        case LawCase::Case2Minus:
            detail->case2_pref = std::cos(M_PI * alpha / 2.0) /
                                 (std::pow(2.0 * a_, alpha - 1.0) * std::tgamma(alpha));
            break;
        default:
            break;
    }
    detail_ = std::move(detail);
}

namespace {

// int_0^R u^gamma (u + 2L)^delta du for the general-case kernel, L > 0.
// Single Gauss-Jacobi when the other branch point is remote; otherwise one
// Jacobi panel on [0, 2L] plus geometrically doubling Legendre panels.
double inner_core(const KernelModel::Detail& d, double L, double R, bool lower) {
    const GaussRule& gj = lower ? d.gj_lower : d.gj_upper;
    const double gamma = lower ? (d.rho - d.mu) : -d.rho;
    const double delta = -d.mu - gamma;
    const double twoL = 2.0 * L;
    if (twoL >= R) {
        double s = 0.0;
        for (std::size_t i = 0; i < gj.nodes.size(); ++i)
            s += gj.weights[i] * std::pow(R * gj.nodes[i] + twoL, delta);
        return std::pow(R, gamma + 1.0) * s;
    }
    double s = std::pow(twoL, 1.0 - d.mu) * (lower ? d.sum0_lower : d.sum0_upper);
    const GaussRule& gl = gauss_legendre(kPanelNodes);
    double c = twoL;
    while (c < R) {
        const double hi = std::min(2.0 * c, R);
        const double mid = 0.5 * (c + hi), half = 0.5 * (hi - c);
        double ps = 0.0;
        for (int i = 0; i < kPanelNodes; ++i) {
            const double z = mid + half * gl.nodes[i];
            ps += gl.weights[i] * std::pow(z, gamma) * std::pow(z + twoL, delta);
        }
        s += half * ps;
        c = hi;
    }
    return s;
}

// Core evaluator; d0 = a(x - y) supplied exactly by the caller.
double eval_core(const KernelModel& model, double x, double y, double d0) {
    const double a = model.half_width();
    const KernelModel::Detail& d = model.detail();
    switch (model.params().law) {
        case LawCase::Wiener:
            return y <= x ? (y + a) * (a - x) / (2.0 * a)
                          : (a - y) * (a + x) / (2.0 * a);
        case LawCase::Case3Cauchy: {
            if (d0 == 0.0) return kInf;
            // (1/4) log(N/D) with D = a^2 (x-y)^2 / N: stable against the
            // catastrophic cancellation in a^2 - xy - sqrt(...) near x = y
            const double s = std::sqrt((a * a - x * x) * (a * a - y * y));
            const double n = a * a - x * y + s;
            return 0.5 * std::log(n / std::abs(d0));
        }
        case LawCase::Case2Plus: {
            const double am1 = model.params().alpha - 1.0;
            const double t1 = d0 < 0.0 ? std::pow(-2.0 * d0, am1) : 0.0;
            const double t2 = std::pow(a - x, am1) * std::pow(a + y, am1);
            return d.case2_pref * (t1 - t2);
        }
        case LawCase::Case2Minus: {
            const double am1 = model.params().alpha - 1.0;
            const double t1 = d0 > 0.0 ? std::pow(2.0 * d0, am1) : 0.0;
            const double t2 = std::pow(a + x, am1) * std::pow(a - y, am1);
            return d.case2_pref * (t1 - t2);
        }
        case LawCase::Case1: {
            const double u_ = a * a - x * y;
            const double l_ = std::abs(d0);
            if (u_ - l_ <= 0.0) return 0.0;
            if (d0 == 0.0) {
                if (d.mu >= 1.0) return kInf;
                return d.prefactor * std::pow(u_, 1.0 - d.mu) / (1.0 - d.mu);
            }
            return d.prefactor * inner_core(d, l_, u_ - l_, d0 > 0.0);
        }
    }
    return 0.0;
}

}  // namespace

double case1_inner_integral(double x, double y, const KernelModel& model) {
    assert(model.params().law == LawCase::Case1);
    const double a = model.half_width();
    assert(std::abs(x) <= a && std::abs(y) <= a);
    const KernelModel::Detail& d = model.detail();
    const double d0 = a * (x - y);
    const double u_ = a * a - x * y;
    const double l_ = std::abs(d0);
    if (u_ - l_ <= 0.0) return 0.0;
    if (d0 == 0.0) {
        if (model.params().alpha <= 1.0) {
            std::ostringstream os;
            os << "inner integral diverges on the diagonal (x=y=" << x
               << ", alpha=" << model.params().alpha << " <= 1)";
            throw DivergentDiagonal(os.str());
        }
        return std::pow(u_, 1.0 - d.mu) / (1.0 - d.mu);
    }
    return inner_core(d, l_, u_ - l_, d0 > 0.0);
}

double kernel_eval(const KernelModel& model, double x, double y) {
    const double a = model.half_width();
    assert(std::abs(x) <= a && std::abs(y) <= a);
    return eval_core(model, x, y, a * (x - y));
}

double kernel_eval_offset(const KernelModel& model, double x, double u,
                          bool shift_first) {
    const double a = model.half_width();
    const double d0 = shift_first ? a * u : -a * u;
    const double xf = shift_first ? x + u : x;
    const double yf = shift_first ? x : x + u;
    return eval_core(model, xf, yf, d0);
}

// ---------------------------------------------------------------------------
// Row/column integrals (action on constants)
// ---------------------------------------------------------------------------

namespace {

// int over the cut-off neighborhood u in (0, m) of Phi along one side of the
// diagonal, from the kernel's local expansion there.
double diagonal_tail(const KernelModel& model, double x, double m, bool lower_branch) {
    const double a = model.half_width();
    const KernelModel::Detail& d = model.detail();
    switch (model.params().law) {
        case LawCase::Wiener:
            return (x + a) * (a - x) / (2.0 * a) * m;
        case LawCase::Case3Cauchy: {
            // Phi ~ (1/2) log(N0 / (a u)), N0 = 2 (a^2 - x^2)
            const double n0 = 2.0 * (a * a - x * x);
            if (n0 <= 0.0) return 0.0;
            return 0.5 * m * (std::log(n0 / (a * m)) + 1.0);
        }
        case LawCase::Case2Plus:
        case LawCase::Case2Minus: {
            const double am1 = model.params().alpha - 1.0;
            const double flat = -d.case2_pref * std::pow(a - x, am1) * std::pow(a + x, am1) * m;
            // the (...)^{alpha-1} kink sits on the second>first side for
            // beta=+1 and on the first>second side for beta=-1
            const bool kink_active = model.params().law == LawCase::Case2Plus
                                         ? !lower_branch
                                         : lower_branch;
            const double kink = kink_active
                                    ? d.case2_pref * std::pow(2.0 * a, am1) *
                                          std::pow(m, model.params().alpha) /
                                          model.params().alpha
                                    : 0.0;
            return flat + kink;
        }
        case LawCase::Case1: {
            // Phi(x, x+-u) = pref [ (2 a u)^{1-mu} B(gamma+1, mu-1)
            //                       + (a^2-x^2)^{1-mu}/(1-mu) ] + O(u^alpha.., u)
            const double alpha = model.params().alpha;
            const double bt = lower_branch ? d.beta_tail_lower : d.beta_tail_upper;
            const double w = a * a - x * x;
            const double kink = std::pow(2.0 * a, 1.0 - d.mu) * bt *
                                std::pow(m, alpha) / alpha;
            const double flat = std::pow(w, 1.0 - d.mu) / (1.0 - d.mu) * m;
            return d.prefactor * (kink + flat);
        }
    }
    return 0.0;
}

// "lower branch" = the kernel branch with endpoint exponent rho - mu,
// i.e. first argument greater than second.
//
// Panels are graded geometrically toward both ends of the side: the
// diagonal (below the analytic-tail cut) and the interval boundary, where
// the kernel vanishes with a fractional power and is not analytic.
double side_integral(const KernelModel& model, double x, double side, int dir,
                     bool col) {
    if (side <= 0.0) return 0.0;
    const double a = model.half_width();
    const bool lower_branch = (dir > 0) == col;
    const double m = std::min(kTailCut * 2.0 * a, side);
    double s = diagonal_tail(model, x, m, lower_branch);
    if (m >= side) return s;

    std::vector<double> bp{m};
    for (double c = 2.0 * m; c < 0.5 * side; c *= 2.0) bp.push_back(c);
    const double stub = 1e-12 * side;
    for (double d = 0.5 * side; d > stub; d *= 0.5)
        if (side - d > bp.back()) bp.push_back(side - d);
    // the straggler [bp.back(), side] is O(stub^{1+gamma}) and dropped

    const GaussRule& gl = gauss_legendre(24);
    for (std::size_t p = 0; p + 1 < bp.size(); ++p) {
        const double mid = 0.5 * (bp[p] + bp[p + 1]);
        const double half = 0.5 * (bp[p + 1] - bp[p]);
        double ps = 0.0;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double u = dir * (mid + half * gl.nodes[i]);
            ps += gl.weights[i] * kernel_eval_offset(model, x, u, col);
        }
        s += half * ps;
    }
    return s;
}

}  // namespace

double kernel_row_integral(const KernelModel& model, double x) {
    const double a = model.half_width();
    assert(std::abs(x) <= a);
    return side_integral(model, x, a - x, +1, false) +
           side_integral(model, x, x + a, -1, false);
}

double kernel_col_integral(const KernelModel& model, double x) {
    const double a = model.half_width();
    assert(std::abs(x) <= a);
    return side_integral(model, x, a - x, +1, true) +
           side_integral(model, x, x + a, -1, true);
}

}  // namespace corridor
