#include "corridor/spectral.hpp"

#include <Eigen/Dense>
#include <cassert>
#include <cmath>
#include <numeric>

#include "corridor/errors.hpp"
#include "parallel.hpp"

namespace corridor {

KernelMatrix assemble(const KernelModel& model, const QuadratureGrid& grid,
                      int n_threads) {
    assert(grid.a == model.half_width());
    // even n keeps nodes off the origin, where the resolvent data
    // Phi(0, .) can be singular
    assert(grid.size() % 2 == 0);
    const int n = grid.size();
    const auto& x = grid.nodes;
    const auto& w = grid.weights;

    KernelMatrix mat;
    mat.grid = grid;
    mat.law = model.params().law;
    mat.alpha = model.params().alpha;
    mat.entries.assign(static_cast<std::size_t>(n) * n, 0.0);
    mat.adjoint_diag.assign(n, 0.0);
    mat.phi_from_origin.resize(n);

    std::vector<double> row_int(n), col_int(n);
    const bool symmetric = model.params().beta == 0.0;

    detail::parallel_blocks(n, n_threads, [&](long lo, long hi) {
        for (long i = lo; i < hi; ++i) {
            double* row = &mat.entries[static_cast<std::size_t>(i) * n];
            for (int j = 0; j < n; ++j) {
                if (j == static_cast<int>(i)) continue;
                row[j] = kernel_eval(model, x[i], x[j]) * w[j];
            }
            row_int[i] = kernel_row_integral(model, x[i]);
            col_int[i] = symmetric ? row_int[i] : kernel_col_integral(model, x[i]);
            mat.phi_from_origin[i] = kernel_eval(model, 0.0, x[i]);
        }
    });
    mat.row_integral_origin = kernel_row_integral(model, 0.0);

    // row-sum diagonals: exact action on constants for B and B*
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        const double* row = &mat.entries[static_cast<std::size_t>(i) * n];
        for (int j = 0; j < n; ++j)
            if (j != i) off += row[j];
        mat.entries[static_cast<std::size_t>(i) * n + i] = row_int[i] - off;

        double off_adj = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != i) off_adj += mat.entry(j, i) * w[j] / w[i];
        mat.adjoint_diag[i] = col_int[i] - off_adj;
    }
    return mat;
}

namespace {

double weighted_dot(const std::vector<double>& w, const std::vector<double>& u,
                    const std::vector<double>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * u[i] * v[i];
    return s;
}

// y = M v for a row-major matrix
void matvec(const std::vector<double>& m, const std::vector<double>& v,
            std::vector<double>& y) {
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        const double* row = &m[i * n];
        for (std::size_t j = 0; j < n; ++j) s += row[j] * v[j];
        y[i] = s;
    }
}

// power iteration with Rayleigh-quotient stopping
double power_iterate(const std::vector<double>& m, std::vector<double>& v) {
    const std::size_t n = v.size();
    std::vector<double> y(n);
    double lambda = 0.0;
    const long max_iter = 100000;
    for (long it = 0; it < max_iter; ++it) {
        matvec(m, v, y);
        double vv = 0.0, vy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            vv += v[i] * v[i];
            vy += v[i] * y[i];
        }
        const double next = vy / vv;
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += y[i] * y[i];
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) v[i] = y[i] / norm;
        if (it > 0 && std::abs(next - lambda) <= 1e-12 * std::abs(next))
            return next;
        lambda = next;
    }
    throw NoConvergence("power iteration did not reach 1e-12 within 1e5 iterations");
}

void make_nonnegative(std::vector<double>& v) {
    double peak = 0.0;
    for (double c : v)
        if (std::abs(c) > std::abs(peak)) peak = c;
    if (peak < 0.0)
        for (double& c : v) c = -c;
}

std::vector<double> adjoint_matrix(const KernelMatrix& mat) {
    const int n = mat.n();
    const auto& w = mat.grid.weights;
    std::vector<double> adj(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            adj[static_cast<std::size_t>(i) * n + j] =
                i == j ? mat.adjoint_diag[i] : mat.entry(j, i) * w[j] / w[i];
    return adj;
}

}  // namespace

EigenResult principal_eigenpair(const KernelMatrix& mat) {
    const int n = mat.n();
    const auto& w = mat.grid.weights;

    EigenResult res;
    res.grid = mat.grid;
    res.g.assign(n, 1.0);
    res.lambda = power_iterate(mat.entries, res.g);

    const std::vector<double> adj = adjoint_matrix(mat);
    res.h.assign(n, 1.0);
    const double lambda_left = power_iterate(adj, res.h);
    assert(std::abs(lambda_left - res.lambda) < 1e-8 * std::abs(res.lambda));
    (void)lambda_left;

    make_nonnegative(res.g);
    make_nonnegative(res.h);

    // (g,g) = 1 then (g,h) = 1 under grid quadrature; in the self-adjoint
    // case this leaves g and h identical
    const double gnorm = std::sqrt(weighted_dot(w, res.g, res.g));
    for (double& c : res.g) c /= gnorm;
    const double gh = weighted_dot(w, res.g, res.h);
    for (double& c : res.h) c /= gh;

    // Nystrom natural interpolant at the origin, in subtracted form:
    //   lambda g(0) = int Phi(0,y)(g(y) - g(0)) dy + g(0) m(0)
    // so the quadrature integrand vanishes at the kernel's kink at y = 0
    double g0_num = 0.0, wphi = 0.0;
    for (int j = 0; j < n; ++j) {
        g0_num += w[j] * mat.phi_from_origin[j] * res.g[j];
        wphi += w[j] * mat.phi_from_origin[j];
    }
    res.g_zero = g0_num / (res.lambda + wphi - mat.row_integral_origin);

    // crude deflated power estimate of the runner-up modulus
    {
        std::vector<double> v(n), y(n);
        for (int i = 0; i < n; ++i) v[i] = ((i * 2654435761u) % 1000) / 500.0 - 1.0;
        double ratio = 0.0;
        for (int it = 0; it < 500; ++it) {
            const double hv = weighted_dot(w, res.h, v);
            for (int i = 0; i < n; ++i) v[i] -= hv * res.g[i];
            matvec(mat.entries, v, y);
            double ny = 0.0, nv = 0.0;
            for (int i = 0; i < n; ++i) {
                ny += y[i] * y[i];
                nv += v[i] * v[i];
            }
            ratio = std::sqrt(ny / nv);
            const double scale = 1.0 / std::sqrt(ny);
            for (int i = 0; i < n; ++i) v[i] = y[i] * scale;
        }
        res.lambda2_abs = ratio;
    }
    return res;
}

double survival_asymptotic(const EigenResult& eig, const StableParams& params,
                           double t, double a) {
    assert(eig.grid.a == 1.0);
    assert(t > 0.0 && a > 0.0);
    double int_h = 0.0;
    for (int j = 0; j < eig.grid.size(); ++j)
        int_h += eig.grid.weights[j] * eig.h[j];
    const double rate = t / (std::pow(a, params.alpha) * eig.lambda);
    return std::exp(-rate) * eig.g_zero * int_h;
}

std::vector<double> resolvent_psi(const KernelMatrix& mat, double s) {
    assert(s >= 0.0);
    const int n = mat.n();
    const std::vector<double> adj = adjoint_matrix(mat);
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) += s * adj[static_cast<std::size_t>(i) * n + j];
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    if (lu.rcond() < 1e-12)
        throw SingularSystem("resolvent system condition estimate exceeds 1e12");
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) rhs(i) = mat.phi_from_origin[i];
    const Eigen::VectorXd psi = lu.solve(rhs);
    return {psi.data(), psi.data() + n};
}

double laplace_survival(const KernelMatrix& mat, double s) {
    const std::vector<double> psi = resolvent_psi(mat, s);
    double total = 0.0;
    for (int i = 0; i < mat.n(); ++i) total += mat.grid.weights[i] * psi[i];
    return total;
}

}  // namespace corridor
