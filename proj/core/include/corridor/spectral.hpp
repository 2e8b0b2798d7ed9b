#pragma once

#include <vector>

#include "corridor/kernels.hpp"
#include "corridor/quadrature.hpp"
#include "corridor/stable.hpp"

namespace corridor {

/// Nystrom discretization of the corridor operator on a quadrature grid:
/// entries[i][j] = Phi(x_i, x_j, a) * w_j, except that both diagonals are
/// replaced by the row-sum rule (the diagonal entry is chosen so the row
/// integrates the kernel exactly against constants), which regularizes the
/// diagonal singularities and restores high-order convergence across the
/// kernel's diagonal kink.
struct KernelMatrix {
    std::vector<double> entries;          ///< n*n row-major
    std::vector<double> adjoint_diag;     ///< row-sum diagonal of the adjoint system
    std::vector<double> phi_from_origin;  ///< Phi(0, x_j, a)
    double row_integral_origin = 0.0;     ///< int Phi(0, y, a) dy
    QuadratureGrid grid;
    LawCase law = LawCase::Wiener;
    double alpha = 2.0;

    int n() const { return grid.size(); }
    double entry(int i, int j) const { return entries[static_cast<std::size_t>(i) * grid.size() + j]; }
};

/// Assembles the Nystrom matrix; rows are filled in parallel.
/// Requires grid.a == model.half_width().
KernelMatrix assemble(const KernelModel& model, const QuadratureGrid& grid,
                      int n_threads = 0);

/// Principal (Perron) eigenpair: dominant eigenvalue with right and left
/// eigenfunction samples, sign-normalized nonnegative, (g, h) = 1 under
/// grid quadrature and (g, g) = 1 so that g = h in the self-adjoint case.
struct EigenResult {
    double lambda = 0.0;
    std::vector<double> g;
    std::vector<double> h;
    QuadratureGrid grid;
    double g_zero = 0.0;       ///< Nystrom interpolant of g at x = 0
    double lambda2_abs = 0.0;  ///< deflated estimate of the runner-up modulus
};

/// Power iteration on the matrix (right) and its transpose-with-weights
/// (left), Rayleigh-quotient stopping at 1e-12 relative change.
/// Throws NoConvergence after 1e5 iterations.
EigenResult principal_eigenpair(const KernelMatrix& matrix);

/// Long-time survival asymptote
///   p(t, a) ~ exp(-t / (a^alpha lambda)) g(0) int h dx
/// from an eigenpair computed at half-width 1.
double survival_asymptotic(const EigenResult& eig, const StableParams& params,
                           double t, double a);

/// Solves (I + s B*) psi = Phi(0, ., a) on the grid nodes.
/// Throws SingularSystem if the solve's condition estimate exceeds 1e12.
std::vector<double> resolvent_psi(const KernelMatrix& matrix, double s);

/// int_0^inf e^{-su} p(u, a) du = int_{-a}^{a} psi(x, s, a) dx by grid
/// quadrature of the resolvent.
double laplace_survival(const KernelMatrix& matrix, double s);

}  // namespace corridor
