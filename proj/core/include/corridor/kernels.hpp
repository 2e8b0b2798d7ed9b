#pragma once

#include <memory>
#include <optional>

#include "corridor/quadrature.hpp"
#include "corridor/stable.hpp"

namespace corridor {

/// Constants (mu, rho, C_alpha) of the general-case kernel.
///
/// mu = 2 - alpha; rho is the root of
///   sin(pi rho) = (1-beta)/(1+beta) * sin(pi (mu - rho))
/// in the bracket forced by 0 < mu - rho < 1, and
///   C_alpha = sin(pi rho) / [sin(pi alpha/2) (1-beta) Gamma(1-rho) Gamma(1+rho-mu)].
struct RhoConstants {
    double mu;
    double rho;
    double c_alpha;
};

/// Solves for RhoConstants by bisection (residual < 1e-14).
/// Throws ConstantsUnavailable for |beta| = 1 and UnsupportedLaw if
/// (alpha, beta) is not the general case.
RhoConstants solve_constants(double alpha, double beta);

/// Evaluatable corridor kernel Phi_alpha(x, y, a) on (-a,a) x (-a,a).
///
/// Immutable after construction; safe to share across threads. Holds the
/// case constants and the singular-endpoint quadrature rules.
class KernelModel {
public:
    KernelModel(const StableParams& params, double half_width);

    const StableParams& params() const { return params_; }
    double half_width() const { return a_; }
    /// Present only for the general case.
    const std::optional<RhoConstants>& constants() const { return constants_; }

    // internals shared with the evaluators
    struct Detail;
    const Detail& detail() const { return *detail_; }

private:
    StableParams params_;
    double a_;
    std::optional<RhoConstants> constants_;
    std::shared_ptr<const Detail> detail_;
};

/// General-case inner integral
///   int_{a|x-y|}^{a^2-xy} [z^2 - a^2(x-y)^2]^{-rho} [z - a(x-y)]^{2 rho - mu} dz
/// evaluated with Gauss-Jacobi product quadrature absorbing the endpoint
/// singularity, plus geometrically graded panels near the diagonal.
/// Throws DivergentDiagonal when x = y and alpha <= 1.
double case1_inner_integral(double x, double y, const KernelModel& model);

/// Kernel value Phi_alpha(x, y, a); nonnegative, may be +infinity on the
/// diagonal (Cauchy case, and general case with alpha < 1).
double kernel_eval(const KernelModel& model, double x, double y);

/// Phi(x, x+u) (shift_first = false) or Phi(x+u, x) (shift_first = true),
/// with the offset u applied exactly. Lets graded quadrature walk into the
/// diagonal without catastrophic cancellation in x - y.
double kernel_eval_offset(const KernelModel& model, double x, double u,
                          bool shift_first = false);

/// int_{-a}^{a} Phi(x, y) dy: the operator's action on constants, computed
/// by geometrically graded panels toward y = x with an analytic tail for
/// the diagonal singularity.
double kernel_row_integral(const KernelModel& model, double x);

/// int_{-a}^{a} Phi(y, x) dy (adjoint action on constants).
double kernel_col_integral(const KernelModel& model, double x);

}  // namespace corridor
