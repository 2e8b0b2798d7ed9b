#pragma once

#include <vector>

namespace corridor {

/// Quadrature nodes/weights on the open interval (-a, a).
/// Weights sum to 2a; nodes are strictly increasing and symmetric about 0,
/// never touching the endpoints.
struct QuadratureGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    double a = 1.0;

    int size() const { return static_cast<int>(nodes.size()); }
};

/// Gauss-Legendre rule with n points mapped affinely onto (-a, a).
QuadratureGrid build_grid(int n, double a);

/// Raw Gauss-Legendre nodes/weights on (-1, 1).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

/// Rule for integrals with an algebraic left-endpoint singularity,
///   int_0^1 v^gamma f(v) dv  ~  sum_i w_i f(v_i),   gamma > -1,
/// generated Golub-Welsch style from the Jacobi recurrence coefficients.
GaussRule gauss_jacobi01(int n, double gamma);

}  // namespace corridor
