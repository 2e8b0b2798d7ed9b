#pragma once

#include <vector>

namespace corridor {

/// Analytic eigenpair of the alpha = 2 corridor problem on (-1, 1):
///   -g'' = mu g, g(+-1) = 0, mu_n = (n pi / 2)^2, g_n = sin((n pi/2)(x-1)).
struct WienerEigen {
    int n;
    double mu;

    double eval(double x) const;
    /// g_n(0) * int_{-1}^{1} g_n dx: the series coefficient; zero for even n,
    /// (-1)^m 2/(pi (m+1/2)) for n = 2m+1.
    double coefficient() const;
};

/// First k analytic eigenpairs.
std::vector<WienerEigen> wiener_eigenpairs(int k);

/// Corridor survival probability p_2(t) at half-width 1 by the alternating
/// series, truncated under the Leibniz bound: summation stops once the next
/// term magnitude falls below eps with term magnitudes verified decreasing,
/// so |error| < eps.
double p2_series(double t, double eps = 1e-10);

/// p_2(t, a) = p2_series(t / a^2, eps).
double p2(double t, double a, double eps = 1e-10);

}  // namespace corridor
