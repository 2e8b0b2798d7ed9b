#include "corridor/quadrature.hpp"

#include <Eigen/Dense>
#include <cassert>
#include <cmath>
#include <map>
#include <mutex>

namespace corridor {

namespace {

GaussRule compute_gauss_legendre(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;  // guesses come out descending; store ascending half
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;  // exact symmetry for the middle node
    return rule;
}

std::map<int, GaussRule> g_gl_cache;
std::mutex g_gl_mutex;

}  // namespace

const GaussRule& gauss_legendre(int n) {
    assert(n >= 1);
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    auto it = g_gl_cache.find(n);
    if (it == g_gl_cache.end())
        it = g_gl_cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

QuadratureGrid build_grid(int n, double a) {
    assert(n >= 2 && a > 0.0);
    const GaussRule& rule = gauss_legendre(n);
    QuadratureGrid grid;
    grid.a = a;
    grid.nodes.resize(n);
    grid.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        grid.nodes[i] = a * rule.nodes[i];
        grid.weights[i] = a * rule.weights[i];
    }
    return grid;
}

GaussRule gauss_jacobi01(int n, double gamma) {
    assert(n >= 1 && gamma > -1.0);
    // Recurrence coefficients of the Jacobi polynomials for weight
    // (1+x)^gamma on (-1,1)  (Jacobi parameters A=0, B=gamma).
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    const double g = gamma;
    jac(0, 0) = g / (g + 2.0);
    for (int k = 1; k < n; ++k) {
        const double kk = k;
        jac(k, k) = g * g / ((2.0 * kk + g) * (2.0 * kk + g + 2.0));
        double beta;
        if (k == 1)
            beta = 4.0 * (1.0 + g) / ((2.0 + g) * (2.0 + g) * (3.0 + g));
        else
            beta = 4.0 * kk * kk * (kk + g) * (kk + g) /
                   ((2.0 * kk + g) * (2.0 * kk + g) * (2.0 * kk + g + 1.0) *
                    (2.0 * kk + g - 1.0));
        const double b = std::sqrt(beta);
        jac(k, k - 1) = b;
        jac(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    const double mass = std::pow(2.0, g + 1.0) / (g + 1.0);  // int (1+x)^g dx
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double map_w = std::pow(2.0, -g - 1.0);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = 0.5 * (1.0 + es.eigenvalues()(i));
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = map_w * mass * v0 * v0;
    }
    return rule;
}

}  // namespace corridor
