#include <doctest.h>

#include <cmath>
#include <numeric>

#include "corridor/quadrature.hpp"

using namespace corridor;

TEST_CASE("build_grid: weights sum to 2a") {
    for (int n : {2, 16, 64, 256}) {
        for (double a : {1.0, 3.7}) {
            const QuadratureGrid g = build_grid(n, a);
            const double sum = std::accumulate(g.weights.begin(), g.weights.end(), 0.0);
            CHECK(std::abs(sum - 2.0 * a) < 1e-12 * a);
        }
    }
}

TEST_CASE("build_grid: n=2 integrates x^2 exactly") {
    const QuadratureGrid g = build_grid(2, 1.0);
    double q = 0.0;
    for (int i = 0; i < 2; ++i) q += g.weights[i] * g.nodes[i] * g.nodes[i];
    CHECK(q == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("build_grid: nodes symmetric, increasing, interior") {
    for (int n : {7, 64, 255}) {
        const QuadratureGrid g = build_grid(n, 2.0);
        for (int i = 0; i < n; ++i) {
            CHECK(std::abs(g.nodes[i] + g.nodes[n - 1 - i]) < 1e-15);
            CHECK(std::abs(g.nodes[i]) < 2.0);
            if (i > 0) CHECK(g.nodes[i] > g.nodes[i - 1]);
            CHECK(g.weights[i] > 0.0);
        }
    }
}

TEST_CASE("gauss_legendre integrates high-degree polynomials exactly") {
    const GaussRule& r = gauss_legendre(8);  // exact through degree 15
    double q = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        q += r.weights[i] * std::pow(r.nodes[i], 14);
    CHECK(q == doctest::Approx(2.0 / 15.0).epsilon(1e-14));
}

TEST_CASE("gauss_jacobi01 reproduces moment integrals") {
    for (double g : {-0.75, -0.5, -0.25, -0.05}) {
        const GaussRule r = gauss_jacobi01(16, g);
        for (int k : {0, 1, 5, 31}) {  // exact through degree 2n-1 = 31
            double q = 0.0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i)
                q += r.weights[i] * std::pow(r.nodes[i], k);
            // int_0^1 v^g v^k dv = 1/(g + k + 1)
            CHECK(q == doctest::Approx(1.0 / (g + k + 1.0)).epsilon(1e-12));
        }
    }
}

TEST_CASE("gauss_jacobi01 handles a nearly flat weight") {
    const GaussRule r = gauss_jacobi01(12, -1e-8);
    double q = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        q += r.weights[i] * std::cos(r.nodes[i]);
    CHECK(q == doctest::Approx(std::sin(1.0)).epsilon(1e-7));
}
