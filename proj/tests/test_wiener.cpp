#include <doctest.h>

#include <cmath>

#include "corridor/quadrature.hpp"
#include "corridor/wiener.hpp"

using namespace corridor;

// frozen by direct high-precision summation of the alternating series
constexpr double kP2_at_1 = 0.10797704444410901;
constexpr double kP2_at_half = 0.37077742979952391;
constexpr double kP2_at_5 = 5.5849167805003878e-6;

TEST_CASE("p2_series pinned values") {
    CHECK(std::abs(p2_series(1.0, 1e-10) - kP2_at_1) < 1e-9);
    CHECK(std::abs(p2_series(0.5, 1e-10) - kP2_at_half) < 1e-9);
    CHECK(std::abs(p2_series(5.0, 1e-10) - kP2_at_5) < 1e-10);
    CHECK(p2_series(0.5) > p2_series(1.0));
}

TEST_CASE("p2_series deep tail keeps relative accuracy") {
    const double one_term = 4.0 / M_PI * std::exp(-10.0 * M_PI * M_PI / 4.0);
    const double val = p2_series(10.0, 1e-10);
    CHECK(std::abs(val / one_term - 1.0) < 1e-9);
    CHECK(val == doctest::Approx(2.4497586156580372e-11).epsilon(1e-9));
}

TEST_CASE("Leibniz truncation bound via eps tightening") {
    for (double t : {0.01, 0.1, 1.0, 10.0}) {
        for (double eps : {1e-4, 1e-6, 1e-8}) {
            CHECK(std::abs(p2_series(t, eps) - p2_series(t, eps / 100.0)) < eps);
        }
    }
}

TEST_CASE("series equals its eigen-expansion reconstruction") {
    const auto pairs = wiener_eigenpairs(25);
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
        double sum = 0.0;
        for (const auto& e : pairs) sum += e.coefficient() * std::exp(-t * e.mu);
        CHECK(std::abs(sum - p2_series(t, 1e-12)) < 1e-10);
    }
}

TEST_CASE("range and monotonicity on a dyadic grid") {
    double prev = 2.0;
    for (double t = 1.0 / 64.0; t <= 64.0; t *= 2.0) {
        const double v = p2_series(t, 1e-10);
        CHECK(v > 0.0);
        CHECK(v <= 1.0);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("p2 reduces through t/a^2") {
    CHECK(p2(4.0, 2.0) == p2(1.0, 1.0));
    CHECK(p2(3.7, 1.0) == p2_series(3.7));
    for (auto [t, a] : {std::pair{2.0, 0.7}, {11.0, 3.0}}) {
        CHECK(p2(t, a) == p2_series(t / (a * a)));
    }
    CHECK(p2(1.0, 1000.0) > 1.0 - 1e-6);
}

TEST_CASE("wiener_eigenpairs: eigenvalues and boundary values") {
    const auto pairs = wiener_eigenpairs(8);
    REQUIRE(pairs.size() == 8);
    CHECK(pairs[0].mu == doctest::Approx(M_PI * M_PI / 4.0).epsilon(1e-15));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(pairs[i].n == static_cast<int>(i) + 1);
        if (i > 0) CHECK(pairs[i].mu > pairs[i - 1].mu);
        CHECK(std::abs(pairs[i].eval(1.0)) < 1e-12);
        CHECK(std::abs(pairs[i].eval(-1.0)) < 1e-12);
    }
}

TEST_CASE("wiener eigenfunctions are orthonormal under quadrature") {
    const auto pairs = wiener_eigenpairs(6);
    const QuadratureGrid grid = build_grid(128, 1.0);
    for (const auto& en : pairs) {
        for (const auto& em : pairs) {
            double q = 0.0;
            for (int i = 0; i < grid.size(); ++i)
                q += grid.weights[i] * en.eval(grid.nodes[i]) * em.eval(grid.nodes[i]);
            CHECK(std::abs(q - (en.n == em.n ? 1.0 : 0.0)) < 1e-12);
        }
    }
}

TEST_CASE("coefficient identity g_n(0) int g_n") {
    const auto pairs = wiener_eigenpairs(9);
    const QuadratureGrid grid = build_grid(256, 1.0);
    CHECK(pairs[0].coefficient() == doctest::Approx(4.0 / M_PI).epsilon(1e-15));
    for (const auto& e : pairs) {
        double integral = 0.0;
        for (int i = 0; i < grid.size(); ++i)
            integral += grid.weights[i] * e.eval(grid.nodes[i]);
        const double numeric = e.eval(0.0) * integral;
        CHECK(std::abs(numeric - e.coefficient()) < 1e-12);
    }
}
