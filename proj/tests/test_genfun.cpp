#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "cpart/genfun.hpp"
#include "cpart/ntheory.hpp"

using namespace cpart;

namespace {

const WeightTable& primes_table() {
    static WeightTable w = dirichlet_power(WeightKind::PrimeTuple, 1, 20000);
    return w;
}

}  // namespace

TEST_CASE("series coefficients are C(m)/m") {
    PhiSeries phi(primes_table());
    const auto& c = phi.coeffs();
    CHECK(c[2] == doctest::Approx(1.0));        // C(2) = 2
    CHECK(c[3] == doctest::Approx(1.0));        // C(3) = 3
    CHECK(c[4] == doctest::Approx(0.5));        // C(4) = 2 (only d = 2 contributes)
    CHECK(c[6] == doctest::Approx(5.0 / 6.0));  // C(6) = 2 + 3
    CHECK(c[1] == 0.0);
}

TEST_CASE("eval matches the double-sum definition") {
    PhiSeries phi(primes_table());
    double X = 5.0;
    for (double alpha : {0.0, 0.1, 0.37, -0.25}) {
        // direct sum over j and primes, truncated far past the tolerance
        std::complex<double> direct = 0.0;
        auto tables = build_tables(2000);
        for (int j = 1; j <= 80; ++j)
            for (std::uint32_t p : tables.primes) {
                double m = static_cast<double>(j) * p;
                if (m / X > 60.0) break;
                direct += std::exp(-m / X) / static_cast<double>(j) *
                          std::polar(1.0, 2.0 * std::numbers::pi * alpha * m);
            }
        std::complex<double> got = phi.eval(X, alpha, 1e-10);
        CAPTURE(alpha);
        CHECK(std::abs(got - direct) < 1e-8);
    }
}

TEST_CASE("eval symmetries") {
    PhiSeries phi(primes_table());
    auto a = phi.eval(20.0, 0.3);
    auto b = phi.eval(20.0, -0.3);
    CHECK(a.real() == doctest::Approx(b.real()));
    CHECK(a.imag() == doctest::Approx(-b.imag()));
    // alpha = 0 equals the m = 0 radial derivative
    CHECK(phi.eval(20.0, 0.0).real() ==
          doctest::Approx(phi.radial_derivative(20.0, 0)).epsilon(1e-12));
    CHECK(phi.eval(20.0, 0.0).imag() == doctest::Approx(0.0));
}

TEST_CASE("radial derivative matches numerical differentiation") {
    PhiSeries phi(primes_table());
    double X = 15.0;
    // (rho d/drho) Phi = X^2 dPhi/dX
    double h = 1e-3;
    double num = (phi.radial_derivative(X + h, 0, 1e-12) -
                  phi.radial_derivative(X - h, 0, 1e-12)) /
                 (2.0 * h) * X * X;
    CHECK(phi.radial_derivative(X, 1, 1e-9) == doctest::Approx(num).epsilon(1e-5));
}

TEST_CASE("config certifies the truncation tail") {
    PhiSeries phi(primes_table());
    auto cfg = phi.config(50.0, 1e-9);
    CHECK(cfg.tail_bound <= 1e-9);
    CHECK(cfg.N <= phi.m_max());
    CHECK_THROWS(phi.config(5000.0, 1e-9));  // table far too short
}

TEST_CASE("laplace_check against exactly integrable cases") {
    // a = b = 0, lambda = 0: integral = e^{-2 gamma}/gamma
    {
        auto lc = laplace_check(0, 0.0, 0.0, {1e-4, 0.0});
        double exact = std::exp(-2e-4) / 1e-4;
        CHECK(lc.integral.real() == doctest::Approx(exact).epsilon(1e-7));
        CHECK(std::fabs(lc.integral.imag()) < 1e-6);
    }
    // lambda = 1: integral = e^{-2 gamma}(2/gamma + 1/gamma^2)
    {
        double g = 2e-4;
        auto lc = laplace_check(0, 0.0, 1.0, {g, 0.0});
        double exact = std::exp(-2.0 * g) * (2.0 / g + 1.0 / (g * g));
        CHECK(lc.integral.real() == doctest::Approx(exact).epsilon(1e-7));
    }
}

TEST_CASE("laplace_check leading-term ratio drifts toward 1") {
    // the log/loglog factors converge at 1/log(1/gamma) speed
    double prev = 0.0;
    int step = 0;
    for (double g : {1e-3, 1e-5, 1e-7}) {
        auto lc = laplace_check(0, 1.0, 0.0, {g, 0.0});
        CAPTURE(g);
        CHECK(lc.ratio > 0.8);
        CHECK(lc.ratio < 1.6);
        if (step++) CHECK(std::fabs(lc.ratio - 1.0) <= std::fabs(prev - 1.0) + 1e-9);
        prev = lc.ratio;
    }
    // complex gamma stays finite and near the real-gamma value
    auto lc = laplace_check(1, 1.0, 0.0, {1e-5, 1e-6});
    CHECK(std::isfinite(lc.ratio));
    CHECK(lc.ratio > 0.5);
    CHECK(lc.ratio < 2.0);
}

TEST_CASE("domain grid evaluates the prime product log") {
    // pixel (row 12, col 22) of a 25x25 grid of radius 0.625 sits at z = 0.5
    DomainGrid g = domain_grid(1, 10, 25, 0.625);
    REQUIRE(g.is_inside(12, 22));
    double expect = 0.0;
    for (int p : {2, 3, 5, 7}) expect -= std::log(1.0 - std::pow(0.5, p));
    CHECK(expect == doctest::Approx(0.460805340851909744615742952165).epsilon(1e-12));
    CHECK(g.at(12, 22).real() == doctest::Approx(expect).epsilon(1e-9));
    CHECK(std::fabs(g.at(12, 22).imag()) < 1e-9);

    // conjugate symmetry between mirrored rows
    for (int row = 0; row < 25; ++row)
        for (int col = 0; col < 25; ++col) {
            if (!g.is_inside(row, col)) {
                CHECK(!g.is_inside(24 - row, col));
                continue;
            }
            CHECK(g.at(row, col).real() ==
                  doctest::Approx(g.at(24 - row, col).real()).epsilon(1e-12));
            CHECK(g.at(row, col).imag() ==
                  doctest::Approx(-g.at(24 - row, col).imag()).epsilon(1e-12));
        }

    // corners of the square lie outside the disc
    CHECK_FALSE(g.is_inside(0, 0));
    CHECK(g.values[0] == std::complex<double>(0.0, 0.0));
}

TEST_CASE("domain grid input validation") {
    CHECK_THROWS(domain_grid(1, 500, 16, 0.9));
    CHECK_THROWS(domain_grid(1, 10, 0, 0.9));
    CHECK_THROWS(domain_grid(1, 10, 16, 1.5));
}
