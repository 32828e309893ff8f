#include <doctest.h>

#include <cmath>
#include <vector>

#include "cpart/partitions.hpp"

using namespace cpart;

namespace {

WeightTable all_ones(std::size_t n_max) {
    WeightTable w;
    w.kind = WeightKind::PrimeTuple;
    w.r = 1;
    w.n_max = n_max;
    w.ivals.assign(n_max + 1, 1);
    w.ivals[0] = 0;
    return w;
}

}  // namespace

TEST_CASE("weighted divisor sums reduce to sigma for all-ones weights") {
    WeightTable w = all_ones(60);
    auto C = weighted_divisor_sums(w, 60);
    auto sigma = [](std::size_t k) {
        std::size_t s = 0;
        for (std::size_t d = 1; d <= k; ++d)
            if (k % d == 0) s += d;
        return s;
    };
    for (std::size_t k = 1; k <= 60; ++k)
        CHECK(C[k] == doctest::Approx(static_cast<double>(sigma(k))));
}

TEST_CASE("all-ones weights give the ordinary partition numbers") {
    WeightTable w = all_ones(100);
    PartitionSeries ps = euler_transform(w, 100);
    REQUIRE(ps.has_exact());
    CHECK(ps.coeffs_exact[10] == 42);
    CHECK(ps.coeffs_exact[20] == 627);
    CHECK(ps.coeffs_exact[50] == 204226);
    CHECK(ps.coeffs_exact[100] == 190569292);
}

TEST_CASE("euler transform equals the brute-force oracle for n <= 40") {
    for (int r : {1, 2, 3}) {
        WeightTable w = dirichlet_power(WeightKind::PrimeTuple, r, 40);
        PartitionSeries ps = euler_transform(w, 40);
        REQUIRE(ps.has_exact());
        for (std::size_t n = 0; n <= 40; ++n) {
            CAPTURE(r);
            CAPTURE(n);
            CHECK(ps.coeffs_exact[n] == brute_force_partitions_exact(w, n));
        }
    }
    for (int r : {1, 2}) {
        WeightTable w = dirichlet_power(WeightKind::VonMangoldtPower, r, 40);
        PartitionSeries ps = euler_transform(w, 40);
        for (std::size_t n = 1; n <= 40; ++n) {
            double oracle = brute_force_partitions(w, n);
            double got = ps.coeffs_log[n].is_zero()
                             ? 0.0
                             : std::exp(ps.coeffs_log[n].ln_abs);
            CAPTURE(r);
            CAPTURE(n);
            if (oracle == 0.0)
                CHECK(got == 0.0);
            else
                CHECK(got == doctest::Approx(oracle).epsilon(1e-9));
        }
    }
}

TEST_CASE("prime partition checkpoints") {
    WeightTable w = dirichlet_power(WeightKind::PrimeTuple, 1, 1000);
    PartitionSeries ps = euler_transform(w, 1000);
    REQUIRE(ps.has_exact());
    CHECK(ps.coeffs_exact[5] == 2);
    CHECK(ps.coeffs_exact[10] == 5);
    CHECK(ps.coeffs_exact[1000] == mpz_class("48278613741845757"));
}

TEST_CASE("log path agrees with the exact path") {
    WeightTable w = dirichlet_power(WeightKind::PrimeTuple, 2, 2000);
    PartitionSeries ps = euler_transform(w, 2000);
    REQUIRE(ps.has_exact());
    for (std::size_t n : {100u, 500u, 1000u, 2000u}) {
        double exact_log = std::log(ps.coeffs_exact[n].get_d()) +
                           0.0;  // fits in double range here
        // use mpz log via size for the largest value
        signed long exp2;
        double m = mpz_get_d_2exp(&exp2, ps.coeffs_exact[n].get_mpz_t());
        double ln = std::log(m) + exp2 * std::log(2.0);
        (void)exact_log;
        CHECK(ps.coeffs_log[n].ln_abs == doctest::Approx(ln).epsilon(1e-9));
    }
}

TEST_CASE("exact path cutoff leaves the log path intact") {
    WeightTable w = dirichlet_power(WeightKind::PrimeTuple, 1, 300);
    PartitionSeries full = euler_transform(w, 300);
    PartitionSeries cut = euler_transform(w, 300, 100);
    CHECK(cut.coeffs_exact.size() == 101);
    for (std::size_t n = 0; n <= 100; ++n)
        CHECK(cut.coeffs_exact[n] == full.coeffs_exact[n]);
    for (std::size_t n = 0; n <= 300; ++n)
        CHECK(cut.coeffs_log[n].ln_abs == full.coeffs_log[n].ln_abs);
    PartitionSeries none = euler_transform(w, 300, 0);
    CHECK_FALSE(none.has_exact());
}
