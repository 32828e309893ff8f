#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "cpart/logmag.hpp"
#include "cpart/ntheory.hpp"

namespace cpart {

// Coefficients of prod_{n>=1} (1 - z^n)^{-w_n} up to z^{n_max}.
// coeffs_exact is populated only for integer weight tables and only up to
// the exact-path cutoff; coeffs_log is always present.
struct PartitionSeries {
    WeightKind kind = WeightKind::PrimeTuple;
    int r = 1;
    std::size_t n_max = 0;
    std::vector<mpz_class> coeffs_exact;   // empty or size n_max+1
    std::vector<LogMagnitude> coeffs_log;  // size n_max+1

    bool has_exact() const { return !coeffs_exact.empty(); }
    double log_coeff(std::size_t n) const { return coeffs_log[n].ln_abs; }
};

inline constexpr std::size_t kDefaultExactLimit = 50000;

// C(k) = sum_{d|k} d * w_d, the weighted divisor sums driving the
// product-log recurrence n G(n) = sum_k C(k) G(n-k).
std::vector<double> weighted_divisor_sums(const WeightTable& w, std::size_t k_max);
std::vector<mpz_class> weighted_divisor_sums_exact(const WeightTable& w, std::size_t k_max);

PartitionSeries euler_transform(const WeightTable& weights, std::size_t n_max,
                                std::size_t exact_limit = kDefaultExactLimit);

// Exhaustive oracle: coefficient of z^n by recursion over multisets of
// parts, using the binomial series of (1 - z^m)^{-w_m}. n <= 64.
double brute_force_partitions(const WeightTable& weights, std::size_t n);
mpz_class brute_force_partitions_exact(const WeightTable& weights, std::size_t n);

}  // namespace cpart
