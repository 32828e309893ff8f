#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cpart/ntheory.hpp"

namespace cpart {

struct ProgressionCount {
    WeightKind kind = WeightKind::PrimeTuple;
    int r = 1;
    std::size_t t = 0;
    std::uint32_t q = 1;
    std::uint32_t ell = 0;
    double count = 0.0;    // integral for the prime-tuple kind
    double leading = 0.0;  // main term of the progression asymptotic
    double ratio = 0.0;    // count / leading
};

// Prefix sums of the weights bucketed by residue class mod q: O(n_max) to
// build, O(1) per (t, ell) query afterwards.
class ResidueSums {
  public:
    ResidueSums(const WeightTable& weights, std::uint32_t q);

    // sum_{n <= t, n = ell (mod q)} w_n
    double sum(std::size_t t, std::uint32_t ell) const;
    std::uint32_t modulus() const { return q_; }
    std::size_t n_max() const { return n_max_; }

  private:
    std::uint32_t q_;
    std::size_t n_max_;
    std::vector<double> prefix_;  // prefix_[(n/q)*q_ + ell] layout, see .cpp
};

double progression_leading(WeightKind kind, int r, double t, std::uint32_t q);

ProgressionCount count_progression(const WeightTable& weights, std::size_t t,
                                   std::uint32_t q, std::uint32_t ell);

struct EquidistributionReport {
    WeightKind kind = WeightKind::PrimeTuple;
    int r = 1;
    std::size_t t = 0;
    std::uint32_t q = 1;
    double mean = 0.0;
    double max_rel_dev = 0.0;  // max_ell |count - mean| / mean
    std::vector<ProgressionCount> classes;
};

EquidistributionReport equidistribution_report(const WeightTable& weights,
                                               std::size_t t, std::uint32_t q);

struct USum {
    std::complex<double> value;    // truncated sum with certified tail
    std::complex<double> leading;  // lemma main term
    double tail_bound = 0.0;
};

// U(gamma, ell, q) = sum_{n = ell (mod q)} w_n e^{-gamma n}, truncated at the
// table end; requires Re(gamma) >= 20 / n_max so the dropped tail is certified.
USum u_sum(const WeightTable& weights, std::complex<double> gamma, std::uint32_t q,
           std::uint32_t ell);

}  // namespace cpart
