#include "cpart/progressions.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cpart {

ResidueSums::ResidueSums(const WeightTable& weights, std::uint32_t q)
    : q_(q), n_max_(weights.n_max) {
    if (q == 0) throw std::invalid_argument("ResidueSums: q must be positive");
    // prefix_[n] = sum of w_m over m <= n with m = n (mod q).
    prefix_.assign(n_max_ + 1, 0.0);
    for (std::size_t n = 1; n <= n_max_; ++n) {
        double prev = (n >= q) ? prefix_[n - q] : 0.0;
        prefix_[n] = prev + weights.value(n);
    }
}

double ResidueSums::sum(std::size_t t, std::uint32_t ell) const {
    if (ell >= q_) ell = static_cast<std::uint32_t>(ell % q_);
    if (t > n_max_) throw std::out_of_range("ResidueSums: t beyond the table");
    if (t < ell || (ell == 0 && t < q_)) return 0.0;
    std::size_t base = (ell == 0) ? q_ : ell;
    if (t < base) return 0.0;
    std::size_t n = base + ((t - base) / q_) * q_;
    return prefix_[n];
}

double progression_leading(WeightKind kind, int r, double t, std::uint32_t q) {
    if (t < 3.0) throw std::domain_error("progression_leading: t too small");
    double phi = static_cast<double>(euler_phi(q));
    double lt = std::log(t);
    if (kind == WeightKind::PrimeTuple)
        return (r / phi) * t * std::pow(std::log(lt), r - 1) / lt;
    return t * std::pow(lt, r - 1) / (std::tgamma(static_cast<double>(r)) * phi);
}

ProgressionCount count_progression(const WeightTable& weights, std::size_t t,
                                   std::uint32_t q, std::uint32_t ell) {
    if (q == 0) throw std::invalid_argument("count_progression: q must be positive");
    if (std::gcd<std::uint64_t>(ell == 0 ? q : ell, q) != 1)
        throw std::invalid_argument("count_progression: ell and q must be coprime");
    if (t > weights.n_max)
        throw std::invalid_argument("count_progression: t beyond the weight table");

    ProgressionCount out;
    out.kind = weights.kind;
    out.r = weights.r;
    out.t = t;
    out.q = q;
    out.ell = ell;
    ResidueSums sums(weights, q);
    out.count = sums.sum(t, ell);
    out.leading = progression_leading(weights.kind, weights.r,
                                      static_cast<double>(t), q);
    out.ratio = out.count / out.leading;
    return out;
}

EquidistributionReport equidistribution_report(const WeightTable& weights,
                                               std::size_t t, std::uint32_t q) {
    if (q < 1) throw std::invalid_argument("equidistribution_report: q must be >= 1");
    if (t > weights.n_max)
        throw std::invalid_argument("equidistribution_report: t beyond the table");

    EquidistributionReport rep;
    rep.kind = weights.kind;
    rep.r = weights.r;
    rep.t = t;
    rep.q = q;

    ResidueSums sums(weights, q);
    double leading = progression_leading(weights.kind, weights.r,
                                         static_cast<double>(t), q);
    double total = 0.0;
    for (std::uint32_t ell = 1; ell <= q; ++ell) {
        std::uint32_t e = (ell == q) ? 0 : ell;
        if (std::gcd<std::uint64_t>(e == 0 ? q : e, q) != 1) continue;
        ProgressionCount pc;
        pc.kind = weights.kind;
        pc.r = weights.r;
        pc.t = t;
        pc.q = q;
        pc.ell = e;
        pc.count = sums.sum(t, e);
        pc.leading = leading;
        pc.ratio = pc.count / leading;
        total += pc.count;
        rep.classes.push_back(pc);
    }
    rep.mean = total / static_cast<double>(rep.classes.size());
    for (const ProgressionCount& pc : rep.classes)
        rep.max_rel_dev = std::max(rep.max_rel_dev,
                                   std::fabs(pc.count - rep.mean) / rep.mean);
    return rep;
}

USum u_sum(const WeightTable& weights, std::complex<double> gamma, std::uint32_t q,
           std::uint32_t ell) {
    double g1 = gamma.real();
    if (g1 <= 0.0) throw std::domain_error("u_sum: Re(gamma) must be positive");
    double N = static_cast<double>(weights.n_max);
    if (g1 < 20.0 / N)
        throw std::domain_error("u_sum: tail uncertifiable; need Re(gamma) >= 20/n_max");
    if (q == 0) throw std::invalid_argument("u_sum: q must be positive");

    USum out;
    std::complex<double> acc = 0.0;
    for (std::size_t n = (ell == 0 ? q : ell); n <= weights.n_max; n += q) {
        double w = weights.value(n);
        if (w == 0.0) continue;
        acc += w * std::exp(-gamma * static_cast<double>(n));
    }
    out.value = acc;
    // Crude but certified: w_n <= n for both kinds, so the dropped tail is
    // below integral_N^inf t e^{-g1 t} dt = e^{-g1 N}(N/g1 + 1/g1^2).
    out.tail_bound = std::exp(-g1 * N) * (N / g1 + 1.0 / (g1 * g1));

    double phi = static_cast<double>(euler_phi(q));
    double L = std::log(1.0 / g1);
    if (L <= 1.0) throw std::domain_error("u_sum: gamma too large for the leading term");
    if (weights.kind == WeightKind::PrimeTuple) {
        double LL = std::log(L);
        out.leading = (weights.r / phi) * std::pow(LL, weights.r - 1) / (gamma * L);
    } else {
        out.leading = std::pow(L, weights.r - 1) /
                      (std::tgamma(static_cast<double>(weights.r)) * phi * gamma);
    }
    return out;
}

}  // namespace cpart
