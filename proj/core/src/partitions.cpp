#include "cpart/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cpart {

std::vector<double> weighted_divisor_sums(const WeightTable& w, std::size_t k_max) {
    if (w.n_max < k_max)
        throw std::invalid_argument("weighted_divisor_sums: weight table too short");
    std::vector<double> C(k_max + 1, 0.0);
    for (std::size_t d = 1; d <= k_max; ++d) {
        double wd = w.value(d);
        if (wd == 0.0) continue;
        double dv = static_cast<double>(d) * wd;
        for (std::size_t k = d; k <= k_max; k += d) C[k] += dv;
    }
    return C;
}

std::vector<mpz_class> weighted_divisor_sums_exact(const WeightTable& w, std::size_t k_max) {
    if (!w.integral())
        throw std::logic_error("weighted_divisor_sums_exact: integer tables only");
    if (w.n_max < k_max)
        throw std::invalid_argument("weighted_divisor_sums_exact: weight table too short");
    std::vector<mpz_class> C(k_max + 1, mpz_class(0));
    for (std::size_t d = 1; d <= k_max; ++d) {
        mpz_class wd = w.exact(d);
        if (wd == 0) continue;
        mpz_class dv = mpz_class(static_cast<unsigned long>(d)) * wd;
        for (std::size_t k = d; k <= k_max; k += d) C[k] += dv;
    }
    return C;
}

PartitionSeries euler_transform(const WeightTable& weights, std::size_t n_max,
                                std::size_t exact_limit) {
    if (weights.n_max < n_max)
        throw std::invalid_argument("euler_transform: weight table shorter than n_max");

    PartitionSeries ps;
    ps.kind = weights.kind;
    ps.r = weights.r;
    ps.n_max = n_max;

    std::vector<double> C = weighted_divisor_sums(weights, n_max);
    std::vector<LogMagnitude> lC(n_max + 1);
    double lC_max = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= n_max; ++k) {
        lC[k] = LogMagnitude::from_double(C[k]);
        if (!lC[k].is_zero()) lC_max = std::max(lC_max, lC[k].ln_abs);
    }

    // Log-domain DP. The sum for G(n) is dominated by small k; terms are
    // bounded by lC_max + max_{m <= n-k} log G(m), which is nonincreasing
    // in k, so the scan can stop once that bound drops 46 nats below the
    // current maximum term.
    ps.coeffs_log.assign(n_max + 1, LogMagnitude::zero());
    ps.coeffs_log[0] = LogMagnitude::one();
    std::vector<double> prefix_max(n_max + 1, -std::numeric_limits<double>::infinity());
    prefix_max[0] = 0.0;
    const double kDrop = 46.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        double run_max = -std::numeric_limits<double>::infinity();
        double run_sum = 0.0;  // sum of exp(t_k - run_max)
        for (std::size_t k = 1; k <= n; ++k) {
            if (run_max > -std::numeric_limits<double>::infinity() &&
                lC_max + prefix_max[n - k] < run_max - kDrop)
                break;
            if (lC[k].is_zero() || ps.coeffs_log[n - k].is_zero()) continue;
            double t = lC[k].ln_abs + ps.coeffs_log[n - k].ln_abs;
            if (t <= run_max) {
                run_sum += std::exp(t - run_max);
            } else {
                run_sum = run_sum * std::exp(run_max - t) + 1.0;
                run_max = t;
            }
        }
        if (run_sum > 0.0)
            ps.coeffs_log[n] =
                LogMagnitude::from_log(run_max + std::log(run_sum) -
                                       std::log(static_cast<double>(n)));
        prefix_max[n] = std::max(prefix_max[n - 1], ps.coeffs_log[n].ln_abs);
    }

    if (weights.integral() && exact_limit > 0) {
        std::size_t cut = std::min(n_max, exact_limit);
        std::vector<mpz_class> Ce = weighted_divisor_sums_exact(weights, cut);
        ps.coeffs_exact.assign(n_max + 1, mpz_class(0));
        ps.coeffs_exact[0] = 1;
        mpz_class acc, q, rem;
        for (std::size_t n = 1; n <= cut; ++n) {
            acc = 0;
            for (std::size_t k = 1; k <= n; ++k) {
                if (Ce[k] == 0) continue;
                acc += Ce[k] * ps.coeffs_exact[n - k];
            }
            mpz_fdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(),
                           static_cast<unsigned long>(n));
            if (rem != 0)
                throw std::runtime_error(
                    "euler_transform: divisibility violated; weight table corrupted");
            ps.coeffs_exact[n] = q;
        }
        if (cut < n_max) ps.coeffs_exact.resize(cut + 1);
    }
    return ps;
}

namespace {

// coefficient of z^{k m} in (1 - z^m)^{-w}: binomial(w + k - 1, k)
double rising_binomial(double w, std::size_t k) {
    double v = 1.0;
    for (std::size_t i = 0; i < k; ++i)
        v *= (w + static_cast<double>(i)) / static_cast<double>(i + 1);
    return v;
}

mpz_class rising_binomial_exact(const mpz_class& w, std::size_t k) {
    mpz_class num = 1;
    for (std::size_t i = 0; i < k; ++i) num *= w + static_cast<unsigned long>(i);
    mpz_class fact = 1;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<unsigned long>(i);
    return num / fact;
}

double brute_rec(const WeightTable& w, std::size_t remaining, std::size_t max_part) {
    if (remaining == 0) return 1.0;
    double total = 0.0;
    for (std::size_t m = std::min(remaining, max_part); m >= 1; --m) {
        double wm = w.value(m);
        if (wm == 0.0) continue;
        for (std::size_t k = 1; m * k <= remaining; ++k) {
            double f = rising_binomial(wm, k);
            if (f == 0.0) continue;
            total += f * brute_rec(w, remaining - m * k, m - 1);
        }
    }
    return total;
}

mpz_class brute_rec_exact(const WeightTable& w, std::size_t remaining,
                          std::size_t max_part) {
    if (remaining == 0) return 1;
    mpz_class total = 0;
    for (std::size_t m = std::min(remaining, max_part); m >= 1; --m) {
        mpz_class wm = w.exact(m);
        if (wm == 0) continue;
        for (std::size_t k = 1; m * k <= remaining; ++k)
            total += rising_binomial_exact(wm, k) * brute_rec_exact(w, remaining - m * k, m - 1);
    }
    return total;
}

}  // namespace

double brute_force_partitions(const WeightTable& weights, std::size_t n) {
    if (n > 64) throw std::invalid_argument("brute_force_partitions: n must be <= 64");
    if (weights.n_max < n && n > 0)
        throw std::invalid_argument("brute_force_partitions: weight table too short");
    return brute_rec(weights, n, n);
}

mpz_class brute_force_partitions_exact(const WeightTable& weights, std::size_t n) {
    if (n > 64) throw std::invalid_argument("brute_force_partitions: n must be <= 64");
    if (!weights.integral())
        throw std::logic_error("brute_force_partitions_exact: integer tables only");
    if (weights.n_max < n && n > 0)
        throw std::invalid_argument("brute_force_partitions: weight table too short");
    return brute_rec_exact(weights, n, n);
}

}  // namespace cpart
