#include "cpart/genfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cpart/parallel.hpp"
#include "cpart/partitions.hpp"

namespace cpart {

PhiSeries::PhiSeries(const WeightTable& weights)
    : kind_(weights.kind), r_(weights.r) {
    std::size_t M = weights.n_max;
    std::vector<double> C = weighted_divisor_sums(weights, M);
    c_.assign(M + 1, 0.0);
    for (std::size_t m = 1; m <= M; ++m) c_[m] = C[m] / static_cast<double>(m);
    density_ = 0.0;
    for (std::size_t n = 1; n <= M; ++n) {
        double w = weights.value(n);
        if (w > 0.0)
            density_ = std::max(density_, w / std::pow(static_cast<double>(n), 0.1));
    }
}

PhiEvalConfig PhiEvalConfig_make(double X, std::size_t N, double tail) {
    PhiEvalConfig cfg;
    cfg.X = X;
    cfg.N = N;
    cfg.J = static_cast<std::size_t>(std::ceil(std::sqrt(X))) + 1;
    cfg.tail_bound = tail;
    return cfg;
}

PhiEvalConfig PhiSeries::config(double X, double tol) const {
    if (X < 1.0) throw std::invalid_argument("PhiSeries: X must be >= 1");
    if (tol <= 0.0) throw std::invalid_argument("PhiSeries: tol must be positive");
    // Geometric tail: sum_{m>N} c_m rho^m <= K N^{0.1} (1 + log(X+2)) X e^{-N/X}.
    double K = std::max(density_, 1e-300);
    double logfac = 1.0 + std::log(X + 2.0);
    double N = X;
    double tail;
    for (int iter = 0; iter < 400; ++iter) {
        tail = K * std::pow(N, 0.1) * logfac * X * std::exp(-N / X);
        if (tail <= tol) break;
        N *= 1.25;
    }
    if (tail > tol || N > static_cast<double>(m_max()))
        throw std::runtime_error(
            "PhiSeries: requested tolerance unachievable with this weight table");
    return PhiEvalConfig_make(X, static_cast<std::size_t>(std::ceil(N)), tail);
}

std::complex<double> PhiSeries::eval(double X, double alpha, double tol) const {
    PhiEvalConfig cfg = config(X, tol);
    const double lr = -1.0 / X;
    const double theta = 2.0 * std::numbers::pi * alpha;
    const std::complex<double> z = std::polar(std::exp(lr), theta);
    std::complex<double> sum = 0.0;
    std::complex<double> zp = 1.0;
    for (std::size_t m = 1; m <= cfg.N; ++m) {
        zp *= z;
        if ((m & 4095) == 0)  // resync against rotation drift
            zp = std::polar(std::exp(lr * static_cast<double>(m)),
                            theta * static_cast<double>(m));
        if (c_[m] != 0.0) sum += c_[m] * zp;
    }
    return sum;
}

double PhiSeries::radial_derivative(double X, int m, double tol) const {
    if (m < 0 || m > 3)
        throw std::invalid_argument("radial_derivative: m must be in [0, 3]");
    // The k^m factor inflates the tail; fold it into the tolerance request.
    double shrink = std::pow(40.0 * X, m);
    PhiEvalConfig cfg = config(X, tol / shrink);
    double sum = 0.0;
    for (std::size_t k = 1; k <= cfg.N; ++k) {
        if (c_[k] == 0.0) continue;
        double km = 1.0;
        for (int i = 0; i < m; ++i) km *= static_cast<double>(k);
        sum += c_[k] * km * std::exp(-static_cast<double>(k) / X);
    }
    return sum;
}

std::complex<double> phi_eval(const WeightTable& weights, double X, double alpha,
                              double tol) {
    return PhiSeries(weights).eval(X, alpha, tol);
}

double phi_radial_derivative(const WeightTable& weights, double X, int m, double tol) {
    return PhiSeries(weights).radial_derivative(X, m, tol);
}

namespace {

std::complex<double> laplace_integrand(double t, int a, double b, double lambda,
                                       std::complex<double> gamma) {
    double lt = std::log(t);
    double llt = std::log(lt);
    double mag = std::pow(llt, a) * std::pow(lt, -b) * std::pow(t, lambda);
    return mag * std::exp(-gamma * t);
}

// Adaptive Simpson on a complex integrand.
std::complex<double> simpson_rec(const std::function<std::complex<double>(double)>& f,
                                 double lo, double hi, std::complex<double> flo,
                                 std::complex<double> fmid, std::complex<double> fhi,
                                 std::complex<double> whole, double tol, int depth) {
    double mid = 0.5 * (lo + hi);
    double lq = 0.25 * (lo + hi) - 0.25 * (hi - lo) * 0.0 + 0.0;
    double m1 = 0.5 * (lo + mid), m2 = 0.5 * (mid + hi);
    (void)lq;
    std::complex<double> f1 = f(m1), f2 = f(m2);
    std::complex<double> left = (mid - lo) / 6.0 * (flo + 4.0 * f1 + fmid);
    std::complex<double> right = (hi - mid) / 6.0 * (fmid + 4.0 * f2 + fhi);
    std::complex<double> delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, lo, mid, flo, f1, fmid, left, tol / 2.0, depth - 1) +
           simpson_rec(f, mid, hi, fmid, f2, fhi, right, tol / 2.0, depth - 1);
}

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               double lo, double hi, double tol) {
    std::complex<double> flo = f(lo), fhi = f(hi), fmid = f(0.5 * (lo + hi));
    std::complex<double> whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    return simpson_rec(f, lo, hi, flo, fmid, fhi, whole, tol, 48);
}

}  // namespace

LaplaceCheck laplace_check(int a, double b, double lambda, std::complex<double> gamma) {
    double g1 = gamma.real();
    if (g1 <= 0.0) throw std::domain_error("laplace_check: Re(gamma) must be > 0");
    if (g1 > 1e-2)
        throw std::domain_error("laplace_check: asymptotic regime needs Re(gamma) <= 1e-2");

    double T = (50.0 + 10.0 * (a + lambda + 1.0)) / g1;
    auto f = [&](double t) { return laplace_integrand(t, a, b, lambda, gamma); };
    // Scale of the result, used for the absolute quadrature tolerance.
    double scale = std::tgamma(lambda + 1.0) / std::pow(g1, lambda + 1.0);
    std::complex<double> integral;
    // Split at a few multiples of 1/g1 so the recursion never straddles both
    // the t ~ 2 boundary region and the exponential decay.
    double cuts[] = {2.0, 10.0, 1.0 / g1, 5.0 / g1, T};
    std::complex<double> acc = 0.0;
    for (int i = 0; i + 1 < 5; ++i) {
        if (cuts[i + 1] <= cuts[i]) continue;
        acc += integrate(f, cuts[i], cuts[i + 1], 1e-11 * scale);
    }
    integral = acc;

    double L = std::log(1.0 / g1);
    double LL = std::log(L);
    std::complex<double> leading = std::pow(LL, a) * std::pow(L, -b) *
                                   std::tgamma(lambda + 1.0) /
                                   std::pow(gamma, lambda + 1.0);
    LaplaceCheck out;
    out.integral = integral;
    out.leading = leading;
    out.ratio = std::abs(integral / leading);
    return out;
}

DomainGrid domain_grid(int r, int prime_bound, int resolution, double radius_cap) {
    if (prime_bound > 200) throw std::invalid_argument("domain_grid: prime bound <= 200");
    if (resolution < 1 || resolution > 4096)
        throw std::invalid_argument("domain_grid: resolution must be in [1, 4096]");
    if (radius_cap <= 0.0 || radius_cap >= 1.0)
        throw std::invalid_argument("domain_grid: radius must be in (0, 1)");

    // Exponents above n_cut contribute |z|^n < 1e-18 and are dropped.
    std::size_t n_cut = static_cast<std::size_t>(
        std::min(1e7, std::log(1e-18) / std::log(radius_cap)));

    std::vector<std::uint32_t> primes;
    {
        MultiplicativeTables t = build_tables(std::max(prime_bound, 2));
        primes = t.primes;
    }

    // Multiplicities of products of r primes <= prime_bound, capped at n_cut.
    std::vector<double> mult(n_cut + 1, 0.0);
    std::vector<std::size_t> stack;
    std::function<void(int, std::size_t)> rec = [&](int depth, std::size_t prod) {
        if (depth == r) {
            mult[prod] += 1.0;
            return;
        }
        for (std::uint32_t p : primes) {
            if (prod > n_cut / p) break;
            rec(depth + 1, prod * p);
        }
    };
    rec(0, 1);
    std::vector<std::pair<std::size_t, double>> terms;
    for (std::size_t n = 1; n <= n_cut; ++n)
        if (mult[n] != 0.0) terms.emplace_back(n, mult[n]);

    DomainGrid g;
    g.resolution = resolution;
    g.radius = radius_cap;
    std::size_t npix = static_cast<std::size_t>(resolution) * resolution;
    g.values.assign(npix, {0.0, 0.0});
    g.inside.assign(npix, 0);

    int maxbit = 0;
    while ((std::size_t(1) << (maxbit + 1)) <= n_cut) ++maxbit;

    parallel_for(static_cast<std::size_t>(resolution), [&](std::size_t lo, std::size_t hi) {
        std::vector<std::complex<double>> sq(maxbit + 1);
        for (std::size_t row = lo; row < hi; ++row) {
            double y = radius_cap * (2.0 * (static_cast<double>(row) + 0.5) / resolution - 1.0);
            for (int col = 0; col < resolution; ++col) {
                double x = radius_cap * (2.0 * (col + 0.5) / resolution - 1.0);
                std::size_t idx = row * resolution + col;
                if (x * x + y * y > radius_cap * radius_cap) continue;
                g.inside[idx] = 1;
                std::complex<double> z(x, y);
                sq[0] = z;
                for (int b = 1; b <= maxbit; ++b) sq[b] = sq[b - 1] * sq[b - 1];
                std::complex<double> acc = 0.0;
                for (const auto& [n, t] : terms) {
                    std::complex<double> zn = 1.0;
                    std::size_t e = n;
                    int b = 0;
                    while (e) {
                        if (e & 1) zn *= sq[b];
                        e >>= 1;
                        ++b;
                    }
                    acc -= t * std::log(1.0 - zn);
                }
                g.values[idx] = acc;
            }
        }
    });
    return g;
}

}  // namespace cpart
