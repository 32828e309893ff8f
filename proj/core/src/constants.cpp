#include "cpart/constants.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace cpart {

void Polynomial::trim(double eps) {
    double scale = 0.0;
    for (double c : coeffs) scale = std::max(scale, std::abs(c));
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= eps * scale)
        coeffs.pop_back();
}

namespace {

// Bernoulli numbers B_2, B_4, B_6, B_8 over (2k)!.
constexpr double kB2k_over_fact[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0,
                                     -1.0 / 1209600.0};

double binom(int n, int k) {
    double v = 1.0;
    for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
    return v;
}

// A function of the form t^{-b} * sum_a c[a] (log t)^a, closed under d/dt.
struct LogPowerTerm {
    int b;
    std::vector<double> c;

    LogPowerTerm derivative() const {
        LogPowerTerm d;
        d.b = b + 1;
        d.c.assign(c.size(), 0.0);
        for (std::size_t a = 0; a < c.size(); ++a) {
            if (a >= 1) d.c[a - 1] += static_cast<double>(a) * c[a];
            d.c[a] -= static_cast<double>(b) * c[a];
        }
        return d;
    }
    double eval(double t) const {
        double L = std::log(t), v = 0.0;
        for (std::size_t a = c.size(); a-- > 0;) v = v * L + c[a];
        return v * std::pow(t, -b);
    }
};

// sum_{n=1}^infty (log n)^j n^{-2} by Euler-Maclaurin with N leading terms.
double log_power_zeta_sum(int j, std::size_t N) {
    long double s = 0.0L;
    for (std::size_t n = 1; n <= N; ++n) {
        long double L = std::log(static_cast<long double>(n));
        long double term = 1.0L;
        for (int i = 0; i < j; ++i) term *= L;
        s += term / (static_cast<long double>(n) * static_cast<long double>(n));
    }
    // Integral tail: int_N^inf (log t)^j t^{-2} dt = Gamma(j+1, log N)/... which
    // telescopes to e^{-u} * sum_{i<=j} j!/i! u^i at u = log N.
    double u = std::log(static_cast<double>(N));
    double poly = 0.0;
    double jfact = 1.0;
    for (int i = 1; i <= j; ++i) jfact *= i;
    double ifact = 1.0;
    for (int i = 0; i <= j; ++i) {
        if (i > 0) ifact *= i;
        poly += (jfact / ifact) * std::pow(u, i);
    }
    double tail = poly / static_cast<double>(N);

    LogPowerTerm f{2, std::vector<double>(j + 1, 0.0)};
    f.c[j] = 1.0;
    LogPowerTerm f1 = f.derivative();
    LogPowerTerm f3 = f1.derivative().derivative();
    double Nd = static_cast<double>(N);
    double corr1 = -kB2k_over_fact[0] * f1.eval(Nd);
    double corr2 = -kB2k_over_fact[1] * f3.eval(Nd);
    if (std::abs(corr2) > std::abs(corr1) && corr1 != 0.0)
        throw std::runtime_error("log_power_zeta_sum: Euler-Maclaurin corrections not decreasing");
    return static_cast<double>(s) + tail - f.eval(Nd) / 2.0 + corr1 + corr2;
}

double euler_gamma() {
    const std::size_t N = 1000;
    long double s = 0.0L;
    for (std::size_t k = 1; k <= N; ++k) s += 1.0L / static_cast<long double>(k);
    long double Nd = static_cast<long double>(N);
    s -= std::log(Nd);
    s -= 1.0L / (2.0L * Nd);
    s += 1.0L / (12.0L * Nd * Nd);
    s -= 1.0L / (120.0L * Nd * Nd * Nd * Nd);
    return static_cast<double>(s);
}

double stieltjes_gamma1() {
    const std::size_t N = 1000000;
    long double s = 0.0L;
    for (std::size_t k = 2; k <= N; ++k)
        s += std::log(static_cast<long double>(k)) / static_cast<long double>(k);
    double Nd = static_cast<double>(N);
    double L = std::log(Nd);
    double out = static_cast<double>(s) - L * L / 2.0;
    out -= L / (2.0 * Nd);                                       // f(N)/2
    double corr1 = -kB2k_over_fact[0] * (1.0 - L) / (Nd * Nd);   // f'(N)
    double corr2 = -kB2k_over_fact[1] * (11.0 - 6.0 * L) / (Nd * Nd * Nd * Nd);  // f'''(N)
    if (std::abs(corr2) > std::abs(corr1))
        throw std::runtime_error("stieltjes_gamma1: Euler-Maclaurin corrections not decreasing");
    return out + corr1 + corr2;
}

}  // namespace

double zeta_real(double s) {
    if (s <= 1.0) throw std::domain_error("zeta_real: s must be > 1");
    const int N = 24;
    double sum = 0.0;
    for (int n = 1; n < N; ++n) sum += std::pow(n, -s);
    double Nd = N;
    sum += std::pow(Nd, 1.0 - s) / (s - 1.0);
    sum += std::pow(Nd, -s) / 2.0;
    // B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    double rising = s;
    for (int k = 1; k <= 4; ++k) {
        sum += kB2k_over_fact[k - 1] * rising * std::pow(Nd, -s - 2 * k + 1);
        rising *= (s + 2 * k - 1) * (s + 2 * k);
    }
    return sum;
}

std::vector<double> gamma_derivatives_at_one(int K) {
    if (K < 0 || K > 20)
        throw std::invalid_argument("gamma_derivatives_at_one: K must be in [0, 20]");
    // log Gamma(1+x) = -gamma x + sum_{k>=2} (-1)^k zeta(k) x^k / k.
    std::vector<double> l(K + 1, 0.0);
    if (K >= 1) l[1] = -euler_gamma();
    for (int k = 2; k <= K; ++k)
        l[k] = ((k % 2 == 0) ? 1.0 : -1.0) * zeta_real(static_cast<double>(k)) / k;
    // Exponentiate the series: g' = l' g.
    std::vector<double> g(K + 1, 0.0);
    g[0] = 1.0;
    for (int n = 1; n <= K; ++n) {
        double acc = 0.0;
        for (int k = 1; k <= n; ++k) acc += k * l[k] * g[n - k];
        g[n] = acc / n;
    }
    std::vector<double> out(K + 1);
    double fact = 1.0;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) fact *= k;
        out[k] = fact * g[k];
    }
    return out;
}

double prime_zeta(double s) {
    if (s < 2.0) throw std::domain_error("prime_zeta: s must be >= 2");
    double sum = 0.0;
    // mu over small k, inline to avoid a dependency on the sieve module
    auto mu_small = [](int n) {
        int m = 1;
        for (int p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                m = -m;
            }
        }
        if (n > 1) m = -m;
        return m;
    };
    for (int k = 1;; ++k) {
        double ks = s * k;
        double term_scale = std::pow(2.0, -ks);  // magnitude of log zeta(ks)
        if (term_scale / k < 1e-18 && k > 1) break;
        int mu = mu_small(k);
        if (mu == 0) continue;
        sum += mu * std::log(zeta_real(ks)) / k;
        if (k > 200) throw std::runtime_error("prime_zeta: failed to converge");
    }
    return sum;
}

ConstantsTable build_constants(int precision_target) {
    if (precision_target > 14)
        throw std::invalid_argument(
            "build_constants: precision_target > 14 requires more than double precision");
    ConstantsTable c;
    c.gamma = euler_gamma();
    c.gamma1 = stieltjes_gamma1();
    c.zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    c.zeta3 = zeta_real(3.0);
    c.zeta_prime2 = -log_power_zeta_sum(1, 1000000);
    c.zeta_dprime2 = log_power_zeta_sum(2, 1000000);
    double dhat = 0.0;
    for (int j = 2;; ++j) {
        double pj = prime_zeta(static_cast<double>(j));
        dhat += pj / j;
        if (pj / j < 1e-15 && j > 4) break;
        if (j > 200) throw std::runtime_error("build_constants: d_hat tail did not close");
    }
    c.d_hat_1 = dhat;
    c.mertens_M = c.gamma - c.d_hat_1;
    c.gamma_derivs = gamma_derivatives_at_one(12);
    return c;
}

std::string ConstantsTable::to_json() const {
    char buf[256];
    std::string out = "{\n";
    auto field = [&](const char* name, double v, bool last = false) {
        std::snprintf(buf, sizeof(buf), "  \"%s\": %.15g%s\n", name, v, last ? "" : ",");
        out += buf;
    };
    field("gamma", gamma);
    field("gamma1", gamma1);
    field("zeta2", zeta2);
    field("zeta3", zeta3);
    field("zeta_prime2", zeta_prime2);
    field("zeta_dprime2", zeta_dprime2);
    field("d_hat_1", d_hat_1);
    field("mertens_M", mertens_M);
    out += "  \"gamma_derivs\": [";
    for (std::size_t k = 0; k < gamma_derivs.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%s%.15g", k ? ", " : "", gamma_derivs[k]);
        out += buf;
    }
    out += "]\n}\n";
    return out;
}

Polynomial poly_Pr(int r, const ConstantsTable& c) {
    if (r < 1 || r > 8) throw std::invalid_argument("poly_Pr: r must be in [1, 8]");
    // The paper's text defines D(s) with a sign that would make
    // M = gamma - D(1) negative of the Meissel-Mertens value; the convention
    // here fixes D(1) = +d_hat_1 so that M = gamma - D(1) holds.
    double D1 = c.d_hat_1;
    const std::vector<double>& G = c.gamma_derivs;
    if (static_cast<int>(G.size()) <= r)
        throw std::logic_error("poly_Pr: not enough Gamma derivatives");

    Polynomial P;
    P.coeffs.assign(r + 1, 0.0);
    const double pi = std::numbers::pi;
    for (int n = 0; n <= r; ++n) {
        double outer = binom(r, n) * (((r - n) % 2 == 0) ? 1.0 : -1.0) *
                       std::pow(D1, r - n);
        for (int h = 0; h <= n; ++h) {
            // Im[(i pi)^{n-h}] = pi^{n-h} * Im[i^{n-h}]
            int m = (n - h) % 4;
            double im = (m == 1) ? 1.0 : (m == 3) ? -1.0 : 0.0;
            if (im == 0.0) continue;
            im *= std::pow(pi, n - h);
            for (int k = 0; k <= h; ++k) {
                double term = outer * binom(n, h) * binom(h, k) *
                              ((k % 2 == 0) ? 1.0 : -1.0) * im * G[k];
                P.coeffs[h - k] += term / pi;
            }
        }
    }
    P.trim(1e-9);
    if (P.degree() != r - 1 || std::abs(P.leading() - r) > 1e-9)
        throw std::runtime_error("poly_Pr: leading coefficient check failed");
    if (r <= 4) {
        Polynomial closed = poly_Pr_closed(r, c);
        for (int i = 0; i < r; ++i)
            if (std::abs(P.coeffs[i] - closed.coeffs[i]) > 1e-9)
                throw std::runtime_error("poly_Pr: disagrees with closed form");
    }
    return P;
}

Polynomial poly_Pr_closed(int r, const ConstantsTable& c) {
    double M = c.mertens_M, z2 = c.zeta2, z3 = c.zeta3;
    switch (r) {
        case 1: return {{1.0}};
        case 2: return {{2.0 * M, 2.0}};
        case 3: return {{3.0 * (M * M - z2), 6.0 * M, 3.0}};
        case 4:
            return {{4.0 * (2.0 * z3 - 3.0 * z2 * M + M * M * M),
                     12.0 * (M * M - z2), 12.0 * M, 4.0}};
        default:
            throw std::out_of_range("poly_Pr_closed: closed form only for r = 1..4");
    }
}

Polynomial poly_tildePr_closed(int r, const ConstantsTable& c) {
    double g = c.gamma, g1 = c.gamma1;
    double zr = c.zeta_prime2 / c.zeta2;   // zeta'(2)/zeta(2)
    double zrr = c.zeta_dprime2 / c.zeta2; // zeta''(2)/zeta(2)
    switch (r) {
        case 1: return {{1.0}};
        case 2: return {{zr - 3.0 * g, 1.0}};
        case 3:
            return {{6.0 * g1 + 0.5 * zrr - 4.0 * g * zr + 9.5 * g * g + 0.5 * c.zeta2,
                     zr - 4.0 * g, 0.5}};
        default:
            throw std::out_of_range(
                "poly_tildePr_closed: only r = 1..3 have closed forms");
    }
}

}  // namespace cpart
