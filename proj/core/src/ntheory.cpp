#include "cpart/ntheory.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <istream>
#include <stdexcept>

namespace cpart {

MultiplicativeTables build_tables(std::size_t n_max) {
    if (n_max < 2) throw std::invalid_argument("build_tables: n_max must be >= 2");
    if (n_max >= kMaxTableSize)
        throw std::length_error("build_tables: n_max exceeds memory budget");

    MultiplicativeTables t;
    t.n_max = n_max;
    t.is_prime.assign(n_max + 1, true);
    t.is_prime[0] = false;
    t.is_prime[1] = false;
    t.mangoldt.assign(n_max + 1, 0.0);
    t.mobius.assign(n_max + 1, 0);
    t.totient.assign(n_max + 1, 0);

    // Linear sieve: smallest prime factor drives mobius and totient.
    std::vector<std::uint32_t> spf(n_max + 1, 0);
    t.mobius[1] = 1;
    t.totient[1] = 1;
    for (std::size_t i = 2; i <= n_max; ++i) {
        if (spf[i] == 0) {
            spf[i] = static_cast<std::uint32_t>(i);
            t.primes.push_back(static_cast<std::uint32_t>(i));
            t.mobius[i] = -1;
            t.totient[i] = i - 1;
        }
        for (std::uint32_t p : t.primes) {
            if (p > spf[i] || i * p > n_max) break;
            std::size_t ip = i * p;
            spf[ip] = p;
            if (i % p == 0) {
                t.mobius[ip] = 0;
                t.totient[ip] = t.totient[i] * p;
            } else {
                t.mobius[ip] = -t.mobius[i];
                t.totient[ip] = t.totient[i] * (p - 1);
            }
        }
        t.is_prime[i] = (spf[i] == i);
    }

    // Lambda(p^k) = log p; sieve prime powers directly.
    for (std::uint32_t p : t.primes) {
        double lp = std::log(static_cast<double>(p));
        for (std::size_t pk = p; pk <= n_max; pk *= p) {
            t.mangoldt[pk] = lp;
            if (pk > n_max / p) break;
        }
    }
    return t;
}

std::uint64_t WeightTable::ivalue(std::size_t n) const {
    if (kind != WeightKind::PrimeTuple)
        throw std::logic_error("WeightTable::ivalue on real-valued table");
    if (promoted()) {
        if (!big[n].fits_ulong_p())
            throw std::overflow_error("WeightTable::ivalue: value exceeds 64 bits");
        return big[n].get_ui();
    }
    return ivals[n];
}

mpz_class WeightTable::exact(std::size_t n) const {
    if (kind != WeightKind::PrimeTuple)
        throw std::logic_error("WeightTable::exact on real-valued table");
    if (promoted()) return big[n];
    return mpz_class(static_cast<unsigned long>(ivals[n]));
}

namespace {

// One divisor-scan convolution fold: out[n] = sum_{d|n} a[d] * b[n/d].
// Checked 64-bit accumulation; returns false on overflow so the caller can
// redo the computation in arbitrary precision.
bool convolve_u64(const std::vector<std::uint64_t>& a,
                  const std::vector<std::uint64_t>& b,
                  std::vector<std::uint64_t>& out) {
    std::size_t n_max = a.size() - 1;
    out.assign(n_max + 1, 0);
    for (std::size_t d = 1; d <= n_max; ++d) {
        if (a[d] == 0) continue;
        for (std::size_t m = d, e = 1; m <= n_max; m += d, ++e) {
            if (b[e] == 0) continue;
            std::uint64_t prod, sum;
            if (__builtin_mul_overflow(a[d], b[e], &prod)) return false;
            if (__builtin_add_overflow(out[m], prod, &sum)) return false;
            out[m] = sum;
        }
    }
    return true;
}

void convolve_big(const std::vector<mpz_class>& a,
                  const std::vector<mpz_class>& b,
                  std::vector<mpz_class>& out) {
    std::size_t n_max = a.size() - 1;
    out.assign(n_max + 1, mpz_class(0));
    for (std::size_t d = 1; d <= n_max; ++d) {
        if (a[d] == 0) continue;
        for (std::size_t m = d, e = 1; m <= n_max; m += d, ++e) {
            if (b[e] == 0) continue;
            out[m] += a[d] * b[e];
        }
    }
}

void convolve_real(const std::vector<double>& a,
                   const std::vector<double>& b,
                   std::vector<double>& out) {
    std::size_t n_max = a.size() - 1;
    out.assign(n_max + 1, 0.0);
    for (std::size_t d = 1; d <= n_max; ++d) {
        if (a[d] == 0.0) continue;
        for (std::size_t m = d, e = 1; m <= n_max; m += d, ++e) {
            if (b[e] != 0.0) out[m] += a[d] * b[e];
        }
    }
}

}  // namespace

WeightTable dirichlet_power(WeightKind kind, int r, std::size_t n_max) {
    if (r < 1) throw std::invalid_argument("dirichlet_power: r must be >= 1");
    if (n_max < 1) throw std::invalid_argument("dirichlet_power: n_max must be >= 1");
    MultiplicativeTables t = build_tables(std::max<std::size_t>(n_max, 2));

    WeightTable w;
    w.kind = kind;
    w.r = r;
    w.n_max = n_max;

    if (kind == WeightKind::VonMangoldtPower) {
        std::vector<double> base(n_max + 1, 0.0);
        for (std::size_t n = 1; n <= n_max; ++n) base[n] = t.mangoldt[n];
        std::vector<double> acc = base;
        std::vector<double> next;
        for (int fold = 1; fold < r; ++fold) {
            convolve_real(acc, base, next);
            acc.swap(next);
        }
        w.rvals = std::move(acc);
        return w;
    }

    std::vector<std::uint64_t> base(n_max + 1, 0);
    for (std::size_t n = 2; n <= n_max; ++n)
        if (t.is_prime[n]) base[n] = 1;
    std::vector<std::uint64_t> acc = base;
    std::vector<std::uint64_t> next;
    bool ok = true;
    int done = 1;
    for (int fold = 1; fold < r && ok; ++fold) {
        ok = convolve_u64(acc, base, next);
        if (ok) {
            acc.swap(next);
            ++done;
        }
    }
    if (ok) {
        w.ivals = std::move(acc);
        return w;
    }

    // Overflow: promote to arbitrary precision and continue from the last
    // fold that still fit.
    std::vector<mpz_class> bacc(n_max + 1), bbase(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        bacc[n] = mpz_class(static_cast<unsigned long>(acc[n]));
        bbase[n] = mpz_class(static_cast<unsigned long>(base[n]));
    }
    std::vector<mpz_class> bnext;
    for (int fold = done; fold < r; ++fold) {
        convolve_big(bacc, bbase, bnext);
        bacc.swap(bnext);
    }
    w.big = std::move(bacc);
    return w;
}

namespace {
constexpr char kMagic[5] = {'W', 'T', 'B', 'L', '1'};

template <typename T>
void put_le(std::ostream& os, T v) {
    unsigned char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i)
        buf[i] = static_cast<unsigned char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T get_le(std::istream& is) {
    unsigned char buf[sizeof(T)];
    is.read(reinterpret_cast<char*>(buf), sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
        v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return static_cast<T>(v);
}
}  // namespace

void WeightTable::dump(std::ostream& os) const {
    if (promoted())
        throw std::logic_error("WeightTable::dump: promoted tables have no fixed-width encoding");
    os.write(kMagic, 5);
    put_le<std::uint8_t>(os, static_cast<std::uint8_t>(kind));
    put_le<std::uint32_t>(os, static_cast<std::uint32_t>(r));
    put_le<std::uint64_t>(os, static_cast<std::uint64_t>(n_max));
    if (kind == WeightKind::PrimeTuple) {
        for (std::size_t n = 1; n <= n_max; ++n) put_le<std::uint64_t>(os, ivals[n]);
    } else {
        for (std::size_t n = 1; n <= n_max; ++n) {
            std::uint64_t bits;
            double d = rvals[n];
            static_assert(sizeof(bits) == sizeof(d));
            __builtin_memcpy(&bits, &d, sizeof(bits));
            put_le<std::uint64_t>(os, bits);
        }
    }
}

WeightTable WeightTable::load(std::istream& is) {
    char magic[5];
    is.read(magic, 5);
    if (!is || __builtin_memcmp(magic, kMagic, 5) != 0)
        throw std::runtime_error("WeightTable::load: bad magic");
    WeightTable w;
    w.kind = static_cast<WeightKind>(get_le<std::uint8_t>(is));
    w.r = static_cast<int>(get_le<std::uint32_t>(is));
    w.n_max = static_cast<std::size_t>(get_le<std::uint64_t>(is));
    if (w.kind == WeightKind::PrimeTuple) {
        w.ivals.assign(w.n_max + 1, 0);
        for (std::size_t n = 1; n <= w.n_max; ++n) w.ivals[n] = get_le<std::uint64_t>(is);
    } else {
        w.rvals.assign(w.n_max + 1, 0.0);
        for (std::size_t n = 1; n <= w.n_max; ++n) {
            std::uint64_t bits = get_le<std::uint64_t>(is);
            double d;
            __builtin_memcpy(&d, &bits, sizeof(d));
            w.rvals[n] = d;
        }
    }
    if (!is) throw std::runtime_error("WeightTable::load: truncated stream");
    return w;
}

void WeightTable::dump_file(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    dump(os);
}

WeightTable WeightTable::load_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path);
    return load(is);
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int mobius_of(std::uint64_t n) {
    int m = 1;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

double ramanujan_sum_direct(std::uint64_t q, std::int64_t a) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
    double re = 0.0, im = 0.0;
    for (std::uint64_t l = 1; l <= q; ++l) {
        if (std::gcd(l, q) != 1) continue;
        double theta = 2.0 * std::numbers::pi * static_cast<double>(a) *
                       static_cast<double>(l) / static_cast<double>(q);
        re += std::cos(theta);
        im += std::sin(theta);
    }
    if (std::abs(im) > 1e-12 * std::max(1.0, std::abs(re)) && std::abs(im) > 1e-9)
        throw std::runtime_error("ramanujan_sum: imaginary part failed to cancel");
    return re;
}

double ramanujan_sum(std::uint64_t q, std::int64_t a) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
    if (q <= 10000) return ramanujan_sum_direct(q, a);
    // mu(q/g) * phi(q) / phi(q/g) with g = gcd(a, q).
    std::uint64_t aa = static_cast<std::uint64_t>(a < 0 ? -a : a) % q;
    std::uint64_t g = (aa == 0) ? q : std::gcd(aa, q);
    std::uint64_t qg = q / g;
    return static_cast<double>(mobius_of(qg)) * static_cast<double>(euler_phi(q)) /
           static_cast<double>(euler_phi(qg));
}

double vaughan_sum(std::uint64_t q, std::int64_t a, double X) {
    if (q < 1) throw std::invalid_argument("vaughan_sum: q must be >= 1");
    std::uint64_t aa = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(q)) +
                                                   static_cast<std::int64_t>(q)) %
                                                  static_cast<std::int64_t>(q));
    if (q > 1 && std::gcd(aa, q) != 1)
        throw std::invalid_argument("vaughan_sum: a must be coprime to q");
    std::uint64_t jmax = static_cast<std::uint64_t>(std::sqrt(X));
    double s = 0.0;
    for (std::uint64_t j = 1; j <= jmax; ++j) {
        std::uint64_t g = std::gcd(q, j);
        std::uint64_t qj = q / g;
        std::int64_t aj = a * static_cast<std::int64_t>(j / g);
        s += ramanujan_sum(qj, aj) /
             (static_cast<double>(j) * static_cast<double>(j) *
              static_cast<double>(euler_phi(qj)));
    }
    return s;
}

double vaughan_limit(std::uint64_t q) {
    double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    double prod = 1.0;
    std::uint64_t n = q;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            prod *= -static_cast<double>(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) prod *= -static_cast<double>(n);
    return zeta2 * prod / (static_cast<double>(q) * static_cast<double>(q));
}

}  // namespace cpart
