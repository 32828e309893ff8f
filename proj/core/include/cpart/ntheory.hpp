#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cpart {

// Sieve-exact tables of the standard multiplicative functions up to n_max.
// All sequences are indexed 1..n_max; index 0 is unused filler.
struct MultiplicativeTables {
    std::size_t n_max = 0;
    std::vector<bool> is_prime;
    std::vector<double> mangoldt;
    std::vector<std::int8_t> mobius;
    std::vector<std::uint64_t> totient;
    std::vector<std::uint32_t> primes;  // primes <= n_max, ascending
};

// Hard cap on sieve size so a typo cannot allocate the machine away.
inline constexpr std::size_t kMaxTableSize = std::size_t(1) << 31;

MultiplicativeTables build_tables(std::size_t n_max);

enum class WeightKind : std::uint8_t { PrimeTuple = 0, VonMangoldtPower = 1 };

// The weight sequence w_n feeding every generating function in the project:
// w_n = (1_P)^{*r}(n), the number of ordered r-tuples of primes with product n
// (exact integers), or w_n = Lambda^{*r}(n) (nonnegative reals).
class WeightTable {
  public:
    WeightKind kind = WeightKind::PrimeTuple;
    int r = 1;
    std::size_t n_max = 0;

    // PrimeTuple storage. `big` replaces `ivals` after an overflow promotion.
    std::vector<std::uint64_t> ivals;
    std::vector<mpz_class> big;
    // VonMangoldtPower storage.
    std::vector<double> rvals;

    bool promoted() const { return !big.empty(); }
    bool integral() const { return kind == WeightKind::PrimeTuple; }

    double value(std::size_t n) const {
        if (kind == WeightKind::VonMangoldtPower) return rvals[n];
        if (promoted()) return big[n].get_d();
        return static_cast<double>(ivals[n]);
    }
    std::uint64_t ivalue(std::size_t n) const;
    mpz_class exact(std::size_t n) const;

    void dump(std::ostream& os) const;
    static WeightTable load(std::istream& is);
    void dump_file(const std::string& path) const;
    static WeightTable load_file(const std::string& path);
};

// r-fold Dirichlet self-convolution of the prime indicator or of Lambda,
// by repeated divisor-scan convolution.
WeightTable dirichlet_power(WeightKind kind, int r, std::size_t n_max);

// Ramanujan sum S*(q,a) = sum over l coprime to q of e(a l / q).
// Direct summation for q <= 10^4, mu/phi closed form above.
double ramanujan_sum(std::uint64_t q, std::int64_t a);

// Direct-summation path, kept separately callable as a test oracle.
double ramanujan_sum_direct(std::uint64_t q, std::int64_t a);

// sum_{j <= sqrt(X)} S*(q_j, a_j) / (j^2 phi(q_j)) with q_j = q/(q,j),
// a_j = a j/(q,j); requires (a,q) = 1.
double vaughan_sum(std::uint64_t q, std::int64_t a, double X);

// The X -> infinity limit of the sum above: zeta(2) prod_{p|q} (-p) / q^2.
double vaughan_limit(std::uint64_t q);

std::uint64_t euler_phi(std::uint64_t n);
int mobius_of(std::uint64_t n);

}  // namespace cpart
