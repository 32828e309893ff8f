#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cpart/constants.hpp"
#include "cpart/ntheory.hpp"

namespace cpart {

// One Farey arc: interval [center - half_width, center + half_width) on R/Z,
// centered at a/q (mapped into [-1/2, 1/2); the principal arc sits at 0).
struct Arc {
    std::uint32_t q = 0;
    std::uint32_t a = 0;
    double center = 0.0;
    double half_width = 0.0;
};

struct ArcClassification {
    bool major = false;
    std::uint32_t q = 0;
    std::uint32_t a = 0;
};

class ArcPartition {
  public:
    double X = 0.0;
    double A = 0.0;
    double Q = 0.0;  // (log X)^A
    bool overlapping = false;
    std::vector<Arc> arcs;  // sorted by center

    // Interval membership; ties and overlaps resolve to the smallest q,
    // then the smallest a. Returns major=false when alpha is on no arc.
    ArcClassification classify(double alpha) const;
};

// Full arc list for moduli q <= (log X)^A with half-widths (log X)^A/(qX).
// Overlap (X too small for A) sets the flag, or throws if require_disjoint.
ArcPartition build_arcs(double X, double A, bool require_disjoint = false);

struct RationalApprox {
    double alpha = 0.0;
    long long a = 0;
    std::uint64_t q = 1;
    double upsilon = 0.0;  // q^2 |alpha - a/q|
};

// Best rational a/q with q <= Qbound and |alpha - a/q| <= 1/(q Qbound),
// from the continued-fraction convergents of alpha.
RationalApprox dirichlet_approx(double alpha, double Qbound);

// S(alpha, X) = sum_{n <= X} w_n e(alpha n), Kahan-compensated.
std::complex<double> exp_sum(const WeightTable& weights, double alpha, std::size_t X);

// Shape of the minor-arc bound:
// (log X)^{3 (+r for the von Mangoldt kind)} *
//   (X q^{-1/(2r)} max{1, Upsilon^{1/(2r)}} + X^{(2+2r)/(3+2r)} + X^{(2r-1)/(2r)} q^{1/(2r)}).
double bound_rhs(double X, double q, double upsilon, int r, WeightKind kind);

struct ScanReport {
    double max_ratio = 0.0;
    double argmax_X = 0.0;
    std::uint32_t argmax_q = 0;
    std::uint32_t argmax_a = 0;
    std::size_t samples = 0;
};

// Max of |exp_sum(a/q, X)| / bound_rhs over the grid, sampling at most 32
// values of a per modulus with a fixed stride (deterministic).
ScanReport bound_ratio_scan(const WeightTable& weights, int r,
                            const std::vector<double>& X_list,
                            const std::vector<std::uint32_t>& q_list,
                            WeightKind kind);

// Leading major-arc model for Phi(rho e(alpha)) near alpha = a/q.
std::complex<double> major_arc_model(int r, double X, std::uint32_t q, std::uint32_t a,
                                     double alpha, WeightKind kind,
                                     const ConstantsTable& c);

}  // namespace cpart
