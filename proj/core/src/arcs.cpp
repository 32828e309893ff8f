#include "cpart/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "cpart/parallel.hpp"

namespace cpart {

namespace {

// distance on R/Z
double circle_dist(double x, double y) {
    double d = std::fabs(x - y);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

// signed offset of alpha from center, folded to (-1/2, 1/2]
double circle_offset(double alpha, double center) {
    double d = alpha - center;
    d -= std::round(d);
    return d;
}

}  // namespace

ArcClassification ArcPartition::classify(double alpha) const {
    ArcClassification best;
    for (const Arc& arc : arcs) {
        double off = circle_offset(alpha, arc.center);
        if (off >= -arc.half_width && off < arc.half_width) {
            if (!best.major || arc.q < best.q ||
                (arc.q == best.q && arc.a < best.a)) {
                best.major = true;
                best.q = arc.q;
                best.a = arc.a;
            }
        }
    }
    return best;
}

ArcPartition build_arcs(double X, double A, bool require_disjoint) {
    if (X < 100.0) throw std::invalid_argument("build_arcs: X must be >= 100");
    if (A <= 0.0) throw std::invalid_argument("build_arcs: A must be positive");
    double Q = std::pow(std::log(X), A);
    if (Q > 1e6) throw std::invalid_argument("build_arcs: (log X)^A exceeds 1e6");
    std::uint32_t qmax = static_cast<std::uint32_t>(std::floor(Q));
    if (qmax < 1) qmax = 1;
    // Farey-fraction count grows like 0.3 Q^2; refuse absurd lists.
    if (0.35 * Q * Q > 2e7) throw std::length_error("build_arcs: too many arcs");

    ArcPartition part;
    part.X = X;
    part.A = A;
    part.Q = Q;
    for (std::uint32_t q = 1; q <= qmax; ++q) {
        double delta = Q / (q * X);
        for (std::uint32_t a = 1; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            double center = static_cast<double>(a) / q;
            if (center > 0.5) center -= 1.0;
            if (q == 1) center = 0.0;  // principal arc at the origin
            part.arcs.push_back({q, a, center, delta});
        }
    }
    std::sort(part.arcs.begin(), part.arcs.end(),
              [](const Arc& l, const Arc& r) { return l.center < r.center; });

    for (std::size_t i = 0; i < part.arcs.size(); ++i) {
        const Arc& cur = part.arcs[i];
        const Arc& nxt = part.arcs[(i + 1) % part.arcs.size()];
        if (circle_dist(cur.center, nxt.center) <
            cur.half_width + nxt.half_width - 1e-15) {
            part.overlapping = true;
            break;
        }
    }
    if (part.overlapping && require_disjoint)
        throw std::runtime_error("build_arcs: arcs overlap; X too small for this A");
    return part;
}

RationalApprox dirichlet_approx(double alpha, double Qbound) {
    if (Qbound < 2.0) throw std::invalid_argument("dirichlet_approx: Qbound must be >= 2");
    long long a0 = static_cast<long long>(std::floor(alpha));
    double x = alpha - static_cast<double>(a0);

    long long p_prev = 1, p_cur = a0;
    long long q_prev = 0, q_cur = 1;
    for (int it = 0; it < 64; ++it) {
        if (x < 1e-15) break;
        double inv = 1.0 / x;
        double flr = std::floor(inv);
        if (flr > 9e17) break;
        long long ai = static_cast<long long>(flr);
        x = inv - flr;
        long long p_next = ai * p_cur + p_prev;
        long long q_next = ai * q_cur + q_prev;
        if (static_cast<double>(q_next) > Qbound) break;
        p_prev = p_cur;
        p_cur = p_next;
        q_prev = q_cur;
        q_cur = q_next;
    }

    RationalApprox out;
    out.alpha = alpha;
    out.a = p_cur;
    out.q = static_cast<std::uint64_t>(q_cur);
    double err = std::fabs(alpha - static_cast<double>(p_cur) / static_cast<double>(q_cur));
    out.upsilon = static_cast<double>(q_cur) * static_cast<double>(q_cur) * err;
    return out;
}

std::complex<double> exp_sum(const WeightTable& weights, double alpha, std::size_t X) {
    if (weights.n_max < X)
        throw std::invalid_argument("exp_sum: weight table shorter than X");
    // Kahan compensation on both components.
    double sr = 0.0, cr = 0.0, si = 0.0, ci = 0.0;
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t n = 1; n <= X; ++n) {
        double w = weights.value(n);
        if (w == 0.0) continue;
        double theta = two_pi * alpha * static_cast<double>(n);
        double tr = w * std::cos(theta);
        double ti = w * std::sin(theta);
        double yr = tr - cr;
        double t1 = sr + yr;
        cr = (t1 - sr) - yr;
        sr = t1;
        double yi = ti - ci;
        double t2 = si + yi;
        ci = (t2 - si) - yi;
        si = t2;
    }
    return {sr, si};
}

double bound_rhs(double X, double q, double upsilon, int r, WeightKind kind) {
    if (q < 1.0 || q > X) throw std::domain_error("bound_rhs: need 1 <= q <= X");
    if (r < 1) throw std::invalid_argument("bound_rhs: r must be >= 1");
    double lX = std::log(X);
    double logpow = (kind == WeightKind::PrimeTuple) ? 3.0 : 3.0 + r;
    double inv2r = 1.0 / (2.0 * r);
    double t1 = X * std::pow(q, -inv2r) * std::max(1.0, std::pow(upsilon, inv2r));
    double t2 = std::pow(X, (2.0 + 2.0 * r) / (3.0 + 2.0 * r));
    double t3 = std::pow(X, (2.0 * r - 1.0) / (2.0 * r)) * std::pow(q, inv2r);
    return std::pow(lX, logpow) * (t1 + t2 + t3);
}

ScanReport bound_ratio_scan(const WeightTable& weights, int r,
                            const std::vector<double>& X_list,
                            const std::vector<std::uint32_t>& q_list,
                            WeightKind kind) {
    struct Cell {
        double X;
        std::uint32_t q;
    };
    std::vector<Cell> cells;
    for (double X : X_list)
        for (std::uint32_t q : q_list) cells.push_back({X, q});

    std::vector<ScanReport> partial(cells.size());
    parallel_for(cells.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Cell& cell = cells[i];
            std::size_t Xn = static_cast<std::size_t>(cell.X);
            double rhs = bound_rhs(cell.X, cell.q, 1.0, r, kind);
            ScanReport rep;
            std::uint32_t stride = std::max<std::uint32_t>(1, (cell.q + 31) / 32);
            for (std::uint32_t a = 1; a <= cell.q; a += stride) {
                if (std::gcd(a, cell.q) != 1) continue;
                double alpha = static_cast<double>(a) / cell.q;
                double ratio = std::abs(exp_sum(weights, alpha, Xn)) / rhs;
                ++rep.samples;
                if (ratio > rep.max_ratio) {
                    rep.max_ratio = ratio;
                    rep.argmax_X = cell.X;
                    rep.argmax_q = cell.q;
                    rep.argmax_a = a;
                }
            }
            partial[i] = rep;
        }
    });

    ScanReport out;
    for (const ScanReport& rep : partial) {
        out.samples += rep.samples;
        if (rep.max_ratio > out.max_ratio) {
            out.max_ratio = rep.max_ratio;
            out.argmax_X = rep.argmax_X;
            out.argmax_q = rep.argmax_q;
            out.argmax_a = rep.argmax_a;
        }
    }
    return out;
}

std::complex<double> major_arc_model(int r, double X, std::uint32_t q, std::uint32_t a,
                                     double alpha, WeightKind kind,
                                     const ConstantsTable& c) {
    if (q < 1 || std::gcd(a == 0 ? q : a, q) != 1)
        throw std::invalid_argument("major_arc_model: need gcd(a, q) = 1");
    if (r < 1) throw std::invalid_argument("major_arc_model: r must be >= 1");
    double beta = circle_offset(alpha, static_cast<double>(a) / q);
    std::complex<double> denom(1.0, -2.0 * std::numbers::pi * beta * X);

    // prod_{p | q} (-p) / q^2
    double prod = 1.0;
    std::uint32_t m = q;
    for (std::uint32_t p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        prod *= -static_cast<double>(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) prod *= -static_cast<double>(m);
    prod /= static_cast<double>(q) * static_cast<double>(q);

    double lX = std::log(X);
    if (kind == WeightKind::PrimeTuple) {
        double num = c.zeta2 * r * X * std::pow(std::log(lX), r - 1) / lX;
        return num * prod / denom;
    }
    double fact = std::tgamma(static_cast<double>(r));
    double num = c.zeta2 * X * std::pow(lX, r - 1) / fact;
    return num * prod / denom;
}

}  // namespace cpart
