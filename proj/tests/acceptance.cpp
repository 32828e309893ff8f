// Acceptance gate: one line per criterion, PASS/FAIL with measurements.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cpart/arcs.hpp"
#include "cpart/asymptotics.hpp"
#include "cpart/constants.hpp"
#include "cpart/genfun.hpp"
#include "cpart/ntheory.hpp"
#include "cpart/partitions.hpp"
#include "cpart/ppm.hpp"
#include "cpart/progressions.hpp"

using namespace cpart;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool pass, double seconds, double limit, const std::string& detail) {
    bool ok = pass && seconds <= limit;
    if (!ok) ++failures;
    std::printf("criterion %2d: %s (%.2fs, limit %.0fs) %s\n", id,
                ok ? "PASS" : "FAIL", seconds, limit, detail.c_str());
    std::fflush(stdout);
}

double secs(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seq(const std::vector<double>& v) {
    std::ostringstream os;
    os.precision(4);
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- criteria

void criterion1(const ConstantsTable& c) {
    auto t0 = Clock::now();
    bool pass = std::fabs(c.mertens_M - 0.26149721) <= 1e-8;
    pass = pass && std::fabs(c.mertens_M - (c.gamma - c.d_hat_1)) < 1e-15;
    pass = pass &&
           std::fabs(c.zeta2 - std::numbers::pi * std::numbers::pi / 6.0) <= 1e-14;
    pass = pass && c.gamma_derivs.size() >= 2 &&
           std::fabs(c.gamma_derivs[1] + c.gamma) <= 1e-12;
    char buf[128];
    std::snprintf(buf, sizeof buf, "M=%.10f", c.mertens_M);
    report(1, pass, secs(t0), 5.0, buf);
}

void criterion2(const ConstantsTable& c) {
    auto t0 = Clock::now();
    bool pass = true;
    double worst = 0.0;
    for (int r = 1; r <= 4; ++r) {
        Polynomial series = poly_Pr(r, c);
        Polynomial closed = poly_Pr_closed(r, c);
        if (series.degree() != closed.degree() || series.degree() != r - 1) {
            pass = false;
            continue;
        }
        for (int i = 0; i <= series.degree(); ++i)
            worst = std::max(worst, std::fabs(series.coeffs[i] - closed.coeffs[i]));
        if (std::fabs(series.leading() - r) > 1e-9) pass = false;
    }
    pass = pass && worst <= 1e-9;
    char buf[96];
    std::snprintf(buf, sizeof buf, "max coeff deviation %.2e", worst);
    report(2, pass, secs(t0), 1.0, buf);
}

void criterion3() {
    auto t0 = Clock::now();
    bool pass = true;
    for (int r : {1, 2, 3}) {
        WeightTable w = dirichlet_power(WeightKind::PrimeTuple, r, 40);
        PartitionSeries ps = euler_transform(w, 40);
        for (std::size_t n = 0; n <= 40; ++n)
            if (ps.coeffs_exact[n] != brute_force_partitions_exact(w, n)) pass = false;
        if (r == 1 && (ps.coeffs_exact[5] != 2 || ps.coeffs_exact[10] != 5)) pass = false;
    }
    for (int r : {1, 2}) {
        WeightTable w = dirichlet_power(WeightKind::VonMangoldtPower, r, 40);
        PartitionSeries ps = euler_transform(w, 40);
        for (std::size_t n = 1; n <= 40; ++n) {
            double oracle = brute_force_partitions(w, n);
            double got = ps.coeffs_log[n].is_zero() ? 0.0
                                                    : std::exp(ps.coeffs_log[n].ln_abs);
            if (oracle == 0.0 ? got != 0.0
                              : std::fabs(got / oracle - 1.0) > 1e-9)
                pass = false;
        }
    }
    report(3, pass, secs(t0), 10.0, "DP == brute force, n <= 40");
}

void criterion4() {
    auto t0 = Clock::now();
    bool pass = true;
    double worst = 0.0;
    std::size_t worst_n = 0;
    int worst_r = 0;
    for (int r : {1, 2}) {
        WeightTable w = dirichlet_power(WeightKind::PrimeTuple, r, 20000);
        PhiSeries phi(w);
        PartitionSeries ps = euler_transform(w, 200);
        for (std::size_t n = 0; n <= 200; ++n) {
            Prediction quad = circle_quadrature(phi, n);
            double got = std::exp(quad.log_value);
            double exact = ps.coeffs_exact[n].get_d();
            double err = (exact == 0.0) ? got : std::fabs(got / exact - 1.0);
            if (err > worst) {
                worst = err;
                worst_n = n;
                worst_r = r;
            }
            if (exact == 0.0 ? got > 1e-3 : std::fabs(got / exact - 1.0) > 1e-3)
                pass = false;
        }
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst rel err %.2e at r=%d n=%zu", worst, worst_r,
                  worst_n);
    report(4, pass, secs(t0), 120.0, buf);
}

void criterion5(const ConstantsTable& c) {
    auto t0 = Clock::now();
    const std::vector<std::size_t> grid{1000, 4000, 16000, 64000};
    bool pass = true;
    std::string detail;
    for (WeightKind kind : {WeightKind::PrimeTuple, WeightKind::VonMangoldtPower}) {
        WeightTable w = dirichlet_power(kind, 1, 64000);
        PartitionSeries ps = euler_transform(w, 64000, 0);
        std::vector<double> devs;
        for (std::size_t n : grid) {
            double exact = ps.coeffs_log[n].ln_abs;
            double pred = predict_log(kind, 1, static_cast<double>(n), c).log_value;
            devs.push_back(std::fabs(exact / pred - 1.0));
        }
        int violations = 0;
        for (std::size_t i = 1; i < devs.size(); ++i)
            if (devs[i] > devs[i - 1]) ++violations;
        bool branch = violations <= 1 && devs.back() <= 0.25;
        if (!branch) pass = false;
        detail += (kind == WeightKind::PrimeTuple ? "pr " : "lambda ") + fmt_seq(devs) +
                  (branch ? " ok " : " BAD ");
    }
    report(5, pass, secs(t0), 300.0, detail);
}

void criterion6() {
    auto t0 = Clock::now();
    WeightTable w = dirichlet_power(WeightKind::PrimeTuple, 1, 100000);
    PhiSeries phi(w);
    PartitionSeries ps = euler_transform(w, 10000, 0);
    bool pass = true;
    double worst = 0.0;
    for (std::size_t n : {1000u, 10000u}) {
        SaddleSolution s = solve_saddle(phi, n);
        if (s.residual > 1e-8) pass = false;
        double est = saddle_estimate(phi, n).log_value;
        double exact = ps.coeffs_log[n].ln_abs;
        double err = std::fabs(est - exact) / exact;
        worst = std::max(worst, err);
        if (err > 0.05) pass = false;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst rel err %.4f", worst);
    report(6, pass, secs(t0), 60.0, buf);
}

void criterion7() {
    auto t0 = Clock::now();
    bool pass = true;
    double worst = 0.0;
    for (std::uint64_t q = 1; q <= 20; ++q) {
        std::int64_t a = 1;
        while (std::gcd<std::uint64_t>(static_cast<std::uint64_t>(a), q) != 1) ++a;
        double diff = std::fabs(vaughan_sum(q, a, 1e6) - vaughan_limit(q));
        worst = std::max(worst, diff);
        if (diff > 5e-3) pass = false;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst |sum - limit| = %.2e", worst);
    report(7, pass, secs(t0), 30.0, buf);
}

void criterion8() {
    auto t0 = Clock::now();
    const double X = 1e4;
    WeightTable w = dirichlet_power(WeightKind::PrimeTuple, 1, 700000);
    PhiSeries phi(w);
    double phi0 = phi.radial_derivative(X, 0, 1e-6);

    // A = 17 makes every delta_q wider than the circle, so the lemma's arc
    // classification is taken from the finest feasible partition (A = 2);
    // the suppression bound itself is what is being measured.
    ArcPartition part = build_arcs(X, 2.0);

    double max_ratio = -1e9;
    bool pass = true;
    std::mt19937_64 rng(20260823);
    std::uniform_real_distribution<double> unif(-0.5, 0.5);
    int minor_kept = 0;
    while (minor_kept < 200) {
        double alpha = unif(rng);
        ArcClassification cls = part.classify(alpha);
        if (cls.major) continue;
        ++minor_kept;
        double ratio = phi.eval(X, alpha, 1e-6).real() / phi0;
        max_ratio = std::max(max_ratio, ratio);
        if (ratio > 0.9) pass = false;
    }
    double q_max_ratio = -1e9;
    for (std::uint32_t q = 2; q <= 10; ++q) {
        double delta = part.Q / (q * X);
        for (std::uint32_t a = 1; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            for (double f : {-0.99, -0.5, 0.0, 0.5, 0.99}) {
                double alpha = static_cast<double>(a) / q + f * delta;
                double ratio = phi.eval(X, alpha, 1e-6).real() / phi0;
                q_max_ratio = std::max(q_max_ratio, ratio);
                if (ratio > 0.9) pass = false;
            }
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "minor max %.4f, major(2..10) max %.4f", max_ratio,
                  q_max_ratio);
    report(8, pass, secs(t0), 120.0, buf);
}

void criterion9() {
    auto t0 = Clock::now();
    bool pass = true;
    WeightTable w10 = dirichlet_power(WeightKind::PrimeTuple, 1, 10);
    std::complex<double> s = exp_sum(w10, 0.5, 10);
    if (std::fabs(s.real() + 2.0) > 1e-12 || std::fabs(s.imag()) > 1e-12) pass = false;

    double worst = 0.0;
    std::vector<std::uint32_t> qs;
    for (std::uint32_t q = 1; q <= 50; ++q) qs.push_back(q);
    for (int r : {1, 2}) {
        WeightTable w = dirichlet_power(WeightKind::PrimeTuple, r, 10000);
        ScanReport rep =
            bound_ratio_scan(w, r, {1000.0, 10000.0}, qs, WeightKind::PrimeTuple);
        worst = std::max(worst, rep.max_ratio);
        if (rep.max_ratio > 1.0) pass = false;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "S(1/2,10)=%.1f, scan max ratio %.4e", s.real(),
                  worst);
    report(9, pass, secs(t0), 60.0, buf);
}

void criterion10() {
    auto t0 = Clock::now();
    WeightTable w = dirichlet_power(WeightKind::PrimeTuple, 2, 1000000);
    bool pass = true;
    double worst = 0.0;
    for (std::uint32_t q : {3u, 4u, 5u}) {
        EquidistributionReport rep = equidistribution_report(w, 1000000, q);
        worst = std::max(worst, rep.max_rel_dev);
        if (rep.max_rel_dev > 0.05) pass = false;
    }
    if (count_progression(w, 10, 1, 0).count != 6.0) pass = false;
    char buf[96];
    std::snprintf(buf, sizeof buf, "max class deviation %.4f, A2(10)=%g", worst,
                  count_progression(w, 10, 1, 0).count);
    report(10, pass, secs(t0), 60.0, buf);
}

void criterion11() {
    auto t0 = Clock::now();
    bool pass = true;

    DomainGrid grid = domain_grid(2, 50, 512, 0.98);
    std::string p1 = "/tmp/cpart_accept_a.ppm", p2 = "/tmp/cpart_accept_b.ppm";
    render_domain_plot(grid, p1);
    render_domain_plot(grid, p2);
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = slurp(p1), b = slurp(p2);
    if (a != b || a.size() != 15 + 512 * 512 * 3) pass = false;
    std::remove(p1.c_str());
    std::remove(p2.c_str());

    // boundary maximum of Re Phi sits at the alpha grid point nearest 0
    WeightTable w = dirichlet_power(WeightKind::PrimeTuple, 1, 20000);
    PhiSeries phi(w);
    int argmax = -1;
    double best = -1e300;
    int zero_index = -1;
    double zero_dist = 1e300;
    for (int t = 0; t < 2048; ++t) {
        double alpha = static_cast<double>(t) / 2048.0 - 0.5;
        double re = phi.eval(200.0, alpha, 1e-8).real();
        if (re > best) {
            best = re;
            argmax = t;
        }
        if (std::fabs(alpha) < zero_dist) {
            zero_dist = std::fabs(alpha);
            zero_index = t;
        }
    }
    if (argmax != zero_index) pass = false;
    char buf[96];
    std::snprintf(buf, sizeof buf, "ppm bytes ok, argmax at alpha=%.5f",
                  static_cast<double>(argmax) / 2048.0 - 0.5);
    report(11, pass, secs(t0), 60.0, buf);
}

}  // namespace

int main() {
    ConstantsTable c = build_constants();
    criterion1(c);
    criterion2(c);
    criterion3();
    criterion4();
    criterion5(c);
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
