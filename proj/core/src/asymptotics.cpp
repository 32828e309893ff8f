#include "cpart/asymptotics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "cpart/parallel.hpp"

namespace cpart {

double q_of_n(double n, int r, const ConstantsTable& c) {
    if (n < 15.0) throw std::domain_error("q_of_n: n must be >= 15");
    double y = std::log(std::log(n)) - std::log(2.0);
    Polynomial P = poly_Pr(r, c);
    double Pv = P(y);
    if (Pv <= 0.0)
        throw std::domain_error("q_of_n: P_r is nonpositive at loglog n - log 2");
    double num = std::log(n) + std::log(std::log(n)) - std::log(2.0) -
                 std::log(Pv) - std::log(c.zeta2);
    if (num <= 0.0) throw std::domain_error("q_of_n: negative numerator");
    return std::sqrt(num / (2.0 * c.zeta2 * Pv));
}

Prediction predict_log(WeightKind kind, int r, double n, const ConstantsTable& c) {
    Prediction out;
    out.n = static_cast<std::size_t>(n);
    if (kind == WeightKind::PrimeTuple) {
        out.formula = PredictionFormula::MainTermPrimeTuple;
        out.log_value = 2.0 * std::sqrt(n) / q_of_n(n, r, c);
    } else {
        if (r >= 4)
            throw std::range_error("predict_log: closed forms available only for r <= 3");
        out.formula = PredictionFormula::MainTermVonMangoldt;
        Polynomial Pt = poly_tildePr_closed(r, c);
        double v = Pt(std::log(n) / 2.0);
        if (v <= 0.0)
            throw std::domain_error("predict_log: Ptilde_r nonpositive at log n / 2");
        out.log_value = 2.0 * std::sqrt(n) * std::sqrt(c.zeta2 * v);
    }
    return out;
}

namespace {

// rho Phi'(rho) as a function of X, with tolerance scaled to the target n.
double saddle_lhs(const PhiSeries& phi, double X, std::size_t n) {
    double tol = 1e-9 * std::max<double>(1.0, static_cast<double>(n));
    return phi.radial_derivative(X, 1, tol);
}

}  // namespace

SaddleSolution solve_saddle(const PhiSeries& phi, std::size_t n) {
    if (n < 2) throw std::invalid_argument("solve_saddle: n must be >= 2");
    double target = static_cast<double>(n);

    double lo = 1.0;
    double flo = saddle_lhs(phi, lo, n);
    if (flo >= target)
        throw std::runtime_error("solve_saddle: solution below X = 1");
    double hi = 2.0;
    double fhi = saddle_lhs(phi, hi, n);
    int grow = 0;
    while (fhi < target) {
        lo = hi;
        flo = fhi;
        hi *= 2.0;
        if (++grow > 60)
            throw std::runtime_error("solve_saddle: bracket failure (weights too sparse)");
        fhi = saddle_lhs(phi, hi, n);
    }

    double mid = 0.5 * (lo + hi), fmid = 0.0;
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        fmid = saddle_lhs(phi, mid, n);
        if (std::abs(fmid - target) <= 1e-10 * target) break;
        if (fmid < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-13 * hi) break;
    }

    SaddleSolution s;
    s.n = n;
    s.X = mid;
    s.rho = std::exp(-1.0 / mid);
    s.residual = std::abs(saddle_lhs(phi, mid, n) - target) / target;
    if (s.residual > 1e-8)
        throw std::runtime_error("solve_saddle: residual above 1e-8 after bisection");
    return s;
}

Prediction saddle_estimate(const PhiSeries& phi, std::size_t n) {
    SaddleSolution s = solve_saddle(phi, n);
    double phi0 = phi.radial_derivative(s.X, 0, 1e-9);
    double phi2 = phi.radial_derivative(s.X, 2, 1e-6);
    Prediction out;
    out.n = n;
    out.formula = PredictionFormula::SaddlePoint;
    out.log_value = static_cast<double>(n) / s.X + phi0 -
                    0.5 * std::log(2.0 * std::numbers::pi * phi2);
    return out;
}

Prediction circle_quadrature(const PhiSeries& phi, std::size_t n) {
    if (n > 500) throw std::invalid_argument("circle_quadrature: n must be <= 500");
    double X = 1.0;
    if (n >= 2) X = solve_saddle(phi, n).X;
    double phi0 = phi.radial_derivative(X, 0, 1e-9);

    std::size_t T = std::max<std::size_t>(64, 8 * n);
    std::vector<std::complex<double>> vals(T);
    parallel_for(T, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t t = lo; t < hi; ++t) {
            double alpha = static_cast<double>(t) / static_cast<double>(T) - 0.5;
            std::complex<double> ph = phi.eval(X, alpha, 1e-9);
            double arg = -2.0 * std::numbers::pi * alpha * static_cast<double>(n);
            vals[t] = std::exp(ph - phi0) * std::polar(1.0, arg);
        }
    });
    std::complex<double> sum = 0.0;
    double max_mag = 0.0;
    for (std::size_t t = 0; t < T; ++t) {
        sum += vals[t];
        max_mag = std::max(max_mag, std::abs(vals[t]));
    }
    std::complex<double> mean = sum / static_cast<double>(T);

    Prediction out;
    out.n = n;
    out.formula = PredictionFormula::CircleQuadrature;
    out.cancellation = std::abs(mean) < 1e-10 * max_mag;
    out.log_value = static_cast<double>(n) / X + phi0 + std::log(std::abs(mean));
    return out;
}

std::vector<MagnitudeRow> magnitude_report(const PhiSeries& phi,
                                           const ConstantsTable& c,
                                           const std::vector<std::size_t>& n_grid) {
    std::vector<MagnitudeRow> rows;
    rows.reserve(n_grid.size());
    for (std::size_t n : n_grid) {
        double nd = static_cast<double>(n);
        double qeff;
        if (phi.kind() == WeightKind::PrimeTuple) {
            qeff = q_of_n(nd, phi.r(), c);
        } else {
            Polynomial Pt = poly_tildePr_closed(phi.r(), c);
            double v = Pt(std::log(nd) / 2.0);
            if (v <= 0.0)
                throw std::domain_error("magnitude_report: Ptilde_r nonpositive");
            qeff = 1.0 / std::sqrt(c.zeta2 * v);
        }
        SaddleSolution s = solve_saddle(phi, n);
        MagnitudeRow row;
        row.n = n;
        row.X = s.X;
        row.x_ratio = s.X / (std::sqrt(nd) * qeff);
        row.nx_ratio = (nd / s.X) / (std::sqrt(nd) / qeff);
        for (int m = 0; m < 3; ++m) {
            double tol = (m == 2) ? 1e-6 : 1e-9;
            double val = phi.radial_derivative(s.X, m, tol);
            double pred = std::tgamma(m + 1.0) * std::pow(nd, 0.5 * (m + 1)) *
                          std::pow(qeff, m - 1.0);
            row.phi_ratio[m] = val / pred;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cpart
