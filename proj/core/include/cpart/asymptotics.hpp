#pragma once

#include <cstddef>
#include <vector>

#include "cpart/constants.hpp"
#include "cpart/genfun.hpp"

namespace cpart {

// Solution of the saddle equation rho Phi'(rho) = n with rho = e^{-1/X}.
struct SaddleSolution {
    std::size_t n = 0;
    double X = 0.0;
    double rho = 0.0;
    double residual = 0.0;  // |rho Phi'(rho) - n| / n
};

enum class PredictionFormula {
    MainTermPrimeTuple,   // 2 sqrt(n) / Q(n)
    MainTermVonMangoldt,  // 2 sqrt(n) (zeta(2) Ptilde_r(log n / 2))^{1/2}
    SaddlePoint,          // n/X + Phi(rho) - log sqrt(2 pi Phi_2(rho))
    CircleQuadrature,     // trapezoid integral over the full circle
};

struct Prediction {
    std::size_t n = 0;
    double log_value = 0.0;
    PredictionFormula formula = PredictionFormula::MainTermPrimeTuple;
    bool cancellation = false;  // quadrature mean fell below 1e-10 of max term
};

// Q(n) = ((log n + loglog n - log 2 - log P_r(y) - log zeta(2)) /
//         (2 zeta(2) P_r(y)))^{1/2} with y = loglog n - log 2.
double q_of_n(double n, int r, const ConstantsTable& c);

// Main-term predictor for log of the weighted partition count.
Prediction predict_log(WeightKind kind, int r, double n, const ConstantsTable& c);

SaddleSolution solve_saddle(const PhiSeries& phi, std::size_t n);

// Second-order saddle-point estimate of log of the coefficient.
Prediction saddle_estimate(const PhiSeries& phi, std::size_t n);

// Direct trapezoid quadrature around the circle of radius e^{-1/X}; n <= 500.
Prediction circle_quadrature(const PhiSeries& phi, std::size_t n);

// Ratios of the saddle quantities to their predicted magnitudes.
struct MagnitudeRow {
    std::size_t n = 0;
    double X = 0.0;
    double x_ratio = 0.0;      // X / (sqrt(n) Q_eff)
    double nx_ratio = 0.0;     // (n/X) / (sqrt(n) / Q_eff)
    double phi_ratio[3] = {0.0, 0.0, 0.0};  // (rho d/drho)^m Phi vs m! n^{(m+1)/2} Q_eff^{m-1}
};
std::vector<MagnitudeRow> magnitude_report(const PhiSeries& phi,
                                           const ConstantsTable& c,
                                           const std::vector<std::size_t>& n_grid);

}  // namespace cpart
