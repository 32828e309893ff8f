#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cpart/ntheory.hpp"

namespace cpart {

// Truncation parameters for one evaluation of Phi near the unit circle.
struct PhiEvalConfig {
    double X = 0.0;
    std::size_t J = 0;          // outer j-truncation (reported, not looped)
    std::size_t N = 0;          // inner truncation in the combined index
    double tail_bound = 0.0;    // certified bound on the dropped mass
};

// Power-series engine for Phi(z) = sum_j (1/j) sum_n w_n z^{jn}.
// Regrouped by the combined exponent m = j n, the series is
// sum_m c_m z^m with c_m = C(m)/m and C(m) = sum_{d|m} d w_d, which makes
// evaluation at z = rho e(alpha) a single truncated polynomial sum.
class PhiSeries {
  public:
    explicit PhiSeries(const WeightTable& weights);

    WeightKind kind() const { return kind_; }
    int r() const { return r_; }
    std::size_t m_max() const { return c_.size() - 1; }
    double density_bound() const { return density_; }

    // Truncation index and certified tail for the given radius; throws if
    // the table is too short for the requested tolerance.
    PhiEvalConfig config(double X, double tol) const;

    std::complex<double> eval(double X, double alpha, double tol = 1e-9) const;
    // (rho d/drho)^m Phi at alpha = 0; m <= 3.
    double radial_derivative(double X, int m, double tol = 1e-9) const;

    const std::vector<double>& coeffs() const { return c_; }

  private:
    WeightKind kind_;
    int r_;
    std::vector<double> c_;
    double density_;  // max over stored weights of w_n / n^{0.1}
};

std::complex<double> phi_eval(const WeightTable& weights, double X, double alpha,
                              double tol = 1e-9);
double phi_radial_derivative(const WeightTable& weights, double X, int m,
                             double tol = 1e-9);

// Numeric check of the Laplace-type integral
//   int_2^inf (loglog t)^a (log t)^{-b} t^lambda exp(-gamma t) dt
// against its leading term (loglog 1/g1)^a (log 1/g1)^{-b} Gamma(l+1)/gamma^{l+1}.
struct LaplaceCheck {
    std::complex<double> integral;
    std::complex<double> leading;
    double ratio;  // |integral / leading|
};
LaplaceCheck laplace_check(int a, double b, double lambda, std::complex<double> gamma);

// Pixel grid of log of the truncated product over r-tuples of primes <= prime_bound:
// value(z) = sum_tuples -log(1 - z^{p_1...p_r}), principal branch.
struct DomainGrid {
    int resolution = 0;
    double radius = 0.0;
    std::vector<std::complex<double>> values;  // row-major, resolution^2
    std::vector<std::uint8_t> inside;          // 0 = outside the disc

    const std::complex<double>& at(int row, int col) const {
        return values[static_cast<std::size_t>(row) * resolution + col];
    }
    bool is_inside(int row, int col) const {
        return inside[static_cast<std::size_t>(row) * resolution + col] != 0;
    }
};
DomainGrid domain_grid(int r, int prime_bound, int resolution, double radius_cap);

}  // namespace cpart
