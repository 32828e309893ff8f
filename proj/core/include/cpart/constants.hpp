#pragma once

#include <string>
#include <vector>

namespace cpart {

// Real polynomial, coefficients in ascending degree order.
struct Polynomial {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double leading() const { return coeffs.empty() ? 0.0 : coeffs.back(); }
    double operator()(double y) const {
        double v = 0.0;
        for (std::size_t i = coeffs.size(); i-- > 0;) v = v * y + coeffs[i];
        return v;
    }
    void trim(double eps = 0.0);
};

// Every constant appearing in the asymptotic formulas, double precision.
struct ConstantsTable {
    double gamma = 0.0;        // Euler-Mascheroni
    double gamma1 = 0.0;       // first Stieltjes constant
    double zeta2 = 0.0;
    double zeta3 = 0.0;
    double zeta_prime2 = 0.0;  // zeta'(2)
    double zeta_dprime2 = 0.0; // zeta''(2)
    double d_hat_1 = 0.0;      // sum_{j>=2} P(j)/j
    double mertens_M = 0.0;    // gamma - d_hat_1
    std::vector<double> gamma_derivs;  // Gamma^{(k)}(1), k = 0..K

    std::string to_json() const;
};

// Gamma^{(k)}(1) for k = 0..K via power-series exponentiation of
// log Gamma(1+x) = -gamma x + sum_{k>=2} (-1)^k zeta(k) x^k / k.
std::vector<double> gamma_derivatives_at_one(int K);

// Prime zeta P(s) = sum_p p^{-s} via sum_k mu(k)/k log zeta(ks); s >= 2.
double prime_zeta(double s);

// Riemann zeta on the real axis s > 1, Euler-Maclaurin.
double zeta_real(double s);

ConstantsTable build_constants(int precision_target = 14);

// The polynomial P_r from the principal-arc expansion, built from the
// triple-sum formula. 1 <= r <= 8.
Polynomial poly_Pr(int r, const ConstantsTable& c);

// Closed forms for r = 1..4, used as the cross-check route.
Polynomial poly_Pr_closed(int r, const ConstantsTable& c);

// Closed forms of the Lambda-side polynomials, r = 1..3.
Polynomial poly_tildePr_closed(int r, const ConstantsTable& c);

}  // namespace cpart
