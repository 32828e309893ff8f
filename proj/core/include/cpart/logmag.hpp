#pragma once

#include <cmath>
#include <limits>

namespace cpart {

// Signed magnitude stored as (sign, log|x|). Partition counts grow like
// exp(c sqrt(n)), which overflows any fixed-width float long before the
// ranges of interest here.
struct LogMagnitude {
    int sign = 0;
    double ln_abs = -std::numeric_limits<double>::infinity();

    static LogMagnitude zero() { return {}; }
    static LogMagnitude one() { return {1, 0.0}; }
    static LogMagnitude from_double(double x) {
        if (x == 0.0) return zero();
        return {x > 0.0 ? 1 : -1, std::log(std::abs(x))};
    }
    static LogMagnitude from_log(double ln, int sign = 1) { return {sign, ln}; }

    double to_double() const {
        return sign == 0 ? 0.0 : sign * std::exp(ln_abs);
    }
    bool is_zero() const { return sign == 0; }

    friend LogMagnitude operator*(const LogMagnitude& a, const LogMagnitude& b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return {a.sign * b.sign, a.ln_abs + b.ln_abs};
    }

    // log-sum-exp; exact to full double precision of the result.
    friend LogMagnitude operator+(const LogMagnitude& a, const LogMagnitude& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        const LogMagnitude& hi = (a.ln_abs >= b.ln_abs) ? a : b;
        const LogMagnitude& lo = (a.ln_abs >= b.ln_abs) ? b : a;
        double d = std::exp(lo.ln_abs - hi.ln_abs) * (lo.sign * hi.sign);
        double m = 1.0 + d;
        if (m <= 0.0) {
            if (m == 0.0) return zero();
            return {-hi.sign, hi.ln_abs + std::log(-m)};
        }
        return {hi.sign, hi.ln_abs + std::log1p(d)};
    }
};

}  // namespace cpart
