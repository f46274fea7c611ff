#ifndef QOSC_LOG_REAL_HPP
#define QOSC_LOG_REAL_HPP

#include <cmath>
#include <limits>

namespace qosc {

/*
 * Signed log-magnitude scalar: value = sign * exp(log_mag).
 *
 * Used wherever sequences like q^{gamma n} leave the double range
 * (asymptotic probes run to n ~ 10^4). Sums use log-sum-exp with the
 * sign carried separately, so alternating-series cancellation behaves
 * like ordinary floating arithmetic at the dominant scale.
 */
struct LogReal {
    double log_mag = -std::numeric_limits<double>::infinity();
    int sign = 0; // -1, 0, +1

    static LogReal zero() { return LogReal{}; }

    static LogReal from(double v) {
        if (v == 0.0) return zero();
        return LogReal{std::log(std::fabs(v)), v > 0 ? 1 : -1};
    }

    // coeff * exp(exponent), with coeff of ordinary size
    static LogReal term(double coeff, double exponent) {
        if (coeff == 0.0) return zero();
        return LogReal{std::log(std::fabs(coeff)) + exponent, coeff > 0 ? 1 : -1};
    }

    bool is_zero() const { return sign == 0; }

    // Representable as a normal double (no overflow; underflow maps to 0 fine).
    bool representable() const { return sign == 0 || log_mag < 709.0; }

    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_mag);
    }

    double log10_mag() const { return log_mag / std::log(10.0); }

    LogReal operator-() const { return LogReal{log_mag, -sign}; }

    friend LogReal operator*(const LogReal& a, const LogReal& b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return LogReal{a.log_mag + b.log_mag, a.sign * b.sign};
    }

    friend LogReal operator+(const LogReal& a, const LogReal& b) {
        if (a.sign == 0) return b;
        if (b.sign == 0) return a;
        const LogReal& hi = (a.log_mag >= b.log_mag) ? a : b;
        const LogReal& lo = (a.log_mag >= b.log_mag) ? b : a;
        double d = lo.log_mag - hi.log_mag; // <= 0
        if (hi.sign == lo.sign)
            return LogReal{hi.log_mag + std::log1p(std::exp(d)), hi.sign};
        double m = std::exp(d);
        if (m == 1.0) return zero(); // exact cancellation
        return LogReal{hi.log_mag + std::log1p(-m), hi.sign};
    }

    friend LogReal operator-(const LogReal& a, const LogReal& b) { return a + (-b); }

    // comparison by signed value
    friend bool operator<(const LogReal& a, const LogReal& b) {
        if (a.sign != b.sign) return a.sign < b.sign;
        if (a.sign == 0) return false;
        if (a.sign > 0) return a.log_mag < b.log_mag;
        return a.log_mag > b.log_mag;
    }
};

} // namespace qosc

#endif
