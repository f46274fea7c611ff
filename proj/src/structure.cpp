#include "qosc/structure.hpp"

#include <cmath>

namespace qosc {

StructureFunction::StructureFunction(const DeformationParams& p, double f0) : p_(p), f0_(f0) {
    if (!(f0 >= 0.0)) throw InvalidParams("f0 must be >= 0");
}

double StructureFunction::recurrence(long n) const {
    if (n < 0) throw InvalidParams("recurrence needs n >= 0");
    const double qg = p_.qpow(p_.gamma);
    double f = f0_;
    for (long k = 0; k < n; ++k) {
        const double parity = (k % 2 == 0) ? 1.0 : -1.0;
        f = qg * f + (1.0 + 2.0 * p_.nu * parity) * p_.qpow(p_.alpha * k + p_.beta);
        if (!std::isfinite(f)) throw OverflowError("structure recurrence overflow at n=" + std::to_string(k + 1));
    }
    return f;
}

double StructureFunction::closed(long n) const {
    if (n < 0) throw InvalidParams("closed form needs n >= 0");
    const double nn = static_cast<double>(n);
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    double f;
    if (p_.alpha_equals_gamma()) {
        f = f0_ * p_.qpow(p_.gamma * nn) + nn * p_.qpow(p_.gamma * (nn - 1.0) + p_.beta) +
            2.0 * p_.nu * p_.qpow(p_.gamma * (nn - 1.0) + p_.beta) * (1.0 - parity) / 2.0;
    } else {
        const double qg = p_.qpow(p_.gamma), qa = p_.qpow(p_.alpha);
        const double qgn = p_.qpow(p_.gamma * nn), qan = p_.qpow(p_.alpha * nn);
        f = f0_ * qgn + p_.qpow(p_.beta) * ((qgn - qan) / (qg - qa) +
                                            2.0 * p_.nu * (qgn - parity * qan) / (qg + qa));
    }
    if (!std::isfinite(f)) throw OverflowError("structure closed form overflow at n=" + std::to_string(n));
    return f;
}

LogReal StructureFunction::closed_log(long n) const {
    if (n < 0) throw InvalidParams("closed form needs n >= 0");
    const double nn = static_cast<double>(n);
    const double tau = p_.tau();
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    if (p_.alpha_equals_gamma()) {
        LogReal s = LogReal::term(f0_, tau * p_.gamma * nn);
        s = s + LogReal::term(nn + p_.nu * (1.0 - parity), tau * (p_.gamma * (nn - 1.0) + p_.beta));
        return s;
    }
    const double qg = p_.qpow(p_.gamma), qa = p_.qpow(p_.alpha);
    const double cd = 1.0 / (qg - qa), cs = 1.0 / (qg + qa);
    LogReal s = LogReal::term(f0_, tau * p_.gamma * nn);
    // q^b [ (q^{gn}-q^{an}) cd + 2nu (q^{gn}-(-1)^n q^{an}) cs ]
    s = s + LogReal::term(cd + 2.0 * p_.nu * cs, tau * (p_.gamma * nn + p_.beta));
    s = s + LogReal::term(-cd - 2.0 * p_.nu * parity * cs, tau * (p_.alpha * nn + p_.beta));
    return s;
}

bool StructureFunction::condition_warning() const {
    if (p_.alpha_equals_gamma()) return false;
    const double qg = p_.qpow(p_.gamma), qa = p_.qpow(p_.alpha);
    return std::fabs(qa - qg) < 1e-12 * (qa + qg);
}

double bracket(const DeformationParams& p, long n, int k_sign) {
    if (n < 0) throw InvalidParams("bracket needs n >= 0");
    if (k_sign != 1 && k_sign != -1) throw InvalidParams("k_sign must be +-1");
    const double nn = static_cast<double>(n);
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    if (p.alpha_equals_gamma()) {
        return nn * p.qpow(p.alpha * (nn - 1.0)) +
               2.0 * p.nu * k_sign * p.qpow(p.alpha * (nn - 1.0)) * (1.0 - parity) / 2.0;
    }
    const double qg = p.qpow(p.gamma), qa = p.qpow(p.alpha);
    const double qgn = p.qpow(p.gamma * nn), qan = p.qpow(p.alpha * nn);
    return (qgn - qan) / (qg - qa) + 2.0 * p.nu * k_sign * (qgn - parity * qan) / (qg + qa);
}

namespace {

// coefficients of 1/(1 - c z) up to degree n
std::vector<double> geometric(double c, int n) {
    std::vector<double> out(n + 1);
    double v = 1.0;
    for (int k = 0; k <= n; ++k) {
        out[k] = v;
        v *= c;
    }
    return out;
}

std::vector<double> convolve(const std::vector<double>& u, const std::vector<double>& v, int n) {
    std::vector<double> out(n + 1, 0.0);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n && j < static_cast<int>(v.size()); ++j)
            out[i + j] += u[i] * v[j];
    return out;
}

} // namespace

std::vector<double> genfun_coeffs(const DeformationParams& p, int k_sign, int n_max) {
    if (n_max < 1) throw InvalidParams("n_max must be >= 1");
    if (k_sign != 1 && k_sign != -1) throw InvalidParams("k_sign must be +-1");
    const double qg = p.qpow(p.gamma), qa = p.qpow(p.alpha);
    if (!(std::max(qg, qa) < 1e8)) throw OverflowError("generating function bases too large");

    std::vector<double> series(n_max + 1, 0.0);
    if (p.alpha_equals_gamma()) {
        // z/(1-q^g z)^2 + 2 nu k z/(1 - q^{2g} z^2)
        auto g = geometric(qg, n_max);
        auto sq = convolve(g, g, n_max);
        for (int m = 1; m <= n_max; ++m) series[m] = sq[m - 1];
        double v = 1.0;
        for (int m = 1; m <= n_max; m += 2) {
            series[m] += 2.0 * p.nu * k_sign * v;
            v *= qg * qg;
        }
        return series;
    }
    auto g = geometric(qg, n_max);
    auto plus = geometric(qa, n_max);
    auto minus = geometric(-qa, n_max);
    std::vector<double> inner(n_max + 1);
    for (int k = 0; k <= n_max; ++k) inner[k] = plus[k] + 2.0 * p.nu * k_sign * minus[k];
    auto prod = convolve(g, inner, n_max);
    for (int m = 1; m <= n_max; ++m) series[m] = prod[m - 1];
    return series;
}

} // namespace qosc
