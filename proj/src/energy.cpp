#include "qosc/energy.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace qosc {

double energy_direct(const EnergySpec& es, long n) {
    StructureFunction sf(es.params);
    return 0.5 * es.hbar_omega0 * (sf.closed(n) + sf.closed(n + 1));
}

std::vector<double> energy_levels(const EnergySpec& es, int n_max) {
    if (n_max < 0) throw InvalidParams("n_max must be >= 0");
    StructureFunction sf(es.params);
    std::vector<double> out(n_max + 1);
    double prev = sf.closed(0);
    for (int n = 0; n <= n_max; ++n) {
        double next = sf.closed(n + 1);
        out[n] = 0.5 * es.hbar_omega0 * (prev + next);
        prev = next;
    }
    return out;
}

LogReal energy_log(const EnergySpec& es, long n) {
    StructureFunction sf(es.params);
    LogReal half = LogReal::from(0.5 * es.hbar_omega0);
    return half * (sf.closed_log(n) + sf.closed_log(n + 1));
}

double energy_closed(const EnergySpec& es, long n) {
    const Reparametrization r = reparametrize(es.params);
    const double tau = r.tau, rho = r.rho, mu = r.mu, beta = r.beta, nu = r.nu;
    const double nn = static_cast<double>(n);
    const bool odd = (n % 2 != 0);

    if (mu == 0.0) {
        const double em = std::exp(-tau * rho);
        const double parity = odd ? -1.0 : 1.0;
        return 0.5 * es.hbar_omega0 * std::exp(tau * (beta + rho * nn)) *
               ((nn + nu) * (1.0 + em) + parity * nu * (1.0 - em) + 1.0);
    }

    const double sh = std::sinh(tau * mu);
    const double ch = std::cosh(tau * mu);
    const double em = std::exp(-tau * rho);
    const double base = std::sinh(tau * mu * (nn + 1.0)) / sh + em * std::sinh(tau * mu * nn) / sh;
    double par;
    if (odd)
        par = 2.0 * nu * (std::sinh(tau * mu * (nn + 1.0)) / ch + em * std::cosh(tau * mu * nn) / ch);
    else
        par = 2.0 * nu * (std::cosh(tau * mu * (nn + 1.0)) / ch + em * std::sinh(tau * mu * nn) / ch);
    return 0.5 * es.hbar_omega0 * std::exp(tau * (beta + rho * nn)) * (base + par);
}

SpacingResult spacing(const EnergySpec& es, long n) {
    const DeformationParams& p = es.params;
    const Reparametrization r = reparametrize(p);
    StructureFunction sf(p);

    SpacingResult out;
    out.direct = 0.5 * es.hbar_omega0 * (sf.closed(2 * n + 2) - sf.closed(2 * n));
    out.mu_zero_fallback = (r.mu == 0.0);

    if (p.alpha_equals_gamma()) {
        out.closed = out.direct;
    } else {
        const double qg = p.qpow(p.gamma), qa = p.qpow(p.alpha);
        const double W = 1.0 / (qg - qa) + 2.0 * p.nu / (qg + qa);
        out.closed = 0.5 * es.hbar_omega0 * p.qpow(p.beta) * W *
                     (p.qpow(2.0 * p.gamma * n) * (qg * qg - 1.0) -
                      p.qpow(2.0 * p.alpha * n) * (qa * qa - 1.0));
    }

    if (r.mu == 0.0) {
        // sinh(2 mu tau)/sinh(mu tau) -> 2
        out.display = es.hbar_omega0 * std::exp(r.tau * (r.beta + r.rho)) *
                      std::exp(2.0 * p.gamma * r.tau * n);
    } else {
        out.display = 0.5 * es.hbar_omega0 * std::sinh(2.0 * r.mu * r.tau) / std::sinh(r.tau * r.mu) *
                      std::exp(r.tau * (r.beta + r.rho)) * std::exp(2.0 * p.gamma * r.tau * n);
    }
    return out;
}

std::string asymptotic_case_name(AsymptoticCase c) {
    switch (c) {
        case AsymptoticCase::GrowsUnbounded: return "grows-unbounded";
        case AsymptoticCase::SaturatesToEmax: return "saturates-to-emax";
        case AsymptoticCase::IncreasesThenVanishes: return "increases-then-vanishes";
    }
    return "?";
}

double e_max(const EnergySpec& es) {
    const Reparametrization r = reparametrize(es.params);
    const double driver = r.tau * r.rho + std::fabs(r.tau * r.mu);
    const double dtol = 1e-14 * (std::fabs(r.tau) * (std::fabs(r.rho) + std::fabs(r.mu)) + 1.0);
    if (std::fabs(driver) > dtol) throw NotSaturating("driver tau*rho + |tau*mu| != 0");
    if (r.mu == 0.0) throw DegenerateSaturation("mu = 0: saturation bound undefined (linear growth in n)");

    // The vanished exponent decides the parity contribution: gamma = 0
    // keeps the nu term, alpha = 0 kills it.
    const bool gamma_side = std::fabs(es.params.gamma) < std::fabs(es.params.alpha);
    double v = 1.0 / std::sinh(std::fabs(r.tau * r.mu));
    if (gamma_side) v += 2.0 * r.nu / std::cosh(r.tau * r.mu);
    return 0.5 * es.hbar_omega0 * std::exp(r.tau * (r.beta - r.rho)) * v;
}

AsymptoticVerdict asymptotic_class(const EnergySpec& es) {
    const DeformationParams& p = es.params;
    if (!validate_positivity(p).positive)
        throw InvalidParams("asymptotic analysis needs a positive structure function");

    const Reparametrization r = reparametrize(p);
    const double driver = r.tau * r.rho + std::fabs(r.tau * r.mu);
    const double dtol = 1e-14 * (std::fabs(r.tau) * (std::fabs(r.rho) + std::fabs(r.mu)) + 1.0);

    AsymptoticVerdict v;
    v.driver = driver;
    v.corroborated = false;
    std::ostringstream note;

    const long N = 10000;
    if (std::fabs(driver) <= dtol) {
        if (r.mu == 0.0)
            throw DegenerateSaturation("driver = 0 with mu = 0: no finite saturation bound");
        v.cls = AsymptoticCase::SaturatesToEmax;
        v.e_max = e_max(es);
        double em = *v.e_max;
        bool ok = true;
        for (long n : {N - 1, N}) {
            double val = energy_direct(es, n);
            if (std::fabs(val - em) > 1e-6 * std::fabs(em)) ok = false;
        }
        // converging toward the bound (both parities sampled above)
        if (std::fabs(energy_direct(es, N / 2) - em) > 1e-3 * std::fabs(em)) ok = false;
        v.corroborated = ok;
        note << "E_" << N << "=" << energy_direct(es, N) << " vs E_max=" << em;
    } else if (driver > 0.0) {
        v.cls = AsymptoticCase::GrowsUnbounded;
        LogReal e0 = energy_log(es, 0), eN = energy_log(es, N);
        v.corroborated = e0.sign > 0 && eN.sign > 0 &&
                         (eN.log_mag - e0.log_mag) > std::log(1e6);
        note << "log10 E_" << N << "/E_0 = " << (eN.log_mag - e0.log_mag) / std::log(10.0);
    } else {
        v.cls = AsymptoticCase::IncreasesThenVanishes;
        // locate the finite peak by the first decrease, then confirm decay
        LogReal prev = energy_log(es, 0);
        long argmax = 0;
        LogReal peak = prev;
        for (long n = 1; n <= N; ++n) {
            LogReal cur = energy_log(es, n);
            if (peak < cur) {
                peak = cur;
                argmax = n;
            }
            prev = cur;
        }
        v.argmax = argmax;
        LogReal eN = energy_log(es, N);
        bool ok = argmax < N && energy_log(es, 1).log_mag > energy_log(es, 0).log_mag;
        if (eN.sign != 0 && (eN.log_mag - peak.log_mag) > std::log(1e-3)) ok = false;
        v.corroborated = ok;
        note << "argmax=" << argmax << " log10 E_" << N << "/peak = "
             << (eN.sign == 0 ? -std::numeric_limits<double>::infinity()
                              : (eN.log_mag - peak.log_mag) / std::log(10.0));
    }
    v.probe_note = note.str();
    return v;
}

} // namespace qosc
