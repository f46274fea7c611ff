#ifndef QOSC_ENERGY_HPP
#define QOSC_ENERGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qosc/log_real.hpp"
#include "qosc/params.hpp"
#include "qosc/structure.hpp"

namespace qosc {

// Free Hamiltonian H = (hbar omega0 / 2) (a a+ + a+ a); on Fock states
// E_n = (hbar omega0 / 2) (f(n) + f(n+1)) with f0 = 0.
struct EnergySpec {
    DeformationParams params;
    double hbar_omega0;

    explicit EnergySpec(const DeformationParams& p, double scale = 1.0)
        : params(p), hbar_omega0(scale) {
        if (!(hbar_omega0 > 0.0)) throw InvalidParams("hbar_omega0 must be > 0");
    }
};

// Direct (f(n) + f(n+1)) evaluation. The ground truth for all cross-checks.
double energy_direct(const EnergySpec& es, long n);
std::vector<double> energy_levels(const EnergySpec& es, int n_max);
LogReal energy_log(const EnergySpec& es, long n);

// Reparametrized sinh/cosh closed form (tau, rho, mu variables, odd/even
// parity split). Agrees with energy_direct to rounding.
double energy_closed(const EnergySpec& es, long n);

/*
 * Level spacing E_{2n+1} - E_{2n}.
 *
 *   direct  - difference of the (f(n)+f(n+1)) values;
 *   closed  - (hw0/2) q^b W [ q^{2gn}(q^{2g}-1) - q^{2an}(q^{2a}-1) ],
 *             W = 1/(q^g-q^a) + 2nu/(q^g+q^a), equal to direct (mu != 0);
 *   display - (hw0/2) sinh(2 mu tau)/sinh(mu tau) e^{tau(beta+rho)} e^{2 gamma tau n},
 *             kept for comparison: it reproduces direct only at n = 0 or
 *             when nu = 0 and alpha is 0 or gamma. The spacing is genuinely
 *             nu-dependent for alpha != gamma (the nu term of f survives
 *             in f(2n+2) - f(2n)).
 *
 * mu == 0 has no two-term closed display (0/0); closed falls back to the
 * direct difference and the flag records it.
 */
struct SpacingResult {
    double direct;
    double closed;
    double display;
    bool mu_zero_fallback;
};

SpacingResult spacing(const EnergySpec& es, long n);

enum class AsymptoticCase { GrowsUnbounded, SaturatesToEmax, IncreasesThenVanishes };

std::string asymptotic_case_name(AsymptoticCase c);

/*
 * Large-n regime of E_n. The dominant exponent of f(n) is
 * max(tau alpha, tau gamma) = tau rho + |tau mu|, the verdict driver:
 * positive -> growth, zero -> saturation, negative -> rise then decay.
 * (For q > 1 this driver coincides with tau(rho + |mu|).) Each verdict is
 * corroborated by a log-space probe of E_n up to n = 10^4.
 */
struct AsymptoticVerdict {
    AsymptoticCase cls;
    double driver; // tau*rho + |tau*mu|
    std::optional<double> e_max;
    bool corroborated;
    long argmax = -1;      // finite peak (decay case)
    std::string probe_note;
};

AsymptoticVerdict asymptotic_class(const EnergySpec& es);

/*
 * Saturation bound, defined when the driver vanishes with mu != 0:
 *
 *   E_max = (hw0/2) e^{tau(beta-rho)} [ 1/sinh|tau mu| + 2 nu / cosh(tau mu) ],
 *
 * where the nu term is present exactly when the surviving exponent is the
 * gamma one (gamma = 0); for alpha = 0 the parity terms die and E_max is
 * nu-free.
 */
double e_max(const EnergySpec& es);

} // namespace qosc

#endif
