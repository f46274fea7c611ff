#ifndef QOSC_PARAMS_HPP
#define QOSC_PARAMS_HPP

#include <cmath>
#include <string>

#include "qosc/errors.hpp"

namespace qosc {

/*
 * Deformation parameter tuple (q; alpha, beta, gamma; nu) of the unified
 * oscillator relation
 *
 *     a a+ - q^gamma a+ a = (1 + 2 nu K) q^{alpha N + beta},
 *
 * with K the parity involution. q = 1 is rejected at construction: every
 * closed form divides by a power-difference that degenerates there, and
 * the alpha == gamma branch already covers the interesting limit.
 */
struct DeformationParams {
    double q;
    double alpha;
    double beta;
    double gamma;
    double nu;

    DeformationParams(double q_, double alpha_, double beta_, double gamma_, double nu_)
        : q(q_), alpha(alpha_), beta(beta_), gamma(gamma_), nu(nu_) {
        if (!(q > 0.0) || q == 1.0 || !std::isfinite(q))
            throw InvalidParams("q must be positive, finite and != 1");
        if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma) ||
            !std::isfinite(nu))
            throw InvalidParams("alpha, beta, gamma, nu must be finite");
    }

    // Exact equality on purpose: a tolerance here would silently switch
    // closed-form branches. Near-degenerate inputs get a ConditionWarning
    // from the structure module instead.
    bool alpha_equals_gamma() const { return alpha == gamma; }

    double tau() const { return std::log(q); }
    double qpow(double e) const { return std::exp(e * std::log(q)); }
};

struct Reparametrization {
    double tau;  // q = e^tau
    double rho;  // (gamma + alpha)/2
    double mu;   // (gamma - alpha)/2
    double beta;
    double nu;
};

Reparametrization reparametrize(const DeformationParams& p);
DeformationParams from_reparametrization(const Reparametrization& r);

enum class Regime { Regime16, Regime17, Violated };

// Bounds are on 2*nu. For Regime16 the window is (-1, +inf); for Regime17
// the upper bound is -(q^g + q^a)/(q^g - q^a), positive in that orientation.
struct PositivityVerdict {
    bool positive;
    Regime regime;
    double two_nu_low;
    double two_nu_high;
};

PositivityVerdict validate_positivity(const DeformationParams& p);

std::string regime_name(Regime r);

/*
 * Catalog of special-case reductions. Each tag maps to a unified tuple;
 * catalog_f gives the independently coded closed form of that oscillator's
 * structure function (the cross-oracle for the reduction tests).
 */
struct SpecialCase {
    enum class Tag {
        ArikCoon,
        BiedenharnMacfarlane,
        ChungEtAl,
        Borzov,
        NuModified,
        QNu,
        HermiteFamily,
    };

    Tag tag;
    double q = 2.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    double nu = 0.0;
    double a = 0.0, b = 0.0, c = 0.0; // HermiteFamily only

    static SpecialCase arik_coon(double q);
    static SpecialCase biedenharn_macfarlane(double q);
    static SpecialCase chung_et_al(double q, double alpha, double beta);
    static SpecialCase borzov(double q, double alpha, double beta, double gamma);
    static SpecialCase nu_modified(double nu);
    static SpecialCase q_nu(double q, double nu);
    static SpecialCase hermite_family(double q, double a, double b, double c);
};

DeformationParams special_case_params(const SpecialCase& s);
double catalog_f(const SpecialCase& s, long n);
std::string special_case_name(SpecialCase::Tag t);

} // namespace qosc

#endif
