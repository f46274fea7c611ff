#include "qosc/representations.hpp"

#include <cmath>
#include <sstream>

namespace qosc {

double lambda_seq(const RepSpec& spec, long n) {
    const DeformationParams& p = spec.params;
    const double nn = static_cast<double>(n);
    const double parity = ((n % 2 + 2) % 2 == 0) ? 1.0 : -1.0;
    double v;
    if (p.alpha_equals_gamma()) {
        v = spec.lambda0 * p.qpow(p.gamma * nn) +
            nn * p.qpow(p.gamma * (nn + spec.kappa0 - 1.0) + p.beta) +
            spec.B * p.qpow(p.gamma * (nn + spec.kappa0 - 1.0) + p.beta) * (1.0 - parity) / 2.0;
    } else {
        const double qg = p.qpow(p.gamma), qa = p.qpow(p.alpha);
        const double qgn = p.qpow(p.gamma * nn), qan = p.qpow(p.alpha * nn);
        v = spec.lambda0 * qgn +
            p.qpow(p.alpha * spec.kappa0 + p.beta) *
                ((qgn - qan) / (qg - qa) + spec.B * (qgn - parity * qan) / (qg + qa));
    }
    if (!std::isfinite(v)) throw OverflowError("lambda_seq overflow at n=" + std::to_string(n));
    return v;
}

LogReal lambda_seq_log(const RepSpec& spec, long n) {
    const DeformationParams& p = spec.params;
    const double nn = static_cast<double>(n);
    const double tau = p.tau();
    const double parity = ((n % 2 + 2) % 2 == 0) ? 1.0 : -1.0;
    if (p.alpha_equals_gamma()) {
        LogReal s = LogReal::term(spec.lambda0, tau * p.gamma * nn);
        s = s + LogReal::term(nn + spec.B * (1.0 - parity) / 2.0,
                              tau * (p.gamma * (nn + spec.kappa0 - 1.0) + p.beta));
        return s;
    }
    const double qg = p.qpow(p.gamma), qa = p.qpow(p.alpha);
    const double cd = 1.0 / (qg - qa), cs = 1.0 / (qg + qa);
    const double e0 = tau * (p.alpha * spec.kappa0 + p.beta);
    LogReal s = LogReal::term(spec.lambda0, tau * p.gamma * nn);
    s = s + LogReal::term(cd + spec.B * cs, e0 + tau * p.gamma * nn);
    s = s + LogReal::term(-cd - spec.B * parity * cs, e0 + tau * p.alpha * nn);
    return s;
}

double invariant_S(const RepSpec& spec) {
    const DeformationParams& p = spec.params;
    if (p.alpha_equals_gamma()) throw InvalidParams("S is defined for alpha != gamma");
    const double qg = p.qpow(p.gamma), qa = p.qpow(p.alpha);
    return spec.lambda0 * p.qpow(-(p.alpha * spec.kappa0 + p.beta)) + 1.0 / (qg - qa) +
           spec.B / (qg + qa);
}

double invariant_T(const RepSpec& spec, int parity_sign) {
    const DeformationParams& p = spec.params;
    if (p.alpha_equals_gamma()) throw InvalidParams("T is defined for alpha != gamma");
    const double qg = p.qpow(p.gamma), qa = p.qpow(p.alpha);
    return 1.0 / (qg - qa) + parity_sign * spec.B / (qg + qa);
}

std::string rep_class_name(RepClass c) {
    switch (c) {
        case RepClass::BoundedBelow: return "bounded-below";
        case RepClass::BoundedAbove: return "bounded-above";
        case RepClass::FiniteDim: return "finite-dim";
        case RepClass::Unbounded: return "unbounded";
    }
    return "?";
}

RepClassification classify(const RepSpec& spec, int window) {
    if (window < 16) throw InvalidParams("window must be >= 16");
    const DeformationParams& p = spec.params;
    const double tol = 1e-12 * std::max(1.0, p.qpow(p.alpha * spec.kappa0 + p.beta));

    std::optional<long> floor_idx, ceil_idx;
    for (long n = 0; n >= -window; --n) {
        double v = lambda_seq(spec, n);
        if (std::fabs(v) <= tol) {
            floor_idx = n;
            break;
        }
        if (v < -tol)
            throw NegativeLambdaInterior("lambda_" + std::to_string(n) +
                                         " < 0 in the descending orbit with no vacuum above it");
    }
    for (long n = 1; n <= window; ++n) {
        double v = lambda_seq(spec, n);
        if (std::fabs(v) <= tol) {
            ceil_idx = n;
            break;
        }
        if (v < -tol)
            throw NegativeLambdaInterior("lambda_" + std::to_string(n) +
                                         " < 0 in the ascending orbit with no top state below it");
    }

    RepClassification out;
    out.n1 = floor_idx;
    out.n2 = ceil_idx;
    if (floor_idx && ceil_idx) {
        out.cls = RepClass::FiniteDim;
        out.dim = static_cast<int>(*ceil_idx - *floor_idx);
    } else if (floor_idx) {
        out.cls = RepClass::BoundedBelow;
    } else if (ceil_idx) {
        out.cls = RepClass::BoundedAbove;
    } else {
        out.cls = RepClass::Unbounded;
    }

    // analytic cross-check: which classes do the sign conditions allow?
    std::ostringstream w;
    bool below_ok = false, above_ok = false, finite_ok = false, unbounded_ok = false;
    if (p.alpha_equals_gamma()) {
        // lambda/q^{gn} is strictly increasing in n: the descent always
        // terminates (or the spec is invalid); no unbounded or purely
        // bounded-above rep exists on this branch.
        below_ok = finite_ok = true;
        w << "alpha==gamma branch (descending sequence must terminate)";
    } else {
        const double S = invariant_S(spec);
        const double Tp = invariant_T(spec, +1);
        const double Tm = invariant_T(spec, -1);
        const double sigma = p.qpow(p.gamma) - p.qpow(p.alpha); // sign = sign(tau(gamma-alpha))
        const double stol = 1e-13 * (1.0 + std::fabs(spec.lambda0));
        w << "sigma=" << (sigma > 0 ? "+" : "-") << " S=" << S << " T+=" << Tp << " T-=" << Tm;
        if (sigma > 0.0) {
            // descent always terminates (at least one parity constant is
            // positive since T+ + T- = 2/(q^g - q^a) > 0)
            below_ok = finite_ok = true;
        } else {
            const bool t_nonpos = Tp <= stol && Tm <= stol;
            const bool t_some_pos = Tp > stol || Tm > stol;
            const bool t_zero = std::fabs(Tp) <= stol || std::fabs(Tm) <= stol;
            if (S > stol) {
                if (t_nonpos) unbounded_ok = true;
                if (t_some_pos) { above_ok = true; finite_ok = true; }
            } else if (std::fabs(S) <= stol) {
                if (t_nonpos && t_zero) finite_ok = true; // two-dimensional family
                else if (t_nonpos) unbounded_ok = true;
                if (t_some_pos) { above_ok = true; finite_ok = true; }
            } else { // S < 0: descent terminates
                below_ok = finite_ok = true;
            }
        }
    }

    bool ok = (out.cls == RepClass::BoundedBelow && below_ok) ||
              (out.cls == RepClass::BoundedAbove && above_ok) ||
              (out.cls == RepClass::FiniteDim && finite_ok) ||
              (out.cls == RepClass::Unbounded && unbounded_ok);
    if (!ok) {
        std::ostringstream msg;
        msg << "scan verdict '" << rep_class_name(out.cls)
            << "' not admitted by the analytic sign conditions [" << w.str()
            << "]; window=" << window
            << " (a cutoff may lie outside the scan window, or the spec sits on a sign boundary)";
        throw InconsistentClassification(msg.str());
    }

    w << "; scan:";
    if (floor_idx) w << " n1=" << *floor_idx;
    if (ceil_idx) w << " n2=" << *ceil_idx;
    if (!floor_idx && !ceil_idx) w << " no zeros in [-" << window << "," << window << "]";
    out.witness = w.str();
    return out;
}

FockRep explicit_rep(const RepSpec& spec) {
    const DeformationParams& p = spec.params;
    if (p.nu == 0.0) throw NuZero("explicit reps need nu != 0 (K eigenvalue divides by 2nu)");
    RepClassification cls = classify(spec, 64);
    if (cls.cls != RepClass::FiniteDim || cls.dim > 2)
        throw NotFiniteDim("explicit_rep needs a FiniteDim(1) or FiniteDim(2) spec");

    if (cls.dim == 1) {
        // single state |n1>: a = a+ = 0, N = kappa0 + n1, K = B/(2nu) * (-1)^{n1}
        long n1 = *cls.n1;
        double Beff = ((n1 % 2 + 2) % 2 == 0) ? spec.B : -spec.B;
        return build_fock(p, spec.kappa0 + n1, Beff, {0.0}, 1);
    }
    // two states |n1>, |n1+1> with lambda_{n1+1} > 0
    long n1 = *cls.n1;
    double lam1 = lambda_seq(spec, n1 + 1);
    double Beff = ((n1 % 2 + 2) % 2 == 0) ? spec.B : -spec.B;
    return build_fock(p, spec.kappa0 + n1, Beff, {0.0, lam1}, 2);
}

RepSpec shift_transform(const RepSpec& spec, long n) {
    RepClassification cls = classify(spec);
    if (cls.cls != RepClass::Unbounded)
        throw NotUnbounded("shift transform is defined on the unbounded class");
    double Bp = ((n % 2 + 2) % 2 == 0) ? spec.B : -spec.B;
    return RepSpec(spec.params, spec.kappa0 + n, Bp, lambda_seq(spec, n));
}

} // namespace qosc
