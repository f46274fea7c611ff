#ifndef QOSC_REPRESENTATIONS_HPP
#define QOSC_REPRESENTATIONS_HPP

#include <optional>
#include <string>

#include "qosc/fock.hpp"
#include "qosc/log_real.hpp"
#include "qosc/params.hpp"

namespace qosc {

// Ground-state data of a candidate representation: N|0> = kappa0|0>,
// a+a|0> = lambda0|0>, K|n> = (-1)^n B/(2 nu) |n>.
struct RepSpec {
    DeformationParams params;
    double kappa0;
    double B;
    double lambda0;

    RepSpec(const DeformationParams& p, double kappa0_, double B_, double lambda0_)
        : params(p), kappa0(kappa0_), B(B_), lambda0(lambda0_) {
        if (!(lambda0 >= 0.0)) throw InvalidParams("lambda0 must be >= 0");
    }
};

// Eigenvalue sequence lambda_n solving
//   lambda_{n+1} - q^gamma lambda_n = (1 + (-1)^n B) q^{alpha(n+kappa0)+beta},
// evaluated by the closed form (valid in both index directions).
double lambda_seq(const RepSpec& spec, long n);
LogReal lambda_seq_log(const RepSpec& spec, long n);

// Invariant combination lambda0 q^{-(alpha kappa0 + beta)}
//   + 1/(q^g - q^a) + B/(q^g + q^a); its sign drives the classification
// and it rescales by q^{(gamma-alpha)n} under the shift transform.
double invariant_S(const RepSpec& spec);
// 1/(q^g - q^a) + (+-) B/(q^g + q^a) (even/odd parity constants).
double invariant_T(const RepSpec& spec, int parity_sign);

enum class RepClass { BoundedBelow, BoundedAbove, FiniteDim, Unbounded };

std::string rep_class_name(RepClass c);

struct RepClassification {
    RepClass cls;
    int dim = 0;                       // FiniteDim only: number of states n2 - n1
    std::optional<long> n1;            // floor index (lambda_{n1} = 0), n1 <= 0
    std::optional<long> n2;            // ceiling index (lambda_{n2} = 0), n2 >= 1
    std::string witness;               // which sign conditions fired
};

/*
 * Scans lambda_n outward from n = 0 on [-window, window] with tolerance
 * zero-detection, and cross-checks the structural verdict against the
 * analytic sign conditions (the sign of tau(gamma-alpha), of S, and of
 * the two parity constants T). Throws InconsistentClassification when the
 * two disagree and NegativeLambdaInterior when the orbit of |0> reaches a
 * negative eigenvalue without terminating at a vacuum/top state.
 */
RepClassification classify(const RepSpec& spec, int window = 256);

// Explicit 1x1 or 2x2 representation for FiniteDim specs. These are exact:
// all defining-relation residuals vanish on the full matrix, K^2 = 1 only
// when B = +-2 nu.
FockRep explicit_rep(const RepSpec& spec);

// Unbounded-class shift: B -> (-1)^n B, kappa0 -> kappa0 + n,
// lambda0 -> lambda_n. Preserves the class; S rescales by q^{(gamma-alpha)n}.
RepSpec shift_transform(const RepSpec& spec, long n);

} // namespace qosc

#endif
