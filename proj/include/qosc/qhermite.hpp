#ifndef QOSC_QHERMITE_HPP
#define QOSC_QHERMITE_HPP

#include <string>
#include <vector>

#include "qosc/params.hpp"

namespace qosc {

/*
 * Parameter family (q, a, b, c) of the position-operator model: the unified
 * tuple is (q; alpha = 2a, beta = 2a + b, gamma = 2a + c - 1; nu = 0) and
 * q' = q^{c-1}. The spectral formulas additionally need q' in (0,1) and the
 * restriction a = (c-1)/2; (a, b, c) = (1/2, -1, 2) is the discrete
 * q-Hermite I point where q' = q.
 */
struct HermiteFamilyParams {
    double q;
    double a;
    double b;
    double c;

    HermiteFamilyParams(double q_, double a_, double b_, double c_)
        : q(q_), a(a_), b(b_), c(c_) {
        if (!(q > 0.0) || !(q < 1.0)) throw InvalidParams("family requires q in (0,1)");
    }

    double qprime() const { return std::pow(q, c - 1.0); }
    bool restricted() const { return std::fabs(2.0 * a - (c - 1.0)) <= 1e-12 * std::max(1.0, std::fabs(c - 1.0)); }
    DeformationParams to_params() const {
        return DeformationParams(q, 2.0 * a, 2.0 * a + b, 2.0 * a + (c - 1.0), 0.0);
    }
    // f(n) = q^{2an+b} (1 - q'^n)/(1 - q'); r_n = sqrt(f(n+1))
    double f(long n) const;
};

enum class SelfAdjointness { EssentiallySelfAdjoint, NotSelfAdjoint, Boundary };

std::string selfadjointness_name(SelfAdjointness v);

/*
 * Carleman test for Q = a + a+: sum 1/r_n diverges iff the closure is
 * essentially self-adjoint. With r_n ~ q^{a(n+1)+b/2} (q' < 1) or
 * r_n ~ q^{(a+(c-1)/2)(n+1)+...} (q' > 1) and q < 1, the series diverges
 * exactly when the deciding exponent (a, resp. a + (c-1)/2) is positive.
 * A zero deciding exponent is returned as Boundary, not guessed. Partial
 * sums at N = 100 and N = 10^4 corroborate the verdict numerically.
 */
struct SelfAdjointnessReport {
    SelfAdjointness verdict;
    double deciding_exponent;
    double partial_sum_100;
    double partial_sum_10000; // may be +inf in the divergent regime
};

SelfAdjointnessReport selfadjointness_case(double q, double a, double c);

// (x; qq)_n = prod_{j<n} (1 - x qq^j)
double qpochhammer(double x, double qq, long n);
// (x; qq)_inf for |qq| < 1; factors below 1e-17 are truncated and the
// dropped tail magnitude is written to *tail_bound when given.
double qpochhammer_inf(double x, double qq, double* tail_bound = nullptr);

enum class HermiteMode { Recurrence, ExplicitSum, Hypergeometric };

/*
 * Generalized discrete q-Hermite I polynomial h_n(x):
 *
 *   Recurrence:  x h_n = h_{n+1} + q^{2an+b} (1 - q'^n) h_{n-1},
 *                h_{-1} = 0, h_0 = 1.
 *   ExplicitSum: sum_k (q';q')_n / [(q'^2;q'^2)_k (q';q')_{n-2k}]
 *                (-1)^k q^{(2an+b)k} q'^{k(k-n)} x^{n-2k}.
 *   Hypergeometric: x^n 2phi0(q'^{-n}, q'^{-n+1}; -; q'^2,
 *                             q^{2an+b} q'^n / x^2), the same terminating
 *                   sum resummed; x = 0 routes through ExplicitSum (odd n
 *                   vanish by parity).
 *
 * ExplicitSum and Hypergeometric agree identically; they solve the
 * recurrence on the restricted family a = (c-1)/2 (verified to residual
 * ~1e-15 there, and measurably false off it).
 */
double h_poly(const HermiteFamilyParams& fp, int n, double x, HermiteMode mode);

// First-kind polynomial of the Jacobi matrix:
// P_n(x) = q^{-a n^2/2} q^{-(a+b)n/2} (q';q')_n^{-1/2} h_n(sqrt(1-q') x),
// satisfying x P_n = r_{n-1} P_{n-1} + r_n P_{n+1} with P_0 = 1.
double p_poly(const HermiteFamilyParams& fp, int n, double x);

// Symmetric tridiagonal section with zero diagonal and off-diagonal r_n.
struct JacobiOperator {
    std::vector<double> r; // r_0 .. r_{dim-2}
    int dim;

    static JacobiOperator from_family(const HermiteFamilyParams& fp, int dim);
};

// All eigenvalues by Sturm-sequence bisection inside Gershgorin bounds;
// every interval is narrowed below 1e-12 before the midpoint is taken.
std::vector<double> jacobi_eigs(const JacobiOperator& jop);

/*
 * Point spectrum and orthogonality masses on the restricted family:
 * support +- x_k with x_k = q^{(2a+b)/2} q'^k / sqrt(1-q'), each of the two
 * k-points carrying
 *
 *     w_k = (q'^k / 2) (q'; q'^2)_inf / (q'^2; q'^2)_k,
 *
 * which sums to 1 over the full support. k_max < 0 selects the smallest k
 * with q'^k < 1e-12. raw_weight_sum is reported before the final exact
 * normalization.
 */
struct QSpectrum {
    std::vector<double> points;  // x_k, k = 0..k_max (positive half)
    std::vector<double> weights; // per point of the +- pair
    int truncation_k = 0;
    double raw_weight_sum = 0.0;
    double tail_bound = 0.0;
};

QSpectrum q_spectrum(const HermiteFamilyParams& fp, int k_max = -1);

// sum over the discrete support of w P~_m P~_n with P~_n = P_n/(q';q')_n^{1/2};
// equals delta_{mn}/(q';q')_n.
double orthogonality_sum(const HermiteFamilyParams& fp, const QSpectrum& spec, int m, int n);

} // namespace qosc

#endif
