#ifndef QOSC_FOCK_HPP
#define QOSC_FOCK_HPP

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qosc/params.hpp"

namespace qosc {

/*
 * Truncated D-dimensional matrix representation built from an eigenvalue
 * sequence lambda: a has sqrt(lambda_n) on the superdiagonal, a+ is its
 * transpose, N = diag(kappa0 + n), and K (present when nu != 0) is
 * diag((-1)^n B / (2 nu)).
 */
struct FockRep {
    int dim = 0;
    double kappa0 = 0.0;
    double B = 0.0;
    std::vector<double> lambda; // lambda_0 .. lambda_{dim-1} (at least)
    Eigen::MatrixXd a;
    Eigen::MatrixXd adag;
    Eigen::MatrixXd n_op;
    std::optional<Eigen::MatrixXd> k_op;
};

FockRep build_fock(const DeformationParams& p, double kappa0, double B,
                   const std::vector<double>& lambda, int dim);

// Fock-class representation: lambda = f (f0 = 0), kappa0 = 0, B = 2 nu.
FockRep fock_rep(const DeformationParams& p, int dim);

// inner excludes the truncation boundary (last row/column; for ladder
// identities of order n, the last n columns). full is the whole matrix.
// scale is the largest magnitude among the compared terms.
struct ResidualReport {
    std::string relation;
    double inner = 0.0;
    double full = 0.0;
    double scale = 1.0;
    bool applicable = true;
};

// Defining relation, the two N commutators, the two K anticommutators and
// K^2 - 1. K rows are reported not-applicable when the rep carries no K.
std::vector<ResidualReport> verify_relations(const FockRep& rep, const DeformationParams& p);

// Residual of a(a+)^n - q^{gamma n}(a+)^n a - (a+)^{n-1} [n;alpha,gamma;nuK] q^{alpha N+beta}.
ResidualReport verify_useful_formula(const FockRep& rep, const DeformationParams& p, int n);

/*
 * Casimir element C3 = q^{-gamma N} ( D(N) + nu E(N) K - a+ a ), with
 *
 *   alpha != gamma:
 *     D(N) = q^b [ (q^{gN} - q^{aN})/(q^g - q^a) + 2 nu q^{gN}/(q^g + q^a) ]
 *     E(N) = -2 q^{aN + b}/(q^g + q^a)
 *   alpha == gamma:
 *     D(N) = q^{g(N-1)+b} (N + nu),   E(N) = -q^{g(N-1)+b}.
 *
 * D solves D(N+1) - q^g D(N) = q^{aN+b} and E solves
 * E(N+1) + q^g E(N) = -2 q^{aN+b}; together they make [C3, a] = 0. The
 * homogeneous parts are fixed so the Fock-class eigenvalue is exactly 0.
 */
struct CasimirResult {
    Eigen::VectorXd diagonal;
    ResidualReport commutator; // [C3, a]
    double diag_spread = 0.0;  // max - min over the verifiable index range
    double diag_max_abs = 0.0;
};

CasimirResult casimir_c3(const FockRep& rep, const DeformationParams& p);

} // namespace qosc

#endif
