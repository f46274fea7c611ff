#include "qosc/fock.hpp"

#include <cmath>
#include <functional>

#include "qosc/structure.hpp"

namespace qosc {

namespace {

Eigen::MatrixXd diag_fn(const FockRep& rep, const std::function<double(double)>& fn) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rep.dim, rep.dim);
    for (int i = 0; i < rep.dim; ++i) m(i, i) = fn(rep.kappa0 + i);
    return m;
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

double max_abs_block(const Eigen::MatrixXd& m, int rows, int cols) {
    if (rows <= 0 || cols <= 0) return 0.0;
    return m.topLeftCorner(rows, cols).cwiseAbs().maxCoeff();
}

} // namespace

FockRep build_fock(const DeformationParams& p, double kappa0, double B,
                   const std::vector<double>& lambda, int dim) {
    if (dim < 1) throw DimensionMismatch("dim must be >= 1");
    if (static_cast<int>(lambda.size()) < dim)
        throw DimensionMismatch("lambda sequence shorter than dim");
    for (int i = 0; i < dim; ++i)
        if (!(lambda[i] >= 0.0))
            throw NegativeLambda("lambda_" + std::to_string(i) + " < 0 is not representable");

    FockRep rep;
    rep.dim = dim;
    rep.kappa0 = kappa0;
    rep.B = B;
    rep.lambda.assign(lambda.begin(), lambda.begin() + dim);
    rep.a = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) rep.a(n - 1, n) = std::sqrt(lambda[n]);
    rep.adag = rep.a.transpose();
    rep.n_op = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) rep.n_op(i, i) = kappa0 + i;
    if (p.nu != 0.0) {
        Eigen::MatrixXd k = Eigen::MatrixXd::Zero(dim, dim);
        for (int i = 0; i < dim; ++i) k(i, i) = ((i % 2 == 0) ? 1.0 : -1.0) * B / (2.0 * p.nu);
        rep.k_op = k;
    }
    return rep;
}

FockRep fock_rep(const DeformationParams& p, int dim) {
    StructureFunction sf(p);
    std::vector<double> lam(dim + 1);
    for (int n = 0; n <= dim; ++n) lam[n] = sf.closed(n);
    return build_fock(p, 0.0, 2.0 * p.nu, lam, dim);
}

std::vector<ResidualReport> verify_relations(const FockRep& rep, const DeformationParams& p) {
    const int D = rep.dim;
    const Eigen::MatrixXd& a = rep.a;
    const Eigen::MatrixXd& ad = rep.adag;
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(D, D);
    const double qg = p.qpow(p.gamma);
    Eigen::MatrixXd qN = diag_fn(rep, [&](double x) { return p.qpow(p.alpha * x + p.beta); });

    std::vector<ResidualReport> out;
    auto push = [&](const std::string& name, const Eigen::MatrixXd& resid, double scale,
                    bool applicable = true) {
        ResidualReport r;
        r.relation = name;
        r.applicable = applicable;
        if (applicable) {
            r.inner = max_abs_block(resid, D - 1, D - 1);
            r.full = max_abs(resid);
            r.scale = scale;
        }
        out.push_back(r);
    };

    Eigen::MatrixXd aad = a * ad;
    Eigen::MatrixXd ada = ad * a;
    Eigen::MatrixXd rhs;
    if (rep.k_op)
        rhs = (I + 2.0 * p.nu * (*rep.k_op)) * qN;
    else
        rhs = qN;
    push("a a+ - q^g a+ a - (1+2nuK) q^(aN+b)", aad - qg * ada - rhs,
         std::max({max_abs(aad), qg * max_abs(ada), max_abs(rhs), 1.0}));
    push("[N,a] + a", rep.n_op * a - a * rep.n_op + a, std::max(1.0, max_abs(a)));
    push("[N,a+] - a+", rep.n_op * ad - ad * rep.n_op - ad, std::max(1.0, max_abs(ad)));
    if (rep.k_op) {
        const Eigen::MatrixXd& K = *rep.k_op;
        push("K a + a K", K * a + a * K, std::max(1.0, max_abs(a) * max_abs(K)));
        push("K a+ + a+ K", K * ad + ad * K, std::max(1.0, max_abs(ad) * max_abs(K)));
        push("K^2 - 1", K * K - I, 1.0);
    } else {
        push("K a + a K", Eigen::MatrixXd(), 1.0, false);
        push("K a+ + a+ K", Eigen::MatrixXd(), 1.0, false);
        push("K^2 - 1", Eigen::MatrixXd(), 1.0, false);
    }
    return out;
}

ResidualReport verify_useful_formula(const FockRep& rep, const DeformationParams& p, int n) {
    const int D = rep.dim;
    if (n < 1) throw InvalidParams("useful formula needs n >= 1");
    if (n > D / 2) throw DimensionMismatch("need n <= dim/2 for a meaningful inner block");

    const Eigen::MatrixXd& a = rep.a;
    const Eigen::MatrixXd& ad = rep.adag;
    Eigen::MatrixXd qN = diag_fn(rep, [&](double x) { return p.qpow(p.alpha * x + p.beta); });

    Eigen::MatrixXd adn = Eigen::MatrixXd::Identity(D, D);
    for (int k = 0; k < n - 1; ++k) adn = ad * adn;
    Eigen::MatrixXd adn1 = adn; // (a+)^{n-1}
    adn = ad * adn;             // (a+)^n

    Eigen::MatrixXd Br;
    const double nn = static_cast<double>(n);
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(D, D);
    if (p.alpha_equals_gamma()) {
        Br = nn * p.qpow(p.alpha * (nn - 1.0)) * I;
        if (rep.k_op)
            Br += 2.0 * p.nu * p.qpow(p.alpha * (nn - 1.0)) * (1.0 - parity) / 2.0 * (*rep.k_op);
    } else {
        const double qg = p.qpow(p.gamma), qa = p.qpow(p.alpha);
        const double c1 = (p.qpow(p.gamma * nn) - p.qpow(p.alpha * nn)) / (qg - qa);
        const double c2 = (p.qpow(p.gamma * nn) - parity * p.qpow(p.alpha * nn)) / (qg + qa);
        Br = c1 * I;
        if (rep.k_op) Br += 2.0 * p.nu * c2 * (*rep.k_op);
    }

    Eigen::MatrixXd lhs1 = a * adn;
    Eigen::MatrixXd lhs2 = p.qpow(p.gamma * nn) * (adn * a);
    Eigen::MatrixXd rhs = adn1 * Br * qN;
    Eigen::MatrixXd resid = lhs1 - lhs2 - rhs;

    ResidualReport r;
    r.relation = "a(a+)^" + std::to_string(n) + " ladder identity";
    // truncation corrupts the last n columns only
    r.inner = max_abs_block(resid, D, D - n);
    r.full = max_abs(resid);
    r.scale = std::max({max_abs(lhs1), max_abs(lhs2), max_abs(rhs), 1.0});
    return r;
}

CasimirResult casimir_c3(const FockRep& rep, const DeformationParams& p) {
    const int D = rep.dim;
    if (D < 2) throw DimensionMismatch("need dim >= 2");

    Eigen::MatrixXd Dn, En;
    if (p.alpha_equals_gamma()) {
        Dn = diag_fn(rep, [&](double x) { return p.qpow(p.gamma * (x - 1.0) + p.beta) * (x + p.nu); });
        En = diag_fn(rep, [&](double x) { return -p.qpow(p.gamma * (x - 1.0) + p.beta); });
    } else {
        const double qg = p.qpow(p.gamma), qa = p.qpow(p.alpha);
        Dn = diag_fn(rep, [&](double x) {
            return p.qpow(p.beta) * ((p.qpow(p.gamma * x) - p.qpow(p.alpha * x)) / (qg - qa) +
                                     2.0 * p.nu * p.qpow(p.gamma * x) / (qg + qa));
        });
        En = diag_fn(rep, [&](double x) { return -2.0 * p.qpow(p.alpha * x + p.beta) / (qg + qa); });
    }
    Eigen::MatrixXd qmg = diag_fn(rep, [&](double x) { return p.qpow(-p.gamma * x); });

    Eigen::MatrixXd core = Dn - rep.adag * rep.a;
    if (rep.k_op) core += p.nu * En * (*rep.k_op);
    Eigen::MatrixXd C3 = qmg * core;

    Eigen::MatrixXd comm = C3 * rep.a - rep.a * C3;

    // A nonzero lambda_0 means the rep continues below the window, so the
    // bottom state is a truncation boundary too.
    const int lo = (rep.lambda.empty() || rep.lambda[0] == 0.0) ? 0 : 1;

    CasimirResult res;
    res.diagonal = C3.diagonal();
    ResidualReport r;
    r.relation = "[C3, a]";
    {
        int n0 = lo, n1 = D - 1; // rows/cols n0..n1-1 are artifact-free
        double m = 0.0;
        for (int i = n0; i < n1; ++i)
            for (int j = n0; j < n1; ++j) m = std::max(m, std::fabs(comm(i, j)));
        r.inner = m;
    }
    r.full = max_abs(comm);
    r.scale = std::max(1.0, max_abs(C3) * std::max(1.0, max_abs(rep.a)));
    res.commutator = r;

    double dmin = res.diagonal(lo), dmax = res.diagonal(lo), dabs = 0.0;
    for (int i = lo; i < D - 1; ++i) {
        dmin = std::min(dmin, res.diagonal(i));
        dmax = std::max(dmax, res.diagonal(i));
        dabs = std::max(dabs, std::fabs(res.diagonal(i)));
    }
    res.diag_spread = dmax - dmin;
    res.diag_max_abs = dabs;
    return res;
}

} // namespace qosc
