#include <cmath>

#include <doctest.h>

#include "qosc/fock.hpp"
#include "qosc/structure.hpp"

using namespace qosc;

TEST_CASE("fock construction") {
    DeformationParams p(0.6, 0.2, 0.0, 1.0, 0.2);
    FockRep rep = fock_rep(p, 8);
    StructureFunction sf(p);
    Eigen::MatrixXd ada = rep.adag * rep.a;
    for (int n = 0; n < 8; ++n) {
        CHECK(ada(n, n) == doctest::Approx(sf.closed(n)).epsilon(1e-14));
        for (int m = 0; m < 8; ++m)
            if (m != n) CHECK(ada(n, m) == 0.0);
    }
    Eigen::MatrixXd aad = rep.a * rep.adag;
    for (int n = 0; n < 7; ++n) CHECK(aad(n, n) == doctest::Approx(sf.closed(n + 1)).epsilon(1e-14));
    REQUIRE(rep.k_op.has_value());
    // exact parity anticommutation
    CHECK(((*rep.k_op) * rep.a + rep.a * (*rep.k_op)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(((*rep.k_op) * rep.adag + rep.adag * (*rep.k_op)).cwiseAbs().maxCoeff() == 0.0);
    // kappa0 = 0, B = 2nu: K|n> = (-1)^n |n>, the integer-kappa0 parity check
    for (int n = 0; n < 8; ++n)
        CHECK((*rep.k_op)(n, n) == doctest::Approx((n % 2 == 0) ? 1.0 : -1.0).epsilon(1e-14));
}

TEST_CASE("negative lambda rejected") {
    DeformationParams p(0.6, 0.2, 0.0, 1.0, 0.2);
    CHECK_THROWS_AS(build_fock(p, 0.0, 0.4, {0.0, 1.0, -0.5}, 3), NegativeLambda);
    CHECK_THROWS_AS(build_fock(p, 0.0, 0.4, {0.0}, 3), DimensionMismatch);
}

TEST_CASE("undeformed ladder gives the canonical commutator") {
    DeformationParams p(2.0, 0.0, 0.0, 0.0, 0.1); // q-exponents vanish
    std::vector<double> lam(17);
    for (int n = 0; n <= 16; ++n) lam[n] = n;
    FockRep rep = build_fock(p, 0.0, 0.0, lam, 16);
    Eigen::MatrixXd comm = rep.a * rep.adag - rep.adag * rep.a;
    for (int n = 0; n < 15; ++n) CHECK(comm(n, n) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("defining relations on the inner block") {
    for (double qv : {0.6, 1.7}) {
        DeformationParams p(qv, 0.2, 0.0, qv < 1 ? 1.0 : -0.4, 0.2);
        for (int D : {8, 32, 128}) {
            FockRep rep = fock_rep(p, D);
            for (const auto& r : verify_relations(rep, p)) {
                if (!r.applicable) continue;
                CHECK(r.inner <= 1e-10);
            }
        }
    }
}

TEST_CASE("K^2 - 1 vanishes exactly for B = +-2nu") {
    DeformationParams p(0.6, 0.2, 0.0, 1.0, 0.2);
    FockRep rep = fock_rep(p, 16);
    auto reports = verify_relations(rep, p);
    bool found = false;
    for (const auto& r : reports)
        if (r.relation == "K^2 - 1") {
            found = true;
            CHECK(r.full == 0.0);
        }
    CHECK(found);
}

TEST_CASE("nu = 0 reps skip the K relations") {
    DeformationParams p(0.6, 0.2, 0.0, 1.0, 0.0);
    FockRep rep = fock_rep(p, 12);
    CHECK_FALSE(rep.k_op.has_value());
    int not_applicable = 0;
    for (const auto& r : verify_relations(rep, p))
        if (!r.applicable) ++not_applicable;
    CHECK(not_applicable == 3);
}

TEST_CASE("perturbation detector sensitivity") {
    DeformationParams p(0.6, 0.2, 0.0, 1.0, 0.2);
    StructureFunction sf(p);
    std::vector<double> lam(17);
    for (int n = 0; n <= 16; ++n) lam[n] = sf.closed(n);
    lam[3] += 1e-3;
    FockRep rep = build_fock(p, 0.0, 2 * p.nu, lam, 16);
    double defining = 0.0;
    for (const auto& r : verify_relations(rep, p))
        if (r.relation.rfind("a a+", 0) == 0) defining = r.inner;
    CHECK(defining >= 1e-4);
}

TEST_CASE("ladder identity for n = 1..6") {
    DeformationParams p(0.6, 0.2, 0.0, 1.0, 0.2);
    FockRep rep = fock_rep(p, 32);
    for (int n = 1; n <= 6; ++n) {
        auto r = verify_useful_formula(rep, p, n);
        CHECK(r.inner <= 1e-9 * r.scale);
        CHECK(r.inner <= 1e-9);
    }
    // n=1 is the defining relation again
    auto r1 = verify_useful_formula(rep, p, 1);
    CHECK(r1.inner <= 1e-12);

    // second positivity regime, deeper tower
    DeformationParams p17(0.5, 0.0, 0.1, 1.0, 0.7);
    FockRep rep17 = fock_rep(p17, 40);
    CHECK(verify_useful_formula(rep17, p17, 5).inner <= 1e-9);

    // alpha == gamma branch
    DeformationParams peq(0.8, 0.5, 0.1, 0.5, 0.25);
    FockRep repeq = fock_rep(peq, 24);
    for (int n = 1; n <= 4; ++n) CHECK(verify_useful_formula(repeq, peq, n).inner <= 1e-9);
}

TEST_CASE("casimir: zero diagonal and vanishing commutator on Fock reps") {
    for (double qv : {0.6, 1.7}) {
        DeformationParams p(qv, 0.2, 0.1, qv < 1 ? 1.0 : -0.4, 0.2);
        FockRep rep = fock_rep(p, 32);
        auto cas = casimir_c3(rep, p);
        CHECK(cas.commutator.inner <= 1e-10);
        CHECK(cas.diag_max_abs <= 1e-10);
        CHECK(cas.diag_spread <= 1e-10);
    }
    DeformationParams peq(0.7, 0.5, 0.1, 0.5, 0.3);
    auto cas = casimir_c3(fock_rep(peq, 32), peq);
    CHECK(cas.commutator.inner <= 1e-10);
    CHECK(cas.diag_max_abs <= 1e-10);
}

TEST_CASE("casimir: constant nonzero diagonal on non-Fock towers") {
    // same algebra, general ground data: the eigenvalue is constant but nonzero
    DeformationParams p(0.6, 0.2, 0.1, 1.0, 0.2);
    std::vector<double> lam(25);
    const double k0 = 0.7, B = 0.9, l0 = 2.0;
    for (int n = 0; n <= 24; ++n) {
        double nn = n;
        double parity = (n % 2 == 0) ? 1.0 : -1.0;
        double qg = std::pow(0.6, 1.0), qa = std::pow(0.6, 0.2);
        lam[n] = l0 * std::pow(qg, nn) +
                 std::pow(0.6, 0.2 * k0 + 0.1) *
                     ((std::pow(qg, nn) - std::pow(qa, nn)) / (qg - qa) +
                      B * (std::pow(qg, nn) - parity * std::pow(qa, nn)) / (qg + qa));
    }
    FockRep rep = build_fock(p, k0, B, lam, 24);
    auto cas = casimir_c3(rep, p);
    CHECK(cas.commutator.inner <= 1e-10);
    CHECK(cas.diag_spread <= 1e-10);
    CHECK(std::fabs(cas.diagonal(3)) > 0.1); // genuinely nonzero eigenvalue
}
