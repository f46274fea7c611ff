#include <cmath>
#include <random>

#include <doctest.h>

#include "qosc/params.hpp"
#include "qosc/structure.hpp"

using namespace qosc;

namespace {
double rel_err(double got, double want) {
    return std::fabs(got - want) / std::max(1.0, std::fabs(want));
}
} // namespace

TEST_CASE("recurrence base cases") {
    DeformationParams p(0.8, 0.3, -0.2, 1.1, 0.25);
    StructureFunction sf(p, 0.7);
    CHECK(sf.recurrence(0) == 0.7);
    StructureFunction sf0(p);
    CHECK(sf0.recurrence(1) == doctest::Approx((1 + 2 * 0.25) * std::pow(0.8, -0.2)).epsilon(1e-14));
    // frozen regression value for (q=0.8, a=0.3, b=-0.2, g=1.1, nu=0.25, f0=0)
    CHECK(sf0.recurrence(5) == doctest::Approx(3.196029892075435).epsilon(1e-14));
    CHECK(sf0.closed(5) == doctest::Approx(3.196029892075435).epsilon(1e-13));
}

TEST_CASE("closed form equals recurrence on random grids") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 250; ++trial) {
        double q = std::exp(0.7 * u(rng));
        if (q == 1.0) continue;
        DeformationParams p(q, u(rng), u(rng), u(rng), 0.4 * u(rng));
        double f0 = 0.5 + 0.5 * u(rng);
        StructureFunction sf(p, f0);
        for (int n = 0; n <= 200; n += 7) {
            double c = sf.closed(n), r = sf.recurrence(n);
            CHECK(rel_err(c, r) <= 1e-10);
        }
    }
    // alpha == gamma branch
    for (int trial = 0; trial < 60; ++trial) {
        double q = std::exp(0.7 * u(rng));
        if (q == 1.0) continue;
        double ag = u(rng);
        DeformationParams p(q, ag, u(rng), ag, 0.4 * u(rng));
        StructureFunction sf(p, 0.3);
        for (int n = 0; n <= 120; n += 5) CHECK(rel_err(sf.closed(n), sf.recurrence(n)) <= 1e-10);
    }
}

TEST_CASE("closed form satisfies the defining recurrence identically") {
    DeformationParams p(1.3, -0.4, 0.2, 0.6, 0.3);
    StructureFunction sf(p, 0.0);
    const double qg = std::pow(1.3, 0.6);
    for (int n = 0; n <= 200; ++n) {
        double parity = (n % 2 == 0) ? 1.0 : -1.0;
        double lhs = sf.closed(n + 1) - qg * sf.closed(n) -
                     (1.0 + 2 * 0.3 * parity) * std::pow(1.3, -0.4 * n + 0.2);
        CHECK(std::fabs(lhs) <= 1e-10 * std::max(1.0, std::fabs(sf.closed(n + 1))));
    }
}

TEST_CASE("spec'd closed-form spot values") {
    // Arik-Coon at q=0.5: f(3) = (1-q^3)/(1-q) = 1.75
    StructureFunction ac(special_case_params(SpecialCase::arik_coon(0.5)));
    CHECK(ac.closed(3) == doctest::Approx(1.75).epsilon(1e-14));
    // alpha=gamma=1, q=2, nu=0.5: f(2) = 2*2 (parity term vanishes)
    StructureFunction eq(DeformationParams(2.0, 1.0, 0.0, 1.0, 0.5));
    CHECK(eq.closed(2) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(eq.closed(0) == 0.0);
}

TEST_CASE("special-case reductions, n <= 100") {
    auto check_case = [](const SpecialCase& sc) {
        StructureFunction sf(special_case_params(sc));
        for (long n = 0; n <= 100; ++n) {
            double want = catalog_f(sc, n);
            CHECK(rel_err(sf.closed(n), want) <= 1e-10);
        }
    };
    check_case(SpecialCase::arik_coon(0.5));
    check_case(SpecialCase::arik_coon(1.7));
    check_case(SpecialCase::biedenharn_macfarlane(0.5));
    check_case(SpecialCase::biedenharn_macfarlane(1.3));
    check_case(SpecialCase::chung_et_al(0.7, 0.4, -0.3));
    check_case(SpecialCase::chung_et_al(1.6, 1.0, 0.2)); // alpha = 1 branch
    check_case(SpecialCase::borzov(0.8, 0.5, 0.1, 1.4));
    check_case(SpecialCase::borzov(1.2, 0.6, 0.0, 0.6)); // alpha = gamma branch
    check_case(SpecialCase::nu_modified(0.35));
    check_case(SpecialCase::q_nu(0.6, 0.2));
    check_case(SpecialCase::hermite_family(0.8, 0.5, -1.0, 2.0));
}

TEST_CASE("nu-modified reduction carries the one-step index shift") {
    // unified f at alpha=beta=gamma=0: f(2k) = 2k, f(2k+1) = 2k+1+2nu;
    // the (2k+1+2nu, 2k+2) listing corresponds to f(n+1)
    const double nu = 0.35;
    StructureFunction sf(special_case_params(SpecialCase::nu_modified(nu)));
    for (long k = 0; k <= 20; ++k) {
        CHECK(sf.closed(2 * k) == doctest::Approx(2.0 * k).epsilon(1e-12));
        CHECK(sf.closed(2 * k + 1) == doctest::Approx(2.0 * k + 1.0 + 2 * nu).epsilon(1e-12));
    }
}

TEST_CASE("condition warning near the degenerate branch") {
    DeformationParams p(2.0, 0.5, 0.0, 0.5 + 1e-14, 0.1);
    StructureFunction sf(p);
    CHECK(sf.condition_warning());
    DeformationParams ok(2.0, 0.5, 0.0, 0.9, 0.1);
    CHECK_FALSE(StructureFunction(ok).condition_warning());
}

TEST_CASE("overflow is reported, not saturated") {
    DeformationParams p(10.0, 0.0, 0.0, 40.0, 0.0);
    StructureFunction sf(p);
    CHECK_THROWS_AS(sf.recurrence(2000), OverflowError);
    CHECK_THROWS_AS(sf.closed(2000), OverflowError);
    // the log-space path keeps going
    LogReal big = sf.closed_log(2000);
    CHECK(big.sign == 1);
    CHECK(big.log_mag > 700.0);
}

TEST_CASE("log-space closed form matches the double path in range") {
    DeformationParams p(1.4, -0.3, 0.2, 0.9, 0.25);
    StructureFunction sf(p, 0.4);
    for (long n : {0L, 1L, 2L, 7L, 30L, 100L}) {
        CHECK(rel_err(sf.closed_log(n).value(), sf.closed(n)) <= 1e-12);
    }
}

TEST_CASE("bracket spot values") {
    DeformationParams p(0.7, 0.2, 0.0, 1.0, 0.3);
    // n=1 reduces to 1 + 2 nu k
    CHECK(bracket(p, 1, 1) == doctest::Approx(1.6).epsilon(1e-14));
    CHECK(bracket(p, 1, -1) == doctest::Approx(0.4).epsilon(1e-14));
    // nu = 0 kills the parity term
    DeformationParams p0(0.7, 0.2, 0.0, 1.0, 0.0);
    double want = (std::pow(0.7, 3.0) - std::pow(0.7, 0.6)) / (0.7 - std::pow(0.7, 0.2));
    CHECK(bracket(p0, 3, 1) == doctest::Approx(want).epsilon(1e-13));
    // frozen cross-checked constant
    CHECK(bracket(p, 4, -1) == doctest::Approx(2.4017437801767425).epsilon(1e-13));
}

TEST_CASE("generating function coefficients equal brackets") {
    DeformationParams p(0.7, 0.2, 0.0, 1.0, 0.3);
    for (int ks : {+1, -1}) {
        auto coeffs = genfun_coeffs(p, ks, 30);
        CHECK(coeffs[0] == 0.0);
        CHECK(coeffs[1] == doctest::Approx(1.0 + 2 * 0.3 * ks).epsilon(1e-14));
        for (int n = 0; n <= 30; ++n)
            CHECK(std::fabs(coeffs[n] - bracket(p, n, ks)) <=
                  1e-10 * std::max(1.0, std::fabs(coeffs[n])));
    }
    DeformationParams peq(0.8, 0.5, 0.0, 0.5, 0.3);
    auto ceq = genfun_coeffs(peq, 1, 30);
    for (int n = 0; n <= 30; ++n)
        CHECK(std::fabs(ceq[n] - bracket(peq, n, 1)) <= 1e-10 * std::max(1.0, std::fabs(ceq[n])));
}

TEST_CASE("random-grid genfun cross-oracle") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        double q = std::exp(0.6 * u(rng));
        if (q == 1.0) continue;
        DeformationParams p(q, u(rng), 0.0, u(rng), 0.4 * u(rng));
        auto coeffs = genfun_coeffs(p, (trial % 2) ? 1 : -1, 30);
        for (int n = 0; n <= 30; ++n)
            CHECK(std::fabs(coeffs[n] - bracket(p, n, (trial % 2) ? 1 : -1)) <=
                  1e-10 * std::max(1.0, std::fabs(coeffs[n])));
    }
}
