#include <cmath>
#include <random>

#include <doctest.h>

#include "qosc/params.hpp"
#include "qosc/structure.hpp"

using namespace qosc;

TEST_CASE("construction rejects bad q") {
    CHECK_THROWS_AS(DeformationParams(1.0, 0, 0, 1, 0), InvalidParams);
    CHECK_THROWS_AS(DeformationParams(0.0, 0, 0, 1, 0), InvalidParams);
    CHECK_THROWS_AS(DeformationParams(-2.0, 0, 0, 1, 0), InvalidParams);
    CHECK_NOTHROW(DeformationParams(0.5, 0, 0, 1, 0));
}

TEST_CASE("reparametrization round trip") {
    DeformationParams p(std::exp(1.0), 0.0, 0.3, 2.0, 0.1);
    auto r = reparametrize(p);
    CHECK(r.tau == doctest::Approx(1.0));
    CHECK(r.rho == doctest::Approx(1.0));
    CHECK(r.mu == doctest::Approx(1.0));

    DeformationParams p2(1.5, 0.7, 0.0, 0.7, 0.0);
    auto r2 = reparametrize(p2);
    CHECK(r2.mu == doctest::Approx(0.0));
    CHECK(r2.rho == doctest::Approx(0.7));

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        double q = std::exp(u(rng));
        if (q == 1.0) continue;
        DeformationParams pp(q, u(rng), u(rng), u(rng), u(rng));
        DeformationParams back = from_reparametrization(reparametrize(pp));
        CHECK(std::fabs(back.q - pp.q) <= 1e-14 * std::fabs(pp.q));
        CHECK(std::fabs(back.alpha - pp.alpha) <= 1e-14 * std::max(1.0, std::fabs(pp.alpha)));
        CHECK(std::fabs(back.gamma - pp.gamma) <= 1e-14 * std::max(1.0, std::fabs(pp.gamma)));
    }
}

TEST_CASE("positivity regimes") {
    auto v = validate_positivity(DeformationParams(2.0, 0.0, 0.0, 1.0, 0.1));
    CHECK(v.positive);
    CHECK(v.regime == Regime::Regime16);

    auto bad = validate_positivity(DeformationParams(2.0, 0.0, 0.0, 1.0, -0.6));
    CHECK_FALSE(bad.positive);
    CHECK(bad.regime == Regime::Violated);

    // q<1, gamma-alpha>0 is the bounded-window side
    auto r17 = validate_positivity(DeformationParams(0.5, 0.0, 0.0, 1.0, 0.7));
    CHECK(r17.positive);
    CHECK(r17.regime == Regime::Regime17);
    CHECK(r17.two_nu_high == doctest::Approx(3.0)); // -(q+1)/(q-1) at q=0.5, alpha=0, gamma=1

    auto out17 = validate_positivity(DeformationParams(0.5, 0.0, 0.0, 1.0, 1.6));
    CHECK_FALSE(out17.positive);

    // alpha == gamma branch
    auto eq = validate_positivity(DeformationParams(2.0, 0.7, 0.0, 0.7, -0.2));
    CHECK(eq.positive);
    CHECK(eq.regime == Regime::Regime16);
}

TEST_CASE("positive verdict implies positive f along the recurrence") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int verified = 0;
    while (verified < 40) {
        double q = std::exp(0.8 * u(rng));
        if (q == 1.0) continue;
        DeformationParams p(q, 0.6 * u(rng), 0.5 * u(rng), 0.6 * u(rng), 0.45 * u(rng));
        auto v = validate_positivity(p);
        if (!v.positive) continue;
        ++verified;
        StructureFunction sf(p);
        for (int n = 1; n <= 200; ++n) CHECK(sf.recurrence(n) > 0.0);
    }
}

TEST_CASE("special case mappings") {
    auto ac = special_case_params(SpecialCase::arik_coon(0.5));
    CHECK(ac.q == 0.5);
    CHECK(ac.alpha == 0.0);
    CHECK(ac.beta == 0.0);
    CHECK(ac.gamma == 1.0);
    CHECK(ac.nu == 0.0);

    auto bm = special_case_params(SpecialCase::biedenharn_macfarlane(2.0));
    CHECK(bm.alpha == -1.0);
    CHECK(bm.gamma == 1.0);

    auto hf = special_case_params(SpecialCase::hermite_family(0.8, 0.5, -1.0, 2.0));
    CHECK(hf.alpha == doctest::Approx(1.0));
    CHECK(hf.gamma == doctest::Approx(2.0));
    CHECK(hf.beta == doctest::Approx(0.0));
    CHECK(hf.nu == 0.0);
}
