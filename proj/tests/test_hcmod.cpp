#include "doctest.h"

#include "g2char/hcmod.hpp"

#include <algorithm>

using namespace g2char;

namespace {

const RootSystem& rs() {
    static const RootSystem r = build_g2();
    return r;
}

bool has_root(const IntegralWeylGroup& g, const Weight& w) {
    return std::find(g.integral_roots.begin(), g.integral_roots.end(), w) !=
           g.integral_roots.end();
}

}  // namespace

TEST_CASE("the two infinitesimal characters") {
    CHECK(lambda_orbit8(rs()) == Weight(1, Rational(1, 2), Rational(-3, 2)));
    CHECK(lambda_orbit8_closure(rs()) == Weight(2, Rational(-1, 2), Rational(-3, 2)));
    CHECK(infinitesimal_character(rs(), lambda_orbit8(rs())).regular);
    CHECK(infinitesimal_character(rs(), lambda_orbit8_closure(rs())).regular);
    CHECK(!infinitesimal_character(rs(), rs().omega1()).regular);
    CHECK(!infinitesimal_character(rs(), Weight()).regular);
}

TEST_CASE("integral Weyl groups") {
    IntegralWeylGroup w1 = integral_weyl_group(rs(), lambda_orbit8(rs()));
    CHECK(w1.order() == 4);
    CHECK(w1.label == "A1x~A1");
    CHECK(w1.integral_roots.size() == 4);
    CHECK(has_root(w1, Weight(0, 1, -1)));
    CHECK(has_root(w1, Weight(2, -1, -1)));
    CHECK(has_root(w1, Weight(0, -1, 1)));

    IntegralWeylGroup w2 = integral_weyl_group(rs(), lambda_orbit8_closure(rs()));
    CHECK(w2.order() == 4);
    CHECK(has_root(w2, Weight(0, 1, -1)));
    CHECK(has_root(w2, Weight(2, -1, -1)));

    // every element preserves the integral-root set
    for (const WeylElement& w : w1.elements)
        for (const Weight& g : w1.integral_roots)
            CHECK(has_root(w1, w.apply(g)));
    CHECK(12 % w1.order() == 0);

    // fully non-integral rational character: trivial group
    IntegralWeylGroup triv =
        integral_weyl_group(rs(), Weight(Rational(1, 5), Rational(1, 7), Rational(-12, 35)));
    CHECK(triv.order() == 1);
    CHECK(triv.label == "1");
    CHECK(triv.integral_roots.empty());

    // integral character: the full group
    IntegralWeylGroup full = integral_weyl_group(rs(), rs().rho());
    CHECK(full.order() == 12);
    CHECK(full.label == "G2");
}

TEST_CASE("hc_character matches the printed 4-term characters") {
    VirtualCharacter c1 = hc_character(rs(), lambda_orbit8(rs()));
    CHECK(c1.term_count() == 4);
    CHECK(c1.coeff({0, 0}) == 1);
    CHECK(c1.coeff({0, 1}) == -1);
    CHECK(c1.coeff({2, 0}) == -1);
    CHECK(c1.coeff({1, 1}) == 1);
    CHECK(c1 == r_O8(rs()));

    VirtualCharacter c2 = hc_character(rs(), lambda_orbit8_closure(rs()));
    CHECK(c2.term_count() == 4);
    CHECK(c2.coeff({0, 0}) == 1);
    CHECK(c2.coeff({1, 0}) == -1);
    CHECK(c2.coeff({0, 2}) == -1);
    CHECK(c2.coeff({2, 1}) == 1);
    CHECK(c2 == r_O8_closure(rs()));

    // identity term is always +Ind(0,0); signed coefficients cancel overall
    long long sum1 = 0;
    for (const auto& [k, c] : c1.terms())
        sum1 += c;
    CHECK(sum1 == 0);

    // trivial integral Weyl group: the bare identity term
    VirtualCharacter triv =
        hc_character(rs(), Weight(Rational(1, 5), Rational(1, 7), Rational(-12, 35)));
    CHECK(triv.term_count() == 1);
    CHECK(triv.coeff({0, 0}) == 1);
}

TEST_CASE("non-regular characters are rejected") {
    CHECK_THROWS_AS(hc_character(rs(), rs().omega1()), std::domain_error);
    CHECK_THROWS_AS(hc_character(rs(), Weight()), std::domain_error);
}

TEST_CASE("the exact discrepancy identity") {
    VirtualCharacter lhs = r_O8_closure(rs());
    VirtualCharacter rhs = r_O8(rs()) - discrepancy_series_finite(rs());
    CHECK(lhs == rhs);
    // equivalently: the subtraction example
    CHECK(to_string(rhs) == "Ind(0,0) - Ind(0,2) - Ind(1,0) + Ind(2,1)");
}

TEST_CASE("function-ring positivity at a small window") {
    MultiplicityEngine engine(rs());
    for (const VirtualCharacter& chi : {r_O8(rs()), r_O8_closure(rs())}) {
        VirtualCharacter dec = ind_decompose(rs(), engine, chi, TruncationWindow{6});
        CHECK(dec.coeff({0, 0}) == 1);
        for (const FwWeight& k : TruncationWindow{6}.keys())
            CHECK(dec.coeff(k) >= 0);
    }
}
