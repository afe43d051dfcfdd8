#include "g2char/hcmod.hpp"

#include <stdexcept>

namespace g2char {

namespace {

bool coroot_pairing_integral(const Weight& gamma, const Weight& lambda) {
    Rational p = Rational(2) * dot(gamma, lambda) / norm2(gamma);
    return p.is_integer();
}

// Recognize the reflection subgroup from its order and the number of short
// and long positive roots it contains. "~" marks the short-root factor.
std::string subgroup_label(std::size_t order, int n_short) {
    switch (order) {
    case 1:
        return "1";
    case 2:
        return n_short == 1 ? "~A1" : "A1";
    case 4:
        return "A1x~A1";
    case 6:
        return n_short == 3 ? "~A2" : "A2";
    case 12:
        return "G2";
    default:
        return "?";
    }
}

}  // namespace

InfinitesimalCharacter infinitesimal_character(const RootSystem& rs, const Weight& lambda) {
    bool regular = true;
    for (const Weight& g : rs.positive_roots())
        if (dot(g, lambda).is_zero())
            regular = false;
    return InfinitesimalCharacter{lambda, regular};
}

IntegralWeylGroup integral_weyl_group(const RootSystem& rs, const Weight& lambda) {
    IntegralWeylGroup out;
    std::vector<Weight> positive;
    int n_short = 0, n_long = 0;
    (void)n_long;
    for (const Weight& g : rs.positive_roots()) {
        if (!coroot_pairing_integral(g, lambda))
            continue;
        positive.push_back(g);
        out.integral_roots.push_back(g);
        out.integral_roots.push_back(-g);
        (norm2(g) == Rational(2) ? n_short : n_long) += 1;
    }
    out.elements = generate_reflection_subgroup(rs, positive);
    out.label = subgroup_label(out.elements.size(), n_short);
    return out;
}

VirtualCharacter hc_character(const RootSystem& rs, const Weight& lambda) {
    if (!infinitesimal_character(rs, lambda).regular)
        throw std::domain_error("hc_character: infinitesimal character " +
                                lambda.to_string() + " is not regular");
    IntegralWeylGroup wl = integral_weyl_group(rs, lambda);
    VirtualCharacter out(Basis::ind);
    for (const WeylElement& w : wl.elements) {
        Weight diff = lambda - w.apply(lambda);
        if (!diff.is_integral())
            throw std::logic_error("hc_character: non-integral K-type " + diff.to_string());
        out += VirtualCharacter::ind_term(rs, diff, w.det());
    }
    return out;
}

Weight lambda_orbit8(const RootSystem& rs) {
    return Rational(1, 2) * (rs.omega1() + rs.omega2());
}

Weight lambda_orbit8_closure(const RootSystem& rs) {
    return Rational(1, 2) * (Rational(5) * rs.omega1() - rs.omega2());
}

VirtualCharacter r_O8(const RootSystem& rs) {
    return hc_character(rs, lambda_orbit8(rs));
}

VirtualCharacter r_O8_closure(const RootSystem& rs) {
    return hc_character(rs, lambda_orbit8_closure(rs));
}

}  // namespace g2char
