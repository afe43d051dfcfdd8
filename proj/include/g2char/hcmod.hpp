#pragma once

#include <string>
#include <vector>

#include "g2char/charring.hpp"
#include "g2char/rootsys.hpp"

namespace g2char {

// Infinitesimal character with its regularity flag:
// regular iff <lambda, gamma> != 0 for every root gamma.
struct InfinitesimalCharacter {
    Weight lambda;
    bool regular = false;
};

InfinitesimalCharacter infinitesimal_character(const RootSystem& rs, const Weight& lambda);

// Subgroup of W generated by reflections in the roots gamma with
// 2<gamma,lambda>/<gamma,gamma> integral.
struct IntegralWeylGroup {
    std::vector<Weight> integral_roots;   // both signs
    std::vector<WeylElement> elements;    // identity first
    std::string label;                    // best-effort type, e.g. "A1x~A1"; metadata only

    std::size_t order() const { return elements.size(); }
};

IntegralWeylGroup integral_weyl_group(const RootSystem& rs, const Weight& lambda);

// K-type character of U(g)/J(lambda) for regular lambda:
//   sum over the integral Weyl group of det(w) * Ind(lambda - w lambda).
// Throws std::domain_error when lambda is not regular.
VirtualCharacter hc_character(const RootSystem& rs, const Weight& lambda);

// The two infinitesimal characters attached to the 8-dimensional nilpotent
// orbit of G2 and its closure.
Weight lambda_orbit8(const RootSystem& rs);          // (omega1 + omega2)/2   = (1, 1/2, -3/2)
Weight lambda_orbit8_closure(const RootSystem& rs);  // (5 omega1 - omega2)/2 = (2, -1/2, -3/2)

// Characters of the rings of regular functions on the orbit and its closure,
// realized as the corresponding primitive-ideal quotients.
VirtualCharacter r_O8(const RootSystem& rs);
VirtualCharacter r_O8_closure(const RootSystem& rs);

}  // namespace g2char
