#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "g2char/weight.hpp"

namespace g2char {

class RootSystem;

// Orthogonal transformation of the ambient space that preserves the plane
// x+y+z = 0 and permutes the roots. Carries its length (number of positive
// roots sent to negative ones) and determinant; det == (-1)^length.
class WeylElement {
public:
    using Matrix = std::array<std::array<Rational, 3>, 3>;
    using FwMatrix = std::array<std::array<long long, 2>, 2>;

    WeylElement();  // identity
    explicit WeylElement(const Matrix& m);

    Weight apply(const Weight& w) const;
    // Fast integer action in fundamental-weight coordinates.
    FwWeight apply(FwWeight w) const {
        return FwWeight{checked_add(checked_mul(fw_[0][0], w.a), checked_mul(fw_[0][1], w.b)),
                        checked_add(checked_mul(fw_[1][0], w.a), checked_mul(fw_[1][1], w.b))};
    }

    friend WeylElement operator*(const WeylElement& lhs, const WeylElement& rhs);

    const Matrix& matrix() const { return m_; }
    const FwMatrix& fw_matrix() const { return fw_; }
    int length() const { return length_; }
    int det() const { return det_; }
    bool is_identity() const { return length_ == 0; }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.m_ == b.m_;
    }

private:
    friend class RootSystem;
    friend std::vector<WeylElement> generate_reflection_subgroup(
        const RootSystem& rs, const std::vector<Weight>& roots);

    Matrix m_;
    FwMatrix fw_;  // action on (a,b) fundamental-weight coordinates
    int length_ = 0;
    int det_ = 1;
};

// The fixed geometric stage: simple roots, positive roots, fundamental
// weights, rho, the bilinear form, and the full Weyl group. Immutable after
// construction and safe to share across threads.
class RootSystem {
public:
    const Weight& alpha() const { return simple_[0]; }  // short simple root
    const Weight& beta() const { return simple_[1]; }   // long simple root
    const Weight& simple_root(int i) const { return simple_[i]; }
    const std::vector<Weight>& positive_roots() const { return positive_; }
    const Weight& omega1() const { return omega_[0]; }
    const Weight& omega2() const { return omega_[1]; }
    const Weight& fundamental_weight(int i) const { return omega_[i]; }
    const Weight& rho() const { return rho_; }

    // Cartan integer 2<alpha_i, alpha_j> / <alpha_j, alpha_j>.
    long long cartan(int i, int j) const { return cartan_[i][j]; }

    // Complete Weyl group, identity first, then by increasing length.
    const std::vector<WeylElement>& weyl_group() const { return weyl_; }

    bool is_root(const Weight& g) const;
    bool is_positive_root(const Weight& g) const;

private:
    friend RootSystem build_g2();

    RootSystem() = default;

    std::array<Weight, 2> simple_;
    std::vector<Weight> positive_;
    std::array<Weight, 2> omega_;
    Weight rho_;
    std::array<std::array<long long, 2>, 2> cartan_{};
    std::vector<WeylElement> weyl_;
};

// The G2 root system in the coordinates used throughout this library:
// alpha = (1,-1,0), beta = (-1,2,-1), omega1 = (1,0,-1), omega2 = (1,1,-2).
RootSystem build_g2();

// Reflection subgroup closure. Deterministic order: identity first, then by
// (length, fundamental-weight matrix). The full group is the closure of the
// simple reflections.
std::vector<WeylElement> generate_weyl_group(const RootSystem& rs);
std::vector<WeylElement> generate_reflection_subgroup(const RootSystem& rs,
                                                      const std::vector<Weight>& roots);

// Reflection of mu in the hyperplane orthogonal to the root gamma:
// mu - <mu, gamma^vee> * gamma. Throws if gamma is not a root.
Weight reflect(const RootSystem& rs, const Weight& gamma, const Weight& mu);

// The unique dominant weight in the Weyl orbit of mu.
Weight dominant_representative(const RootSystem& rs, const Weight& mu);
FwWeight dominant_representative(const RootSystem& rs, FwWeight mu);

// Generic rank-2 path, used for sanity checks of the closure algorithm.
// Generates the group of the reflection representation on fundamental-weight
// coordinates and throws std::runtime_error once the closure exceeds
// element_cap (which signals a Cartan matrix of non-finite type).
struct CartanMatrix {
    std::array<std::array<long long, 2>, 2> c;
};

std::vector<WeylElement::FwMatrix> generate_weyl_group(
    const CartanMatrix& cm, std::size_t element_cap = 1'000'000);

}  // namespace g2char
