#include "g2char/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace g2char {

namespace {

WeylElement::Matrix identity_matrix() {
    WeylElement::Matrix m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m[i][j] = Rational(i == j ? 1 : 0);
    return m;
}

// Orthogonal reflection across the hyperplane perpendicular to gamma,
// as a matrix on the full ambient space. It fixes (1,1,1), so its
// determinant equals the determinant of the action on the plane.
WeylElement::Matrix reflection_matrix(const Weight& gamma) {
    Rational nn = norm2(gamma);
    WeylElement::Matrix m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational r = Rational(2) * gamma[i] * gamma[j] / nn;
            m[i][j] = Rational(i == j ? 1 : 0) - r;
        }
    return m;
}

Rational det3(const WeylElement::Matrix& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool contains(const std::vector<WeylElement>& v, const WeylElement& e) {
    return std::find(v.begin(), v.end(), e) != v.end();
}

// Closure of a generating set under composition. The ambient path is only
// ever used with subgroups of W(G2), so a small hard cap suffices.
std::vector<WeylElement> closure(std::vector<WeylElement> gens, std::size_t cap) {
    std::vector<WeylElement> elems;
    elems.emplace_back();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const WeylElement& g : gens) {
            WeylElement next = g * elems[i];
            if (!contains(elems, next)) {
                elems.push_back(next);
                if (elems.size() > cap)
                    throw std::runtime_error("Weyl closure exceeded element cap");
            }
        }
    }
    return elems;
}

}  // namespace

WeylElement::WeylElement() : m_(identity_matrix()) {
    fw_ = {{{1, 0}, {0, 1}}};
}

WeylElement::WeylElement(const Matrix& m) : m_(m) {
    // Images of omega1 = (1,0,-1) and omega2 = (1,1,-2) give the action on
    // fundamental-weight coordinates; Weyl elements preserve the weight
    // lattice so the entries are integers.
    Weight u1 = apply(Weight(1, 0, -1));
    Weight u2 = apply(Weight(1, 1, -2));
    fw_[0][0] = u1.fw_a().to_integer();
    fw_[1][0] = u1.fw_b().to_integer();
    fw_[0][1] = u2.fw_a().to_integer();
    fw_[1][1] = u2.fw_b().to_integer();
    det_ = det3(m_).to_integer() > 0 ? 1 : -1;
}

Weight WeylElement::apply(const Weight& w) const {
    std::array<Rational, 3> out;
    for (int i = 0; i < 3; ++i)
        out[i] = m_[i][0] * w.x() + m_[i][1] * w.y() + m_[i][2] * w.z();
    return Weight(out[0], out[1], out[2]);
}

WeylElement operator*(const WeylElement& lhs, const WeylElement& rhs) {
    WeylElement::Matrix m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational s = 0;
            for (int k = 0; k < 3; ++k)
                s += lhs.m_[i][k] * rhs.m_[k][j];
            m[i][j] = s;
        }
    return WeylElement(m);
}

bool RootSystem::is_root(const Weight& g) const {
    for (const Weight& r : positive_)
        if (g == r || g == -r)
            return true;
    return false;
}

bool RootSystem::is_positive_root(const Weight& g) const {
    for (const Weight& r : positive_)
        if (g == r)
            return true;
    return false;
}

RootSystem build_g2() {
    RootSystem rs;
    rs.simple_[0] = Weight(1, -1, 0);
    rs.simple_[1] = Weight(-1, 2, -1);
    rs.positive_ = {
        Weight(1, -1, 0),  // alpha, short
        Weight(0, 1, -1),  // alpha + beta, short
        Weight(1, 0, -1),  // 2 alpha + beta, short
        Weight(-1, 2, -1), // beta, long
        Weight(2, -1, -1), // 3 alpha + beta, long
        Weight(1, 1, -2),  // 3 alpha + 2 beta, long
    };
    rs.omega_[0] = Weight(1, 0, -1);
    rs.omega_[1] = Weight(1, 1, -2);
    rs.rho_ = Weight(2, 1, -3);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Rational c = Rational(2) * dot(rs.simple_[i], rs.simple_[j]) /
                         norm2(rs.simple_[j]);
            rs.cartan_[i][j] = c.to_integer();
        }
    rs.weyl_ = generate_reflection_subgroup(rs, {rs.simple_[0], rs.simple_[1]});
    if (rs.weyl_.size() != 12)
        throw std::logic_error("W(G2) closure did not produce 12 elements");
    return rs;
}

std::vector<WeylElement> generate_reflection_subgroup(const RootSystem& rs,
                                                      const std::vector<Weight>& roots) {
    std::vector<WeylElement> gens;
    for (const Weight& g : roots) {
        if (!rs.is_root(g))
            throw std::invalid_argument("generate_reflection_subgroup: not a root: " +
                                        g.to_string());
        gens.push_back(WeylElement(reflection_matrix(g)));
    }
    std::vector<WeylElement> elems = closure(std::move(gens), 24);
    for (WeylElement& w : elems) {
        int len = 0;
        for (const Weight& g : rs.positive_roots()) {
            Weight img = w.apply(g);
            if (!rs.is_root(img))
                throw std::logic_error("Weyl element does not permute the roots");
            if (!rs.is_positive_root(img))
                ++len;
        }
        w.length_ = len;
        if (w.det() != ((len % 2 == 0) ? 1 : -1))
            throw std::logic_error("Weyl element determinant/length parity mismatch");
    }
    std::sort(elems.begin(), elems.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.fw_matrix() < b.fw_matrix();
    });
    return elems;
}

std::vector<WeylElement> generate_weyl_group(const RootSystem& rs) {
    return generate_reflection_subgroup(rs, {rs.alpha(), rs.beta()});
}

Weight reflect(const RootSystem& rs, const Weight& gamma, const Weight& mu) {
    if (!rs.is_root(gamma))
        throw std::invalid_argument("reflect: not a root: " + gamma.to_string());
    Rational pairing = Rational(2) * dot(mu, gamma) / norm2(gamma);
    return mu - pairing * gamma;
}

Weight dominant_representative(const RootSystem& rs, const Weight& mu) {
    Rational a = mu.fw_a();
    Rational b = mu.fw_b();
    // Simple reflections in fundamental-weight coordinates:
    //   s_alpha (a,b) -> (-a, b + a * |c21|),  s_beta (a,b) -> (a + b * |c12|... )
    // spelled out below from the Cartan integers. Each step strictly
    // increases a+b, and the orbit is finite, so this terminates fast.
    long long c12 = rs.cartan(0, 1);  // -1 for G2
    long long c21 = rs.cartan(1, 0);  // -3 for G2
    for (int guard = 0; guard < 64; ++guard) {
        if (a >= 0 && b >= 0)
            return Weight::from_fw(a, b);
        if (a < 0) {
            Rational na = -a;
            Rational nb = b + Rational(-c12) * a;
            a = na;
            b = nb;
        } else {
            Rational na = a + Rational(-c21) * b;
            Rational nb = -b;
            a = na;
            b = nb;
        }
    }
    throw std::logic_error("dominant_representative did not terminate");
}

FwWeight dominant_representative(const RootSystem& rs, FwWeight mu) {
    long long c12 = rs.cartan(0, 1);
    long long c21 = rs.cartan(1, 0);
    for (int guard = 0; guard < 64; ++guard) {
        if (mu.dominant())
            return mu;
        if (mu.a < 0)
            mu = FwWeight{-mu.a, checked_sub(mu.b, checked_mul(c12, mu.a))};
        else
            mu = FwWeight{checked_sub(mu.a, checked_mul(c21, mu.b)), -mu.b};
    }
    throw std::logic_error("dominant_representative did not terminate");
}

std::vector<WeylElement::FwMatrix> generate_weyl_group(const CartanMatrix& cm,
                                                       std::size_t element_cap) {
    using M = WeylElement::FwMatrix;
    if (cm.c[0][0] != 2 || cm.c[1][1] != 2 || cm.c[0][1] > 0 || cm.c[1][0] > 0)
        throw std::invalid_argument("generate_weyl_group: not a Cartan matrix");
    // s_i acts on fundamental-weight coordinates as v -> v - v_i * (row i).
    M s1 = {{{-1, 0}, {-cm.c[0][1], 1}}};
    M s2 = {{{1, -cm.c[1][0]}, {0, -1}}};
    auto mul = [](const M& x, const M& y) {
        M r{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r[i][j] = checked_add(checked_mul(x[i][0], y[0][j]),
                                      checked_mul(x[i][1], y[1][j]));
        return r;
    };
    std::vector<M> elems{M{{{1, 0}, {0, 1}}}};
    std::set<M> seen(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const M& g : {s1, s2}) {
            M next = mul(g, elems[i]);
            if (seen.insert(next).second) {
                elems.push_back(next);
                if (elems.size() > element_cap)
                    throw std::runtime_error(
                        "Weyl closure exceeded element cap; Cartan matrix is not of finite type");
            }
        }
    }
    return elems;
}

}  // namespace g2char
