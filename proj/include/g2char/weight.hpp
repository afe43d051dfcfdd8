#pragma once

#include <array>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include "g2char/rational.hpp"

namespace g2char {

// Integral weight in fundamental-weight coordinates: a*omega1 + b*omega2.
// Used as the key type of multiplicity tables and virtual characters.
struct FwWeight {
    long long a = 0;
    long long b = 0;

    friend auto operator<=>(const FwWeight&, const FwWeight&) = default;

    bool dominant() const { return a >= 0 && b >= 0; }

    // Coordinates in the simple-root basis: a*omega1 + b*omega2 = m*alpha + n*beta.
    // G2 has trivial fundamental group, so these are always integers.
    long long root_m() const { return checked_add(checked_mul(2, a), checked_mul(3, b)); }
    long long root_n() const { return checked_add(a, checked_mul(2, b)); }
    long long height() const { return checked_add(root_m(), root_n()); }

    std::string to_string() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const FwWeight& w) {
        return os << w.to_string();
    }
};

// Point of the weight space in the ambient coordinates (x,y,z) with
// x + y + z = 0. The coordinate dictionary is fixed once and for all:
//   a*omega1 + b*omega2 = (a+b, b, -a-2b),  inverse  a = x - y, b = y.
class Weight {
public:
    Weight() = default;  // zero weight

    Weight(Rational x, Rational y, Rational z) : c_{x, y, z} {
        if (!(x + y + z).is_zero())
            throw std::invalid_argument("Weight: ambient coordinates must sum to 0");
    }

    static Weight from_fw(const Rational& a, const Rational& b) {
        return Weight(a + b, b, -a - b - b);
    }
    static Weight from_fw(FwWeight w) { return from_fw(Rational(w.a), Rational(w.b)); }

    const Rational& x() const { return c_[0]; }
    const Rational& y() const { return c_[1]; }
    const Rational& z() const { return c_[2]; }
    const Rational& operator[](int i) const { return c_[i]; }

    Rational fw_a() const { return c_[0] - c_[1]; }
    Rational fw_b() const { return c_[1]; }

    bool is_integral() const { return fw_a().is_integer() && fw_b().is_integer(); }
    bool is_dominant() const { return fw_a() >= 0 && fw_b() >= 0; }
    bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }

    // Fundamental-weight integer coordinates; throws if not integral.
    FwWeight to_fw() const {
        if (!is_integral())
            throw std::invalid_argument("Weight: not integral: " + to_string());
        return FwWeight{fw_a().to_integer(), fw_b().to_integer()};
    }

    friend Weight operator+(const Weight& u, const Weight& v) {
        return Weight(u.c_[0] + v.c_[0], u.c_[1] + v.c_[1], u.c_[2] + v.c_[2]);
    }
    friend Weight operator-(const Weight& u, const Weight& v) {
        return Weight(u.c_[0] - v.c_[0], u.c_[1] - v.c_[1], u.c_[2] - v.c_[2]);
    }
    friend Weight operator-(const Weight& u) {
        return Weight(-u.c_[0], -u.c_[1], -u.c_[2]);
    }
    friend Weight operator*(const Rational& s, const Weight& u) {
        return Weight(s * u.c_[0], s * u.c_[1], s * u.c_[2]);
    }

    friend bool operator==(const Weight& u, const Weight& v) { return u.c_ == v.c_; }

    std::string to_string() const {
        return "(" + c_[0].to_string() + "," + c_[1].to_string() + "," +
               c_[2].to_string() + ")";
    }
    friend std::ostream& operator<<(std::ostream& os, const Weight& w) {
        return os << w.to_string();
    }

private:
    std::array<Rational, 3> c_{};
};

// Euclidean bilinear form on the ambient coordinates.
inline Rational dot(const Weight& u, const Weight& v) {
    return u.x() * v.x() + u.y() * v.y() + u.z() * v.z();
}

inline Rational norm2(const Weight& u) { return dot(u, u); }

}  // namespace g2char
