#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "g2char/charring.hpp"
#include "g2char/hcmod.hpp"

namespace g2char {

// Expression language for virtual-character arithmetic:
//
//   expr := term { ("+"|"-") term }
//   term := [ integer "*" ] atom
//   atom := "V(" nat "," nat ")" | "Ind(" nat "," nat ")"
//         | "RO8" | "RO8CL" | "DISC"
//         | "UJ(" rat "," rat "," rat ")" | "UJ(w:" rat "," rat ")"
//         | "(" expr ")"
//
// Whitespace insensitive; rationals are "p/q" or integers. The three UJ
// ambient coordinates must sum to zero; the "w:" form gives the two
// fundamental-weight coefficients instead.

struct ParseError : std::runtime_error {
    std::size_t position;  // byte offset into the input
    std::string expected;  // description of the acceptable tokens

    ParseError(std::size_t pos, std::string exp, const std::string& msg)
        : std::runtime_error(msg), position(pos), expected(std::move(exp)) {}
};

class CharExpr {
public:
    struct IrrAtom {
        FwWeight key;
        friend bool operator==(const IrrAtom&, const IrrAtom&) = default;
    };
    struct IndAtom {
        FwWeight key;
        friend bool operator==(const IndAtom&, const IndAtom&) = default;
    };
    enum class Constant { ro8, ro8cl, disc };
    struct UJAtom {
        bool fw_form = false;  // true for "UJ(w:a,b)"
        Rational r1, r2, r3;   // ambient (x,y,z); r3 unused in the fw form
        friend bool operator==(const UJAtom&, const UJAtom&) = default;
    };
    struct Scale {
        long long factor = 1;
        std::shared_ptr<const CharExpr> operand;
    };
    struct Add {
        std::shared_ptr<const CharExpr> lhs, rhs;
    };
    struct Sub {
        std::shared_ptr<const CharExpr> lhs, rhs;
    };
    using Node = std::variant<IrrAtom, IndAtom, Constant, UJAtom, Scale, Add, Sub>;

    explicit CharExpr(Node node) : node_(std::move(node)) {}

    const Node& node() const { return node_; }

    static CharExpr irr(FwWeight key) { return CharExpr(IrrAtom{key}); }
    static CharExpr ind(FwWeight key) { return CharExpr(IndAtom{key}); }
    static CharExpr constant(Constant c) { return CharExpr(c); }
    static CharExpr scale(long long factor, CharExpr operand);
    static CharExpr add(CharExpr lhs, CharExpr rhs);
    static CharExpr sub(CharExpr lhs, CharExpr rhs);

private:
    Node node_;
};

bool operator==(const CharExpr& a, const CharExpr& b);
inline bool operator!=(const CharExpr& a, const CharExpr& b) { return !(a == b); }

// Throws ParseError with the failure position and expected-token set.
CharExpr parse_expr(std::string_view text);

// Canonical rendering; parse_expr(print_expr(e)) == e for every AST.
std::string print_expr(const CharExpr& e);

struct EvalContext {
    const RootSystem& rs;
    MultiplicityEngine& engine;
};

// Evaluate in the requested basis. A window is required whenever the irr
// basis is requested and the expression contains induced-basis material
// (Ind atoms, named constants, or UJ); std::invalid_argument otherwise.
VirtualCharacter eval_expr(const CharExpr& e, Basis basis,
                           std::optional<TruncationWindow> window, EvalContext ctx);

}  // namespace g2char
