#include "g2char/dsl.hpp"

#include <cctype>
#include <utility>

namespace g2char {

CharExpr CharExpr::scale(long long factor, CharExpr operand) {
    return CharExpr(Scale{factor, std::make_shared<const CharExpr>(std::move(operand))});
}

CharExpr CharExpr::add(CharExpr lhs, CharExpr rhs) {
    return CharExpr(Add{std::make_shared<const CharExpr>(std::move(lhs)),
                        std::make_shared<const CharExpr>(std::move(rhs))});
}

CharExpr CharExpr::sub(CharExpr lhs, CharExpr rhs) {
    return CharExpr(Sub{std::make_shared<const CharExpr>(std::move(lhs)),
                        std::make_shared<const CharExpr>(std::move(rhs))});
}

bool operator==(const CharExpr& a, const CharExpr& b) {
    using C = CharExpr;
    if (a.node().index() != b.node().index())
        return false;
    if (const auto* x = std::get_if<C::IrrAtom>(&a.node()))
        return *x == std::get<C::IrrAtom>(b.node());
    if (const auto* x = std::get_if<C::IndAtom>(&a.node()))
        return *x == std::get<C::IndAtom>(b.node());
    if (const auto* x = std::get_if<C::Constant>(&a.node()))
        return *x == std::get<C::Constant>(b.node());
    if (const auto* x = std::get_if<C::UJAtom>(&a.node()))
        return *x == std::get<C::UJAtom>(b.node());
    if (const auto* x = std::get_if<C::Scale>(&a.node())) {
        const auto& y = std::get<C::Scale>(b.node());
        return x->factor == y.factor && *x->operand == *y.operand;
    }
    if (const auto* x = std::get_if<C::Add>(&a.node())) {
        const auto& y = std::get<C::Add>(b.node());
        return *x->lhs == *y.lhs && *x->rhs == *y.rhs;
    }
    const auto& x = std::get<C::Sub>(a.node());
    const auto& y = std::get<C::Sub>(b.node());
    return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    CharExpr parse() {
        CharExpr e = expression();
        skip_ws();
        if (pos_ != text_.size())
            fail("end of input or '+'/'-'");
        return e;
    }

private:
    [[noreturn]] void fail(std::string expected) {
        throw ParseError(pos_, expected,
                         "parse error at position " + std::to_string(pos_) +
                             ": expected " + expected);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    bool consume(char c) {
        if (!at(c))
            return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!consume(c))
            fail(std::string("'") + c + "'");
    }

    bool digit_ahead() const {
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    bool signed_digit_ahead() const {
        if (digit_ahead())
            return true;
        return at('-') && pos_ + 1 < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
    }

    long long digits(const char* what) {
        if (!digit_ahead())
            fail(what);
        long long v = 0;
        while (digit_ahead()) {
            v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    long long nat() {
        skip_ws();
        if (at('-'))
            fail("nonnegative integer");
        return digits("nonnegative integer");
    }

    long long integer() {
        skip_ws();
        bool neg = consume('-');
        long long v = digits("integer");
        return neg ? -v : v;
    }

    Rational rational() {
        long long num = integer();
        if (consume('/')) {
            std::size_t den_pos = pos_;
            long long den = digits("denominator digits");
            if (den == 0) {
                pos_ = den_pos;
                fail("nonzero denominator");
            }
            return Rational(num, den);
        }
        return Rational(num);
    }

    CharExpr expression() {
        CharExpr e = term();
        for (;;) {
            skip_ws();
            if (consume('+'))
                e = CharExpr::add(std::move(e), term());
            else if (consume('-'))
                e = CharExpr::sub(std::move(e), term());
            else
                return e;
        }
    }

    CharExpr term() {
        skip_ws();
        if (signed_digit_ahead()) {
            long long factor = integer();
            skip_ws();
            expect('*');
            return CharExpr::scale(factor, atom());
        }
        return atom();
    }

    FwWeight nat_pair() {
        skip_ws();
        expect('(');
        long long a = nat();
        skip_ws();
        expect(',');
        long long b = nat();
        skip_ws();
        expect(')');
        return FwWeight{a, b};
    }

    CharExpr atom() {
        skip_ws();
        if (consume('(')) {
            CharExpr e = expression();
            skip_ws();
            expect(')');
            return e;
        }
        std::size_t start = pos_;
        std::string word;
        while (pos_ < text_.size() &&
               std::isalnum(static_cast<unsigned char>(text_[pos_])))
            word += text_[pos_++];
        if (word == "V")
            return CharExpr::irr(nat_pair());
        if (word == "Ind")
            return CharExpr::ind(nat_pair());
        if (word == "RO8")
            return CharExpr::constant(CharExpr::Constant::ro8);
        if (word == "RO8CL")
            return CharExpr::constant(CharExpr::Constant::ro8cl);
        if (word == "DISC")
            return CharExpr::constant(CharExpr::Constant::disc);
        if (word == "UJ")
            return uj_atom(start);
        pos_ = start;
        fail("'V', 'Ind', 'RO8', 'RO8CL', 'DISC', 'UJ', or '('");
    }

    CharExpr uj_atom(std::size_t token_start) {
        skip_ws();
        expect('(');
        skip_ws();
        if (consume('w')) {
            skip_ws();
            expect(':');
            Rational a = rational();
            skip_ws();
            expect(',');
            Rational b = rational();
            skip_ws();
            expect(')');
            return CharExpr(CharExpr::UJAtom{true, a, b, Rational(0)});
        }
        Rational x = rational();
        skip_ws();
        expect(',');
        Rational y = rational();
        skip_ws();
        expect(',');
        Rational z = rational();
        skip_ws();
        expect(')');
        if (!(x + y + z).is_zero())
            throw ParseError(token_start, "ambient coordinates summing to 0",
                             "parse error at position " + std::to_string(token_start) +
                                 ": UJ coordinates must sum to 0, got " + x.to_string() +
                                 "+" + y.to_string() + "+" + z.to_string());
        return CharExpr(CharExpr::UJAtom{false, x, y, z});
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool is_atom_node(const CharExpr& e) {
    return !std::holds_alternative<CharExpr::Scale>(e.node()) &&
           !std::holds_alternative<CharExpr::Add>(e.node()) &&
           !std::holds_alternative<CharExpr::Sub>(e.node());
}

bool is_sum_node(const CharExpr& e) {
    return std::holds_alternative<CharExpr::Add>(e.node()) ||
           std::holds_alternative<CharExpr::Sub>(e.node());
}

// Wrap in parentheses whenever the grammar wants an atom there.
std::string print_atom_position(const CharExpr& e) {
    if (is_atom_node(e))
        return print_expr(e);
    return "(" + print_expr(e) + ")";
}

// The right operand of +/- sits at term level: sums need parentheses.
std::string print_term_position(const CharExpr& e) {
    if (is_sum_node(e))
        return "(" + print_expr(e) + ")";
    return print_expr(e);
}

}  // namespace

CharExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const CharExpr& e) {
    using C = CharExpr;
    if (const auto* x = std::get_if<C::IrrAtom>(&e.node()))
        return "V(" + std::to_string(x->key.a) + "," + std::to_string(x->key.b) + ")";
    if (const auto* x = std::get_if<C::IndAtom>(&e.node()))
        return "Ind(" + std::to_string(x->key.a) + "," + std::to_string(x->key.b) + ")";
    if (const auto* x = std::get_if<C::Constant>(&e.node())) {
        switch (*x) {
        case C::Constant::ro8:
            return "RO8";
        case C::Constant::ro8cl:
            return "RO8CL";
        case C::Constant::disc:
            return "DISC";
        }
    }
    if (const auto* x = std::get_if<C::UJAtom>(&e.node())) {
        if (x->fw_form)
            return "UJ(w:" + x->r1.to_string() + "," + x->r2.to_string() + ")";
        return "UJ(" + x->r1.to_string() + "," + x->r2.to_string() + "," +
               x->r3.to_string() + ")";
    }
    if (const auto* x = std::get_if<C::Scale>(&e.node()))
        return std::to_string(x->factor) + "*" + print_atom_position(*x->operand);
    if (const auto* x = std::get_if<C::Add>(&e.node()))
        return print_expr(*x->lhs) + " + " + print_term_position(*x->rhs);
    const auto& x = std::get<C::Sub>(e.node());
    return print_expr(*x.lhs) + " - " + print_term_position(*x.rhs);
}

namespace {

VirtualCharacter eval_ind_material(const VirtualCharacter& chi, Basis basis,
                                   const std::optional<TruncationWindow>& window,
                                   EvalContext ctx, const char* what) {
    if (basis == Basis::ind)
        return chi;
    if (!window)
        throw std::invalid_argument(std::string("evaluating ") + what +
                                    " in the irr basis requires a truncation window");
    return ind_decompose(ctx.rs, ctx.engine, chi, *window);
}

}  // namespace

VirtualCharacter eval_expr(const CharExpr& e, Basis basis,
                           std::optional<TruncationWindow> window, EvalContext ctx) {
    using C = CharExpr;
    if (const auto* x = std::get_if<C::IrrAtom>(&e.node())) {
        if (basis == Basis::irr)
            return VirtualCharacter::irr_term(x->key);
        return wcf_expand(ctx.rs, x->key);
    }
    if (const auto* x = std::get_if<C::IndAtom>(&e.node()))
        return eval_ind_material(VirtualCharacter::ind_term(ctx.rs, x->key), basis,
                                 window, ctx, "an Ind atom");
    if (const auto* x = std::get_if<C::Constant>(&e.node())) {
        VirtualCharacter chi(Basis::ind);
        const char* what = "";
        switch (*x) {
        case C::Constant::ro8:
            chi = r_O8(ctx.rs);
            what = "RO8";
            break;
        case C::Constant::ro8cl:
            chi = r_O8_closure(ctx.rs);
            what = "RO8CL";
            break;
        case C::Constant::disc:
            chi = discrepancy_series_finite(ctx.rs);
            what = "DISC";
            break;
        }
        return eval_ind_material(chi, basis, window, ctx, what);
    }
    if (const auto* x = std::get_if<C::UJAtom>(&e.node())) {
        Weight lambda = x->fw_form ? Weight::from_fw(x->r1, x->r2)
                                   : Weight(x->r1, x->r2, x->r3);
        return eval_ind_material(hc_character(ctx.rs, lambda), basis, window, ctx, "UJ");
    }
    if (const auto* x = std::get_if<C::Scale>(&e.node()))
        return x->factor * eval_expr(*x->operand, basis, window, ctx);
    if (const auto* x = std::get_if<C::Add>(&e.node()))
        return eval_expr(*x->lhs, basis, window, ctx) +
               eval_expr(*x->rhs, basis, window, ctx);
    const auto& x = std::get<C::Sub>(e.node());
    return eval_expr(*x.lhs, basis, window, ctx) - eval_expr(*x.rhs, basis, window, ctx);
}

}  // namespace g2char
