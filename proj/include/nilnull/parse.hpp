#pragma once

// Expression grammar shared by every element type:
//
//   expr    := ['+' | '-'] term (('+' | '-') term)*
//   term    := power ('*' power)*
//   power   := primary ['^' integer]
//   primary := rational | identifier | '(' expr ')'
//
// rational is digits with an optional "/digits"; identifier is letters
// followed by digits. "i" is the imaginary unit; the remaining identifiers
// are resolved by a context (B<n>/C<n>, P<n>/Q<n>, x/y, E<m>/C<j>).
// Printers emit text this grammar reads back to the same value.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nilnull/invariant.hpp"
#include "nilnull/weyl.hpp"

namespace nilnull {

namespace detail {

struct Token {
    enum class Kind { Number, Ident, Op, End } kind = Kind::End;
    std::string text;
    std::size_t pos = 0;
};

inline std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t p = 0;
    auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    auto is_alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; };
    while (p < s.size()) {
        const char c = s[p];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++p;
            continue;
        }
        const std::size_t start = p;
        if (is_digit(c)) {
            while (p < s.size() && is_digit(s[p])) ++p;
            if (p < s.size() && s[p] == '/' && p + 1 < s.size() && is_digit(s[p + 1])) {
                ++p;
                while (p < s.size() && is_digit(s[p])) ++p;
            }
            out.push_back({Token::Kind::Number, std::string(s.substr(start, p - start)), start});
        } else if (is_alpha(c)) {
            while (p < s.size() && is_alpha(s[p])) ++p;
            while (p < s.size() && is_digit(s[p])) ++p;
            out.push_back({Token::Kind::Ident, std::string(s.substr(start, p - start)), start});
        } else if (c == '+' || c == '-' || c == '*' || c == '^' || c == '(' || c == ')') {
            out.push_back({Token::Kind::Op, std::string(1, c), start});
            ++p;
        } else {
            throw SyntaxError(start, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Token::Kind::End, "", s.size()});
    return out;
}

/// Splits "B12" into ("B", 12); index 0 when there are no digits.
inline std::pair<std::string, std::size_t> split_ident(const std::string& id) {
    std::size_t p = 0;
    while (p < id.size() && std::isalpha(static_cast<unsigned char>(id[p]))) ++p;
    std::size_t n = 0;
    for (std::size_t q = p; q < id.size(); ++q) n = n * 10 + static_cast<std::size_t>(id[q] - '0');
    return {id.substr(0, p), p < id.size() ? n : 0};
}

template <class Ctx>
class Parser {
public:
    using Value = typename Ctx::Value;

    Parser(const Ctx& ctx, std::string_view text) : ctx_(ctx), toks_(tokenize(text)) {}

    Value parse() {
        Value v = expr();
        if (peek().kind != Token::Kind::End) throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool accept_op(char c) {
        if (peek().kind == Token::Kind::Op && peek().text[0] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        bool neg = false;
        if (accept_op('-'))
            neg = true;
        else
            accept_op('+');
        Value v = term();
        if (neg) v = -v;
        while (true) {
            if (accept_op('+'))
                v += term();
            else if (accept_op('-'))
                v -= term();
            else
                return v;
        }
    }

    Value term() {
        Value v = power();
        while (accept_op('*')) v = v * power();
        return v;
    }

    Value power() {
        Value base = primary();
        if (!accept_op('^')) return base;
        const Token& t = peek();
        if (t.kind != Token::Kind::Number || t.text.find('/') != std::string::npos)
            throw SyntaxError(t.pos, "exponent must be a nonnegative integer");
        if (t.text.size() > 6) throw SyntaxError(t.pos, "exponent too large");
        const unsigned e = static_cast<unsigned>(std::stoul(t.text));
        ++pos_;
        Value r = ctx_.scalar(1);
        for (unsigned k = 0; k < e; ++k) r = r * base;
        return r;
    }

    Value primary() {
        const Token t = peek();
        switch (t.kind) {
            case Token::Kind::Number:
                ++pos_;
                return ctx_.scalar(GaussRational(parse_rational(t.text)));
            case Token::Kind::Ident:
                ++pos_;
                if (t.text == "i") return ctx_.scalar(GaussRational::i());
                return ctx_.generator(t.text, t.pos);
            case Token::Kind::Op:
                if (t.text == "(") {
                    ++pos_;
                    Value v = expr();
                    if (!accept_op(')')) throw SyntaxError(peek().pos, "expected ')'");
                    return v;
                }
                throw SyntaxError(t.pos, "unexpected '" + t.text + "'");
            case Token::Kind::End: break;
        }
        throw SyntaxError(t.pos, "unexpected end of input");
    }

    const Ctx& ctx_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

[[noreturn]] inline void unknown_generator(const std::string& name, std::size_t pos, const std::string& where) {
    throw Error(ErrorKind::UnknownGenerator, "'" + name + "' at position " + std::to_string(pos) + " is not a generator of " + where);
}

}  // namespace detail

struct UContext {
    using Value = UElem;
    AlgebraPtr alg;

    UElem scalar(const GaussRational& c) const { return UElem(alg, c); }
    UElem generator(const std::string& id, std::size_t pos) const {
        auto [name, n] = detail::split_ident(id);
        if (name == "B" && n >= 1 && n <= alg->beta()) return UElem::B(alg, n);
        if (name == "C" && n >= 1 && n <= alg->gamma()) return UElem::C(alg, n);
        detail::unknown_generator(id, pos, "the enveloping algebra");
    }
};

struct WContext {
    using Value = WElem;
    std::size_t d = 0;

    WElem scalar(const GaussRational& c) const { return WElem(d, c); }
    WElem generator(const std::string& id, std::size_t pos) const {
        auto [name, n] = detail::split_ident(id);
        if (name == "P" && n >= 1 && n <= d) return WElem::P(d, n);
        if (name == "Q" && n >= 1 && n <= d) return WElem::Q(d, n);
        detail::unknown_generator(id, pos, "W_" + std::to_string(d));
    }
};

/// Commutative polynomials in x (variable 0) and y (variable 1).
struct PolyContext {
    using Value = Poly;

    Poly scalar(const GaussRational& c) const { return Poly(c); }
    Poly generator(const std::string& id, std::size_t pos) const {
        if (id == "x") return Poly::variable(0);
        if (id == "y") return Poly::variable(1);
        detail::unknown_generator(id, pos, "Q(i)[x, y]");
    }
};

/// Abstract invariant polynomials in E<m> (m outside K) and C<j>.
struct InvContext {
    using Value = InvariantPoly;
    AlgebraPtr alg;
    SubsetK K;

    InvariantPoly scalar(const GaussRational& c) const { return InvariantPoly(c); }
    InvariantPoly generator(const std::string& id, std::size_t pos) const {
        auto [name, n] = detail::split_ident(id);
        if (name == "E" && n >= 1 && n <= alg->beta() && !K.contains(n)) return InvariantPoly::E(n);
        if (name == "C" && n >= 1 && n <= alg->gamma()) return InvariantPoly::C(n);
        detail::unknown_generator(id, pos, "the invariant subalgebra for K = " + to_string(K));
    }
};

template <class Ctx>
typename Ctx::Value parse_with(const Ctx& ctx, std::string_view text) {
    return detail::Parser<Ctx>(ctx, text).parse();
}

inline UElem parse_u(const AlgebraPtr& alg, std::string_view text) { return parse_with(UContext{alg}, text); }
inline WElem parse_w(std::size_t d, std::string_view text) { return parse_with(WContext{d}, text); }
inline Poly parse_poly(std::string_view text) { return parse_with(PolyContext{}, text); }
inline InvariantPoly parse_inv(const AlgebraPtr& alg, const SubsetK& k, std::string_view text) {
    return parse_with(InvContext{alg, k}, text);
}

// ---------------------------------------------------------------------------
// Printing.

namespace detail {

inline std::string power_text(const std::string& sym, std::uint32_t e) {
    return e == 1 ? sym : sym + "^" + std::to_string(e);
}

/// Appends one signed term to out; monomial may be empty (the unit).
inline void append_term(std::string& out, const GaussRational& c, const std::string& monomial) {
    const bool first = out.empty();
    bool negative = false;
    std::string mag;
    if (c.is_real()) {
        negative = sgn(c.re()) < 0;
        mpq_class a = abs(c.re());
        mag = a == 1 && !monomial.empty() ? "" : a.get_str();
    } else if (sgn(c.re()) == 0) {
        negative = sgn(c.im()) < 0;
        mpq_class a = abs(c.im());
        mag = a == 1 ? "i" : a.get_str() + "*i";
    } else {
        mag = "(" + to_string(c) + ")";
    }
    if (first)
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    out += mag;
    if (!monomial.empty()) out += (mag.empty() ? "" : "*") + monomial;
}

}  // namespace detail

inline std::string to_string(const UElem& u) {
    if (u.is_zero()) return "0";
    const auto& alg = *u.algebra();
    std::string out;
    for (auto it = u.terms().terms().rbegin(); it != u.terms().terms().rend(); ++it) {
        std::string mono;
        for (std::size_t p = 0; p < it->first.size(); ++p) {
            if (!it->first[p]) continue;
            if (!mono.empty()) mono += "*";
            mono += detail::power_text(p < alg.beta() ? "B" + std::to_string(p + 1) : "C" + std::to_string(p - alg.beta() + 1),
                                       it->first[p]);
        }
        detail::append_term(out, it->second, mono);
    }
    return out;
}

inline std::string to_string(const WElem& w) {
    if (w.is_zero()) return "0";
    const std::size_t d = w.d();
    std::string out;
    for (auto it = w.terms().terms().rbegin(); it != w.terms().terms().rend(); ++it) {
        std::string mono;
        for (std::size_t p = 0; p < 2 * d; ++p) {
            if (!it->first[p]) continue;
            if (!mono.empty()) mono += "*";
            mono += detail::power_text(p < d ? "Q" + std::to_string(p + 1) : "P" + std::to_string(p - d + 1), it->first[p]);
        }
        detail::append_term(out, it->second, mono);
    }
    return out;
}

/// Prints with the given variable names (default x, y, then x3, x4, ...).
inline std::string to_string(const Poly& q, const std::vector<std::string>& names = {"x", "y"}) {
    if (q.is_zero()) return "0";
    std::string out;
    for (auto it = q.terms().terms().rbegin(); it != q.terms().terms().rend(); ++it) {
        std::string mono;
        for (std::size_t v = 0; v < it->first.size(); ++v) {
            if (!it->first[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += detail::power_text(v < names.size() ? names[v] : "x" + std::to_string(v + 1), it->first[v]);
        }
        detail::append_term(out, it->second, mono);
    }
    return out;
}

/// Center polynomial printed in C1, C2, ...
inline std::string center_to_string(const CenterPoly& q) {
    std::vector<std::string> names;
    for (std::size_t v = 0; v < q.arity(); ++v) names.push_back("C" + std::to_string(v + 1));
    return to_string(q, names);
}

inline std::string to_string(const InvariantPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().terms().rbegin(); it != p.terms().terms().rend(); ++it) {
        std::string mono;
        for (auto m : it->first.word) mono += (mono.empty() ? "" : "*") + ("E" + std::to_string(m));
        for (std::size_t j = 0; j < it->first.center.size(); ++j) {
            if (!it->first.center[j]) continue;
            mono += (mono.empty() ? "" : "*") + detail::power_text("C" + std::to_string(j + 1), it->first.center[j]);
        }
        detail::append_term(out, it->second, mono);
    }
    return out;
}

}  // namespace nilnull
