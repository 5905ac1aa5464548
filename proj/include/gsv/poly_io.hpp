#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "gsv/poly.hpp"

namespace gsv {

// Variable naming for a polynomial ring; the wire grammar is
//   terms joined by +/-, term = coeff * V0^a0 * ... (omitting ^1 and unit
//   coefficients), coefficients are base-field literals possibly times powers
//   of the extension generator x, multi-term coefficients parenthesized.
struct VarNames {
    std::vector<std::string> names;

    static VarNames prefixed(const std::string& prefix, int n) {
        VarNames v;
        v.names.reserve(n);
        for (int i = 0; i < n; ++i) v.names.push_back(prefix + std::to_string(i));
        return v;
    }
    static VarNames concat(const VarNames& a, const VarNames& b) {
        VarNames v = a;
        v.names.insert(v.names.end(), b.names.begin(), b.names.end());
        return v;
    }
    int size() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& s) const {
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == s) return static_cast<int>(i);
        return -1;
    }
};

template <class F>
std::string format_poly(const F& f, const Poly<F>& p, const VarNames& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& t : p.terms) {
        std::string mono;
        for (int i = 0; i < p.nvars; ++i) {
            if (t.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars.names[i];
            if (t.e[i] > 1) mono += "^" + std::to_string(t.e[i]);
        }
        bool neg = false;
        std::string coeff;
        if (f.term_count(t.c) > 1) {
            coeff = "(" + f.format(t.c) + ")";
        } else {
            neg = f.display_negative(t.c);
            auto mag = neg ? f.abs(t.c) : t.c;
            if (!(f.eq(mag, f.one()) && !mono.empty())) coeff = f.format(mag);
        }
        std::string body = coeff;
        if (!coeff.empty() && !mono.empty()) body += "*";
        body += mono;
        if (out.empty())
            out += (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

namespace polyio_detail {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            fail(ErrKind::Parse, "poly-syntax",
                 std::string("expected '") + c + "' at position " + std::to_string(pos) + " in: " + s);
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (start == pos)
            fail(ErrKind::Parse, "poly-syntax", "expected number at position " + std::to_string(pos) + " in: " + s);
        return s.substr(start, pos - start);
    }
    std::string name() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
            ++pos;
            while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
        }
        return s.substr(start, pos - start);
    }
    uint32_t exponent() {
        auto n = number();
        if (n.size() > 6) fail(ErrKind::Parse, "poly-syntax", "exponent too large: " + n);
        return static_cast<uint32_t>(std::stoul(n));
    }
};

template <class F>
Poly<F> parse_expr(const F& f, Lexer& lx, const VarNames& vars);

template <class F>
Poly<F> parse_factor(const F& f, Lexer& lx, const VarNames& vars) {
    int n = vars.size();
    Poly<F> base;
    if (lx.accept('(')) {
        base = parse_expr(f, lx, vars);
        lx.expect(')');
    } else if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
        auto num = lx.number();
        auto c = f.from_base(f.base().from_digits(num));
        if (lx.accept('/')) {
            auto den = f.from_base(f.base().from_digits(lx.number()));
            if (f.is_zero(den)) fail(ErrKind::Parse, "poly-syntax", "zero denominator");
            c = f.div(c, den);
        }
        base = p_const(f, n, c);
    } else {
        auto nm = lx.name();
        if (nm.empty())
            fail(ErrKind::Parse, "poly-syntax",
                 "unexpected character at position " + std::to_string(lx.pos) + " in: " + lx.s);
        if (nm == "x") {
            base = p_const(f, n, f.generator());
        } else {
            int idx = vars.index_of(nm);
            if (idx < 0) fail(ErrKind::Parse, "unknown-variable", "unknown variable: " + nm);
            base = p_var(f, n, idx);
        }
    }
    if (lx.accept('^')) base = p_pow(f, base, lx.exponent());
    return base;
}

template <class F>
Poly<F> parse_term(const F& f, Lexer& lx, const VarNames& vars) {
    Poly<F> r = parse_factor(f, lx, vars);
    while (lx.accept('*')) r = p_mul(f, r, parse_factor(f, lx, vars));
    return r;
}

template <class F>
Poly<F> parse_expr(const F& f, Lexer& lx, const VarNames& vars) {
    bool neg = false;
    if (lx.accept('-'))
        neg = true;
    else
        lx.accept('+');
    Poly<F> r = parse_term(f, lx, vars);
    if (neg) r = p_neg(f, r);
    for (;;) {
        if (lx.accept('+'))
            r = p_add(f, r, parse_term(f, lx, vars));
        else if (lx.accept('-'))
            r = p_sub(f, r, parse_term(f, lx, vars));
        else
            break;
    }
    return r;
}

} // namespace polyio_detail

template <class F>
Poly<F> parse_poly(const F& f, const std::string& text, const VarNames& vars) {
    polyio_detail::Lexer lx{text};
    Poly<F> r = polyio_detail::parse_expr(f, lx, vars);
    if (!lx.eof())
        fail(ErrKind::Parse, "poly-syntax",
             "trailing input at position " + std::to_string(lx.pos) + " in: " + text);
    return r;
}

// Extension element given as a polynomial in x alone.
template <class F>
typename F::Elem parse_ext_elem(const F& f, const std::string& text) {
    Poly<F> p = parse_poly(f, text, VarNames{});
    if (p.is_zero()) return f.zero();
    return p.terms.front().c;
}

} // namespace gsv
