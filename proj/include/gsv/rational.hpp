#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gsv/util.hpp"

namespace gsv {

// Exact rationals on GMP; mpq arithmetic keeps fractions reduced.
class RationalField {
public:
    using Elem = mpq_class;

    static constexpr uint64_t characteristic() { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) fail(ErrKind::Internal, "division-by-zero", "inverse of 0 in Q");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    // True when the element prints with a leading minus.
    bool display_negative(const Elem& a) const { return a < 0; }
    Elem abs(const Elem& a) const { return a < 0 ? Elem(-a) : a; }

    std::string format(const Elem& a) const { return a.get_str(); }

    Elem parse(const std::string& s) const {
        Elem r;
        if (r.set_str(s, 10) != 0) fail(ErrKind::Parse, "bad-rational", "cannot parse rational: " + s);
        r.canonicalize();
        return r;
    }
    Elem from_digits(const std::string& s) const { return parse(s); }
};

// Integer helpers used by the irreducibility tests over Q.

// Complete factorization of |n| (n != 0): trial division + Pollard rho with
// Miller-Rabin. Returns prime -> exponent pairs.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

// All positive divisors of |n|; fails with a budget error if there are more
// than `cap`.
std::vector<mpz_class> positive_divisors(const mpz_class& n, std::size_t cap = 1u << 20);

bool is_perfect_square(const mpz_class& n, mpz_class* root = nullptr);

// Rational square test: a = (p/q)^2 with both parts perfect squares.
bool is_rational_square(const mpq_class& a, mpq_class* root = nullptr);

} // namespace gsv
