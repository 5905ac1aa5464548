#pragma once

#include <cstdint>
#include <string>

#include "gsv/util.hpp"

namespace gsv {

// F_p for prime p < 2^31; elements are canonical residues in [0, p).
class PrimeField {
public:
    using Elem = uint64_t;

    explicit PrimeField(uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ull << 31))
            fail(ErrKind::Validation, "bad-prime", "p must satisfy 2 <= p < 2^31");
        if (!is_prime(p)) fail(ErrKind::Validation, "not-prime", std::to_string(p) + " is not prime");
    }

    uint64_t p() const { return p_; }
    uint64_t characteristic() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    // decimal digit string of arbitrary length, reduced mod p
    Elem from_digits(const std::string& s) const {
        Elem r = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '9') fail(ErrKind::Parse, "bad-integer", "bad digit in integer literal");
            r = (r * 10 + static_cast<Elem>(ch - '0')) % p_;
        }
        return r;
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) fail(ErrKind::Internal, "division-by-zero", "inverse of 0 in F_p");
        // extended Euclid on (a, p)
        int64_t t = 0, newt = 1;
        int64_t r = static_cast<int64_t>(p_), newr = static_cast<int64_t>(a);
        while (newr != 0) {
            int64_t q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        if (t < 0) t += static_cast<int64_t>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, uint64_t e) const {
        Elem r = one(), base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool display_negative(Elem) const { return false; }
    Elem abs(Elem a) const { return a; }

    std::string format(Elem a) const { return std::to_string(a); }

    static bool is_prime(uint64_t n) {
        if (n < 2) return false;
        for (uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
            if (n == d) return true;
            if (n % d == 0) return false;
        }
        for (uint64_t d = 29; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

private:
    uint64_t p_;
};

} // namespace gsv
