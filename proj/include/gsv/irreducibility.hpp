#pragma once

#include "gsv/prime_field.hpp"
#include "gsv/rational.hpp"
#include "gsv/upoly.hpp"

namespace gsv {

enum class IrredVerdict { Irreducible, Reducible, Inconclusive };

// Rabin's test: monic m of degree d is irreducible over F_p iff
// x^(p^d) = x mod m and gcd(x^(p^(d/l)) - x, m) = 1 for every prime l | d.
inline IrredVerdict irreducible_mod_p(const PrimeField& k, const UPoly<PrimeField>& m) {
    int d = up_deg<PrimeField>(m);
    if (d <= 0) return IrredVerdict::Reducible;
    if (d == 1) return IrredVerdict::Irreducible;
    const UPoly<PrimeField> x = up_from_ints(k, {0, 1});

    auto frob_iter = [&](int times) {
        // x^(p^times) mod m
        UPoly<PrimeField> r = x;
        for (int i = 0; i < times; ++i) r = up_powmod(k, r, k.p(), m);
        return r;
    };

    if (frob_iter(d) != x) return IrredVerdict::Reducible;
    int rem = d;
    for (int l = 2; l * l <= rem; ++l) {
        if (rem % l) continue;
        while (rem % l == 0) rem /= l;
        auto g = up_gcd(k, up_sub(k, frob_iter(d / l), x), m);
        if (up_deg<PrimeField>(g) != 0) return IrredVerdict::Reducible;
    }
    if (rem > 1) {
        auto g = up_gcd(k, up_sub(k, frob_iter(d / rem), x), m);
        if (up_deg<PrimeField>(g) != 0) return IrredVerdict::Reducible;
    }
    return IrredVerdict::Irreducible;
}

namespace detail {

// Monic integer model of a monic rational polynomial: substituting x = y/D
// (D = lcm of denominators) and scaling by D^deg gives a monic P in Z[y];
// m is irreducible over Q iff P is.
inline std::vector<mpz_class> integer_model(const UPoly<RationalField>& m) {
    mpz_class den = 1;
    for (const auto& c : m) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    int d = static_cast<int>(m.size()) - 1;
    std::vector<mpz_class> P(m.size());
    mpz_class scale = 1;
    for (int i = d; i >= 0; --i) {
        mpq_class v = m[i] * scale; // m[i] * D^(d-i)
        P[i] = v.get_num();         // exact by construction
        scale *= den;
    }
    return P;
}

inline mpz_class eval_int(const std::vector<mpz_class>& P, const mpz_class& y) {
    mpz_class r = 0;
    for (std::size_t i = P.size(); i-- > 0;) r = r * y + P[i];
    return r;
}

// Rational (equivalently, integer) roots of the monic integer model.
inline bool has_integer_root(const std::vector<mpz_class>& P) {
    if (P[0] == 0) return true;
    for (const auto& dvs : positive_divisors(P[0]))
        for (int sgn : {1, -1}) {
            mpz_class y = sgn * dvs;
            if (eval_int(P, y) == 0) return true;
        }
    return false;
}

// Monic integer quartic: split into two monic quadratics over Z?
// (y^2+ay+b)(y^2+cy+d) with a+c=A3, b+d+ac=A2, ad+bc=A1, bd=A0.
inline bool quartic_splits_quadratic(const std::vector<mpz_class>& P) {
    const mpz_class &A0 = P[0], &A1 = P[1], &A2 = P[2], &A3 = P[3];
    std::vector<mpz_class> cands;
    if (A0 == 0) return true; // handled by root test anyway
    for (const auto& dv : positive_divisors(A0)) {
        cands.push_back(dv);
        cands.push_back(-dv);
    }
    for (const auto& b : cands) {
        if (b == 0) continue;
        if (A0 % b != 0) continue;
        mpz_class d = A0 / b;
        // a(d - b) = A1 - A3*b ; then c = A3 - a and check middle coefficient.
        mpz_class rhs = A1 - A3 * b;
        if (d != b) {
            if (rhs % (d - b) != 0) continue;
            mpz_class a = rhs / (d - b);
            mpz_class c = A3 - a;
            if (b + d + a * c == A2) return true;
        } else {
            if (rhs != 0) continue;
            // a + c = A3, a*c = A2 - 2b: need the discriminant to be a square.
            mpz_class disc = A3 * A3 - 4 * (A2 - 2 * b);
            mpz_class root;
            if (disc >= 0 && is_perfect_square(disc, &root) && (A3 + root) % 2 == 0) return true;
        }
    }
    return false;
}

} // namespace detail

// Documented combination for monic m over Q: reduction mod a batch of primes
// (irreducibility proof), integer-model root search (linear factors), and the
// exact quadratic-split test in degree 4. Degrees 2-4 are always decided;
// degree >= 5 may come back Inconclusive, which callers must refuse.
inline IrredVerdict irreducible_over_q(const UPoly<RationalField>& m) {
    int d = up_deg<RationalField>(m);
    if (d <= 0) return IrredVerdict::Reducible;
    if (d == 1) return IrredVerdict::Irreducible;
    auto P = detail::integer_model(m);

    static const unsigned long primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                           47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
    for (unsigned long pr : primes) {
        PrimeField fp(pr);
        UPoly<PrimeField> mp;
        mp.reserve(P.size());
        for (const auto& c : P) mp.push_back(fp.from_int(mpz_class(c % pr).get_si()));
        if (up_deg<PrimeField>(mp) != d) continue; // cannot happen (monic), kept for safety
        if (irreducible_mod_p(fp, mp) == IrredVerdict::Irreducible) return IrredVerdict::Irreducible;
    }

    if (detail::has_integer_root(P)) return IrredVerdict::Reducible;
    if (d == 2 || d == 3) return IrredVerdict::Irreducible;
    if (d == 4)
        return detail::quartic_splits_quadratic(P) ? IrredVerdict::Reducible : IrredVerdict::Irreducible;
    return IrredVerdict::Inconclusive;
}

} // namespace gsv
