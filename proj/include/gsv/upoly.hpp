#pragma once

#include <vector>

#include "gsv/util.hpp"

namespace gsv {

// Univariate polynomials over a base field context K, coefficients low to
// high, no trailing zeros (zero polynomial = empty vector). Used for the
// extension modulus, automorphism checks, characteristic polynomials and the
// eigenvalue-multiplicity ladder.

template <class K>
using UPoly = std::vector<typename K::Elem>;

template <class K>
void up_trim(const K& k, UPoly<K>& a) {
    while (!a.empty() && k.is_zero(a.back())) a.pop_back();
}

template <class K>
int up_deg(const UPoly<K>& a) {
    return static_cast<int>(a.size()) - 1; // -1 for zero
}

template <class K>
UPoly<K> up_from_ints(const K& k, std::initializer_list<long long> cs) {
    UPoly<K> r;
    for (long long c : cs) r.push_back(k.from_int(c));
    up_trim(k, r);
    return r;
}

template <class K>
UPoly<K> up_add(const K& k, const UPoly<K>& a, const UPoly<K>& b) {
    UPoly<K> r(std::max(a.size(), b.size()), k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.add(r[i], b[i]);
    up_trim(k, r);
    return r;
}

template <class K>
UPoly<K> up_sub(const K& k, const UPoly<K>& a, const UPoly<K>& b) {
    UPoly<K> r(std::max(a.size(), b.size()), k.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = k.sub(r[i], b[i]);
    up_trim(k, r);
    return r;
}

template <class K>
UPoly<K> up_mul(const K& k, const UPoly<K>& a, const UPoly<K>& b) {
    if (a.empty() || b.empty()) return {};
    UPoly<K> r(a.size() + b.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    up_trim(k, r);
    return r;
}

template <class K>
UPoly<K> up_scale(const K& k, const UPoly<K>& a, const typename K::Elem& c) {
    if (k.is_zero(c)) return {};
    UPoly<K> r = a;
    for (auto& x : r) x = k.mul(x, c);
    up_trim(k, r);
    return r;
}

// Division with remainder; divisor must be nonzero.
template <class K>
void up_divrem(const K& k, UPoly<K> a, const UPoly<K>& b, UPoly<K>& q, UPoly<K>& rem) {
    if (b.empty()) fail(ErrKind::Internal, "division-by-zero", "univariate division by zero");
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, k.zero());
    auto lcinv = k.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        std::size_t shift = a.size() - b.size();
        auto c = k.mul(a.back(), lcinv);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = k.sub(a[shift + i], k.mul(c, b[i]));
        up_trim(k, a);
    }
    up_trim(k, q);
    rem = std::move(a);
}

template <class K>
UPoly<K> up_rem(const K& k, const UPoly<K>& a, const UPoly<K>& b) {
    UPoly<K> q, r;
    up_divrem(k, a, b, q, r);
    return r;
}

template <class K>
UPoly<K> up_monic(const K& k, UPoly<K> a) {
    if (a.empty()) return a;
    auto ci = k.inv(a.back());
    for (auto& c : a) c = k.mul(c, ci);
    return a;
}

template <class K>
UPoly<K> up_gcd(const K& k, UPoly<K> a, UPoly<K> b) {
    while (!b.empty()) {
        auto r = up_rem(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return up_monic(k, a);
}

template <class K>
UPoly<K> up_derivative(const K& k, const UPoly<K>& a) {
    if (a.size() <= 1) return {};
    UPoly<K> r(a.size() - 1, k.zero());
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = k.mul(a[i], k.from_int(static_cast<long long>(i)));
    up_trim(k, r);
    return r;
}

template <class K>
typename K::Elem up_eval(const K& k, const UPoly<K>& a, const typename K::Elem& x) {
    auto r = k.zero();
    for (std::size_t i = a.size(); i-- > 0;) r = k.add(k.mul(r, x), a[i]);
    return r;
}

// a^e mod m by binary powering.
template <class K>
UPoly<K> up_powmod(const K& k, UPoly<K> a, uint64_t e, const UPoly<K>& m) {
    UPoly<K> r = up_from_ints(k, {1});
    a = up_rem(k, a, m);
    while (e) {
        if (e & 1) r = up_rem(k, up_mul(k, r, a), m);
        a = up_rem(k, up_mul(k, a, a), m);
        e >>= 1;
    }
    return r;
}

// t^o - 1
template <class K>
UPoly<K> up_xn_minus_1(const K& k, uint64_t o) {
    UPoly<K> u(o + 1, k.zero());
    u[0] = k.neg(k.one());
    u[o] = k.one();
    return u;
}

// Largest multiplicity of a root of c, given that every root of c is a root
// of the squarefree polynomial t^o - 1 (requires char(k) not dividing o).
// Works through the degree ladder s_m = deg gcd(c, (t^o-1)^m); the number of
// roots with multiplicity >= m is s_m - s_{m-1}.
template <class K>
int max_root_multiplicity_dividing(const K& k, const UPoly<K>& c, uint64_t o) {
    const UPoly<K> u = up_xn_minus_1(k, o);
    UPoly<K> upow = up_from_ints(k, {1});
    int prev = 0, maxm = 0;
    int bound = up_deg<K>(c);
    // s_m - s_{m-1} = #roots of multiplicity >= m is nonincreasing, so the
    // first stall ends the ladder.
    for (int m = 1; m <= bound; ++m) {
        upow = up_mul(k, upow, u);
        int s = up_deg<K>(up_gcd(k, c, upow));
        if (s <= prev) break;
        maxm = m;
        prev = s;
    }
    return maxm;
}

} // namespace gsv
