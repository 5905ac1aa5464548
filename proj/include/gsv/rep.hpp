#pragma once

#include <map>
#include <optional>

#include "gsv/groups.hpp"
#include "gsv/linalg.hpp"
#include "gsv/upoly.hpp"
#include "gsv/util.hpp"

namespace gsv {

// Linear representation tau: E -> GL_{n+1}(k), one matrix per element of the
// finite group acting; matrices act on row vectors from the right, matching
// the substitution convention T -> T*tau(g).
template <class K>
struct Rep {
    std::vector<Matrix<K>> mats;
    int dim = 0; // n+1
};

template <class K>
void validate_rep(const K& k, const FiniteGroup& e, const Rep<K>& rep) {
    if (static_cast<int>(rep.mats.size()) != e.size())
        fail(ErrKind::Validation, "rep-size", "need one matrix per group element");
    for (const auto& m : rep.mats)
        if (m.nr != rep.dim || m.nc != rep.dim)
            fail(ErrKind::Validation, "rep-size", "representation matrices must be square of equal size");
    if (!mat_eq(k, rep.mats[e.identity()], Matrix<K>::identity(k, rep.dim)))
        fail(ErrKind::Validation, "rep-not-hom", "identity element must map to the identity matrix");
    for (int a = 0; a < e.size(); ++a)
        for (int b = 0; b < e.size(); ++b)
            if (!mat_eq(k, mat_mul(k, rep.mats[a], rep.mats[b]), rep.mats[e.mul(a, b)]))
                fail(ErrKind::Validation, "rep-not-hom",
                     "tau(" + e.label(a) + ")tau(" + e.label(b) + ") != tau(" + e.label(a) +
                         e.label(b) + ")");
}

// Right regular representation: tau(g)[i][j] = 1 iff i*g = j, so
// (T*tau(g))_j = T_{j g^{-1}}.
template <class K>
Rep<K> regular_rep(const K& k, const FiniteGroup& e) {
    if (e.size() < 2)
        fail(ErrKind::Validation, "rep-too-small", "regular representation needs |E| >= 2");
    Rep<K> rep;
    rep.dim = e.size();
    for (int g = 0; g < e.size(); ++g) {
        Matrix<K> m(k, e.size(), e.size());
        for (int i = 0; i < e.size(); ++i) m.at(i, e.mul(i, g)) = k.one();
        rep.mats.push_back(std::move(m));
    }
    return rep;
}

// Completes per-generator matrices to the whole group along the Cayley graph;
// validate_rep afterwards decides whether the assignment was consistent.
template <class K>
Rep<K> rep_from_generators(const K& k, const FiniteGroup& e, const std::map<int, Matrix<K>>& gens) {
    if (gens.empty()) fail(ErrKind::Validation, "rep-empty", "no generator matrices given");
    int dim = gens.begin()->second.nr;
    Rep<K> rep;
    rep.dim = dim;
    rep.mats.assign(e.size(), Matrix<K>());
    std::vector<bool> have(e.size(), false);
    rep.mats[e.identity()] = Matrix<K>::identity(k, dim);
    have[e.identity()] = true;
    for (const auto& [g, m] : gens) {
        if (g < 0 || g >= e.size())
            fail(ErrKind::Validation, "rep-bad-generator", "generator index out of range");
        if (m.nr != dim || m.nc != dim)
            fail(ErrKind::Validation, "rep-size", "generator matrices must be square of equal size");
        rep.mats[g] = m;
        have[g] = true;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < e.size(); ++a) {
            if (!have[a]) continue;
            for (const auto& [g, m] : gens) {
                int ag = e.mul(a, g);
                if (!have[ag]) {
                    rep.mats[ag] = mat_mul(k, rep.mats[a], m);
                    have[ag] = true;
                    grew = true;
                }
            }
        }
    }
    for (bool h : have)
        if (!h)
            fail(ErrKind::Validation, "rep-not-generating",
                 "the given matrices do not reach every group element");
    validate_rep(k, e, rep);
    return rep;
}

// m block-diagonal copies; the boosted dimension is m(n+1).
template <class K>
Rep<K> sum_copies(const K& k, const Rep<K>& rep, int m) {
    if (m < 1) fail(ErrKind::Validation, "bad-copies", "m must be >= 1");
    if (m == 1) return rep;
    Rep<K> out;
    out.dim = rep.dim * m;
    for (const auto& mat : rep.mats) {
        Matrix<K> big(k, out.dim, out.dim);
        for (int c = 0; c < m; ++c)
            for (int i = 0; i < rep.dim; ++i)
                for (int j = 0; j < rep.dim; ++j)
                    big.at(c * rep.dim + i, c * rep.dim + j) = mat.at(i, j);
        out.mats.push_back(std::move(big));
    }
    return out;
}

struct RepCheck {
    bool pass = true;
    int witness = -1; // offending group element
    std::string reason;
};

// Faithful and nowhere-scalar away from the identity.
template <class K>
RepCheck nonscalar_faithful_check(const K& k, const FiniteGroup& e, const Rep<K>& rep) {
    RepCheck c;
    for (int g = 0; g < e.size(); ++g) {
        if (g == e.identity()) continue;
        if (mat_eq(k, rep.mats[g], Matrix<K>::identity(k, rep.dim))) {
            c = {false, g, "tau(" + e.label(g) + ") is the identity (not faithful)"};
            return c;
        }
        if (mat_is_scalar(k, rep.mats[g])) {
            c = {false, g, "tau(" + e.label(g) + ") is a scalar matrix"};
            return c;
        }
    }
    return c;
}

// Dimension of the projective fixed locus of tau(g) over the algebraic
// closure: the maximal eigenvalue multiplicity minus one. tau(g) has finite
// order o with char(k) not dividing o, so it is diagonalizable with
// eigenvalues among the o-th roots of unity and the multiplicity ladder on
// the characteristic polynomial applies. Returns nullopt in bad
// characteristic (callers fall back to the Groebner dimension).
template <class K>
std::optional<int> bad_locus_dim_fast(const K& k, const FiniteGroup& e, const Rep<K>& rep, int g) {
    if (g == e.identity())
        fail(ErrKind::Validation, "g-not-in-G", "fixed locus is only formed for g != 1");
    uint64_t o = static_cast<uint64_t>(e.order_of(g));
    uint64_t ch = k.characteristic();
    if (ch != 0 && o % ch == 0) return std::nullopt;
    auto c = charpoly(k, rep.mats[g]);
    int maxmult = max_root_multiplicity_dividing(k, c, o);
    return maxmult - 1;
}

} // namespace gsv
