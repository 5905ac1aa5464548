#pragma once

#include <map>
#include <string>
#include <vector>

#include "gsv/linalg.hpp"
#include "gsv/util.hpp"

namespace gsv {

// Sparse multivariate polynomials over a coefficient-field context F (the
// extension field in practice). Terms are held in graded-lex descending
// order with no zero coefficients; that order is also the canonical print
// order, while the Groebner engine re-sorts working copies into its own
// monomial order.

using Exps = std::vector<uint32_t>;

inline uint32_t exps_degree(const Exps& e) {
    uint64_t d = 0;
    for (uint32_t v : e) d = checked_add_u32(d, v);
    return static_cast<uint32_t>(d);
}

// graded lex: higher degree first, then lexicographic with earlier variables
// weighing more
inline bool grlex_greater(const Exps& a, uint32_t da, const Exps& b, uint32_t db) {
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

// graded reverse lex: higher degree first, then last differing exponent
// smaller
inline bool grevlex_greater(const Exps& a, uint32_t da, const Exps& b, uint32_t db) {
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

struct MonomialOrder {
    enum Kind { Grevlex, BlockElim } kind = Grevlex;
    int nvars = 0;
    int first_block = 0; // BlockElim: this many leading variables dominate

    static MonomialOrder grevlex(int nvars) { return {Grevlex, nvars, 0}; }
    static MonomialOrder block_elim(int nvars, int first_block) {
        return {BlockElim, nvars, first_block};
    }

    bool greater(const Exps& a, const Exps& b) const {
        if (kind == Grevlex) return grevlex_greater(a, exps_degree(a), b, exps_degree(b));
        uint32_t da1 = 0, db1 = 0;
        for (int i = 0; i < first_block; ++i) {
            da1 += a[i];
            db1 += b[i];
        }
        if (da1 != db1) return da1 > db1;
        for (std::size_t i = first_block; i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        uint32_t da2 = 0, db2 = 0;
        for (std::size_t i = first_block; i < a.size(); ++i) {
            da2 += a[i];
            db2 += b[i];
        }
        if (da2 != db2) return da2 > db2;
        for (std::size_t i = a.size(); i-- > static_cast<std::size_t>(first_block);)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    bool equal(const Exps& a, const Exps& b) const { return a == b; }
};

template <class F>
struct Term {
    uint32_t deg = 0;
    Exps e;
    typename F::Elem c;
};

template <class F>
struct Poly {
    int nvars = 0;
    std::vector<Term<F>> terms; // grlex descending

    bool is_zero() const { return terms.empty(); }
    uint32_t degree() const { return terms.empty() ? 0 : max_deg(); }
    uint32_t max_deg() const {
        uint32_t d = 0;
        for (const auto& t : terms) d = std::max(d, t.deg);
        return d;
    }
    bool is_homogeneous() const {
        for (const auto& t : terms)
            if (t.deg != terms.front().deg) return false;
        return true;
    }
};

namespace polydetail {
struct GrlexDescCmp {
    bool operator()(const Exps& a, const Exps& b) const {
        return grlex_greater(a, exps_degree(a), b, exps_degree(b));
    }
};
} // namespace polydetail

template <class F>
using TermMap = std::map<Exps, typename F::Elem, polydetail::GrlexDescCmp>;

template <class F>
Poly<F> poly_from_map(const F& f, int nvars, TermMap<F>&& m) {
    Poly<F> p;
    p.nvars = nvars;
    p.terms.reserve(m.size());
    for (auto& [e, c] : m) {
        if (f.is_zero(c)) continue;
        p.terms.push_back({exps_degree(e), e, std::move(c)});
    }
    return p;
}

template <class F>
Poly<F> p_zero(int nvars) {
    return Poly<F>{nvars, {}};
}

template <class F>
Poly<F> p_mono(const F& f, int nvars, Exps e, typename F::Elem c) {
    Poly<F> p;
    p.nvars = nvars;
    if (!f.is_zero(c)) p.terms.push_back({exps_degree(e), std::move(e), std::move(c)});
    return p;
}

template <class F>
Poly<F> p_const(const F& f, int nvars, typename F::Elem c) {
    return p_mono(f, nvars, Exps(nvars, 0), std::move(c));
}

template <class F>
Poly<F> p_var(const F& f, int nvars, int i) {
    Exps e(nvars, 0);
    e[i] = 1;
    return p_mono(f, nvars, std::move(e), f.one());
}

template <class F>
bool p_eq(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (a.nvars != b.nvars || a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].e != b.terms[i].e || !f.eq(a.terms[i].c, b.terms[i].c)) return false;
    return true;
}

template <class F>
Poly<F> p_add(const F& f, const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r;
    r.nvars = a.nvars;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        const auto& ta = a.terms[i];
        const auto& tb = b.terms[j];
        if (ta.e == tb.e) {
            auto c = f.add(ta.c, tb.c);
            if (!f.is_zero(c)) r.terms.push_back({ta.deg, ta.e, std::move(c)});
            ++i, ++j;
        } else if (grlex_greater(ta.e, ta.deg, tb.e, tb.deg)) {
            r.terms.push_back(ta);
            ++i;
        } else {
            r.terms.push_back(tb);
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

template <class F>
Poly<F> p_neg(const F& f, Poly<F> a) {
    for (auto& t : a.terms) t.c = f.neg(t.c);
    return a;
}

template <class F>
Poly<F> p_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
    return p_add(f, a, p_neg(f, b));
}

template <class F>
Poly<F> p_scale(const F& f, Poly<F> a, const typename F::Elem& c) {
    if (f.is_zero(c)) return p_zero<F>(a.nvars);
    for (auto& t : a.terms) t.c = f.mul(t.c, c);
    return a;
}

template <class F>
Poly<F> p_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    TermMap<F> acc;
    Exps e(a.nvars);
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            for (int v = 0; v < a.nvars; ++v)
                e[v] = static_cast<uint32_t>(checked_add_u32(ta.e[v], tb.e[v]));
            auto c = f.mul(ta.c, tb.c);
            auto it = acc.find(e);
            if (it == acc.end())
                acc.emplace(e, std::move(c));
            else
                it->second = f.add(it->second, c);
        }
    return poly_from_map(f, a.nvars, std::move(acc));
}

template <class F>
Poly<F> p_pow(const F& f, const Poly<F>& a, uint32_t e) {
    Poly<F> r = p_const(f, a.nvars, f.one());
    Poly<F> base = a;
    while (e) {
        if (e & 1) r = p_mul(f, r, base);
        e >>= 1;
        if (e) base = p_mul(f, base, base);
    }
    return r;
}

// formal partial derivative
template <class F>
Poly<F> p_derivative(const F& f, const Poly<F>& a, int var) {
    TermMap<F> acc;
    for (const auto& t : a.terms) {
        if (t.e[var] == 0) continue;
        Exps e = t.e;
        e[var] -= 1;
        auto c = f.mul(t.c, f.from_int(static_cast<long long>(t.e[var])));
        if (!f.is_zero(c)) acc.emplace(std::move(e), std::move(c));
    }
    return poly_from_map(f, a.nvars, std::move(acc));
}

template <class F>
typename F::Elem p_eval(const F& f, const Poly<F>& a, const std::vector<typename F::Elem>& v) {
    auto r = f.zero();
    for (const auto& t : a.terms) {
        auto m = t.c;
        for (int i = 0; i < a.nvars; ++i)
            if (t.e[i]) m = f.mul(m, f.pow(v[i], t.e[i]));
        r = f.add(r, m);
    }
    return r;
}

// T -> T*M with M over the base field k; the spec's row-vector convention,
// so substitute(substitute(f, N), M) = substitute(f, M*N).
template <class F>
Poly<F> substitute_linear(const F& f, const Poly<F>& a,
                          const Matrix<typename F::Base>& m) {
    int n = a.nvars;
    if (m.nr != n || m.nc != n) fail(ErrKind::Validation, "dim-mismatch", "substitution matrix shape");
    // images L_j = sum_i M[i][j] T_i, with memoized powers
    std::vector<Poly<F>> img(n);
    for (int j = 0; j < n; ++j) {
        TermMap<F> acc;
        for (int i = 0; i < n; ++i) {
            if (f.base().is_zero(m.at(i, j))) continue;
            Exps e(n, 0);
            e[i] = 1;
            acc.emplace(std::move(e), f.from_base(m.at(i, j)));
        }
        img[j] = poly_from_map(f, n, std::move(acc));
    }
    std::vector<std::vector<Poly<F>>> powcache(n);
    auto power = [&](int j, uint32_t e) -> const Poly<F>& {
        auto& cache = powcache[j];
        if (cache.empty()) cache.push_back(p_const(f, n, f.one()));
        while (cache.size() <= e) cache.push_back(p_mul(f, cache.back(), img[j]));
        return cache[e];
    };
    Poly<F> total = p_zero<F>(n);
    for (const auto& t : a.terms) {
        Poly<F> prod = p_const(f, n, t.c);
        for (int j = 0; j < n; ++j)
            if (t.e[j]) prod = p_mul(f, prod, power(j, t.e[j]));
        total = p_add(f, total, prod);
    }
    return total;
}

// coefficientwise Galois twist by the automorphism of a Gamma element
template <class F>
Poly<F> twist_coefficients(const F& f, Poly<F> a, int gamma_idx) {
    for (auto& t : a.terms) t.c = f.apply_auto(gamma_idx, t.c);
    return a;
}

// h(f_0, ..., f_s): substitute the polys fs into the variables of h
template <class F>
Poly<F> p_compose(const F& f, const Poly<F>& h, const std::vector<Poly<F>>& fs) {
    if (static_cast<int>(fs.size()) != h.nvars)
        fail(ErrKind::Validation, "dim-mismatch", "composition arity mismatch");
    int n = fs.empty() ? 0 : fs.front().nvars;
    std::vector<std::vector<Poly<F>>> powcache(fs.size());
    auto power = [&](int j, uint32_t e) -> const Poly<F>& {
        auto& cache = powcache[j];
        if (cache.empty()) cache.push_back(p_const(f, n, f.one()));
        while (cache.size() <= e) cache.push_back(p_mul(f, cache.back(), fs[j]));
        return cache[e];
    };
    Poly<F> total = p_zero<F>(n);
    for (const auto& t : h.terms) {
        Poly<F> prod = p_const(f, n, t.c);
        for (int j = 0; j < h.nvars; ++j)
            if (t.e[j]) prod = p_mul(f, prod, power(j, t.e[j]));
        total = p_add(f, total, prod);
    }
    return total;
}

// ---- monomial enumeration and ranking (graded-lex descending) ----

inline uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// number of monomials of degree d in v variables
inline uint64_t mono_count(int v, uint32_t d) {
    return binomial(d + v - 1, v - 1);
}

// all degree-d exponent vectors in graded-lex descending order
inline std::vector<Exps> monomial_basis(int nvars, uint32_t d) {
    std::vector<Exps> out;
    Exps cur(nvars, 0);
    // recursive descent, first variable takes the largest share first
    std::function<void(int, uint32_t)> rec = [&](int pos, uint32_t rem) {
        if (pos == nvars - 1) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int32_t a = static_cast<int32_t>(rem); a >= 0; --a) {
            cur[pos] = static_cast<uint32_t>(a);
            rec(pos + 1, rem - a);
        }
    };
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(0, d);
    return out;
}

// index of e within monomial_basis(nvars, deg(e))
inline uint64_t mono_rank(const Exps& e) {
    int v = static_cast<int>(e.size());
    uint32_t rem = exps_degree(e);
    uint64_t rank = 0;
    for (int pos = 0; pos + 1 < v; ++pos) {
        for (uint32_t a = rem; a > e[pos]; --a) rank += mono_count(v - pos - 1, rem - a);
        rem -= e[pos];
    }
    return rank;
}

} // namespace gsv
