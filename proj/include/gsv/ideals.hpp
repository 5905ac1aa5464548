#pragma once

#include <algorithm>
#include <optional>
#include <set>

#include "gsv/poly.hpp"
#include "gsv/util.hpp"

namespace gsv {

// Buchberger engine with the product and chain pair criteria, normal pair
// selection, full reduction and final interreduction. Budgets turn runaway
// computations into explicit errors, never into wrong answers.

struct GbBudget {
    std::size_t max_pairs = 400000;
    std::size_t max_basis = 8000;
    uint32_t max_degree = 120;
    std::size_t max_vars_for_dimension = 24;
};

template <class F>
struct HomIdeal {
    int nvars = 0;
    std::vector<Poly<F>> gens; // homogeneous, nonzero
};

template <class F>
HomIdeal<F> make_hom_ideal(const F&, int nvars, std::vector<Poly<F>> gens) {
    HomIdeal<F> ideal;
    ideal.nvars = nvars;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.nvars != nvars) fail(ErrKind::Validation, "dim-mismatch", "generator in wrong ring");
        if (!g.is_homogeneous())
            fail(ErrKind::Validation, "non-homogeneous", "ideal generators must be homogeneous");
        ideal.gens.push_back(std::move(g));
    }
    return ideal;
}

// exponent-vector helpers
inline bool exp_divides(const Exps& a, const Exps& b) { // a | b
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}
inline Exps exp_lcm(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}
inline Exps exp_sub(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Exps exp_add(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<uint32_t>(checked_add_u32(a[i], b[i]));
    return r;
}

// Working polynomials inside the engine keep their terms sorted descending by
// the engine's monomial order (not the canonical grlex storage order).
template <class F>
struct GroebnerBasis {
    MonomialOrder ord;
    std::vector<Poly<F>> polys;

    std::vector<Poly<F>> canonical(const F&) const {
        std::vector<Poly<F>> out = polys;
        for (auto& p : out)
            std::sort(p.terms.begin(), p.terms.end(), [](const auto& a, const auto& b) {
                return grlex_greater(a.e, a.deg, b.e, b.deg);
            });
        return out;
    }
};

namespace gbdetail {

template <class F>
void resort(Poly<F>& p, const MonomialOrder& ord) {
    std::sort(p.terms.begin(), p.terms.end(),
              [&](const auto& a, const auto& b) { return ord.greater(a.e, b.e); });
}

// r -= c * T^shift * g, all term lists sorted descending by ord
template <class F>
Poly<F> axpy_shift(const F& f, const MonomialOrder& ord, const Poly<F>& r,
                   const typename F::Elem& c, const Exps& shift, const Poly<F>& g) {
    Poly<F> out;
    out.nvars = r.nvars;
    out.terms.reserve(r.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < r.terms.size() || j < g.terms.size()) {
        if (j == g.terms.size()) {
            out.terms.push_back(r.terms[i++]);
            continue;
        }
        Exps ge = exp_add(g.terms[j].e, shift);
        uint32_t gd = exps_degree(ge);
        if (i == r.terms.size()) {
            auto cc = f.neg(f.mul(c, g.terms[j].c));
            if (!f.is_zero(cc)) out.terms.push_back({gd, std::move(ge), std::move(cc)});
            ++j;
            continue;
        }
        const auto& rt = r.terms[i];
        if (rt.e == ge) {
            auto cc = f.sub(rt.c, f.mul(c, g.terms[j].c));
            if (!f.is_zero(cc)) out.terms.push_back({rt.deg, rt.e, std::move(cc)});
            ++i, ++j;
        } else if (ord.greater(rt.e, ge)) {
            out.terms.push_back(rt);
            ++i;
        } else {
            auto cc = f.neg(f.mul(c, g.terms[j].c));
            if (!f.is_zero(cc)) out.terms.push_back({gd, std::move(ge), std::move(cc)});
            ++j;
        }
    }
    return out;
}

// Full normal form of work against basis; both sorted by ord.
template <class F>
Poly<F> reduce_full(const F& f, const MonomialOrder& ord, Poly<F> work,
                    const std::vector<Poly<F>>& basis, const GbBudget& budget) {
    Poly<F> nf;
    nf.nvars = work.nvars;
    while (!work.terms.empty()) {
        const auto& lt = work.terms.front();
        if (lt.deg > budget.max_degree)
            fail(ErrKind::Budget, "resource-budget-exceeded",
                 "polynomial degree " + std::to_string(lt.deg) + " over budget during reduction");
        const Poly<F>* red = nullptr;
        for (const auto& g : basis)
            if (exp_divides(g.terms.front().e, lt.e)) {
                red = &g;
                break;
            }
        if (!red) {
            nf.terms.push_back(lt);
            work.terms.erase(work.terms.begin());
            continue;
        }
        auto c = f.div(lt.c, red->terms.front().c);
        work = axpy_shift(f, ord, work, c, exp_sub(lt.e, red->terms.front().e), *red);
    }
    return nf;
}

template <class F>
void make_monic(const F& f, Poly<F>& p) {
    if (p.terms.empty()) return;
    auto ci = f.inv(p.terms.front().c);
    if (f.eq(p.terms.front().c, f.one())) return;
    for (auto& t : p.terms) t.c = f.mul(t.c, ci);
}

} // namespace gbdetail

template <class F>
GroebnerBasis<F> groebner_basis(const F& f, const HomIdeal<F>& ideal, const MonomialOrder& ord,
                                const GbBudget& budget = {}) {
    using gbdetail::axpy_shift;
    using gbdetail::make_monic;
    using gbdetail::reduce_full;
    using gbdetail::resort;

    GroebnerBasis<F> gb;
    gb.ord = ord;
    std::vector<Poly<F>>& basis = gb.polys;
    for (const auto& g : ideal.gens) {
        Poly<F> p = g;
        resort(p, ord);
        make_monic(f, p);
        basis.push_back(std::move(p));
    }

    struct PairKey {
        uint32_t deg;
        Exps lcm;
        std::size_t i, j;
    };
    auto pair_less = [&](const PairKey& a, const PairKey& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        if (a.lcm != b.lcm) return ord.greater(b.lcm, a.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<PairKey> queue;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Exps l = exp_lcm(basis[i].terms.front().e, basis[j].terms.front().e);
        queue.push_back({exps_degree(l), std::move(l), i, j});
        std::push_heap(queue.begin(), queue.end(),
                       [&](const PairKey& a, const PairKey& b) { return pair_less(b, a); });
    };
    std::set<std::pair<std::size_t, std::size_t>> handled;

    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    std::size_t pairs_done = 0;
    while (!queue.empty()) {
        std::pop_heap(queue.begin(), queue.end(),
                      [&](const PairKey& a, const PairKey& b) { return pair_less(b, a); });
        PairKey pk = std::move(queue.back());
        queue.pop_back();
        handled.insert({pk.i, pk.j});

        if (++pairs_done > budget.max_pairs)
            fail(ErrKind::Budget, "resource-budget-exceeded", "S-pair budget exhausted");
        if (pk.deg > budget.max_degree)
            fail(ErrKind::Budget, "resource-budget-exceeded",
                 "S-pair degree " + std::to_string(pk.deg) + " over budget");

        const Exps& lf = basis[pk.i].terms.front().e;
        const Exps& lg = basis[pk.j].terms.front().e;
        // product criterion
        if (exps_degree(lf) + exps_degree(lg) == pk.deg) continue;
        // chain criterion
        bool skip = false;
        for (std::size_t t = 0; t < basis.size() && !skip; ++t) {
            if (t == pk.i || t == pk.j) continue;
            if (!exp_divides(basis[t].terms.front().e, pk.lcm)) continue;
            auto key1 = std::minmax(pk.i, t);
            auto key2 = std::minmax(pk.j, t);
            if (handled.count({key1.first, key1.second}) && handled.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        // S-polynomial: (lcm/lf)*f - (lcm/lg)*g, both monic
        Poly<F> s;
        s.nvars = ideal.nvars;
        {
            Poly<F> left;
            left.nvars = ideal.nvars;
            Exps shift = exp_sub(pk.lcm, lf);
            for (const auto& t : basis[pk.i].terms) {
                Exps e = exp_add(t.e, shift);
                left.terms.push_back({exps_degree(e), std::move(e), t.c});
            }
            s = axpy_shift(f, ord, left, f.one(), exp_sub(pk.lcm, lg), basis[pk.j]);
        }
        Poly<F> nf = reduce_full(f, ord, std::move(s), basis, budget);
        if (nf.terms.empty()) continue;
        make_monic(f, nf);
        basis.push_back(std::move(nf));
        if (basis.size() > budget.max_basis)
            fail(ErrKind::Budget, "resource-budget-exceeded", "basis size budget exhausted");
        for (std::size_t i = 0; i + 1 < basis.size(); ++i) push_pair(i, basis.size() - 1);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<char> keep(basis.size(), 1);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            if (exp_divides(basis[j].terms.front().e, basis[i].terms.front().e)) {
                if (basis[j].terms.front().e == basis[i].terms.front().e && j > i) continue;
                keep[i] = 0;
            }
        }
    std::vector<Poly<F>> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(basis[i]));

    // tail-reduce each element against the others
    std::vector<Poly<F>> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly<F>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Poly<F> nf = reduce_full(f, ord, minimal[i], others, budget);
        if (!nf.terms.empty()) {
            make_monic(f, nf);
            reduced.push_back(std::move(nf));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly<F>& a, const Poly<F>& b) {
        return ord.greater(b.terms.front().e, a.terms.front().e);
    });
    gb.polys = std::move(reduced);
    return gb;
}

// Remainder of multivariate division by the basis; zero iff f is a member.
template <class F>
Poly<F> normal_form(const F& f, const Poly<F>& p, const GroebnerBasis<F>& gb,
                    const GbBudget& budget = {}) {
    Poly<F> work = p;
    gbdetail::resort(work, gb.ord);
    Poly<F> nf = gbdetail::reduce_full(f, gb.ord, std::move(work), gb.polys, budget);
    std::sort(nf.terms.begin(), nf.terms.end(),
              [](const auto& a, const auto& b) { return grlex_greater(a.e, a.deg, b.e, b.deg); });
    return nf;
}

template <class F>
bool gb_contains_constant(const GroebnerBasis<F>& gb) {
    for (const auto& p : gb.polys)
        if (exps_degree(p.terms.front().e) == 0) return true;
    return false;
}

// Krull dimension of R/I from the leading-term ideal: size of the largest
// variable subset S such that no leading monomial is supported inside S.
template <class F>
int krull_dim_cone(const GroebnerBasis<F>& gb, int nvars, const GbBudget& budget = {}) {
    if (gb_contains_constant(gb)) return -1;
    if (static_cast<std::size_t>(nvars) > budget.max_vars_for_dimension)
        fail(ErrKind::Budget, "resource-budget-exceeded", "too many variables for dimension search");
    std::vector<uint32_t> supports;
    for (const auto& p : gb.polys) {
        uint32_t m = 0;
        for (int v = 0; v < nvars; ++v)
            if (p.terms.front().e[v]) m |= (1u << v);
        supports.push_back(m);
    }
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << nvars); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc <= best) continue;
        bool independent = true;
        for (uint32_t s : supports)
            if ((s & ~mask) == 0) {
                independent = false;
                break;
            }
        if (independent) best = pc;
    }
    return best;
}

// dim Proj(R/I); -1 when the projective set is empty (the cone is at most
// the origin). Equals Krull(R/sat(I)) - 1 by the saturation conventions.
template <class F>
int projective_dimension(const F& f, const HomIdeal<F>& ideal, const GbBudget& budget = {}) {
    auto gb = groebner_basis(f, ideal, MonomialOrder::grevlex(ideal.nvars), budget);
    if (gb.polys.empty()) return ideal.nvars - 1;
    int kd = krull_dim_cone(gb, ideal.nvars, budget);
    return kd <= 0 ? -1 : kd - 1;
}

template <class F>
bool is_projectively_empty(const F& f, const HomIdeal<F>& ideal, const GbBudget& budget = {}) {
    return projective_dimension(f, ideal, budget) == -1;
}

// ---- variable plumbing for elimination-based operations ----

template <class F>
Poly<F> poly_add_var_front(const Poly<F>& p, int count = 1) {
    Poly<F> r;
    r.nvars = p.nvars + count;
    for (const auto& t : p.terms) {
        Exps e(count, 0);
        e.insert(e.end(), t.e.begin(), t.e.end());
        r.terms.push_back({t.deg, std::move(e), t.c});
    }
    return r;
}

template <class F>
Poly<F> poly_drop_vars_front(const Poly<F>& p, int count) {
    Poly<F> r;
    r.nvars = p.nvars - count;
    for (const auto& t : p.terms) {
        Exps e(t.e.begin() + count, t.e.end());
        r.terms.push_back({exps_degree(e), std::move(e), t.c});
    }
    return r;
}

// I ∩ k[remaining vars] via a block order; generators come out in the smaller
// ring (the first `first_block` variables are eliminated).
template <class F>
std::vector<Poly<F>> eliminate_raw(const F& f, int nvars, const std::vector<Poly<F>>& gens,
                                   int first_block, const GbBudget& budget) {
    HomIdeal<F> ideal;
    ideal.nvars = nvars;
    for (const auto& g : gens)
        if (!g.is_zero()) ideal.gens.push_back(g);
    auto gb = groebner_basis(f, ideal, MonomialOrder::block_elim(nvars, first_block), budget);
    std::vector<Poly<F>> out;
    for (const auto& p : gb.canonical(f)) {
        bool pure = true;
        for (const auto& t : p.terms)
            for (int v = 0; v < first_block && pure; ++v)
                if (t.e[v]) pure = false;
        if (pure) out.push_back(poly_drop_vars_front(p, first_block));
    }
    return out;
}

template <class F>
HomIdeal<F> eliminate(const F& f, const HomIdeal<F>& ideal, int first_block,
                      const GbBudget& budget = {}) {
    auto polys = eliminate_raw(f, ideal.nvars, ideal.gens, first_block, budget);
    return make_hom_ideal(f, ideal.nvars - first_block, std::move(polys));
}

// (I : T_i^inf) via the Rabinowitsch trick: eliminate t from I + (t*T_i - 1).
template <class F>
std::vector<Poly<F>> colon_var_power_raw(const F& f, int nvars, const std::vector<Poly<F>>& gens,
                                         int var, const GbBudget& budget) {
    std::vector<Poly<F>> lifted;
    for (const auto& g : gens) lifted.push_back(poly_add_var_front(g));
    // t*T_var - 1 in the extended ring
    Exps e(nvars + 1, 0);
    e[0] = 1;
    e[var + 1] = 1;
    Poly<F> rel = p_mono(f, nvars + 1, std::move(e), f.one());
    rel = p_sub(f, rel, p_const(f, nvars + 1, f.one()));
    lifted.push_back(std::move(rel));
    return eliminate_raw(f, nvars + 1, lifted, 1, budget);
}

// Ideal intersection A ∩ B via t*A + (1-t)*B, eliminating t.
template <class F>
std::vector<Poly<F>> intersect_raw(const F& f, int nvars, const std::vector<Poly<F>>& a,
                                   const std::vector<Poly<F>>& b, const GbBudget& budget) {
    std::vector<Poly<F>> gens;
    Exps te(nvars + 1, 0);
    te[0] = 1;
    Poly<F> t = p_mono(f, nvars + 1, std::move(te), f.one());
    Poly<F> one_minus_t = p_sub(f, p_const(f, nvars + 1, f.one()), t);
    for (const auto& g : a) gens.push_back(p_mul(f, t, poly_add_var_front(g)));
    for (const auto& g : b) gens.push_back(p_mul(f, one_minus_t, poly_add_var_front(g)));
    return eliminate_raw(f, nvars + 1, gens, 1, budget);
}

// Saturation by the irrelevant ideal: the intersection over i of (I : T_i^inf).
// Output generators are re-split into homogeneous components (the ideal is
// homogeneous even when intermediate GB elements are not).
template <class F>
HomIdeal<F> saturate_irrelevant(const F& f, const HomIdeal<F>& ideal, const GbBudget& budget = {}) {
    int n = ideal.nvars;
    std::optional<std::vector<Poly<F>>> acc;
    for (int i = 0; i < n; ++i) {
        auto coloni = colon_var_power_raw(f, n, ideal.gens, i, budget);
        if (!acc)
            acc = std::move(coloni);
        else
            acc = intersect_raw(f, n, *acc, coloni, budget);
    }
    // split into homogeneous parts
    std::vector<Poly<F>> homog;
    for (const auto& g : *acc) {
        std::map<uint32_t, Poly<F>> parts;
        for (const auto& t : g.terms) {
            auto it = parts.find(t.deg);
            if (it == parts.end()) {
                Poly<F> p = p_zero<F>(n);
                p.terms.push_back(t);
                parts.emplace(t.deg, std::move(p));
            } else {
                it->second.terms.push_back(t);
            }
        }
        for (auto& [d, p] : parts) homog.push_back(std::move(p));
    }
    // tidy into a canonical reduced basis
    HomIdeal<F> raw = make_hom_ideal(f, n, std::move(homog));
    if (raw.gens.empty()) return raw;
    auto gb = groebner_basis(f, raw, MonomialOrder::grevlex(n), budget);
    return make_hom_ideal(f, n, gb.canonical(f));
}

template <class F>
bool ideal_is_unit(const F& f, const HomIdeal<F>& ideal, const GbBudget& budget = {}) {
    auto gb = groebner_basis(f, ideal, MonomialOrder::grevlex(ideal.nvars), budget);
    return gb_contains_constant(gb);
}

// ---- Jacobian criterion for complete intersections ----

struct SmoothCertificate {
    bool dim_ok = false;
    bool smooth = false;
    int expected_dim = 0;
    int computed_dim = 0;
};

// c x c minors of the Jacobian of the c given forms, plus the forms; empty
// projective vanishing certifies a smooth complete intersection of dimension
// nvars-1-c over the algebraic closure.
template <class F>
SmoothCertificate jacobian_smooth_certificate(const F& f, const HomIdeal<F>& ideal,
                                              const GbBudget& budget = {}) {
    SmoothCertificate cert;
    int n = ideal.nvars;
    int c = static_cast<int>(ideal.gens.size());
    cert.expected_dim = n - 1 - c;
    cert.computed_dim = projective_dimension(f, ideal, budget);
    cert.dim_ok = (cert.computed_dim == cert.expected_dim);
    if (c == 0) {
        cert.smooth = true; // ambient projective space
        return cert;
    }
    // Jacobian rows: gradients of the forms
    std::vector<std::vector<Poly<F>>> jac;
    for (const auto& g : ideal.gens) {
        std::vector<Poly<F>> row;
        for (int v = 0; v < n; ++v) row.push_back(p_derivative(f, g, v));
        jac.push_back(std::move(row));
    }
    // all c x c minors (column subsets), determinants by Laplace expansion
    std::vector<Poly<F>> sing = ideal.gens;
    std::vector<int> cols(c);
    std::function<void(int, int)> choose = [&](int start, int depth) {
        if (depth == c) {
            std::function<Poly<F>(std::vector<int>&, int)> det = [&](std::vector<int>& cset,
                                                                     int row) -> Poly<F> {
                if (row == c) return p_const(f, n, f.one());
                Poly<F> acc = p_zero<F>(n);
                for (std::size_t t = 0; t < cset.size(); ++t) {
                    int col = cset[t];
                    if (jac[row][col].is_zero()) continue;
                    std::vector<int> rest = cset;
                    rest.erase(rest.begin() + t);
                    Poly<F> sub = det(rest, row + 1);
                    Poly<F> contrib = p_mul(f, jac[row][col], sub);
                    if (t % 2) contrib = p_neg(f, contrib);
                    acc = p_add(f, acc, contrib);
                }
                return acc;
            };
            std::vector<int> cset(cols.begin(), cols.end());
            Poly<F> m = det(cset, 0);
            if (!m.is_zero()) sing.push_back(std::move(m));
            return;
        }
        for (int v = start; v < n; ++v) {
            cols[depth] = v;
            choose(v + 1, depth + 1);
        }
    };
    choose(0, 0);
    cert.smooth = is_projectively_empty(f, make_hom_ideal(f, n, std::move(sing)), budget);
    return cert;
}

// union of two ideals' generators (used for Y + Q_g style checks)
template <class F>
HomIdeal<F> ideal_sum(const F& f, const HomIdeal<F>& a, const HomIdeal<F>& b) {
    std::vector<Poly<F>> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return make_hom_ideal(f, a.nvars, std::move(gens));
}

} // namespace gsv
