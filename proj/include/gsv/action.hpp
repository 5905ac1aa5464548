#pragma once

#include <optional>

#include "gsv/extension.hpp"
#include "gsv/groups.hpp"
#include "gsv/modp_echelon.hpp"
#include "gsv/poly.hpp"
#include "gsv/rep.hpp"
#include "gsv/util.hpp"

namespace gsv {

// The semilinear action of the finite group E on k'[T_0..T_n]:
//   (g f)(T) = pi(g)( f(T * tau(g)) )
// act() is the public operation; the invariant-space computations run through
// cached per-element substitution tables and the dense mod-p echelon.

template <class K>
struct ActionContext {
    const Extension<K>* ext = nullptr;
    const GroupExtension* ge = nullptr;
    const Rep<K>* rep = nullptr;

    const Extension<K>& field() const { return *ext; }
    const FiniteGroup& group() const { return ge->E; }
    int nvars() const { return rep->dim; }
};

template <class K>
Poly<Extension<K>> act(const ActionContext<K>& ctx, int g, const Poly<Extension<K>>& f) {
    auto sub = substitute_linear(ctx.field(), f, ctx.rep->mats[g]);
    return twist_coefficients(ctx.field(), std::move(sub), ctx.ge->pi(g));
}

template <class K>
void require_nonmodular(const ActionContext<K>& ctx) {
    uint64_t ch = ctx.field().characteristic();
    if (ch != 0 && static_cast<uint64_t>(ctx.group().size()) % ch == 0)
        fail(ErrKind::Validation, "modular-characteristic",
             "characteristic divides the group order; the averaging projector does not exist");
}

// Reynolds projector R = |E|^{-1} sum_g g.(-)
template <class K>
Poly<Extension<K>> reynolds(const ActionContext<K>& ctx, const Poly<Extension<K>>& f) {
    require_nonmodular(ctx);
    const auto& kk = ctx.field();
    Poly<Extension<K>> acc = p_zero<Extension<K>>(f.nvars);
    for (int g = 0; g < ctx.group().size(); ++g) acc = p_add(kk, acc, act(ctx, g, f));
    auto scale = kk.inv(kk.from_int(ctx.group().size()));
    return p_scale(kk, std::move(acc), scale);
}

namespace actdetail {

// Monomial images under T -> T*tau(g) with persisted power caches; single
// term matrices (permutation or diagonal) stay single term throughout.
template <class K>
class SubstCache {
public:
    SubstCache(const Extension<K>& f, const Matrix<K>& m) : f_(f), n_(m.nr) {
        img_.reserve(n_);
        for (int j = 0; j < n_; ++j) {
            TermMap<Extension<K>> acc;
            for (int i = 0; i < n_; ++i) {
                if (f.base().is_zero(m.at(i, j))) continue;
                Exps e(n_, 0);
                e[i] = 1;
                acc.emplace(std::move(e), f.from_base(m.at(i, j)));
            }
            img_.push_back(poly_from_map(f, n_, std::move(acc)));
        }
        pow_.resize(n_);
    }

    Poly<Extension<K>> apply(const Exps& e) {
        Poly<Extension<K>> prod = p_const(f_, n_, f_.one());
        for (int j = 0; j < n_; ++j)
            if (e[j]) prod = p_mul(f_, prod, power(j, e[j]));
        return prod;
    }

private:
    const Poly<Extension<K>>& power(int j, uint32_t e) {
        auto& cache = pow_[j];
        if (cache.empty()) cache.push_back(p_const(f_, n_, f_.one()));
        while (cache.size() <= e) cache.push_back(p_mul(f_, cache.back(), img_[j]));
        return cache[e];
    }
    const Extension<K>& f_;
    int n_;
    std::vector<Poly<Extension<K>>> img_;
    std::vector<std::vector<Poly<Extension<K>>>> pow_;
};

} // namespace actdetail

// k-linear coordinates of a homogeneous degree-d polynomial over k': index =
// mono_rank * [k':k] + power-basis slot.
template <class K>
std::vector<typename K::Elem> poly_to_kvec(const Extension<K>& f, const Poly<Extension<K>>& p,
                                           uint32_t d, std::size_t width) {
    std::vector<typename K::Elem> v(width, f.base().zero());
    int dg = f.degree();
    for (const auto& t : p.terms) {
        if (t.deg != d) fail(ErrKind::Internal, "inhomogeneous", "coordinate map needs degree-d input");
        std::size_t base = static_cast<std::size_t>(mono_rank(t.e)) * dg;
        for (int c = 0; c < dg; ++c) v[base + c] = t.c[c];
    }
    return v;
}

template <class K>
Poly<Extension<K>> kvec_to_poly(const Extension<K>& f, const std::vector<typename K::Elem>& v,
                                int nvars, uint32_t d, const std::vector<Exps>& monos) {
    int dg = f.degree();
    Poly<Extension<K>> p = p_zero<Extension<K>>(nvars);
    for (std::size_t m = 0; m < monos.size(); ++m) {
        typename Extension<K>::Elem c(dg, f.base().zero());
        bool nz = false;
        for (int i = 0; i < dg; ++i) {
            c[i] = v[m * dg + i];
            if (!f.base().is_zero(c[i])) nz = true;
        }
        if (nz) p.terms.push_back({d, monos[m], std::move(c)});
    }
    return p;
}

// Echelon over the base field k with the SIMD fast path for small primes.
template <class K>
class BaseEchelon {
public:
    BaseEchelon(const K& k, std::size_t width) : k_(k), width_(width) {
        if constexpr (std::is_same_v<K, PrimeField>) {
            if (k.p() < (1u << 15)) fast_.emplace(k.p(), width);
        }
        if (!fast_) slow_.emplace(k_, width);
    }

    bool push_row(const std::vector<typename K::Elem>& row) {
        if (fast_) {
            std::vector<uint16_t> r(width_);
            for (std::size_t i = 0; i < width_; ++i) r[i] = static_cast<uint16_t>(row[i]);
            return fast_->push_row(std::move(r));
        }
        return slow_->push_row(row);
    }

    std::size_t rank() const { return fast_ ? fast_->rank() : slow_->rank(); }

    // canonical RREF rows ordered by pivot column
    std::vector<std::vector<typename K::Elem>> rref_rows() {
        std::vector<std::vector<typename K::Elem>> out;
        if (fast_) {
            fast_->to_rref();
            for (std::size_t i : fast_->sorted_rows()) {
                std::vector<typename K::Elem> row(width_);
                for (std::size_t j = 0; j < width_; ++j)
                    row[j] = static_cast<typename K::Elem>(fast_->row(i)[j]);
                out.push_back(std::move(row));
            }
            return out;
        }
        slow_->to_rref();
        auto rows = slow_->rows();
        std::vector<std::size_t> order(rows.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return slow_->pivots()[a] < slow_->pivots()[b];
        });
        for (std::size_t i : order) out.push_back(rows[i]);
        return out;
    }

private:
    const K& k_;
    std::size_t width_;
    std::optional<ModpEchelon> fast_;
    std::optional<Echelon<K>> slow_;
};

struct GenCertRow {
    uint32_t degree = 0;
    uint64_t target_dim = 0;
    uint64_t achieved = 0;
    bool pass = false;
};

struct GenCertificate {
    bool pass = false;
    uint32_t d = 0;
    int J = 0;
    std::vector<GenCertRow> rows;
};

template <class K>
struct QuotientMapData {
    uint32_t d = 0;
    std::vector<Poly<Extension<K>>> fs; // k-basis of the degree-d invariants
    GenCertificate gen_cert;
    int s() const { return static_cast<int>(fs.size()) - 1; }
};

namespace actdetail {

// Pushes the Reynolds image of every spanning element b_c * T^alpha of
// degree d into the echelon; returns the monomial list for reconstruction.
template <class K>
std::vector<Exps> reynolds_span(const ActionContext<K>& ctx, uint32_t d, BaseEchelon<K>& ech) {
    const auto& f = ctx.field();
    const auto& e = ctx.group();
    int n = ctx.nvars();
    int dg = f.degree();
    std::size_t width = static_cast<std::size_t>(mono_count(n, d)) * dg;

    std::vector<SubstCache<K>> subst;
    subst.reserve(e.size());
    for (int g = 0; g < e.size(); ++g) subst.emplace_back(f, ctx.rep->mats[g]);

    auto monos = monomial_basis(n, d);
    auto inv_order = f.inv(f.from_int(e.size()));
    for (const auto& alpha : monos) {
        // images of T^alpha under every group element, coefficient twist applied last
        std::vector<Poly<Extension<K>>> imgs;
        imgs.reserve(e.size());
        for (int g = 0; g < e.size(); ++g) imgs.push_back(subst[g].apply(alpha));
        for (int c = 0; c < dg; ++c) {
            typename Extension<K>::Elem bc(dg, f.base().zero());
            bc[c] = f.base().one();
            Poly<Extension<K>> acc = p_zero<Extension<K>>(n);
            for (int g = 0; g < e.size(); ++g) {
                auto coeff = f.apply_auto(ctx.ge->pi(g), bc);
                acc = p_add(f, acc, p_scale(f, imgs[g], coeff));
            }
            acc = p_scale(f, std::move(acc), inv_order);
            if (acc.is_zero()) continue;
            ech.push_row(poly_to_kvec(f, acc, d, width));
        }
    }
    return monos;
}

} // namespace actdetail

// k-dimension of the degree-d invariant space under the full semilinear
// action.
template <class K>
uint64_t invariant_dimension(const ActionContext<K>& ctx, uint32_t d) {
    require_nonmodular(ctx);
    const auto& f = ctx.field();
    std::size_t width = static_cast<std::size_t>(mono_count(ctx.nvars(), d)) * f.degree();
    BaseEchelon<K> ech(f.base(), width);
    actdetail::reynolds_span(ctx, d, ech);
    return ech.rank();
}

// Canonical k-basis of the degree-d invariant space (RREF pivots in the
// documented coordinate order). Degree 0 returns {1}.
template <class K>
QuotientMapData<K> invariant_basis(const ActionContext<K>& ctx, uint32_t d) {
    require_nonmodular(ctx);
    const auto& f = ctx.field();
    QuotientMapData<K> out;
    out.d = d;
    if (d == 0) {
        out.fs.push_back(p_const(f, ctx.nvars(), f.one()));
        return out;
    }
    std::size_t width = static_cast<std::size_t>(mono_count(ctx.nvars(), d)) * f.degree();
    BaseEchelon<K> ech(f.base(), width);
    auto monos = actdetail::reynolds_span(ctx, d, ech);
    for (auto& row : ech.rref_rows())
        out.fs.push_back(kvec_to_poly(f, row, ctx.nvars(), d, monos));
    return out;
}

// Verifies A_{jd} = A_d * A_{(j-1)d} for j = 2..J by rank saturation of the
// multiplication map image inside the invariant space. Failure is an
// outcome, not an error; the pipeline escalates d.
template <class K>
GenCertificate generation_certificate(const ActionContext<K>& ctx, const QuotientMapData<K>& qmd,
                                      int J) {
    if (J < 2) fail(ErrKind::Validation, "bad-gen-j", "generation certificate needs J >= 2");
    require_nonmodular(ctx);
    const auto& f = ctx.field();
    GenCertificate cert;
    cert.d = qmd.d;
    cert.J = J;
    cert.pass = true;

    std::vector<Poly<Extension<K>>> prev = qmd.fs; // basis of A_{(j-1)d}
    for (int j = 2; j <= J; ++j) {
        uint32_t deg = qmd.d * static_cast<uint32_t>(j);
        GenCertRow row;
        row.degree = deg;
        auto next_basis = invariant_basis(ctx, deg);
        row.target_dim = next_basis.fs.size();

        std::size_t width = static_cast<std::size_t>(mono_count(ctx.nvars(), deg)) * f.degree();
        BaseEchelon<K> ech(f.base(), width);
        std::size_t rank = 0;
        for (std::size_t l = 0; l < prev.size() && rank < row.target_dim; ++l)
            for (std::size_t i = 0; i < qmd.fs.size() && rank < row.target_dim; ++i) {
                auto prod = p_mul(f, qmd.fs[i], prev[l]);
                if (prod.is_zero()) continue;
                if (ech.push_row(poly_to_kvec(f, prod, deg, width))) ++rank;
            }
        row.achieved = rank;
        row.pass = (rank == row.target_dim);
        if (!row.pass) cert.pass = false;
        cert.rows.push_back(row);
        if (!cert.pass) break;
        prev = std::move(next_basis.fs);
    }
    return cert;
}

// k'-dimension of the degree-d G-invariants (the action restricted to
// ker(pi) is k'-linear); one side of the descent identity.
template <class K>
uint64_t g_invariant_dimension_kprime(const ActionContext<K>& ctx, uint32_t d) {
    const auto& f = ctx.field();
    const auto& ge = *ctx.ge;
    int n = ctx.nvars();
    std::vector<int> gelems;
    for (int i = 0; i < ge.G.size(); ++i) gelems.push_back(ge.iota(i));
    uint64_t ch = f.characteristic();
    if (ch != 0 && static_cast<uint64_t>(gelems.size()) % ch == 0)
        fail(ErrKind::Validation, "modular-characteristic", "averaging over G needs char not dividing |G|");

    std::vector<actdetail::SubstCache<K>> subst;
    for (int g : gelems) subst.emplace_back(f, ctx.rep->mats[g]);
    auto monos = monomial_basis(n, d);
    auto inv_order = f.inv(f.from_int(static_cast<long long>(gelems.size())));

    Echelon<Extension<K>> ech(f, monos.size());
    for (const auto& alpha : monos) {
        Poly<Extension<K>> acc = p_zero<Extension<K>>(n);
        for (auto& sc : subst) acc = p_add(f, acc, sc.apply(alpha));
        acc = p_scale(f, std::move(acc), inv_order);
        if (acc.is_zero()) continue;
        std::vector<typename Extension<K>::Elem> row(monos.size(), f.zero());
        for (const auto& t : acc.terms) row[mono_rank(t.e)] = t.c;
        ech.push_row(std::move(row));
    }
    return ech.rank();
}

} // namespace gsv
