#include "doctest.h"

#include "gsv/action.hpp"
#include "gsv/poly_io.hpp"
#include "gsv/rng.hpp"
#include "helpers.hpp"

using namespace gsv;
using namespace gsv::testing;

namespace {

// independent oracle: k-dimension of the simultaneous fixed space of all
// stacked (A_g - I), coordinates as in poly_to_kvec
template <class K>
uint64_t invariant_dim_bruteforce(const ActionContext<K>& ctx, uint32_t d) {
    const auto& f = ctx.field();
    int n = ctx.nvars(), dg = f.degree();
    auto monos = monomial_basis(n, d);
    std::size_t width = monos.size() * dg;
    // rows of the stacked matrix (one block per group element)
    Echelon<K> ech(f.base(), width);
    for (int g = 0; g < ctx.group().size(); ++g) {
        // column (m, c): image of b_c T^alpha_m minus itself
        std::vector<std::vector<typename K::Elem>> cols(width);
        for (std::size_t m = 0; m < monos.size(); ++m)
            for (int c = 0; c < dg; ++c) {
                typename Extension<K>::Elem bc(dg, f.base().zero());
                bc[c] = f.base().one();
                auto img = act(ctx, g, p_mono(f, n, monos[m], bc));
                auto v = poly_to_kvec(f, img, d, width);
                v[m * dg + c] = f.base().sub(v[m * dg + c], f.base().one());
                cols[m * dg + c] = std::move(v);
            }
        // transpose into rows of (A_g - I)^T; rank is unaffected, kernel is
        // computed on the stacked row space instead
        for (std::size_t r = 0; r < width; ++r) {
            std::vector<typename K::Elem> row(width);
            for (std::size_t cidx = 0; cidx < width; ++cidx) row[cidx] = cols[cidx][r];
            ech.push_row(std::move(row));
        }
    }
    return width - ech.rank();
}

} // namespace

TEST_CASE("act: swap sends T0 to T1, identity fixes everything") {
    auto ctx = swap_ctx(1);
    auto a = ctx->actx();
    const auto& f = a.field();
    auto t0 = parse_poly(f, "T0", VarNames::prefixed("T", 2));
    CHECK(format_poly(f, act(a, 1, t0), VarNames::prefixed("T", 2)) == "T1");
    CHECK(p_eq(f, act(a, 0, t0), t0));
}

TEST_CASE("act over Q(i) with the regular Z/4 rep: formula and associativity") {
    RationalField q;
    auto ext = qi();
    GroupExtension ge;
    ge.G = FiniteGroup::cyclic(2);
    ge.E = FiniteGroup::cyclic(4);
    ge.Gamma = FiniteGroup::cyclic(2);
    ge.iota.image = {0, 2};
    ge.pi.image = {0, 1, 0, 1};
    ge.rebind();
    auto rep = regular_rep(q, ge.E);
    Ctx<RationalField> c(std::move(ext), std::move(ge), std::move(rep));
    auto a = c.actx();
    const auto& f = a.field();

    auto fpoly = parse_poly(f, "x*T0", VarNames::prefixed("T", 4));
    auto once = act(a, 1, fpoly);
    // coefficient i gets conjugated and the variable moves along the permutation
    REQUIRE(once.terms.size() == 1);
    CHECK(f.eq(once.terms.front().c, f.neg(f.generator())));
    // associativity: e*(e*f) = e^2 * f
    CHECK(p_eq(f, act(a, 1, once), act(a, 2, fpoly)));
    // identities act trivially
    CHECK(p_eq(f, act(a, 0, fpoly), fpoly));
}

TEST_CASE("action axioms hold exhaustively over the group, random polys") {
    auto ctx = z4_twist_ctx(1);
    auto a = ctx->actx();
    const auto& f = a.field();
    Rng rng(5);
    for (int it = 0; it < 5; ++it) {
        Poly<FpExt> poly = p_zero<FpExt>(2);
        for (int t = 0; t < 4; ++t) {
            Exps e{static_cast<uint32_t>(rng.below(3)), static_cast<uint32_t>(rng.below(3))};
            FpExt::Elem c{f.base().from_int(static_cast<long long>(rng.below(5))),
                          f.base().from_int(static_cast<long long>(rng.below(5)))};
            poly = p_add(f, poly, p_mono(f, 2, e, c));
        }
        for (int g = 0; g < 4; ++g)
            for (int h = 0; h < 4; ++h)
                CHECK(p_eq(f, act(a, g, act(a, h, poly)), act(a, a.group().mul(g, h), poly)));
        // multiplicativity
        auto other = parse_poly(f, "T0 + x*T1", VarNames::prefixed("T", 2));
        for (int g = 0; g < 4; ++g)
            CHECK(p_eq(f, act(a, g, p_mul(f, poly, other)),
                       p_mul(f, act(a, g, poly), act(a, g, other))));
    }
}

TEST_CASE("reynolds examples") {
    auto ctx = swap_ctx(1);
    auto a = ctx->actx();
    const auto& f = a.field();
    VarNames tv = VarNames::prefixed("T", 2);
    // swap: R(T0) = (T0+T1)/2 = 3*(T0+T1) over F_5
    auto r = reynolds(a, parse_poly(f, "T0", tv));
    CHECK(format_poly(f, r, tv) == "3*T0 + 3*T1");
    // projector: R(R(f)) = R(f), and the image is fixed
    auto rr = reynolds(a, r);
    CHECK(p_eq(f, rr, r));
    CHECK(p_eq(f, act(a, 1, r), r));
    // already-invariant input is returned unchanged
    auto inv = parse_poly(f, "T0*T1", tv);
    CHECK(p_eq(f, reynolds(a, inv), inv));
}

TEST_CASE("reynolds kills anti-invariants of the pure Galois action") {
    // Gamma = Z/2 acting only by conjugation on one variable over Q(i)
    RationalField q;
    auto ext = qi();
    auto ge = galois_extension_group(FiniteGroup::cyclic(2));
    Rep<RationalField> triv;
    triv.dim = 1;
    triv.mats = {Matrix<RationalField>::identity(q, 1), Matrix<RationalField>::identity(q, 1)};
    Ctx<RationalField> c(std::move(ext), std::move(ge), std::move(triv));
    auto a = c.actx();
    const auto& f = a.field();
    auto r = reynolds(a, parse_poly(f, "x*T0", VarNames::prefixed("T", 1)));
    CHECK(r.is_zero());
}

TEST_CASE("modular characteristic is refused") {
    PrimeField k(2);
    auto ext = FpExt::trivial(k);
    auto ge = linear_extension(FiniteGroup::cyclic(2));
    auto rep = regular_rep(k, ge.E);
    Ctx<PrimeField> c(std::move(ext), std::move(ge), std::move(rep));
    auto a = c.actx();
    CHECK_THROWS_WITH_AS(reynolds(a, parse_poly(a.field(), "T0", VarNames::prefixed("T", 2))),
                         doctest::Contains("modular-characteristic"), Error);
}

TEST_CASE("invariant basis: trivial group gives the full space") {
    PrimeField k(5);
    auto ext = FpExt::trivial(k);
    auto ge = linear_extension(FiniteGroup::cyclic(1));
    Rep<PrimeField> rep;
    rep.dim = 2;
    rep.mats = {Matrix<PrimeField>::identity(k, 2)};
    Ctx<PrimeField> c(std::move(ext), std::move(ge), std::move(rep));
    auto qmd = invariant_basis(c.actx(), 1);
    REQUIRE(qmd.fs.size() == 2);
    CHECK(format_poly(c.ext, qmd.fs[0], VarNames::prefixed("T", 2)) == "T0");
    CHECK(format_poly(c.ext, qmd.fs[1], VarNames::prefixed("T", 2)) == "T1");
}

TEST_CASE("invariant basis: swap on 2 vars, degree 2") {
    auto ctx = swap_ctx(1);
    auto qmd = invariant_basis(ctx->actx(), 2);
    REQUIRE(qmd.fs.size() == 2);
    // span must contain T0^2+T1^2 and T0*T1; RREF basis is {T0^2+T1^2, T0*T1}
    const auto& f = ctx->ext;
    VarNames tv = VarNames::prefixed("T", 2);
    CHECK(format_poly(f, qmd.fs[0], tv) == "T0^2 + T1^2");
    CHECK(format_poly(f, qmd.fs[1], tv) == "T0*T1");
}

TEST_CASE("invariant basis: block swap on 6 vars has the pinned dimension 12") {
    auto ctx = swap_ctx(3);
    CHECK(invariant_dimension(ctx->actx(), 2) == 12);
    auto qmd = invariant_basis(ctx->actx(), 2);
    CHECK(qmd.fs.size() == 12);
    // every basis element is genuinely invariant
    for (const auto& fpoly : qmd.fs) CHECK(p_eq(ctx->ext, act(ctx->actx(), 1, fpoly), fpoly));
}

TEST_CASE("invariant dimensions match the stacked-kernel oracle") {
    for (uint32_t d = 1; d <= 4; ++d) {
        auto c1 = swap_ctx(1);
        CHECK(invariant_dimension(c1->actx(), d) == invariant_dim_bruteforce(c1->actx(), d));
        auto c2 = frobenius_swap_ctx(1);
        CHECK(invariant_dimension(c2->actx(), d) == invariant_dim_bruteforce(c2->actx(), d));
        auto c3 = z4_twist_ctx(1);
        CHECK(invariant_dimension(c3->actx(), d) == invariant_dim_bruteforce(c3->actx(), d));
    }
}

TEST_CASE("generation certificate: trivial group passes at d=1") {
    PrimeField k(5);
    auto ext = FpExt::trivial(k);
    auto ge = linear_extension(FiniteGroup::cyclic(1));
    Rep<PrimeField> rep;
    rep.dim = 2;
    rep.mats = {Matrix<PrimeField>::identity(k, 2)};
    Ctx<PrimeField> c(std::move(ext), std::move(ge), std::move(rep));
    auto qmd = invariant_basis(c.actx(), 1);
    auto cert = generation_certificate(c.actx(), qmd, 2);
    CHECK(cert.pass);
}

TEST_CASE("generation certificate: swap invariants generate from degree 2") {
    auto ctx = swap_ctx(1);
    auto qmd = invariant_basis(ctx->actx(), 2);
    auto cert = generation_certificate(ctx->actx(), qmd, 3);
    CHECK(cert.pass);
    REQUIRE(cert.rows.size() == 2);
    CHECK(cert.rows[0].degree == 4);
    CHECK(cert.rows[0].target_dim == 3); // {(T0^2+T1^2)^2, (T0^2+T1^2)T0T1, (T0T1)^2}
    CHECK(cert.rows[1].degree == 6);
}

TEST_CASE("generation certificate: sign action fails at j=2 for d=1") {
    PrimeField k(5);
    auto ext = FpExt::trivial(k);
    auto ge = linear_extension(FiniteGroup::cyclic(2));
    Matrix<PrimeField> sign(k, 1, 1);
    sign.at(0, 0) = k.from_int(-1);
    Rep<PrimeField> rep;
    rep.dim = 1;
    rep.mats = {Matrix<PrimeField>::identity(k, 1), sign};
    Ctx<PrimeField> c(std::move(ext), std::move(ge), std::move(rep));
    auto qmd = invariant_basis(c.actx(), 1);
    CHECK(qmd.fs.empty()); // odd-degree invariants vanish
    auto cert = generation_certificate(c.actx(), qmd, 2);
    CHECK(!cert.pass);
    REQUIRE(!cert.rows.empty());
    CHECK(cert.rows[0].degree == 2);
    CHECK(cert.rows[0].target_dim == 1);
    CHECK(cert.rows[0].achieved == 0);
    // at d=2 the certificate passes: invariants are k[T0^2]
    auto qmd2 = invariant_basis(c.actx(), 2);
    REQUIRE(qmd2.fs.size() == 1);
    CHECK(generation_certificate(c.actx(), qmd2, 3).pass);
}

TEST_CASE("descent dimension identity on twisted contexts") {
    // G = 1, E = Gamma = Z/2 Frobenius on F_25, regular rep: both sides count
    // the full polynomial ring
    auto ctx = frobenius_swap_ctx(1);
    for (uint32_t d = 1; d <= 4; ++d) {
        auto lhs = g_invariant_dimension_kprime(ctx->actx(), d);
        auto rhs = invariant_dimension(ctx->actx(), d);
        CHECK(lhs == mono_count(2, d));
        CHECK(lhs == rhs);
    }
    // nontrivial G inside Z/4 over Gal(F_25|F_5)
    auto c4 = z4_twist_ctx(1);
    for (uint32_t d = 1; d <= 4; ++d)
        CHECK(g_invariant_dimension_kprime(c4->actx(), d) == invariant_dimension(c4->actx(), d));
    // Gamma trivial: the two sides agree by definition
    auto cs = swap_ctx(1);
    for (uint32_t d = 1; d <= 3; ++d)
        CHECK(g_invariant_dimension_kprime(cs->actx(), d) == invariant_dimension(cs->actx(), d));
}
