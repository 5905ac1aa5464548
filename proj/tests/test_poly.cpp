#include "doctest.h"

#include "gsv/extension.hpp"
#include "gsv/poly_io.hpp"
#include "gsv/rng.hpp"

using namespace gsv;

namespace {

FpExt f5_plain() { return FpExt::trivial(PrimeField(5)); }

Poly<FpExt> parse5(const FpExt& f, const std::string& s, int nvars) {
    return parse_poly(f, s, VarNames::prefixed("T", nvars));
}

Poly<FpExt> random_poly(const FpExt& f, Rng& rng, int nvars, uint32_t maxdeg, int nterms) {
    Poly<FpExt> r = p_zero<FpExt>(nvars);
    for (int t = 0; t < nterms; ++t) {
        Exps e(nvars);
        for (auto& v : e) v = static_cast<uint32_t>(rng.below(maxdeg + 1));
        auto c = f.from_int(static_cast<long long>(rng.below(f.base().p())));
        r = p_add(f, r, p_mono(f, nvars, e, c));
    }
    return r;
}

Matrix<PrimeField> random_matrix(const PrimeField& k, Rng& rng, int n) {
    Matrix<PrimeField> m(k, n, n);
    for (auto& v : m.a) v = k.from_int(static_cast<long long>(rng.below(k.p())));
    return m;
}

} // namespace

TEST_CASE("substitution examples") {
    FpExt f = f5_plain();
    PrimeField k = f.base();

    // swap matrix sends T0 to T1
    Matrix<PrimeField> sw(k, 2, 2);
    sw.at(0, 1) = k.one();
    sw.at(1, 0) = k.one();
    auto t0 = parse5(f, "T0", 2);
    CHECK(format_poly(f, substitute_linear(f, t0, sw), VarNames::prefixed("T", 2)) == "T1");

    // identity fixes T0^2
    auto sq = parse5(f, "T0^2", 2);
    CHECK(p_eq(f, substitute_linear(f, sq, Matrix<PrimeField>::identity(k, 2)), sq));

    // f = T0*T1, M = [[1,1],[0,1]] gives T0^2 + T0*T1
    Matrix<PrimeField> m(k, 2, 2);
    m.at(0, 0) = k.one();
    m.at(0, 1) = k.one();
    m.at(1, 1) = k.one();
    auto prod = parse5(f, "T0*T1", 2);
    CHECK(format_poly(f, substitute_linear(f, prod, m), VarNames::prefixed("T", 2)) ==
          "T0^2 + T0*T1");
}

TEST_CASE("twist examples") {
    // i*T0 over Q(i) twisted by conjugation = -i*T0
    RationalField q;
    auto m = up_from_ints(q, {1, 0, 1});
    QExt qi = QExt::make_galois(q, m, {QExt::Elem{q.from_int(0), q.from_int(1)},
                                       QExt::Elem{q.from_int(0), q.from_int(-1)}},
                                FiniteGroup::cyclic(2));
    auto f = parse_poly(qi, "x*T0", VarNames::prefixed("T", 1));
    auto tw = twist_coefficients(qi, f, 1);
    CHECK(format_poly(qi, tw, VarNames::prefixed("T", 1)) == "-x*T0");
    // identity twist
    CHECK(p_eq(qi, twist_coefficients(qi, f, 0), f));
}

TEST_CASE("monomial basis order and counts") {
    auto b1 = monomial_basis(2, 1);
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == Exps{1, 0});
    CHECK(b1[1] == Exps{0, 1});
    auto b2 = monomial_basis(2, 2);
    REQUIRE(b2.size() == 3);
    CHECK(b2[0] == Exps{2, 0});
    CHECK(b2[1] == Exps{1, 1});
    CHECK(b2[2] == Exps{0, 2});
    CHECK(monomial_basis(6, 2).size() == 21);
    CHECK(mono_count(6, 2) == 21);
    // ranks match positions
    auto b = monomial_basis(4, 5);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(mono_rank(b[i]) == i);
}

TEST_CASE("substitution composes contravariantly (row-vector convention)") {
    FpExt f = f5_plain();
    PrimeField k = f.base();
    Rng rng(17);
    for (int it = 0; it < 10; ++it) {
        int n = 3;
        auto poly = random_poly(f, rng, n, 2, 4);
        auto M = random_matrix(k, rng, n);
        auto N = random_matrix(k, rng, n);
        auto lhs = substitute_linear(f, poly, mat_mul(k, M, N));
        auto rhs = substitute_linear(f, substitute_linear(f, poly, N), M);
        CHECK(p_eq(f, lhs, rhs));
    }
}

TEST_CASE("twist commutes with substitution over k") {
    PrimeField f5(5);
    auto mod = up_from_ints(f5, {2, 0, 1}); // x^2+2 irreducible over F_5
    auto x = up_from_ints(f5, {0, 1});
    auto x5 = up_powmod(f5, x, 5, mod);
    FpExt::Elem id{f5.zero(), f5.one()}, fr{x5[0], x5.size() > 1 ? x5[1] : f5.zero()};
    FpExt f25 = FpExt::make_galois(f5, mod, {id, fr}, FiniteGroup::cyclic(2));
    Rng rng(23);
    for (int it = 0; it < 10; ++it) {
        int n = 2;
        Poly<FpExt> poly = p_zero<FpExt>(n);
        for (int t = 0; t < 4; ++t) {
            Exps e{static_cast<uint32_t>(rng.below(3)), static_cast<uint32_t>(rng.below(3))};
            FpExt::Elem c{f5.from_int(static_cast<long long>(rng.below(5))),
                          f5.from_int(static_cast<long long>(rng.below(5)))};
            poly = p_add(f25, poly, p_mono(f25, n, e, c));
        }
        auto M = random_matrix(f5, rng, n);
        auto a = twist_coefficients(f25, substitute_linear(f25, poly, M), 1);
        auto b = substitute_linear(f25, twist_coefficients(f25, poly, 1), M);
        CHECK(p_eq(f25, a, b));
    }
}

TEST_CASE("substitution agrees with evaluation at random points") {
    FpExt f = f5_plain();
    PrimeField k = f.base();
    Rng rng(31);
    for (int it = 0; it < 20; ++it) {
        int n = 3;
        auto poly = random_poly(f, rng, n, 2, 5);
        auto M = random_matrix(k, rng, n);
        std::vector<FpExt::Elem> v;
        for (int i = 0; i < n; ++i) v.push_back(f.from_int(static_cast<long long>(rng.below(5))));
        // (sub f M)(v) = f(v * M)
        std::vector<FpExt::Elem> vM(n, f.zero());
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                vM[j] = f.add(vM[j], f.mul(v[i], f.from_base(M.at(i, j))));
        CHECK(f.eq(p_eval(f, substitute_linear(f, poly, M), v), p_eval(f, poly, vM)));
    }
}

TEST_CASE("parse/print round trip") {
    FpExt f = f5_plain();
    Rng rng(41);
    VarNames tv = VarNames::prefixed("T", 3);
    for (int it = 0; it < 30; ++it) {
        auto poly = random_poly(f, rng, 3, 3, 6);
        auto text = format_poly(f, poly, tv);
        CHECK(p_eq(f, parse_poly(f, text, tv), poly));
    }
    // extension coefficients round trip too
    PrimeField f5(5);
    auto mod = up_from_ints(f5, {2, 0, 1});
    auto x = up_from_ints(f5, {0, 1});
    auto x5 = up_powmod(f5, x, 5, mod);
    FpExt f25 = FpExt::make_galois(
        f5, mod, {FpExt::Elem{f5.zero(), f5.one()}, FpExt::Elem{x5[0], x5[1]}}, FiniteGroup::cyclic(2));
    auto p = parse_poly(f25, "(1+2*x)*T0^2 + 3*x*T0*T1 + 4", VarNames::prefixed("T", 2));
    CHECK(format_poly(f25, p, VarNames::prefixed("T", 2)) == "(1+2*x)*T0^2 + 3*x*T0*T1 + 4");
}

TEST_CASE("homogeneity predicate") {
    FpExt f = f5_plain();
    CHECK(parse5(f, "T0^2 + T0*T1", 2).is_homogeneous());
    CHECK(!parse5(f, "T0^2 + T1", 2).is_homogeneous());
}
