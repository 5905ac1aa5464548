#include "doctest.h"

#include "gsv/prime_field.hpp"
#include "gsv/rep.hpp"

using namespace gsv;

namespace {
PrimeField f5() { return PrimeField(5); }
}

TEST_CASE("regular rep of Z/2 is the swap") {
    auto k = f5();
    auto e = FiniteGroup::cyclic(2);
    auto rep = regular_rep(k, e);
    validate_rep(k, e, rep);
    CHECK(rep.dim == 2);
    CHECK(k.eq(rep.mats[1].at(0, 1), k.one()));
    CHECK(k.eq(rep.mats[1].at(1, 0), k.one()));
    CHECK(k.is_zero(rep.mats[1].at(0, 0)));
    CHECK(nonscalar_faithful_check(k, e, rep).pass);
}

TEST_CASE("regular rep of Z/4: generator is a 4-cycle") {
    auto k = f5();
    auto e = FiniteGroup::cyclic(4);
    auto rep = regular_rep(k, e);
    validate_rep(k, e, rep);
    int ones = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!k.is_zero(rep.mats[1].at(i, j))) {
                CHECK(j == (i + 1) % 4);
                ++ones;
            }
    CHECK(ones == 4);
}

TEST_CASE("sum_copies dimensions: n-tilde = m(n+1) - 1") {
    auto k = f5();
    auto e = FiniteGroup::cyclic(4);
    auto rep = regular_rep(k, e);
    auto boosted = sum_copies(k, rep, 2);
    CHECK(boosted.dim == 8); // (n+1)=4, m=2 -> 8, n-tilde = 7
    validate_rep(k, e, boosted);
    // m = 1 returns the same rep
    auto same = sum_copies(k, rep, 1);
    CHECK(mat_eq(k, same.mats[1], rep.mats[1]));
    // three swaps block-diagonal
    auto sw3 = sum_copies(k, regular_rep(k, FiniteGroup::cyclic(2)), 3);
    CHECK(sw3.dim == 6);
    CHECK(k.eq(sw3.mats[1].at(4, 5), k.one()));
    CHECK(k.is_zero(sw3.mats[1].at(0, 5)));
}

TEST_CASE("rotation rep of Z/4 over F_5 fails the nonscalar check at g^2") {
    auto k = f5();
    auto e = FiniteGroup::cyclic(4);
    Matrix<PrimeField> rot(k, 2, 2);
    rot.at(0, 1) = k.one();
    rot.at(1, 0) = k.from_int(-1);
    auto rep = rep_from_generators(k, e, {{1, rot}});
    validate_rep(k, e, rep);
    auto c = nonscalar_faithful_check(k, e, rep);
    CHECK(!c.pass);
    CHECK(c.witness == 2); // g^2 = -I
}

TEST_CASE("diag(2,1) rep of Z/4 over F_5 passes") {
    auto k = f5();
    auto e = FiniteGroup::cyclic(4);
    Matrix<PrimeField> d(k, 2, 2);
    d.at(0, 0) = k.from_int(2);
    d.at(1, 1) = k.one();
    auto rep = rep_from_generators(k, e, {{1, d}});
    CHECK(nonscalar_faithful_check(k, e, rep).pass);
    // powers diag(4,1), diag(3,1) nonscalar and distinct
    CHECK(k.eq(rep.mats[2].at(0, 0), k.from_int(4)));
    CHECK(k.eq(rep.mats[3].at(0, 0), k.from_int(3)));
}

TEST_CASE("inconsistent generator matrices are rejected") {
    auto k = f5();
    auto e = FiniteGroup::cyclic(4);
    // contradictory assignment: tau(2) != tau(1)^2
    Matrix<PrimeField> d(k, 2, 2);
    d.at(0, 0) = k.from_int(2);
    d.at(1, 1) = k.one();
    Matrix<PrimeField> wrong(k, 2, 2);
    wrong.at(0, 0) = k.from_int(3);
    wrong.at(1, 1) = k.one();
    CHECK_THROWS_WITH_AS(rep_from_generators(k, e, {{1, d}, {2, wrong}}),
                         doctest::Contains("rep-not-hom"), Error);

    // an involution on the Z/4 generator completes to a hom, but an unfaithful one
    Matrix<PrimeField> invol(k, 2, 2);
    invol.at(0, 1) = k.one();
    invol.at(1, 0) = k.one();
    auto rep = rep_from_generators(k, e, {{1, invol}});
    auto c = nonscalar_faithful_check(k, e, rep);
    CHECK(!c.pass);
    CHECK(c.witness == 2);
    CHECK(c.reason.find("not faithful") != std::string::npos);
}

TEST_CASE("fast bad-locus dimensions") {
    auto k = f5();
    auto z2 = FiniteGroup::cyclic(2);
    auto swap2 = regular_rep(k, z2);

    // swap on P^1: eigenvalues +-1, multiplicities 1,1 -> dim 0
    CHECK(bad_locus_dim_fast(k, z2, swap2, 1) == 0);

    // three swaps on P^5: multiplicities 3,3 -> dim 2
    auto sw3 = sum_copies(k, swap2, 3);
    CHECK(bad_locus_dim_fast(k, z2, sw3, 1) == 2);

    // order-2 element of the regular rep of Z/4: double swap, multiplicities 2,2 -> dim 1
    auto z4 = FiniteGroup::cyclic(4);
    auto reg4 = regular_rep(k, z4);
    CHECK(bad_locus_dim_fast(k, z4, reg4, 2) == 1);

    // bad characteristic: order divisible by char -> no fast path
    auto z5 = FiniteGroup::cyclic(5);
    auto reg5 = regular_rep(k, z5);
    CHECK(!bad_locus_dim_fast(k, z5, reg5, 1).has_value());

    // calling at the identity is a usage error
    CHECK_THROWS_AS((void)bad_locus_dim_fast(k, z2, swap2, 0), Error);
}

TEST_CASE("charpoly sanity on permutation and companion matrices") {
    auto k = f5();
    // 4-cycle: t^4 - 1
    auto z4 = FiniteGroup::cyclic(4);
    auto reg4 = regular_rep(k, z4);
    auto c = charpoly(k, reg4.mats[1]);
    CHECK(c == up_from_ints(k, {-1, 0, 0, 0, 1}));
    // diag(2,1): (t-2)(t-1) = t^2 - 3t + 2
    Matrix<PrimeField> d(k, 2, 2);
    d.at(0, 0) = k.from_int(2);
    d.at(1, 1) = k.one();
    CHECK(charpoly(k, d) == up_from_ints(k, {2, -3, 1}));
}
