#include "doctest.h"

#include "gsv/kernels.hpp"
#include "gsv/modp_echelon.hpp"
#include "gsv/rng.hpp"

#include <vector>

using namespace gsv;

namespace {

std::vector<uint16_t> random_row(Rng& rng, std::size_t n, uint16_t p) {
    std::vector<uint16_t> r(n);
    for (auto& v : r) v = static_cast<uint16_t>(rng.below(p));
    return r;
}

} // namespace

TEST_CASE("axpy/scale: every compiled backend matches the scalar reference") {
    Rng rng(123);
    std::vector<uint16_t> primes{2, 3, 5, 7, 13, 251, 4099, 32749};
    std::vector<std::size_t> lengths{0, 1, 3, 15, 16, 17, 31, 32, 100, 1000};
    for (uint16_t p : primes)
        for (std::size_t n : lengths)
            for (int rep = 0; rep < 4; ++rep) {
                auto a = random_row(rng, n, p);
                auto b = random_row(rng, n, p);
                uint16_t s = static_cast<uint16_t>(rng.below(p));

                auto a_ref = a;
                kernels::axpy_scalar(a_ref.data(), b.data(), s, p, n);
#if defined(__x86_64__) || defined(_M_X64)
                if (kernels::active_backend() == kernels::Backend::Avx2) {
                    auto a_vec = a;
                    kernels::axpy_avx2(a_vec.data(), b.data(), s, p, n);
                    CHECK(a_vec == a_ref);
                }
#endif
                auto a_dis = a;
                kernels::axpy(a_dis.data(), b.data(), s, p, n);
                CHECK(a_dis == a_ref);

                auto s_ref = a;
                kernels::scale_scalar(s_ref.data(), s, p, n);
#if defined(__x86_64__) || defined(_M_X64)
                if (kernels::active_backend() == kernels::Backend::Avx2) {
                    auto s_vec = a;
                    kernels::scale_avx2(s_vec.data(), s, p, n);
                    CHECK(s_vec == s_ref);
                }
#endif
                auto s_dis = a;
                kernels::scale(s_dis.data(), s, p, n);
                CHECK(s_dis == s_ref);
            }
}

TEST_CASE("first_nonzero") {
    std::vector<uint16_t> v(100, 0);
    CHECK(kernels::first_nonzero(v.data(), v.size(), 0) == v.size());
    v[63] = 2;
    CHECK(kernels::first_nonzero(v.data(), v.size(), 0) == 63);
    CHECK(kernels::first_nonzero(v.data(), v.size(), 64) == v.size());
    v[0] = 1;
    CHECK(kernels::first_nonzero(v.data(), v.size(), 0) == 0);
}

TEST_CASE("modp echelon rank equals a naive gaussian elimination") {
    Rng rng(99);
    for (int it = 0; it < 30; ++it) {
        uint16_t p = (it % 2) ? 5 : 7;
        std::size_t rows = 1 + rng.below(20), cols = 1 + rng.below(20);
        std::vector<std::vector<uint16_t>> m;
        for (std::size_t i = 0; i < rows; ++i) m.push_back(random_row(rng, cols, p));

        ModpEchelon ech(p, cols);
        for (auto row : m) ech.push_row(std::move(row));

        // naive elimination
        auto a = m;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols && rank < rows; ++c) {
            std::size_t piv = rank;
            while (piv < rows && a[piv][c] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(a[piv], a[rank]);
            PrimeField f(p);
            uint64_t inv = f.inv(a[rank][c]);
            for (auto& x : a[rank]) x = static_cast<uint16_t>((x * inv) % p);
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == rank || a[i][c] == 0) continue;
                uint16_t s = static_cast<uint16_t>(p - a[i][c]);
                for (std::size_t j = 0; j < cols; ++j)
                    a[i][j] = static_cast<uint16_t>((a[i][j] + s * a[rank][j]) % p);
            }
            ++rank;
        }
        CHECK(ech.rank() == rank);
    }
}

TEST_CASE("rref rows are canonical") {
    // two different insertion orders of the same row space agree after rref
    uint16_t p = 5;
    std::vector<std::vector<uint16_t>> rows{{1, 2, 3, 4}, {0, 1, 1, 1}, {2, 0, 1, 2}};
    ModpEchelon e1(p, 4), e2(p, 4);
    for (auto r : rows) e1.push_row(r);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) e2.push_row(*it);
    e1.to_rref();
    e2.to_rref();
    REQUIRE(e1.rank() == e2.rank());
    auto o1 = e1.sorted_rows(), o2 = e2.sorted_rows();
    for (std::size_t i = 0; i < e1.rank(); ++i) CHECK(e1.row(o1[i]) == e2.row(o2[i]));
}
