#include "gsv/rational.hpp"

#include <algorithm>

namespace gsv {

namespace {

mpz_class pollard_rho(const mpz_class& n, unsigned long c0) {
    // Brent's variant; n odd composite, not a prime power of interest here.
    mpz_class x = 2, y = 2, d = 1, c = c0;
    mpz_class diff, prod = 1;
    int steps = 0;
    while (d == 1) {
        x = (x * x + c) % n;
        y = (y * y + c) % n;
        y = (y * y + c) % n;
        diff = x > y ? x - y : y - x;
        if (diff == 0) return 0; // cycle without factor, retry with new c
        prod = (prod * diff) % n;
        if (++steps % 64 == 0) {
            mpz_gcd(d.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
            if (d != 1) break;
        }
    }
    if (d == 1) mpz_gcd(d.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
    if (d == n || d == 1) return 0;
    return d;
}

void factor_rec(mpz_class n, std::vector<std::pair<mpz_class, unsigned>>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        for (auto& pe : out)
            if (pe.first == n) {
                pe.second++;
                return;
            }
        out.emplace_back(n, 1);
        return;
    }
    for (unsigned long c = 1;; ++c) {
        if (c > 64) fail(ErrKind::Budget, "factorization-budget", "integer factorization did not converge");
        mpz_class d = pollard_rho(n, c);
        if (d != 0) {
            factor_rec(d, out);
            factor_rec(n / d, out);
            return;
        }
    }
}

} // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n_in) {
    mpz_class n = ::abs(n_in);
    if (n == 0) fail(ErrKind::Internal, "factor-zero", "factor_integer(0)");
    std::vector<std::pair<mpz_class, unsigned>> out;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            if (!out.empty() && out.back().first == p)
                out.back().second++;
            else
                out.emplace_back(p, 1);
        }
    }
    unsigned long p = 17;
    while (n > 1 && mpz_class(p) * p <= n && p < 100000) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            if (!out.empty() && out.back().first == p)
                out.back().second++;
            else
                out.emplace_back(p, 1);
        }
        p += 2;
    }
    if (n > 1) factor_rec(n, out);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n, std::size_t cap) {
    auto fac = factor_integer(n);
    std::vector<mpz_class> divs{1};
    for (const auto& [q, e] : fac) {
        std::size_t sz = divs.size();
        mpz_class qe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            qe *= q;
            for (std::size_t j = 0; j < sz; ++j) {
                divs.push_back(divs[j] * qe);
                if (divs.size() > cap)
                    fail(ErrKind::Budget, "divisor-budget", "too many divisors in root search");
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool is_perfect_square(const mpz_class& n, mpz_class* root) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

bool is_rational_square(const mpq_class& a, mpq_class* root) {
    if (a < 0) return false;
    mpz_class rn, rd;
    if (!is_perfect_square(a.get_num(), &rn)) return false;
    if (!is_perfect_square(a.get_den(), &rd)) return false;
    if (root) *root = mpq_class(rn) / mpq_class(rd);
    return true;
}

} // namespace gsv
