#pragma once

#include <vector>

#include "gsv/upoly.hpp"
#include "gsv/util.hpp"

namespace gsv {

template <class K>
struct Matrix {
    int nr = 0, nc = 0;
    std::vector<typename K::Elem> a;

    Matrix() = default;
    Matrix(const K& k, int r, int c) : nr(r), nc(c), a(static_cast<std::size_t>(r) * c, k.zero()) {}

    typename K::Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * nc + j]; }
    const typename K::Elem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * nc + j]; }

    static Matrix identity(const K& k, int n) {
        Matrix m(k, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
        return m;
    }
};

template <class K>
Matrix<K> mat_mul(const K& k, const Matrix<K>& x, const Matrix<K>& y) {
    if (x.nc != y.nr) fail(ErrKind::Internal, "dim-mismatch", "matrix product shape mismatch");
    Matrix<K> r(k, x.nr, y.nc);
    for (int i = 0; i < x.nr; ++i)
        for (int l = 0; l < x.nc; ++l) {
            if (k.is_zero(x.at(i, l))) continue;
            for (int j = 0; j < y.nc; ++j)
                r.at(i, j) = k.add(r.at(i, j), k.mul(x.at(i, l), y.at(l, j)));
        }
    return r;
}

template <class K>
bool mat_eq(const K& k, const Matrix<K>& x, const Matrix<K>& y) {
    if (x.nr != y.nr || x.nc != y.nc) return false;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        if (!k.eq(x.a[i], y.a[i])) return false;
    return true;
}

template <class K>
bool mat_is_scalar(const K& k, const Matrix<K>& x) {
    if (x.nr != x.nc || x.nr == 0) return false;
    for (int i = 0; i < x.nr; ++i)
        for (int j = 0; j < x.nc; ++j) {
            if (i == j) {
                if (!k.eq(x.at(i, j), x.at(0, 0))) return false;
            } else if (!k.is_zero(x.at(i, j))) {
                return false;
            }
        }
    return true;
}

// Incremental row echelon over an arbitrary field context; pivot rows are kept
// normalized. Deterministic: rows are reduced in insertion order.
template <class F>
class Echelon {
public:
    using Elem = typename F::Elem;

    explicit Echelon(const F& f, std::size_t width) : f_(f), width_(width) {}

    // Reduces the row; if nonzero remains, stores it as a new pivot row and
    // returns true.
    bool push_row(std::vector<Elem> row) {
        if (row.size() != width_) fail(ErrKind::Internal, "dim-mismatch", "echelon row width mismatch");
        reduce(row);
        std::size_t lead = first_nonzero(row);
        if (lead == width_) return false;
        Elem ci = f_.inv(row[lead]);
        for (auto& x : row) x = f_.mul(x, ci);
        insert_sorted(std::move(row), lead);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

    // Back-substitutes to reduced row echelon form; canonical basis.
    void to_rref() {
        for (std::size_t i = rows_.size(); i-- > 0;) {
            for (std::size_t j = 0; j < i; ++j) {
                Elem c = rows_[j][leads_[i]];
                if (f_.is_zero(c)) continue;
                for (std::size_t t = leads_[i]; t < width_; ++t)
                    rows_[j][t] = f_.sub(rows_[j][t], f_.mul(c, rows_[i][t]));
            }
        }
    }

    const std::vector<std::vector<Elem>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return leads_; }

    void reduce(std::vector<Elem>& row) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Elem c = row[leads_[i]];
            if (f_.is_zero(c)) continue;
            const auto& pr = rows_[i];
            for (std::size_t t = leads_[i]; t < width_; ++t)
                row[t] = f_.sub(row[t], f_.mul(c, pr[t]));
        }
    }

private:
    std::size_t first_nonzero(const std::vector<Elem>& row) const {
        for (std::size_t t = 0; t < width_; ++t)
            if (!f_.is_zero(row[t])) return t;
        return width_;
    }
    void insert_sorted(std::vector<Elem> row, std::size_t lead) {
        std::size_t pos = 0;
        while (pos < leads_.size() && leads_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(row));
        leads_.insert(leads_.begin() + pos, lead);
    }

    const F& f_;
    std::size_t width_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> leads_;
};

// Kernel dimension of an (nr x nc) matrix = nc - rank.
template <class K>
int kernel_dimension(const K& k, const Matrix<K>& m) {
    Echelon<K> ech(k, static_cast<std::size_t>(m.nc));
    for (int i = 0; i < m.nr; ++i) {
        std::vector<typename K::Elem> row(m.a.begin() + static_cast<std::size_t>(i) * m.nc,
                                          m.a.begin() + static_cast<std::size_t>(i + 1) * m.nc);
        ech.push_row(std::move(row));
    }
    return m.nc - static_cast<int>(ech.rank());
}

// Characteristic polynomial via similarity reduction to Hessenberg form and
// the column expansion recurrence; field operations only.
template <class K>
UPoly<K> charpoly(const K& k, Matrix<K> m) {
    if (m.nr != m.nc) fail(ErrKind::Internal, "dim-mismatch", "charpoly of non-square matrix");
    int n = m.nr;
    if (n == 0) return up_from_ints(k, {1});
    // Hessenberg reduction
    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int i = j + 1; i < n; ++i)
            if (!k.is_zero(m.at(i, j))) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != j + 1) {
            for (int t = 0; t < n; ++t) std::swap(m.at(piv, t), m.at(j + 1, t));
            for (int t = 0; t < n; ++t) std::swap(m.at(t, piv), m.at(t, j + 1));
        }
        auto pinv = k.inv(m.at(j + 1, j));
        for (int i = j + 2; i < n; ++i) {
            auto factor = k.mul(m.at(i, j), pinv);
            if (k.is_zero(factor)) continue;
            for (int t = 0; t < n; ++t) m.at(i, t) = k.sub(m.at(i, t), k.mul(factor, m.at(j + 1, t)));
            for (int t = 0; t < n; ++t) m.at(t, j + 1) = k.add(m.at(t, j + 1), k.mul(factor, m.at(t, i)));
        }
    }
    // p_k(t) = (t - H[k-1][k-1]) p_{k-1} - sum_i H[i][k-1] (prod subdiag) p_i
    std::vector<UPoly<K>> p(n + 1);
    p[0] = up_from_ints(k, {1});
    for (int kk = 1; kk <= n; ++kk) {
        UPoly<K> t_minus{k.neg(m.at(kk - 1, kk - 1)), k.one()};
        UPoly<K> acc = up_mul(k, t_minus, p[kk - 1]);
        auto prod = k.one();
        for (int i = kk - 2; i >= 0; --i) {
            prod = k.mul(prod, m.at(i + 1, i));
            auto coef = k.mul(m.at(i, kk - 1), prod);
            if (!k.is_zero(coef)) acc = up_sub(k, acc, up_scale(k, p[i], coef));
        }
        p[kk] = std::move(acc);
    }
    return p[n];
}

} // namespace gsv
