#pragma once

#include <boost/container/small_vector.hpp>

#include "gsv/groups.hpp"
#include "gsv/irreducibility.hpp"
#include "gsv/linalg.hpp"
#include "gsv/upoly.hpp"
#include "gsv/util.hpp"

namespace gsv {

// The extension k' = k[x]/(m(x)) with an explicit Galois action identified
// with a finite group Gamma. Elements are coefficient vectors in the power
// basis 1, x, ..., x^(deg-1); a degree-1 modulus presents k itself (trivial
// Gamma), so every ring in the pipeline can run over one field type.
//
// Models the coefficient-field concept used by the polynomial and ideal
// layers (Elem/zero/one/add/mul/inv/...).
template <class K>
class Extension {
public:
    using Base = K;
    using BaseElem = typename K::Elem;
    using Elem = boost::container::small_vector<BaseElem, 4>;

    // Validating factory; `autos` are the images of x-bar aligned with
    // gamma's element order.
    static Extension make_galois(const K& base, UPoly<K> modulus, std::vector<Elem> autos,
                                 FiniteGroup gamma) {
        Extension e(base, std::move(modulus));
        e.attach_galois(std::move(autos), std::move(gamma));
        return e;
    }

    // Trivial presentation of k itself: k[x]/(x), Gamma = 1.
    static Extension trivial(const K& base) {
        Extension e(base, up_from_ints(base, {0, 1}));
        e.attach_galois({Elem{base.zero()}}, FiniteGroup::cyclic(1));
        return e;
    }

    const K& base() const { return base_; }
    int degree() const { return deg_; }
    const UPoly<K>& modulus() const { return modulus_; }
    const FiniteGroup& gamma() const { return gamma_; }
    uint64_t characteristic() const { return base_.characteristic(); }

    Elem zero() const { return Elem(deg_, base_.zero()); }
    Elem one() const { return from_base(base_.one()); }
    Elem from_base(const BaseElem& c) const {
        Elem r(deg_, base_.zero());
        r[0] = c;
        return r;
    }
    Elem from_int(long long v) const { return from_base(base_.from_int(v)); }
    Elem generator() const {
        Elem r(deg_, base_.zero());
        if (deg_ == 1)
            return r; // x-bar = 0 in the trivial presentation
        r[1] = base_.one();
        return r;
    }

    bool is_zero(const Elem& a) const {
        for (const auto& c : a)
            if (!base_.is_zero(c)) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const {
        for (int i = 0; i < deg_; ++i)
            if (!base_.eq(a[i], b[i])) return false;
        return true;
    }
    // True iff the element lies in the embedded copy of k.
    bool in_base(const Elem& a) const {
        for (int i = 1; i < deg_; ++i)
            if (!base_.is_zero(a[i])) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(deg_, base_.zero());
        for (int i = 0; i < deg_; ++i) r[i] = base_.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(deg_, base_.zero());
        for (int i = 0; i < deg_; ++i) r[i] = base_.sub(a[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(deg_, base_.zero());
        for (int i = 0; i < deg_; ++i) r[i] = base_.neg(a[i]);
        return r;
    }
    Elem scale(const Elem& a, const BaseElem& c) const {
        Elem r(deg_, base_.zero());
        for (int i = 0; i < deg_; ++i) r[i] = base_.mul(a[i], c);
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        if (deg_ == 1) return Elem{base_.mul(a[0], b[0])};
        // schoolbook product, then reduce x^(deg+i) through the cached table
        boost::container::small_vector<BaseElem, 8> prod(2 * deg_ - 1, base_.zero());
        for (int i = 0; i < deg_; ++i) {
            if (base_.is_zero(a[i])) continue;
            for (int j = 0; j < deg_; ++j)
                prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
        }
        Elem r(prod.begin(), prod.begin() + deg_);
        for (int i = 0; i < deg_ - 1; ++i) {
            if (base_.is_zero(prod[deg_ + i])) continue;
            for (int j = 0; j < deg_; ++j)
                r[j] = base_.add(r[j], base_.mul(prod[deg_ + i], xpow_[i][j]));
        }
        return r;
    }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) fail(ErrKind::Internal, "division-by-zero", "inverse of 0 in k'");
        if (deg_ == 1) return Elem{base_.inv(a[0])};
        // extended Euclid in k[x] against the modulus
        UPoly<K> r0 = modulus_, r1(a.begin(), a.end());
        up_trim(base_, r1);
        UPoly<K> t0{}, t1{base_.one()};
        while (!r1.empty()) {
            UPoly<K> q, rem;
            up_divrem(base_, r0, r1, q, rem);
            UPoly<K> t2 = up_sub(base_, t0, up_mul(base_, q, t1));
            r0 = std::move(r1);
            r1 = std::move(rem);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 = gcd (a unit since m irreducible)
        if (up_deg<K>(r0) != 0)
            fail(ErrKind::Internal, "not-invertible", "gcd with modulus is not a unit");
        auto c = base_.inv(r0[0]);
        Elem res(deg_, base_.zero());
        for (std::size_t i = 0; i < t0.size(); ++i) res[i] = base_.mul(t0[i], c);
        return res;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Image of a under the automorphism indexed by the Gamma element.
    Elem apply_auto(int gamma_idx, const Elem& a) const {
        const Matrix<K>& m = auto_mats_[gamma_idx];
        Elem r(deg_, base_.zero());
        for (int j = 0; j < deg_; ++j) {
            if (base_.is_zero(a[j])) continue;
            for (int i = 0; i < deg_; ++i)
                r[i] = base_.add(r[i], base_.mul(m.at(i, j), a[j]));
        }
        return r;
    }
    const Elem& auto_image(int gamma_idx) const { return auto_images_[gamma_idx]; }

    bool display_negative(const Elem& a) const {
        // only for single-base-term elements; drives "- term" printing over Q
        int nz = -1;
        for (int i = 0; i < deg_; ++i)
            if (!base_.is_zero(a[i])) {
                if (nz >= 0) return false;
                nz = i;
            }
        return nz >= 0 && base_.display_negative(a[nz]);
    }
    Elem abs(const Elem& a) const {
        Elem r(deg_, base_.zero());
        for (int i = 0; i < deg_; ++i) r[i] = base_.abs(a[i]);
        return r;
    }

    int term_count(const Elem& a) const {
        int n = 0;
        for (const auto& c : a)
            if (!base_.is_zero(c)) ++n;
        return n;
    }

    // Element text: power-basis terms ascending, e.g. "2", "x", "2*x^3",
    // "1+2*x" (joined with +/-, no spaces). Zero prints "0".
    std::string format(const Elem& a) const {
        std::string out;
        for (int i = 0; i < deg_; ++i) {
            if (base_.is_zero(a[i])) continue;
            BaseElem c = a[i];
            bool negative = base_.display_negative(c);
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? "-" : "+";
            }
            BaseElem mag = base_.abs(c);
            bool unit = base_.eq(mag, base_.one());
            if (i == 0) {
                out += base_.format(mag);
            } else {
                if (!unit) out += base_.format(mag) + "*";
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    Extension(const K& base, UPoly<K> modulus) : base_(base), modulus_(std::move(modulus)) {
        deg_ = up_deg<K>(modulus_);
        if (deg_ < 1) fail(ErrKind::Validation, "bad-modulus", "modulus must have degree >= 1");
        if (!base_.eq(modulus_.back(), base_.one()))
            fail(ErrKind::Validation, "bad-modulus", "modulus must be monic");
        check_irreducible();
        // reduction table x^(deg+i) mod m for i = 0..deg-2
        xpow_.clear();
        UPoly<K> x = up_from_ints(base_, {0, 1});
        UPoly<K> cur = up_powmod(base_, x, static_cast<uint64_t>(deg_), modulus_);
        for (int i = 0; i + 1 < deg_; ++i) {
            std::vector<BaseElem> row(deg_, base_.zero());
            for (std::size_t j = 0; j < cur.size(); ++j) row[j] = cur[j];
            xpow_.push_back(std::move(row));
            cur = up_rem(base_, up_mul(base_, cur, x), modulus_);
        }
    }

    void check_irreducible() const {
        IrredVerdict v;
        if constexpr (std::is_same_v<K, PrimeField>)
            v = irreducible_mod_p(base_, modulus_);
        else
            v = irreducible_over_q(modulus_);
        if (v == IrredVerdict::Reducible)
            fail(ErrKind::Validation, "reducible-modulus", "modulus factors over the base field");
        if (v == IrredVerdict::Inconclusive)
            fail(ErrKind::Validation, "irreducibility-inconclusive",
                 "cannot certify irreducibility of the modulus; refusing construction");
    }

    void attach_galois(std::vector<Elem> autos, FiniteGroup gamma) {
        gamma_ = std::move(gamma);
        if (static_cast<int>(autos.size()) != gamma_.size())
            fail(ErrKind::Validation, "automorphism-count",
                 "need exactly one automorphism per Gamma element");
        for (auto& a : autos)
            if (static_cast<int>(a.size()) != deg_)
                fail(ErrKind::Validation, "automorphism-count", "automorphism image has wrong length");
        // pairwise distinct images (gamma_iso must be a bijection onto Gal)
        for (std::size_t i = 0; i < autos.size(); ++i)
            for (std::size_t j = i + 1; j < autos.size(); ++j)
                if (eq_raw(autos[i], autos[j]))
                    fail(ErrKind::Validation, "composition-table-mismatch",
                         "duplicate automorphism images");
        auto_images_ = std::move(autos);
        // each sigma(x-bar) must be a root of the modulus
        for (int g = 0; g < gamma_.size(); ++g)
            if (!is_zero(eval_modulus(auto_images_[g])))
                fail(ErrKind::Validation, "automorphism-not-a-root",
                     "image of x under " + gamma_.label(g) + " is not a root of the modulus");
        // automorphism matrices: column j = coordinates of sigma(x)^j
        auto_mats_.clear();
        for (int g = 0; g < gamma_.size(); ++g) {
            Matrix<K> m(base_, deg_, deg_);
            Elem pw = one();
            for (int j = 0; j < deg_; ++j) {
                for (int i = 0; i < deg_; ++i) m.at(i, j) = pw[i];
                if (j + 1 < deg_) pw = mul(pw, auto_images_[g]);
            }
            auto_mats_.push_back(std::move(m));
        }
        // composition matches the Gamma table: sigma_a(sigma_b(x)) = sigma_{ab}(x)
        for (int a = 0; a < gamma_.size(); ++a)
            for (int b = 0; b < gamma_.size(); ++b) {
                Elem lhs = apply_auto(a, auto_images_[b]);
                if (!eq_raw(lhs, auto_images_[gamma_.mul(a, b)]))
                    fail(ErrKind::Validation, "composition-table-mismatch",
                         "automorphism composition disagrees with the Gamma table at (" +
                             gamma_.label(a) + "," + gamma_.label(b) + ")");
            }
        // simultaneous fixed space must be k: stack (A_sigma - I)
        if (gamma_.size() > 1) {
            Matrix<K> stacked(base_, deg_ * gamma_.size(), deg_);
            for (int g = 0; g < gamma_.size(); ++g)
                for (int i = 0; i < deg_; ++i)
                    for (int j = 0; j < deg_; ++j) {
                        auto v = auto_mats_[g].at(i, j);
                        if (i == j) v = base_.sub(v, base_.one());
                        stacked.at(g * deg_ + i, j) = v;
                    }
            if (kernel_dimension(base_, stacked) != 1)
                fail(ErrKind::Validation, "fixed-field-too-large",
                     "the listed automorphisms fix more than the base field");
        }
    }

    bool eq_raw(const Elem& a, const Elem& b) const {
        for (int i = 0; i < deg_; ++i)
            if (!base_.eq(a[i], b[i])) return false;
        return true;
    }

    Elem eval_modulus(const Elem& at) const {
        Elem r = zero();
        for (std::size_t i = modulus_.size(); i-- > 0;) {
            r = mul(r, at);
            r[0] = base_.add(r[0], modulus_[i]);
        }
        return r;
    }

    K base_;
    UPoly<K> modulus_;
    int deg_ = 0;
    std::vector<std::vector<BaseElem>> xpow_;
    FiniteGroup gamma_;
    std::vector<Elem> auto_images_;
    std::vector<Matrix<K>> auto_mats_;
};

using FpExt = Extension<PrimeField>;
using QExt = Extension<RationalField>;

} // namespace gsv
