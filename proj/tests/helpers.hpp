#pragma once

#include <memory>

#include "gsv/action.hpp"
#include "gsv/extension.hpp"
#include "gsv/groups.hpp"
#include "gsv/rep.hpp"

namespace gsv::testing {

// Owns the field, the group extension and the representation; hom pointers
// are rebound once and the object is not copied afterwards.
template <class K>
struct Ctx {
    Extension<K> ext;
    GroupExtension ge;
    Rep<K> rep;

    Ctx(Extension<K> e, GroupExtension g, Rep<K> r)
        : ext(std::move(e)), ge(std::move(g)), rep(std::move(r)) {
        ge.rebind();
    }
    Ctx(const Ctx&) = delete;
    ActionContext<K> actx() const { return {&ext, &ge, &rep}; }
};

// split extension with trivial Gamma: G = E acting k-linearly
inline GroupExtension linear_extension(const FiniteGroup& e) {
    GroupExtension ge;
    ge.G = e;
    ge.E = e;
    ge.Gamma = FiniteGroup::cyclic(1);
    for (int i = 0; i < e.size(); ++i) ge.iota.image.push_back(i);
    ge.pi.image.assign(e.size(), 0);
    ge.rebind();
    return ge;
}

// E = Gamma acting purely by Galois twists combined with tau; G = 1
inline GroupExtension galois_extension_group(const FiniteGroup& gamma) {
    GroupExtension ge;
    ge.G = FiniteGroup::cyclic(1);
    ge.E = gamma;
    ge.Gamma = gamma;
    ge.iota.image = {gamma.identity()};
    for (int i = 0; i < gamma.size(); ++i) ge.pi.image.push_back(i);
    ge.rebind();
    return ge;
}

inline Extension<PrimeField> f25() {
    PrimeField f5(5);
    auto mod = up_from_ints(f5, {2, 0, 1}); // x^2 + 2
    auto x = up_from_ints(f5, {0, 1});
    auto x5 = up_powmod(f5, x, 5, mod);
    Extension<PrimeField>::Elem id{f5.zero(), f5.one()};
    Extension<PrimeField>::Elem fr{x5[0], x5.size() > 1 ? x5[1] : f5.zero()};
    return Extension<PrimeField>::make_galois(f5, mod, {id, fr}, FiniteGroup::cyclic(2));
}

inline Extension<RationalField> qi() {
    RationalField q;
    auto mod = up_from_ints(q, {1, 0, 1});
    Extension<RationalField>::Elem id{q.from_int(0), q.from_int(1)};
    Extension<RationalField>::Elem conj{q.from_int(0), q.from_int(-1)};
    return Extension<RationalField>::make_galois(q, mod, {id, conj}, FiniteGroup::cyclic(2));
}

// Instance-A-like context: k = k' = F_5, E = G = Z/2, regular rep summed m times
inline std::shared_ptr<Ctx<PrimeField>> swap_ctx(int copies) {
    PrimeField k(5);
    auto ext = Extension<PrimeField>::trivial(k);
    auto ge = linear_extension(FiniteGroup::cyclic(2));
    auto rep = sum_copies(k, regular_rep(k, ge.E), copies);
    return std::make_shared<Ctx<PrimeField>>(std::move(ext), std::move(ge), std::move(rep));
}

// Instance-B-like context over F_25 with the Frobenius twist
inline std::shared_ptr<Ctx<PrimeField>> frobenius_swap_ctx(int copies) {
    auto ext = f25();
    auto ge = galois_extension_group(FiniteGroup::cyclic(2));
    auto rep = sum_copies(ext.base(), regular_rep(ext.base(), ge.E), copies);
    return std::make_shared<Ctx<PrimeField>>(std::move(ext), std::move(ge), std::move(rep));
}

// Instance-C-like context: E = Z/4 over Gamma = Z/2, tau = diag(2,1) copies
inline std::shared_ptr<Ctx<PrimeField>> z4_twist_ctx(int copies) {
    auto ext = f25();
    PrimeField k = ext.base();
    GroupExtension ge;
    ge.G = FiniteGroup::cyclic(2);
    ge.E = FiniteGroup::cyclic(4);
    ge.Gamma = FiniteGroup::cyclic(2);
    ge.iota.image = {0, 2};
    ge.pi.image = {0, 1, 0, 1};
    ge.rebind();
    Matrix<PrimeField> d(k, 2, 2);
    d.at(0, 0) = k.from_int(2);
    d.at(1, 1) = k.one();
    auto rep = sum_copies(k, rep_from_generators(k, ge.E, {{1, d}}), copies);
    return std::make_shared<Ctx<PrimeField>>(std::move(ext), std::move(ge), std::move(rep));
}

} // namespace gsv::testing
