#pragma once

#include <string>
#include <vector>

#include "gsv/action.hpp"
#include "gsv/ideals.hpp"
#include "gsv/rng.hpp"
#include "gsv/util.hpp"

namespace gsv {

struct BertiniBudget {
    int samples_per_slice = 16;  // per slice per degree
    uint32_t form_degree_start = 1;
    uint32_t max_form_degree = 4; // escalation cap over finite fields
    int max_restarts = 8;
};

template <class K>
struct SlicingState {
    std::vector<Poly<Extension<K>>> hs; // downstairs forms in U_0..U_s over k
    std::vector<Poly<Extension<K>>> gs; // pullbacks h_j(f_0..f_s) upstairs
    uint32_t form_degree = 1;
    uint64_t seed = 0;
    int restarts_used = 0;
    int samples_drawn = 0;
    std::vector<std::pair<std::string, int>> bad_dims; // final dim per group element label
    std::vector<std::string> attempt_log;
};

// Uniform homogeneous degree-e form in s+1 variables over k (embedded in k').
// Finite fields draw coefficients uniformly; over Q the integer window
// [-2^attempt, 2^attempt] doubles on every retry. Resamples a zero form.
template <class K>
Poly<Extension<K>> sample_form(const Extension<K>& f, int s, uint32_t e, Rng& rng, int attempt = 0) {
    auto monos = monomial_basis(s + 1, e);
    for (;;) {
        Poly<Extension<K>> form = p_zero<Extension<K>>(s + 1);
        for (const auto& mono : monos) {
            typename K::Elem c;
            if constexpr (std::is_same_v<K, PrimeField>) {
                (void)attempt;
                c = rng.below(f.base().p());
            } else {
                uint64_t w = 1ull << std::min(attempt, 20);
                c = f.base().from_int(static_cast<long long>(rng.below(2 * w + 1)) -
                                      static_cast<long long>(w));
            }
            if (!f.base().is_zero(c))
                form.terms.push_back({e, mono, f.from_base(c)});
        }
        if (!form.is_zero()) return form;
    }
}

// The slicing loop: draws n-r forms downstairs, accepting a form when every
// bad-locus component drops in dimension (or empties), then certifies the
// final intersection as a smooth complete intersection of dimension r.
// Degree escalation redoes the whole sequence at the higher uniform degree;
// full restarts reseed. Failure is a budget event with the attempt log.
template <class K>
SlicingState<K> slicing_loop(const Extension<K>& f, const std::vector<Poly<Extension<K>>>& fs,
                             const std::vector<std::pair<std::string, HomIdeal<Extension<K>>>>& bad,
                             int n, int r, const BertiniBudget& budget, const GbBudget& gb_budget,
                             uint64_t seed, int threads = 1) {
    const int slices = n - r;
    if (slices < 0) fail(ErrKind::Validation, "bad-dimension", "target dimension exceeds the ambient space");
    const int s = static_cast<int>(fs.size()) - 1;
    const int nvars = n + 1;

    std::vector<int> init_dims(bad.size());
    parallel_for(bad.size(), threads, [&](std::size_t i) {
        init_dims[i] = projective_dimension(f, bad[i].second, gb_budget);
    });

    std::vector<std::string> log;
    for (int restart = 0; restart < budget.max_restarts; ++restart) {
        Rng rng(Rng::derive(seed, static_cast<uint64_t>(restart)));
        uint32_t e_cap = f.characteristic() == 0 ? budget.form_degree_start : budget.max_form_degree;
        for (uint32_t e = budget.form_degree_start; e <= e_cap; ++e) {
            SlicingState<K> state;
            state.form_degree = e;
            state.seed = seed;
            state.restarts_used = restart;
            std::vector<int> dims = init_dims;
            bool sequence_ok = true;
            for (int j = 1; j <= slices && sequence_ok; ++j) {
                bool placed = false;
                for (int attempt = 0; attempt < budget.samples_per_slice; ++attempt) {
                    auto h = sample_form(f, s, e, rng, attempt);
                    ++state.samples_drawn;
                    auto g = p_compose(f, h, fs);
                    if (g.is_zero()) {
                        log.push_back("slice " + std::to_string(j) + ": pullback vanished");
                        continue;
                    }
                    std::vector<int> nd(bad.size());
                    bool accept = true;
                    std::vector<Poly<Extension<K>>> cut = state.gs;
                    cut.push_back(g);
                    parallel_for(bad.size(), threads, [&](std::size_t i) {
                        auto sum = bad[i].second;
                        for (const auto& c : cut) sum.gens.push_back(c);
                        nd[i] = projective_dimension(f, sum, gb_budget);
                    });
                    for (std::size_t i = 0; i < bad.size(); ++i)
                        if (!(nd[i] == -1 || nd[i] <= dims[i] - 1)) accept = false;
                    if (!accept) {
                        log.push_back("slice " + std::to_string(j) + " attempt " +
                                      std::to_string(attempt) + ": no dimension drop");
                        continue;
                    }
                    state.hs.push_back(std::move(h));
                    state.gs.push_back(std::move(g));
                    dims = std::move(nd);
                    placed = true;
                    break;
                }
                if (!placed) sequence_ok = false;
            }
            if (!sequence_ok) {
                log.push_back("degree " + std::to_string(e) + ": a slice exhausted its samples");
                continue; // escalate e
            }
            // the bad locus must now be empty upstairs
            bool bad_empty = true;
            for (std::size_t i = 0; i < bad.size(); ++i)
                if (dims[i] != -1) bad_empty = false;
            if (!bad_empty) {
                log.push_back("degree " + std::to_string(e) + ": bad locus survived the slices");
                continue;
            }
            // final smoothness of the full intersection
            auto cert = jacobian_smooth_certificate(f, make_hom_ideal(f, nvars, state.gs), gb_budget);
            if (cert.dim_ok && cert.smooth) {
                for (std::size_t i = 0; i < bad.size(); ++i)
                    state.bad_dims.emplace_back(bad[i].first, dims[i]);
                state.attempt_log = std::move(log);
                return state;
            }
            log.push_back("restart " + std::to_string(restart) + " degree " + std::to_string(e) +
                          ": final smoothness failed (dim " + std::to_string(cert.computed_dim) +
                          ", smooth " + (cert.smooth ? "yes" : "no") + ")");
            break; // fresh randomness
        }
    }
    std::string msg = "slicing budget exhausted after " + std::to_string(budget.max_restarts) +
                      " restarts;";
    for (const auto& l : log) msg += "\n  " + l;
    fail(ErrKind::Budget, "budget-exhausted", msg);
}

} // namespace gsv
