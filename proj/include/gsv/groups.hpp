#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsv/util.hpp"

namespace gsv {

// Finite group as an explicit multiplication table. table[a][b] is the index
// of a*b; element 0 need not be the identity for user-supplied tables, so the
// identity index is located at construction.
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table);

    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int n); // n <= 5
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

    int size() const { return static_cast<int>(table_.size()); }
    int identity() const { return id_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int order_of(int a) const;
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool is_trivial() const { return size() == 1; }

    // All subgroups as sorted index lists, via closure BFS over the lattice.
    std::vector<std::vector<int>> all_subgroups() const;
    bool is_normal(const std::vector<int>& sub) const;
    std::vector<int> closure(std::vector<int> seed) const;

private:
    void validate_axioms();
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    int id_ = 0;
};

struct GroupHom {
    const FiniteGroup* domain = nullptr;
    const FiniteGroup* codomain = nullptr;
    std::vector<int> image; // image[a] in codomain, indexed by domain element

    int operator()(int a) const { return image[a]; }
    bool is_homomorphism() const;
    bool is_injective() const;
    bool is_surjective() const;
};

// 1 -> G -> E -> Gamma -> 1 candidate, with explicit iota and pi.
struct GroupExtension {
    FiniteGroup G, E, Gamma;
    GroupHom iota; // G -> E
    GroupHom pi;   // E -> Gamma

    void rebind(); // repair hom pointers after copy/move
};

struct ExtensionCertificate {
    bool table_ok = false;
    bool iota_hom = false, iota_injective = false;
    bool pi_hom = false, pi_surjective = false;
    bool exact = false; // image(iota) == kernel(pi)
    std::string witness;
    bool valid() const {
        return table_ok && iota_hom && iota_injective && pi_hom && pi_surjective && exact;
    }
};

ExtensionCertificate validate_extension(const GroupExtension& ext);

struct SectionSubgroup {
    std::vector<int> H;       // normal subgroup of E with H ∩ iota(G) = 1
    std::vector<int> H_image; // H' = pi(H) in Gamma
    std::vector<int> iso;     // iso[i] = pi(H[i]): the induced H -> H' bijection
};

// All normal H ⊴ E with iota(G) ∩ H = {1}; the trivial subgroup always
// qualifies. Requires a valid extension.
std::vector<SectionSubgroup> find_section_subgroups(const GroupExtension& ext);

struct FiberProductResult {
    FiniteGroup quotient;         // E/H
    FiniteGroup fiber;            // (E/H) x_{Gamma/H'} Gamma
    std::vector<int> iso;         // fiber -> E isomorphism table (empty on failure)
    bool isomorphic = false;
    // projections of each fiber element, for the commuting checks
    std::vector<int> proj_quotient; // fiber -> E/H index
    std::vector<int> proj_gamma;    // fiber -> Gamma index
    std::vector<int> coset_of;      // E element -> E/H coset index
};

FiberProductResult fiber_product_reconstruct(const GroupExtension& ext, const SectionSubgroup& H);

// Order-profile-pruned backtracking isomorphism search. `constraint`, when
// nonempty, restricts candidate images per element.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                 const std::vector<std::vector<int>>& constraint = {});

} // namespace gsv
