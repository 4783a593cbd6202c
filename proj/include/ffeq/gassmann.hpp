#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ffeq/splitting_type.hpp"

namespace ffeq {

class FiniteGroup;
using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by an explicit multiplication table (order <= 64).
/// The table is validated at construction: identity, inverses, associativity.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
public:
    static FiniteGroupPtr make(std::vector<std::vector<int>> table,
                               std::vector<std::string> labels = {});
    /// Symmetric group S_n as permutation composition (n <= 4 is plenty).
    static FiniteGroupPtr symmetric(int n);

    int order() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int identity() const { return id_; }
    int inverse(int a) const { return inv_[a]; }
    const std::string& label(int a) const { return labels_[a]; }
    /// Conjugate a^g = g^-1 a g.
    int conj(int a, int g) const { return mul(mul(inverse(g), a), g); }
    int element_order(int a) const;

    /// Exact partition into conjugacy classes, each sorted, classes ordered
    /// by least element.
    std::vector<std::vector<int>> conjugacy_classes() const;

private:
    FiniteGroup() = default;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    int id_ = -1;
};

/// Subgroup as a sorted element-id set; closure under product and inverse is
/// checked at construction.
struct Subgroup {
    FiniteGroupPtr group;
    std::vector<int> elems;

    Subgroup(FiniteGroupPtr g, std::vector<int> ids);
    int order() const { return static_cast<int>(elems.size()); }
    bool contains(int x) const;
    bool is_cyclic() const;
    bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

/// Subgroup generated by a set of elements.
Subgroup generated_subgroup(const FiniteGroupPtr& g, const std::vector<int>& gens);
/// All subgroups, by closure over generator sets of size up to 3 (enough
/// for the desk-scale groups used here).
std::vector<Subgroup> all_subgroups(const FiniteGroupPtr& g);

/// |C ∩ H1| = |C ∩ H2| for every conjugacy class C.
bool is_gassmann_equivalent(const Subgroup& h1, const Subgroup& h2);
/// Exhaustive conjugacy search.
bool are_conjugate_subgroups(const Subgroup& h1, const Subgroup& h2);
/// Class-by-class intersection counts (for reports).
std::vector<std::pair<int, int>> class_intersections(const Subgroup& h1, const Subgroup& h2);

/// Coset type of H with respect to a cyclic subgroup C: sorted |H t C|/|H|
/// over the double cosets H\G/C.  Throws unless C is cyclic.
SplittingType coset_type(const Subgroup& h, const Subgroup& c);

/// Splitting-type densities predicted by the coset types of <g> over all
/// g in G; exact rationals with denominator |G|.
std::map<SplittingType, std::pair<int, int>> predicted_densities(const Subgroup& h);

/// A 1-cocycle chi: H -> A for the conjugation action, stored as a map from
/// H-element ids to A-element ids; the cocycle identity is checked at
/// construction.
struct Cocycle {
    FiniteGroupPtr group;
    std::vector<int> h_elems;
    std::vector<int> values;  // parallel to h_elems

    Cocycle(FiniteGroupPtr g, std::vector<int> h, std::vector<int> vals);
    int value_of(int h) const;
};

/// The 8T15 model: elements (m, u) with m in Z/8, u in (Z/8)*, product
/// (m,u)(m',u') = (m+u*m', u*u'); A = {(m,1)}, the section sigma(H) = {(0,u)},
/// and the distinguished cocycle (psi_1, psi_7 -> id; psi_3, psi_5 -> phi_4).
struct Model8T15 {
    FiniteGroupPtr group;
    Subgroup a;             // cyclic of order 8
    Subgroup section_h;     // sigma(H), order 4
    Subgroup twisted_h;     // (chi*sigma)(H)
    Cocycle chi;
    int id_of(int m, int u) const;
    std::pair<int, int> mu_of(int id) const;
};

Model8T15 build_8t15();

/// All cocycles H -> A (conjugation action) that are non-trivial in the
/// global first cohomology yet become coboundaries on every cyclic subgroup
/// of H.  The search is exhaustive over |A|^|H| maps, guarded by `bound`.
std::vector<Cocycle> cohomology_search(const Subgroup& h, const Subgroup& a,
                                       uint64_t bound = 10000000);

/// True when chi is a coboundary: exists a in A with chi(h) = a^h * a^{-1}.
bool is_coboundary(const Cocycle& chi, const Subgroup& h, const Subgroup& a);
/// Coboundary witnesses of the restriction of chi to the cyclic subgroup
/// generated by h0 (empty when the restriction is not a coboundary).
std::vector<int> restriction_coboundary_witnesses(const Cocycle& chi, int h0, const Subgroup& a);

}  // namespace ffeq
