#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlirred/perm.hpp"

namespace hlirred {

using ElemIndex = std::uint16_t;

// A fully materialized finite permutation group: element list, dense
// multiplication/inverse tables, conjugacy classes and per-element
// centralizers. Immutable after construction, safe to share across threads.
struct FiniteGroup {
    int degree = 0;
    std::string name;
    std::vector<Perm> elements;
    std::vector<ElemIndex> mul_table;  // order x order, row-major
    std::vector<ElemIndex> inv_table;
    ElemIndex identity = 0;
    std::vector<std::vector<ElemIndex>> classes;  // identity class first
    std::vector<ElemIndex> class_of;
    std::vector<std::vector<ElemIndex>> centralizer_of;  // sorted index sets

    int order() const { return int(elements.size()); }

    ElemIndex mul(ElemIndex a, ElemIndex b) const { return mul_table[std::size_t(a) * elements.size() + b]; }
    ElemIndex inv(ElemIndex a) const { return inv_table[a]; }
    ElemIndex conj(ElemIndex g, ElemIndex x) const { return mul(mul(g, x), inv(g)); }

    int element_order(ElemIndex a) const;
    ElemIndex index_of(const Perm& p) const;  // throws if absent
};

inline constexpr int kDefaultGroupOrderCap = 20160;

// Breadth-first closure from the identity, multiplying by the generators in
// the order given; the element ordering and all tables are deterministic.
FiniteGroup make_group(const std::vector<Perm>& generators,
                       int order_cap = kDefaultGroupOrderCap,
                       std::string name = {});

// Recognized names: A4, A5, V4, Zn:<n>, Sn:<n> (also "Z<n>"/"S<n>").
FiniteGroup builtin_group(const std::string& name);

// {h : hg = gh}, as a sorted index set.
std::vector<ElemIndex> centralizer(const FiniteGroup& g, ElemIndex elem);

// Maximal abelian subgroups of one isomorphism type.
struct AbelianClass {
    std::vector<int> invariant_factors;             // e.g. {2,2} for V4, {3} for Z3
    std::vector<std::vector<ElemIndex>> subgroups;  // each a sorted index set
    int n_h = 0;  // conjugacy classes of G meeting one such subgroup

    int multiplicity() const { return int(subgroups.size()); }
    long long subgroup_order() const { return subgroups.empty() ? 1 : (long long)subgroups[0].size(); }
    std::string type_name() const;
};

struct AbelianSubgroupCensus {
    std::vector<AbelianClass> entries;  // ordered by (order, invariant factors)

    const AbelianClass* find(const std::string& type_name) const;
};

// All maximal abelian subgroups, grouped by isomorphism type. Subgroups are
// collected from closures of at most two elements, which covers every group
// whose maximal abelian subgroups are 1- or 2-generated (in particular A4,
// A5 and all abelian groups); a 3-generated maximal abelian subgroup would
// be missed, never misreported, since maximality is verified exactly via
// C_G(S) == S.
AbelianSubgroupCensus abelian_census(const FiniteGroup& g);

struct HypothesisReport {
    bool holds = false;
    std::string detail;  // first witness when it fails
};

// Checks the two hypotheses of the general counting formula by exhaustion:
// every subgroup is abelian or has trivial centralizer (equivalent to the
// same statement over 2-generated subgroups), and distinct maximal abelian
// subgroups intersect trivially.
HypothesisReport check_counting_hypothesis(const FiniteGroup& g,
                                           const AbelianSubgroupCensus& census);
HypothesisReport check_counting_hypothesis(const FiniteGroup& g);

// Closure of a set of elements inside g, as a sorted index set.
std::vector<ElemIndex> subgroup_closure(const FiniteGroup& g, std::vector<ElemIndex> seed);

// Invariant factors d1 | d2 | ... of an abelian subgroup (index set).
// Throws if the set is not an abelian subgroup.
std::vector<int> abelian_invariants(const FiniteGroup& g, const std::vector<ElemIndex>& subgroup);

}  // namespace hlirred
