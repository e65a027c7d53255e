#pragma once

#include <string>
#include <vector>

#include "hlirred/group.hpp"
#include "hlirred/homcount.hpp"
#include "hlirred/presentation.hpp"

namespace hlirred {

enum class KsGroup { A4, A5 };
inline const char* to_string(KsGroup g) { return g == KsGroup::A4 ? "A4" : "A5"; }

// Count of homomorphisms from Z^g to a fixed abelian subgroup of order |H|.
long long ksw_abelian(long long subgroup_order, int genus);

// Conjugacy classes of homomorphisms landing in some subgroup isomorphic to
// H: (n_H - 1) * (|H|^g - |H|) / (|H| - 1) + n_H.
long long ks_h_g(int n_h, long long subgroup_order, int genus);

// Per-census-type counts feeding the general counting formula.
struct KsParts {
    long long ks_w = 0;
    std::vector<long long> ks_h_w;  // aligned with census.entries
    std::vector<long long> ks_h_g;
};

// The general formula: ks = sum ks_Hi_G - n + 1
//   + (ks_w - sum l_i (ks_Hi_w - 1) - 1) / |G|.
// Requires the counting hypothesis to hold for (g, census) and the bracketed
// numerator to be divisible by |G|; throws std::invalid_argument otherwise.
long long ks_from_parts(const FiniteGroup& g, const AbelianSubgroupCensus& census,
                        const KsParts& parts);

// ks^w from ks for a genus-g handlebody link:
//   A4: 12 ks - 8 3^g - 3 4^g      A5: 60 ks - 20 3^g - 15 4^g - 24 5^g.
// A negative result means the inputs are not from a genus-g handlebody link.
long long ksw_from_ks(KsGroup g, long long ks, int genus);

// One-sum with a trivial knot factor: the composite has genus `genus`, the
// complementary factor genus - 1 and invariant ks_factor.
//   A4: 12 ks' - 6 3^(g-1) - 2 4^(g-1)
//   A5: 60 ks' - 19 3^(g-1) - 14 4^(g-1) - 22 5^(g-1)
long long onesum_trivial(KsGroup g, long long ks_factor, int genus);

// The same value assembled as the three-case sum over restriction types
// (trivial / V4-meridian / Z3-meridian images, plus Z5 for A5); equal to
// onesum_trivial as an integer identity and kept separate as a cross-check.
long long onesum_trivial_cases(KsGroup g, long long ks_factor, int genus);

// One-sum with a 2-generator knot factor realizing k surjection pairs
// (k in {0,1}): (12+24k) ks' - (6+16k) 3^(g-1) - (2+6k) 4^(g-1).
long long onesum_2gen_knot_a4(long long ks_factor, int genus, int k);

// One-sum with a 2-generator link factor realizing k surjection pairs
// (k in {0..4}); the factor takes 2 of the genus:
//   (48+24k) ks' - (26+16k) 3^(g-2) - (8+6k) 4^(g-2).
long long onesum_2gen_link_a4(long long ks_factor, int genus, int k);

// Surjection-pair parameter of a factor, read off an enumeration census.
int k_from_census(const HomCensus& census);

// Everything the invariant tables record for one (group, presentation)
// pair, computed by enumeration.
struct KsReport {
    std::string group_name;
    int genus = 0;
    long long ks_w = 0;
    long long ks = 0;           // orbit count (or Burnside beyond the cap)
    long long ks_burnside = 0;  // always the Burnside value
    bool orbits_capped = false;
    struct SubgroupLine {
        std::string type_name;
        long long ks_h_w = 0;
        long long ks_h_g = 0;
    };
    std::vector<SubgroupLine> per_subgroup;
    long long surjective_orbits = 0;
    HomCensus census;
};

// Runs the engine end to end; genus is the abelianization rank of p (its
// torsion must be empty for the per-subgroup closed forms to apply).
KsReport compute_ks_report(const Presentation& p, const FiniteGroup& g,
                           const HomCountOptions& opts = {});

}  // namespace hlirred
