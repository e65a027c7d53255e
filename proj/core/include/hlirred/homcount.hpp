#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hlirred/group.hpp"
#include "hlirred/presentation.hpp"

namespace hlirred {

// Subgroup isomorphism classes we care to tell apart; everything else
// (S3, D5, A4 inside A5, ...) lands in Other.
enum class ImageType { Trivial, Z2, Z3, Z5, V4, Full, Other };
inline constexpr int kImageTypeCount = 7;
std::string to_string(ImageType t);

struct HomCountOptions {
    int jobs = 0;                         // 0 = hardware concurrency
    long long orbit_cap = 10'000'000;     // max homs the orbit pass may visit
};

// A generator-image assignment satisfying all relators, one image per
// generator in presentation order.
using Hom = std::vector<ElemIndex>;

struct HomCensus {
    long long total = 0;
    long long orbit_count = 0;
    std::array<long long, kImageTypeCount> homs_by_type{};
    std::array<long long, kImageTypeCount> orbits_by_type{};

    long long homs_of(ImageType t) const { return homs_by_type[std::size_t(t)]; }
    long long orbits_of(ImageType t) const { return orbits_by_type[std::size_t(t)]; }
    long long surjective_homs() const { return homs_of(ImageType::Full); }
    long long surjective_orbits() const { return orbits_of(ImageType::Full); }
};

// Exact number of homomorphisms P -> G, by depth-first assignment with each
// relator checked at the earliest depth at which its generators are all
// assigned. `restrict_to` confines generator images to the given index set
// (the multiplication stays in G). Relator-free presentations short-circuit
// to |domain|^rank. Internally parallel and deterministic for any `jobs`.
long long count_homs(const Presentation& p, const FiniteGroup& g,
                     const std::vector<ElemIndex>* restrict_to = nullptr, int jobs = 0);

// Number of orbits of the conjugation action g . phi . g^-1 on the hom set.
// Enumerates every hom and counts orbit representatives in place; throws
// CapExceeded once more than `orbit_cap` homs are visited (use ks_burnside
// then). Representatives, if requested, are the lexicographically minimal
// orbit members.
long long ks_orbits(const Presentation& p, const FiniteGroup& g,
                    const HomCountOptions& opts = {}, std::vector<Hom>* reps = nullptr);

// Independent orbit-count oracle via Burnside: orbits = average number of
// fixed points, and the homs fixed by conjugation-by-g are exactly the homs
// into the centralizer of g. Summed per conjugacy class (conjugate elements
// have conjugate centralizers, hence equal counts). Never materializes the
// hom set; throws std::logic_error if the average is not an integer.
long long ks_burnside(const Presentation& p, const FiniteGroup& g, int jobs = 0);

// Full census: hom and orbit counts broken down by image subgroup type.
HomCensus classify_homs(const Presentation& p, const FiniteGroup& g,
                        const HomCountOptions& opts = {});

// Image subgroup classification of a single hom (exposed for tests/tools).
ImageType image_type(const FiniteGroup& g, const Hom& hom);

}  // namespace hlirred
