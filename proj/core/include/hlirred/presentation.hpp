#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hlirred {

struct Letter {
    std::uint16_t gen = 0;
    std::int8_t exp = 1;  // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

// A word in the generators of the owning presentation; empty = identity.
struct Word {
    std::vector<Letter> letters;

    Word inverted() const;
    friend bool operator==(const Word&, const Word&) = default;
};

struct Presentation {
    std::vector<std::string> gen_names;
    std::vector<Word> relators;
    std::optional<std::string> label;

    int rank_upper_bound() const { return int(gen_names.size()); }
    int gen_index(const std::string& name) const;  // -1 if absent
};

// Text grammar: lines `gens <name>+`, `rel <word>` or `rel <word> = <word>`
// (sugar for u v^-1), `#` comments. In words, a lowercase letter names a
// generator and its uppercase twin the inverse; whitespace is optional
// between letters. A maximal non-space token that exactly matches a
// multi-character generator name (e.g. "a1") denotes that generator, with
// the first letter upcased for its inverse.
Presentation parse_presentation(const std::string& text);

// Inverse of parse_presentation, up to insignificant whitespace.
std::string save_presentation(const Presentation& p);

// Disjoint union of generators and relators; clashing names from the second
// operand get a numeric suffix.
Presentation free_product(const Presentation& a, const Presentation& b);

struct Abelianization {
    int free_rank = 0;
    std::vector<long long> torsion;  // invariant factors > 1, divisibility chain
};

// Smith normal form of the relator exponent matrix.
Abelianization abelianization(const Presentation& p);

}  // namespace hlirred
