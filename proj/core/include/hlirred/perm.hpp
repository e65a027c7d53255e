#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hlirred {

// A permutation of {0, ..., n-1}, stored as its image sequence.
struct Perm {
    std::vector<std::uint8_t> images;

    Perm() = default;
    explicit Perm(std::vector<std::uint8_t> imgs) : images(std::move(imgs)) {}

    int degree() const { return int(images.size()); }
    bool is_identity() const;

    // True iff images is a bijection on {0, ..., n-1}.
    bool is_bijection() const;

    friend bool operator==(const Perm& a, const Perm& b) = default;
    friend auto operator<=>(const Perm& a, const Perm& b) = default;
};

Perm identity_perm(int degree);

// Composition acts on the left: (a * b)(x) = a(b(x)).
Perm operator*(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);

// Cycle notation on 0-based points, e.g. "(0 1 2)(3 4)". Commas allowed
// inside cycles; "()" and "id" denote the identity. `degree` pads fixed
// points; 0 means max moved point + 1.
Perm parse_cycles(const std::string& text, int degree = 0);
std::string to_cycles(const Perm& p);

}  // namespace hlirred
