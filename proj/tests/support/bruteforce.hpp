// Independent brute-force reference for the test suite.
//
// Everything here is deliberately naive: permutations are plain vectors,
// group closure is set-based, homomorphism enumeration walks the full
// |G|^r odometer, and orbit counting partitions an explicit hom list.
// None of it shares code with the library engine it is used to check.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace bruteforce {

using Perm = std::vector<int>;

inline Perm bf_mul(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
    return r;
}

inline Perm bf_inv(const Perm& p) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = int(x);
    return r;
}

inline Perm bf_identity(int degree) {
    Perm r(degree);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

// Set-based closure, order-insensitive on purpose.
inline std::vector<Perm> bf_closure(const std::vector<Perm>& gens) {
    std::set<Perm> seen;
    seen.insert(bf_identity(int(gens[0].size())));
    for (const auto& g : gens) seen.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> cur(seen.begin(), seen.end());
        for (const auto& a : cur)
            for (const auto& b : cur)
                if (seen.insert(bf_mul(a, b)).second) grew = true;
    }
    return {seen.begin(), seen.end()};
}

// A relator is a sequence of (generator index, +1/-1).
using Letter = std::pair<int, int>;
using RelWord = std::vector<Letter>;

struct BfPresentation {
    int ngens = 0;
    std::vector<RelWord> relators;
};

inline Perm bf_eval(const RelWord& w, const std::vector<Perm>& images, int degree) {
    Perm acc = bf_identity(degree);
    for (auto [g, e] : w) acc = bf_mul(acc, e > 0 ? images[g] : bf_inv(images[g]));
    return acc;
}

// Full |G|^r odometer; returns every satisfying tuple of element indices.
inline std::vector<std::vector<int>> bf_all_homs(const BfPresentation& p,
                                                 const std::vector<Perm>& elements) {
    const int degree = int(elements[0].size());
    const Perm id = bf_identity(degree);
    std::vector<std::vector<int>> out;
    std::vector<int> tuple(p.ngens, 0);
    while (true) {
        std::vector<Perm> images;
        images.reserve(p.ngens);
        for (int t : tuple) images.push_back(elements[t]);
        bool ok = true;
        for (const auto& rel : p.relators)
            if (bf_eval(rel, images, degree) != id) { ok = false; break; }
        if (ok) out.push_back(tuple);
        int i = p.ngens - 1;
        while (i >= 0 && tuple[i] + 1 == int(elements.size())) tuple[i--] = 0;
        if (i < 0) break;
        ++tuple[i];
    }
    return out;
}

// Orbit count of the conjugation action, by explicit partition.
inline long long bf_orbit_count(const std::vector<std::vector<int>>& homs,
                                const std::vector<Perm>& elements) {
    std::set<std::vector<int>> index;
    for (const auto& h : homs) index.insert(h);
    std::map<Perm, int> elem_index;
    for (std::size_t i = 0; i < elements.size(); ++i) elem_index[elements[i]] = int(i);
    std::set<std::vector<int>> visited;
    long long orbits = 0;
    for (const auto& h : homs) {
        if (visited.count(h)) continue;
        ++orbits;
        for (const auto& g : elements) {
            const Perm gi = bf_inv(g);
            std::vector<int> conj(h.size());
            for (std::size_t j = 0; j < h.size(); ++j)
                conj[j] = elem_index.at(bf_mul(bf_mul(g, elements[h[j]]), gi));
            visited.insert(conj);
        }
    }
    return orbits;
}

struct BfCensusLine {
    long long homs = 0;
    long long orbits = 0;
};

// Image classification by subgroup order + commutativity; enough to
// separate trivial / Z2 / Z3 / Z5 / V4 / full / other in A4 and A5.
inline std::string bf_image_type(const std::vector<int>& hom,
                                 const std::vector<Perm>& elements) {
    std::vector<Perm> imgs;
    for (int t : hom) imgs.push_back(elements[t]);
    auto sub = bf_closure(imgs.empty() ? std::vector<Perm>{bf_identity(int(elements[0].size()))}
                                       : imgs);
    const std::size_t n = sub.size();
    if (n == 1) return "trivial";
    if (n == elements.size()) return "full";
    bool abelian = true;
    for (const auto& a : sub)
        for (const auto& b : sub)
            if (bf_mul(a, b) != bf_mul(b, a)) abelian = false;
    if (n == 2) return "Z2";
    if (n == 3) return "Z3";
    if (n == 5) return "Z5";
    if (n == 4 && abelian) {
        bool has4 = false;
        for (const auto& a : sub)
            if (bf_mul(a, a) != bf_identity(int(a.size())) &&
                bf_mul(bf_mul(a, a), a) != bf_identity(int(a.size())))
                has4 = true;
        return has4 ? "other" : "V4";
    }
    return "other";
}

inline std::map<std::string, BfCensusLine> bf_classify(
    const std::vector<std::vector<int>>& homs, const std::vector<Perm>& elements) {
    std::map<std::string, BfCensusLine> out;
    for (const auto& h : homs) out[bf_image_type(h, elements)].homs++;
    // orbit reps: reuse the partition walk
    std::set<std::vector<int>> visited;
    std::map<Perm, int> elem_index;
    for (std::size_t i = 0; i < elements.size(); ++i) elem_index[elements[i]] = int(i);
    for (const auto& h : homs) {
        if (visited.count(h)) continue;
        out[bf_image_type(h, elements)].orbits++;
        for (const auto& g : elements) {
            const Perm gi = bf_inv(g);
            std::vector<int> conj(h.size());
            for (std::size_t j = 0; j < h.size(); ++j)
                conj[j] = elem_index.at(bf_mul(bf_mul(g, elements[h[j]]), gi));
            visited.insert(conj);
        }
    }
    return out;
}

inline std::vector<Perm> bf_a4() {
    return bf_closure({Perm{1, 2, 0, 3}, Perm{1, 0, 3, 2}});
}

inline std::vector<Perm> bf_a5() {
    return bf_closure({Perm{1, 2, 3, 4, 0}, Perm{1, 2, 0, 3, 4}});
}

// Word parser for the oracle only: lowercase = generator, uppercase = inverse,
// generators named 'a' + index.
inline RelWord bf_word(const std::string& s) {
    RelWord w;
    for (char c : s) {
        if (c >= 'a' && c <= 'z') w.push_back({c - 'a', +1});
        else if (c >= 'A' && c <= 'Z') w.push_back({c - 'A', -1});
    }
    return w;
}

}  // namespace bruteforce
