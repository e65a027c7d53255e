#include "hlirred/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hlirred/errors.hpp"

namespace hlirred {

int FiniteGroup::element_order(ElemIndex a) const {
    int n = 1;
    ElemIndex x = a;
    while (x != identity) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

ElemIndex FiniteGroup::index_of(const Perm& p) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == p) return ElemIndex(i);
    throw std::invalid_argument("permutation is not an element of the group");
}

FiniteGroup make_group(const std::vector<Perm>& generators, int order_cap, std::string name) {
    if (generators.empty()) throw std::invalid_argument("make_group: no generators");
    const int degree = generators[0].degree();
    if (degree < 1 || degree > 255)
        throw std::invalid_argument("make_group: degree out of range");
    for (const auto& g : generators) {
        if (g.degree() != degree) throw std::invalid_argument("make_group: degree mismatch");
        if (!g.is_bijection()) throw std::invalid_argument("make_group: generator is not a bijection");
    }

    order_cap = std::min(order_cap, 65535);  // ElemIndex range

    FiniteGroup grp;
    grp.degree = degree;
    grp.name = std::move(name);

    std::map<Perm, ElemIndex> index;
    grp.elements.push_back(identity_perm(degree));
    index[grp.elements[0]] = 0;
    for (std::size_t i = 0; i < grp.elements.size(); ++i) {
        for (const auto& g : generators) {
            Perm p = grp.elements[i] * g;
            if (index.emplace(p, ElemIndex(grp.elements.size())).second) {
                if (int(grp.elements.size()) >= order_cap)
                    throw CapExceeded("make_group: order cap " + std::to_string(order_cap) +
                                      " exceeded");
                grp.elements.push_back(std::move(p));
            }
        }
    }

    const std::size_t n = grp.elements.size();
    grp.mul_table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            grp.mul_table[a * n + b] = index.at(grp.elements[a] * grp.elements[b]);
    grp.inv_table.resize(n);
    for (std::size_t a = 0; a < n; ++a) grp.inv_table[a] = index.at(inverse(grp.elements[a]));

    grp.class_of.assign(n, 0);
    std::vector<bool> seen(n, false);
    for (ElemIndex e = 0; e < n; ++e) {
        if (seen[e]) continue;
        std::set<ElemIndex> cls;
        for (ElemIndex g = 0; g < n; ++g) cls.insert(grp.conj(g, e));
        std::vector<ElemIndex> members(cls.begin(), cls.end());
        for (auto m : members) {
            seen[m] = true;
            grp.class_of[m] = ElemIndex(grp.classes.size());
        }
        grp.classes.push_back(std::move(members));
    }

    grp.centralizer_of.resize(n);
    for (ElemIndex e = 0; e < n; ++e) {
        auto& c = grp.centralizer_of[e];
        for (ElemIndex h = 0; h < n; ++h)
            if (grp.mul(h, e) == grp.mul(e, h)) c.push_back(h);
    }
    return grp;
}

FiniteGroup builtin_group(const std::string& name) {
    auto cyclic = [](int m) {
        if (m < 1 || m > 255) throw std::invalid_argument("Zn: n out of range");
        std::vector<std::uint8_t> img(m);
        for (int i = 0; i < m; ++i) img[i] = std::uint8_t((i + 1) % m);
        return make_group({Perm(img)}, std::max(kDefaultGroupOrderCap, m + 1), "Z" + std::to_string(m));
    };
    auto symmetric = [](int m) {
        if (m < 2 || m > 8) throw std::invalid_argument("Sn: n out of range (2..8)");
        std::vector<std::uint8_t> cycle(m), swap01(m);
        for (int i = 0; i < m; ++i) {
            cycle[i] = std::uint8_t((i + 1) % m);
            swap01[i] = std::uint8_t(i);
        }
        std::swap(swap01[0], swap01[1]);
        return make_group({Perm(cycle), Perm(swap01)}, kDefaultGroupOrderCap,
                          "S" + std::to_string(m));
    };

    if (name == "A4")
        return make_group({parse_cycles("(0 1 2)", 4), parse_cycles("(0 1)(2 3)")}, kDefaultGroupOrderCap, "A4");
    if (name == "A5")
        return make_group({parse_cycles("(0 1 2 3 4)"), parse_cycles("(0 1 2)", 5)}, kDefaultGroupOrderCap, "A5");
    if (name == "V4")
        return make_group({parse_cycles("(0 1)(2 3)"), parse_cycles("(0 2)(1 3)")}, kDefaultGroupOrderCap, "V4");
    if (name.rfind("Zn:", 0) == 0) return cyclic(std::stoi(name.substr(3)));
    if (name.rfind("Sn:", 0) == 0) return symmetric(std::stoi(name.substr(3)));
    if (name.size() > 1 && name[0] == 'Z' && std::isdigit(static_cast<unsigned char>(name[1])))
        return cyclic(std::stoi(name.substr(1)));
    if (name.size() > 1 && name[0] == 'S' && std::isdigit(static_cast<unsigned char>(name[1])))
        return symmetric(std::stoi(name.substr(1)));
    throw std::invalid_argument("unknown group name: " + name);
}

std::vector<ElemIndex> centralizer(const FiniteGroup& g, ElemIndex elem) {
    if (elem >= g.order()) throw std::invalid_argument("centralizer: bad element index");
    return g.centralizer_of[elem];
}

std::vector<ElemIndex> subgroup_closure(const FiniteGroup& g, std::vector<ElemIndex> seed) {
    std::set<ElemIndex> sub(seed.begin(), seed.end());
    sub.insert(g.identity);
    std::vector<ElemIndex> queue(sub.begin(), sub.end());
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t j = 0; j < queue.size(); ++j) {
            for (ElemIndex p : {g.mul(queue[i], queue[j]), g.mul(queue[j], queue[i])})
                if (sub.insert(p).second) queue.push_back(p);
        }
    return {sub.begin(), sub.end()};
}

namespace {

// All invariant-factor sequences d1 | d2 | ... | dk with product n, dk = last.
void factor_sequences(int n, int max_last, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (n == 1) {
        out.push_back({cur.rbegin(), cur.rend()});
        return;
    }
    for (int d = 2; d <= std::min(n, max_last); ++d) {
        if (n % d != 0) continue;
        cur.push_back(d);
        factor_sequences(n / d, d, cur, out);
        cur.pop_back();
    }
}

// Multiset of element orders of Z_{d1} x ... x Z_{dk}.
std::multiset<int> order_stats(const std::vector<int>& factors) {
    std::vector<int> tuple(factors.size(), 0);
    std::multiset<int> orders;
    while (true) {
        int o = 1;
        for (std::size_t i = 0; i < factors.size(); ++i)
            o = std::lcm(o, factors[i] / std::gcd(factors[i], tuple[i]));
        orders.insert(o);
        int i = int(factors.size()) - 1;
        while (i >= 0 && tuple[i] + 1 == factors[i]) tuple[i--] = 0;
        if (i < 0) break;
        ++tuple[i];
    }
    return orders;
}

}  // namespace

std::vector<int> abelian_invariants(const FiniteGroup& g, const std::vector<ElemIndex>& sub) {
    for (auto a : sub)
        for (auto b : sub)
            if (g.mul(a, b) != g.mul(b, a))
                throw std::invalid_argument("abelian_invariants: subgroup is not abelian");
    const int n = int(sub.size());
    if (n == 1) return {};
    std::multiset<int> actual;
    for (auto a : sub) actual.insert(g.element_order(a));

    std::vector<std::vector<int>> candidates;
    std::vector<int> cur;
    factor_sequences(n, n, cur, candidates);
    for (const auto& cand : candidates) {
        bool chain_ok = true;
        for (std::size_t i = 0; i + 1 < cand.size(); ++i)
            if (cand[i + 1] % cand[i] != 0) chain_ok = false;
        if (chain_ok && order_stats(cand) == actual) return cand;
    }
    throw std::invalid_argument("abelian_invariants: set is not a subgroup");
}

std::string AbelianClass::type_name() const {
    if (invariant_factors.empty()) return "1";
    if (invariant_factors == std::vector<int>{2, 2}) return "V4";
    if (invariant_factors.size() == 1) return "Z" + std::to_string(invariant_factors[0]);
    std::string s;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i)
        s += (i ? "x" : "") + ("Z" + std::to_string(invariant_factors[i]));
    return s;
}

const AbelianClass* AbelianSubgroupCensus::find(const std::string& type_name) const {
    for (const auto& e : entries)
        if (e.type_name() == type_name) return &e;
    return nullptr;
}

AbelianSubgroupCensus abelian_census(const FiniteGroup& g) {
    const int n = g.order();
    std::set<std::vector<ElemIndex>> maximal;
    auto consider = [&](std::vector<ElemIndex> seed) {
        auto sub = subgroup_closure(g, std::move(seed));
        // exact maximality test: S is maximal abelian iff C_G(S) == S
        std::vector<ElemIndex> cent;
        for (ElemIndex h = 0; h < n; ++h) {
            bool commutes = true;
            for (auto s : sub)
                if (g.mul(h, s) != g.mul(s, h)) { commutes = false; break; }
            if (commutes) cent.push_back(h);
        }
        if (cent == sub) maximal.insert(std::move(sub));
    };
    for (ElemIndex a = 0; a < n; ++a) {
        consider({a});
        for (ElemIndex b = ElemIndex(a + 1); b < n; ++b)
            if (g.mul(a, b) == g.mul(b, a)) consider({a, b});
    }

    std::map<std::vector<int>, AbelianClass> by_type;
    for (const auto& sub : maximal) {
        auto inv = abelian_invariants(g, sub);
        auto& entry = by_type[inv];
        entry.invariant_factors = inv;
        entry.subgroups.push_back(sub);
    }

    AbelianSubgroupCensus census;
    for (auto& [inv, entry] : by_type) {
        // n_H from the first representative; equal across conjugates
        const auto& rep = entry.subgroups.front();
        int n_h = 0;
        for (const auto& cls : g.classes) {
            bool meets = false;
            for (auto m : cls)
                if (std::binary_search(rep.begin(), rep.end(), m)) { meets = true; break; }
            if (meets) ++n_h;
        }
        entry.n_h = n_h;
        census.entries.push_back(std::move(entry));
    }
    std::sort(census.entries.begin(), census.entries.end(),
              [](const AbelianClass& a, const AbelianClass& b) {
                  return std::pair(a.subgroup_order(), a.invariant_factors) <
                         std::pair(b.subgroup_order(), b.invariant_factors);
              });
    return census;
}

HypothesisReport check_counting_hypothesis(const FiniteGroup& g,
                                           const AbelianSubgroupCensus& census) {
    const int n = g.order();
    // clause 1 over 2-generated subgroups: if <x,y> is nonabelian, its
    // centralizer C(x) ∩ C(y) must be trivial
    for (ElemIndex x = 0; x < n; ++x)
        for (ElemIndex y = ElemIndex(x + 1); y < n; ++y) {
            if (g.mul(x, y) == g.mul(y, x)) continue;
            const auto& cx = g.centralizer_of[x];
            const auto& cy = g.centralizer_of[y];
            std::vector<ElemIndex> both;
            std::set_intersection(cx.begin(), cx.end(), cy.begin(), cy.end(),
                                  std::back_inserter(both));
            if (both.size() > 1)
                return {false, "nonabelian subgroup <" + to_cycles(g.elements[x]) + ", " +
                                   to_cycles(g.elements[y]) + "> has nontrivial centralizer"};
        }
    // clause 2: maximal abelian subgroups intersect trivially
    std::vector<const std::vector<ElemIndex>*> all;
    for (const auto& e : census.entries)
        for (const auto& s : e.subgroups) all.push_back(&s);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            std::vector<ElemIndex> both;
            std::set_intersection(all[i]->begin(), all[i]->end(), all[j]->begin(),
                                  all[j]->end(), std::back_inserter(both));
            if (both.size() > 1)
                return {false, "two maximal abelian subgroups intersect nontrivially"};
        }
    return {true, {}};
}

HypothesisReport check_counting_hypothesis(const FiniteGroup& g) {
    return check_counting_hypothesis(g, abelian_census(g));
}

}  // namespace hlirred
