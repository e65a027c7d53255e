#include <doctest.h>

#include <algorithm>
#include <set>

#include "hlirred/errors.hpp"
#include "hlirred/group.hpp"

using namespace hlirred;

namespace {

Perm perm(std::initializer_list<int> imgs) {
    std::vector<std::uint8_t> v;
    for (int i : imgs) v.push_back(std::uint8_t(i));
    return Perm(std::move(v));
}

void check_group_axioms(const FiniteGroup& g) {
    const int n = g.order();
    REQUIRE(g.elements[g.identity].is_identity());
    for (ElemIndex a = 0; a < n; ++a) {
        CHECK(g.mul(a, g.identity) == a);
        CHECK(g.mul(g.identity, a) == a);
        CHECK(g.mul(a, g.inv(a)) == g.identity);
    }
    // class equation and |centralizer| * |class| = |G|
    std::size_t covered = 0;
    for (const auto& cls : g.classes) covered += cls.size();
    CHECK(covered == std::size_t(n));
    CHECK(g.classes[0] == std::vector<ElemIndex>{g.identity});
    for (ElemIndex a = 0; a < n; ++a)
        CHECK(g.centralizer_of[a].size() * g.classes[g.class_of[a]].size() == std::size_t(n));
}

}  // namespace

TEST_CASE("make_group materializes A4 from its spec generators") {
    auto g = make_group({perm({1, 2, 0, 3}), perm({1, 0, 3, 2})});
    CHECK(g.order() == 12);
    CHECK(g.classes.size() == 4);
    check_group_axioms(g);
}

TEST_CASE("make_group handles the trivial group and A5") {
    auto t = make_group({perm({0})});
    CHECK(t.order() == 1);
    auto a5 = make_group({parse_cycles("(0 1 2 3 4)"), parse_cycles("(0 1 2)", 5)});
    CHECK(a5.order() == 60);
    CHECK(a5.classes.size() == 5);
    check_group_axioms(a5);
}

TEST_CASE("make_group rejects bad input") {
    CHECK_THROWS_AS(make_group({perm({1, 2, 0, 3}), perm({1, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(make_group({Perm({std::vector<std::uint8_t>{0, 0, 1}})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_group({parse_cycles("(0 1 2 3 4)"), parse_cycles("(0 1 2)", 5)}, 30),
                    CapExceeded);
}

TEST_CASE("make_group is deterministic") {
    auto a = make_group({perm({1, 2, 0, 3}), perm({1, 0, 3, 2})});
    auto b = make_group({perm({1, 2, 0, 3}), perm({1, 0, 3, 2})});
    CHECK(a.elements == b.elements);
    CHECK(a.mul_table == b.mul_table);
    CHECK(a.classes == b.classes);
}

TEST_CASE("builtin groups have the advertised orders") {
    CHECK(builtin_group("A4").order() == 12);
    CHECK(builtin_group("A5").order() == 60);
    CHECK(builtin_group("V4").order() == 4);
    CHECK(builtin_group("Zn:7").order() == 7);
    CHECK(builtin_group("Sn:4").order() == 24);
    CHECK_THROWS_AS(builtin_group("E8"), std::invalid_argument);
    check_group_axioms(builtin_group("Sn:4"));
    check_group_axioms(builtin_group("Zn:6"));
}

TEST_CASE("centralizers match the small-group facts") {
    auto a4 = builtin_group("A4");
    CHECK(centralizer(a4, a4.identity).size() == 12);
    auto dbl = a4.index_of(parse_cycles("(0 1)(2 3)"));
    auto c = centralizer(a4, dbl);
    CHECK(c.size() == 4);  // the V4 subgroup
    for (auto x : c)
        CHECK((a4.elements[x].is_identity() || a4.element_order(x) == 2));

    auto a5 = builtin_group("A5");
    auto five = a5.index_of(parse_cycles("(0 1 2 3 4)"));
    CHECK(centralizer(a5, five).size() == 5);
}

TEST_CASE("abelian census of A4: V4 once, Z3 four times") {
    auto a4 = builtin_group("A4");
    auto census = abelian_census(a4);
    REQUIRE(census.entries.size() == 2);
    const auto* z3 = census.find("Z3");
    const auto* v4 = census.find("V4");
    REQUIRE(z3);
    REQUIRE(v4);
    CHECK(z3->multiplicity() == 4);
    CHECK(z3->n_h == 3);
    CHECK(v4->multiplicity() == 1);
    CHECK(v4->n_h == 2);
}

TEST_CASE("abelian census of A5: V4 x5, Z3 x10, Z5 x6") {
    auto a5 = builtin_group("A5");
    auto census = abelian_census(a5);
    REQUIRE(census.entries.size() == 3);
    CHECK(census.find("V4")->multiplicity() == 5);
    CHECK(census.find("Z3")->multiplicity() == 10);
    CHECK(census.find("Z5")->multiplicity() == 6);
    CHECK(census.find("V4")->n_h == 2);
    CHECK(census.find("Z3")->n_h == 2);
    CHECK(census.find("Z5")->n_h == 3);
}

TEST_CASE("abelian census of an abelian group is the group itself") {
    auto z6 = builtin_group("Zn:6");
    auto census = abelian_census(z6);
    REQUIRE(census.entries.size() == 1);
    CHECK(census.entries[0].type_name() == "Z6");
    CHECK(census.entries[0].multiplicity() == 1);
    CHECK(census.entries[0].n_h == 6);
    CHECK(census.entries[0].invariant_factors == std::vector<int>{6});
}

TEST_CASE("n_h is independent of the representative subgroup") {
    for (const char* name : {"A4", "A5"}) {
        auto g = builtin_group(name);
        for (const auto& entry : abelian_census(g).entries)
            for (const auto& sub : entry.subgroups) {
                int n_h = 0;
                for (const auto& cls : g.classes) {
                    bool meets = false;
                    for (auto m : cls)
                        if (std::binary_search(sub.begin(), sub.end(), m)) meets = true;
                    if (meets) ++n_h;
                }
                CHECK(n_h == entry.n_h);
            }
    }
}

TEST_CASE("counting hypothesis: A4 and A5 pass, S4 fails") {
    CHECK(check_counting_hypothesis(builtin_group("A4")).holds);
    CHECK(check_counting_hypothesis(builtin_group("A5")).holds);
    auto rep = check_counting_hypothesis(builtin_group("Sn:4"));
    CHECK_FALSE(rep.holds);
    CHECK_FALSE(rep.detail.empty());
}

TEST_CASE("census subgroups pairwise intersect trivially and self-centralize") {
    for (const char* name : {"A4", "A5"}) {
        auto g = builtin_group(name);
        auto census = abelian_census(g);
        REQUIRE(check_counting_hypothesis(g, census).holds);
        std::vector<const std::vector<ElemIndex>*> subs;
        for (const auto& e : census.entries)
            for (const auto& s : e.subgroups) subs.push_back(&s);
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = i + 1; j < subs.size(); ++j) {
                std::vector<ElemIndex> common;
                std::set_intersection(subs[i]->begin(), subs[i]->end(), subs[j]->begin(),
                                      subs[j]->end(), std::back_inserter(common));
                CHECK(common == std::vector<ElemIndex>{g.identity});
            }
        // the centralizer of every non-identity member is the subgroup itself
        for (const auto& e : census.entries)
            for (const auto& s : e.subgroups)
                for (auto m : s) {
                    if (m == g.identity) continue;
                    CHECK(centralizer(g, m) == s);
                }
    }
}

TEST_CASE("abelian invariant factors") {
    auto z6 = builtin_group("Zn:6");
    std::vector<ElemIndex> all(6);
    for (int i = 0; i < 6; ++i) all[i] = ElemIndex(i);
    CHECK(abelian_invariants(z6, all) == std::vector<int>{6});

    auto v4 = builtin_group("V4");
    std::vector<ElemIndex> v4all(4);
    for (int i = 0; i < 4; ++i) v4all[i] = ElemIndex(i);
    CHECK(abelian_invariants(v4, v4all) == std::vector<int>{2, 2});
}

TEST_CASE("cycle notation round trip") {
    auto p = parse_cycles("(0 1 2)(3 4)");
    CHECK(p.degree() == 5);
    CHECK(parse_cycles(to_cycles(p)) == p);
    CHECK(to_cycles(identity_perm(3)) == "()");
    CHECK_THROWS_AS(parse_cycles("(0 1)(1 2)"), ParseError);
}
