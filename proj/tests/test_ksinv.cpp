#include <doctest.h>

#include "hlirred/checked.hpp"
#include "hlirred/errors.hpp"
#include "hlirred/ksinv.hpp"

using namespace hlirred;

TEST_CASE("abelian subgroup hom counts are |H|^g") {
    CHECK(ksw_abelian(3, 2) == 9);
    CHECK(ksw_abelian(4, 1) == 4);
    CHECK(ksw_abelian(5, 3) == 125);
    CHECK_THROWS_AS(ksw_abelian(3, 0), std::invalid_argument);
}

TEST_CASE("ks_h_g closed form and its recursion") {
    CHECK(ks_h_g(3, 3, 2) == 9);   // = 3^g for the Z3 of A4
    CHECK(ks_h_g(2, 4, 2) == 6);   // = (4^g - 4)/3 + 2 for V4
    CHECK(ks_h_g(3, 5, 1) == 3);   // genus 1 gives n_H

    // l_g = l_{g-1} + (n_H - 1) |H|^{g-1}, l_1 = n_H
    for (int n_h : {2, 3}) {
        for (long long h : {2LL, 3LL, 4LL, 5LL}) {
            long long prev = n_h;
            CHECK(ks_h_g(n_h, h, 1) == prev);
            for (int g = 2; g <= 6; ++g) {
                long long direct = ks_h_g(n_h, h, g);
                long long via_recursion = prev + (n_h - 1) * checked_pow(h, g - 1);
                CHECK(direct == via_recursion);
                prev = direct;
            }
        }
    }
}

TEST_CASE("general counting formula specializes to the A4/A5 values") {
    auto a4 = builtin_group("A4");
    auto census4 = abelian_census(a4);

    // free rank 2: ks_w = 144, Z3 parts 9/9, V4 parts 16/6 -> 22
    KsParts parts;
    parts.ks_w = 144;
    for (const auto& e : census4.entries) {
        parts.ks_h_w.push_back(ksw_abelian(e.subgroup_order(), 2));
        parts.ks_h_g.push_back(ks_h_g(e.n_h, e.subgroup_order(), 2));
    }
    CHECK(ks_from_parts(a4, census4, parts) == 22);

    // free rank 1 -> 4 classes
    KsParts parts1;
    parts1.ks_w = 12;
    for (const auto& e : census4.entries) {
        parts1.ks_h_w.push_back(ksw_abelian(e.subgroup_order(), 1));
        parts1.ks_h_g.push_back(ks_h_g(e.n_h, e.subgroup_order(), 1));
    }
    CHECK(ks_from_parts(a4, census4, parts1) == 4);

    auto a5 = builtin_group("A5");
    auto census5 = abelian_census(a5);
    KsParts parts5;
    parts5.ks_w = 3600;
    for (const auto& e : census5.entries) {
        parts5.ks_h_w.push_back(ksw_abelian(e.subgroup_order(), 2));
        parts5.ks_h_g.push_back(ks_h_g(e.n_h, e.subgroup_order(), 2));
    }
    CHECK(ks_from_parts(a5, census5, parts5) == 77);
}

TEST_CASE("ks_from_parts refuses groups failing the hypothesis") {
    auto s4 = builtin_group("Sn:4");
    auto census = abelian_census(s4);
    KsParts parts;
    parts.ks_w = 24;
    for (const auto& e : census.entries) {
        parts.ks_h_w.push_back(ksw_abelian(e.subgroup_order(), 1));
        parts.ks_h_g.push_back(ks_h_g(e.n_h, e.subgroup_order(), 1));
    }
    CHECK_THROWS_AS(ks_from_parts(s4, census, parts), std::invalid_argument);
}

TEST_CASE("ks_from_parts detects non-integral division") {
    auto a4 = builtin_group("A4");
    auto census = abelian_census(a4);
    KsParts parts;
    parts.ks_w = 145;  // inconsistent input
    for (const auto& e : census.entries) {
        parts.ks_h_w.push_back(ksw_abelian(e.subgroup_order(), 2));
        parts.ks_h_g.push_back(ks_h_g(e.n_h, e.subgroup_order(), 2));
    }
    CHECK_THROWS_AS(ks_from_parts(a4, census, parts), std::invalid_argument);
}

TEST_CASE("ks_w from ks") {
    CHECK(ksw_from_ks(KsGroup::A4, 30, 2) == 240);
    CHECK(ksw_from_ks(KsGroup::A4, 22, 2) == 144);
    CHECK(ksw_from_ks(KsGroup::A5, 77, 2) == 3600);
    CHECK(ksw_from_ks(KsGroup::A5, 5, 1) == 60);
    CHECK_THROWS_AS(ksw_from_ks(KsGroup::A4, 1, 3), std::invalid_argument);
}

TEST_CASE("one-sum with a trivial knot factor") {
    CHECK(onesum_trivial(KsGroup::A4, 4, 2) == 22);
    CHECK(onesum_trivial(KsGroup::A5, 5, 2) == 77);
    CHECK(onesum_trivial(KsGroup::A4, 22, 3) == 178);
    CHECK_THROWS_AS(onesum_trivial(KsGroup::A4, 0, 2), std::invalid_argument);
}

TEST_CASE("three-case sum equals the closed form") {
    for (auto g : {KsGroup::A4, KsGroup::A5})
        for (int genus = 2; genus <= 6; ++genus)
            for (long long ks : {4LL, 5LL, 6LL, 10LL, 14LL, 22LL, 30LL, 77LL, 178LL}) {
                long long closed, cases;
                try {
                    closed = onesum_trivial(g, ks, genus);
                    cases = onesum_trivial_cases(g, ks, genus);
                } catch (const std::invalid_argument&) {
                    continue;  // negative: not a handlebody-link value at this genus
                }
                CHECK(closed == cases);
            }
}

TEST_CASE("one-sum with 2-generator knot and link factors") {
    CHECK(onesum_2gen_knot_a4(4, 2, 0) == onesum_trivial(KsGroup::A4, 4, 2));
    CHECK(onesum_2gen_knot_a4(4, 2, 1) == 46);
    CHECK(onesum_2gen_link_a4(4, 3, 0) == 82);
    CHECK_THROWS_AS(onesum_2gen_knot_a4(4, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(onesum_2gen_link_a4(4, 3, 5), std::invalid_argument);
}

TEST_CASE("one-sum values verified against enumeration") {
    auto a4 = builtin_group("A4");
    auto a5 = builtin_group("A5");
    auto tref = parse_presentation("gens a b\nrel aba = bab\n");
    auto hopf = parse_presentation("gens a b\nrel ab = ba\n");
    auto z = parse_presentation("gens a\n");

    // trefoil * Z, genus 2, k = 1: golden 46 (A4) and 377 (A5)
    auto tz = free_product(tref, z);
    CHECK(ks_orbits(tz, a4) == 46);
    CHECK(onesum_2gen_knot_a4(ks_orbits(z, a4), 2, 1) == 46);
    CHECK(ks_orbits(tz, a5) == 377);
    CHECK(onesum_trivial(KsGroup::A5, ks_orbits(tref, a5), 2) == 377);

    // hopf * Z, genus 3: link formula k=0 and trivial formula agree at 82
    auto hz = free_product(hopf, z);
    CHECK(ks_orbits(hz, a4) == 82);
    CHECK(onesum_2gen_link_a4(ks_orbits(z, a4), 3, 0) == 82);
    CHECK(onesum_trivial(KsGroup::A4, ks_orbits(hopf, a4), 3) == 82);

    // trefoil * trefoil, genus 2, k = 1 on ks' = 6
    CHECK(ks_orbits(free_product(tref, tref), a4) == 118);
    CHECK(onesum_2gen_knot_a4(6, 2, 1) == 118);
}

TEST_CASE("enumerated per-subgroup counts match the closed forms") {
    // holds for any presentation whose abelianization is free of rank g
    const char* texts[] = {
        "gens a\n",
        "gens a b\n",
        "gens a b\nrel aba = bab\n",
        "gens a b\nrel ab = ba\n",
        "gens a b c\nrel ab = ba\nrel bc = cb\n",
    };
    for (const char* gname : {"A4", "A5"}) {
        auto g = builtin_group(gname);
        auto census = abelian_census(g);
        for (const char* text : texts) {
            auto p = parse_presentation(text);
            auto ab = abelianization(p);
            REQUIRE(ab.torsion.empty());
            auto rep = compute_ks_report(p, g);
            REQUIRE(rep.per_subgroup.size() == census.entries.size());
            for (std::size_t i = 0; i < census.entries.size(); ++i) {
                const auto& entry = census.entries[i];
                CHECK(rep.per_subgroup[i].ks_h_w ==
                      ksw_abelian(entry.subgroup_order(), ab.free_rank));
                CHECK(rep.per_subgroup[i].ks_h_g ==
                      ks_h_g(entry.n_h, entry.subgroup_order(), ab.free_rank));
            }
            // and the general formula reassembles the orbit count
            KsParts parts;
            parts.ks_w = rep.ks_w;
            for (const auto& line : rep.per_subgroup) {
                parts.ks_h_w.push_back(line.ks_h_w);
                parts.ks_h_g.push_back(line.ks_h_g);
            }
            CHECK(ks_from_parts(g, census, parts) == rep.ks);
            auto kg = std::string(gname) == "A4" ? KsGroup::A4 : KsGroup::A5;
            CHECK(ksw_from_ks(kg, rep.ks, ab.free_rank) == rep.ks_w);
        }
    }
}

TEST_CASE("k_from_census reads the surjection pairs") {
    auto a4 = builtin_group("A4");
    auto tref = parse_presentation("gens a b\nrel aba = bab\n");
    CHECK(k_from_census(classify_homs(tref, a4)) == 1);
    auto t25 = parse_presentation("gens a b\nrel ababa = babab\n");
    CHECK(k_from_census(classify_homs(t25, a4)) == 0);
}

TEST_CASE("full report for the trefoil into A4") {
    auto a4 = builtin_group("A4");
    auto tref = parse_presentation("gens a b\nrel aba = bab\n");
    auto rep = compute_ks_report(tref, a4);
    CHECK(rep.genus == 1);
    CHECK(rep.ks_w == 36);
    CHECK(rep.ks == 6);
    CHECK(rep.ks_burnside == 6);
    CHECK(rep.surjective_orbits == 2);
    REQUIRE(rep.per_subgroup.size() == 2);
    for (const auto& line : rep.per_subgroup) {
        if (line.type_name == "Z3") {
            CHECK(line.ks_h_w == 3);  // |Z3|^1 through the abelianization
            CHECK(line.ks_h_g == 3);
        } else {
            CHECK(line.type_name == "V4");
            CHECK(line.ks_h_w == 4);  // |V4|^1
            CHECK(line.ks_h_g == 2);
        }
    }
}
