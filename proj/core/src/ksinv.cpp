#include "hlirred/ksinv.hpp"

#include <stdexcept>

#include "hlirred/checked.hpp"
#include "hlirred/errors.hpp"

namespace hlirred {

long long ksw_abelian(long long subgroup_order, int genus) {
    if (genus < 1) throw std::invalid_argument("ksw_abelian: genus must be >= 1");
    return checked_pow(subgroup_order, genus);
}

long long ks_h_g(int n_h, long long subgroup_order, int genus) {
    if (genus < 1) throw std::invalid_argument("ks_h_g: genus must be >= 1");
    if (n_h < 1) throw std::invalid_argument("ks_h_g: n_h must be >= 1");
    if (subgroup_order < 2) throw std::invalid_argument("ks_h_g: |H| must be >= 2");
    long long geom = checked_sub(checked_pow(subgroup_order, genus), subgroup_order);
    if (geom % (subgroup_order - 1) != 0)
        throw std::logic_error("ks_h_g: geometric sum not integral");
    return checked_add(checked_mul(n_h - 1, geom / (subgroup_order - 1)), n_h);
}

long long ks_from_parts(const FiniteGroup& g, const AbelianSubgroupCensus& census,
                        const KsParts& parts) {
    auto hyp = check_counting_hypothesis(g, census);
    if (!hyp.holds)
        throw std::invalid_argument("ks_from_parts: counting hypothesis fails for " +
                                    (g.name.empty() ? std::string("group") : g.name) + ": " +
                                    hyp.detail);
    const std::size_t n = census.entries.size();
    if (parts.ks_h_w.size() != n || parts.ks_h_g.size() != n)
        throw std::invalid_argument("ks_from_parts: parts not aligned with census");

    long long classes_part = 1 - (long long)n;
    for (auto v : parts.ks_h_g) classes_part = checked_add(classes_part, v);

    long long numerator = checked_sub(parts.ks_w, 1);
    for (std::size_t i = 0; i < n; ++i)
        numerator = checked_sub(
            numerator, checked_mul(census.entries[i].multiplicity(),
                                   checked_sub(parts.ks_h_w[i], 1)));
    if (numerator % g.order() != 0)
        throw std::invalid_argument("ks_from_parts: numerator " + std::to_string(numerator) +
                                    " not divisible by |G| = " + std::to_string(g.order()));
    return checked_add(classes_part, numerator / g.order());
}

namespace {

long long require_nonneg(long long v, const char* what) {
    if (v < 0)
        throw std::invalid_argument(std::string(what) +
                                    ": negative result; inputs are not from a handlebody link "
                                    "of this genus");
    return v;
}

}  // namespace

long long ksw_from_ks(KsGroup g, long long ks, int genus) {
    if (genus < 1) throw std::invalid_argument("ksw_from_ks: genus must be >= 1");
    long long p3 = checked_pow(3, genus), p4 = checked_pow(4, genus);
    if (g == KsGroup::A4)
        return require_nonneg(
            checked_sub(checked_sub(checked_mul(12, ks), checked_mul(8, p3)),
                        checked_mul(3, p4)),
            "ksw_from_ks[A4]");
    long long p5 = checked_pow(5, genus);
    long long v = checked_mul(60, ks);
    v = checked_sub(v, checked_mul(20, p3));
    v = checked_sub(v, checked_mul(15, p4));
    v = checked_sub(v, checked_mul(24, p5));
    return require_nonneg(v, "ksw_from_ks[A5]");
}

long long onesum_trivial(KsGroup g, long long ks_factor, int genus) {
    if (genus < 2) throw std::invalid_argument("onesum_trivial: genus must be >= 2");
    long long p3 = checked_pow(3, genus - 1), p4 = checked_pow(4, genus - 1);
    if (g == KsGroup::A4)
        return require_nonneg(
            checked_sub(checked_sub(checked_mul(12, ks_factor), checked_mul(6, p3)),
                        checked_mul(2, p4)),
            "onesum_trivial[A4]");
    long long p5 = checked_pow(5, genus - 1);
    long long v = checked_mul(60, ks_factor);
    v = checked_sub(v, checked_mul(19, p3));
    v = checked_sub(v, checked_mul(14, p4));
    v = checked_sub(v, checked_mul(22, p5));
    return require_nonneg(v, "onesum_trivial[A5]");
}

long long onesum_trivial_cases(KsGroup g, long long ks_factor, int genus) {
    if (genus < 2) throw std::invalid_argument("onesum_trivial_cases: genus must be >= 2");
    const int gf = genus - 1;  // factor genus
    long long ksw = ksw_from_ks(g, ks_factor, gf);
    long long w3 = checked_pow(3, gf), w4 = checked_pow(4, gf);
    auto exact_div = [](long long a, long long b) {
        if (a % b != 0) throw std::logic_error("onesum_trivial_cases: non-integral case count");
        return a / b;
    };
    // restriction to the new meridian is trivial / order-2 / order-3 (+ order-5)
    long long total = ks_factor;
    total = checked_add(total, checked_add(exact_div(checked_sub(ksw, w4), 4), w4));
    if (g == KsGroup::A4) {
        long long z3_case = checked_add(exact_div(checked_sub(ksw, w3), 3), w3);
        return checked_add(total, checked_mul(2, z3_case));
    }
    long long w5 = checked_pow(5, gf);
    total = checked_add(total, checked_add(exact_div(checked_sub(ksw, w3), 3), w3));
    long long z5_case = checked_add(exact_div(checked_sub(ksw, w5), 5), w5);
    return checked_add(total, checked_mul(2, z5_case));
}

long long onesum_2gen_knot_a4(long long ks_factor, int genus, int k) {
    if (genus < 2) throw std::invalid_argument("onesum_2gen_knot_a4: genus must be >= 2");
    if (k != 0 && k != 1) throw std::invalid_argument("onesum_2gen_knot_a4: k must be 0 or 1");
    long long p3 = checked_pow(3, genus - 1), p4 = checked_pow(4, genus - 1);
    long long v = checked_mul(12 + 24 * k, ks_factor);
    v = checked_sub(v, checked_mul(6 + 16 * k, p3));
    v = checked_sub(v, checked_mul(2 + 6 * k, p4));
    return require_nonneg(v, "onesum_2gen_knot_a4");
}

long long onesum_2gen_link_a4(long long ks_factor, int genus, int k) {
    if (genus < 2) throw std::invalid_argument("onesum_2gen_link_a4: genus must be >= 2");
    if (k < 0 || k > 4) throw std::invalid_argument("onesum_2gen_link_a4: k must be in 0..4");
    long long p3 = checked_pow(3, genus - 2), p4 = checked_pow(4, genus - 2);
    long long v = checked_mul(48 + 24 * k, ks_factor);
    v = checked_sub(v, checked_mul(26 + 16 * k, p3));
    v = checked_sub(v, checked_mul(8 + 6 * k, p4));
    return require_nonneg(v, "onesum_2gen_link_a4");
}

int k_from_census(const HomCensus& census) {
    long long s = census.surjective_orbits();
    if (s % 2 != 0)
        throw std::invalid_argument("k_from_census: odd surjective orbit count " +
                                    std::to_string(s));
    return int(s / 2);
}

KsReport compute_ks_report(const Presentation& p, const FiniteGroup& g,
                           const HomCountOptions& opts) {
    KsReport rep;
    rep.group_name = g.name.empty() ? "G" : g.name;

    auto ab = abelianization(p);
    rep.genus = ab.free_rank;

    rep.ks_w = count_homs(p, g, nullptr, opts.jobs);
    rep.ks_burnside = ks_burnside(p, g, opts.jobs);
    try {
        rep.census = classify_homs(p, g, opts);
        rep.ks = rep.census.orbit_count;
        rep.surjective_orbits = rep.census.surjective_orbits();
    } catch (const CapExceeded&) {
        rep.orbits_capped = true;
        rep.ks = rep.ks_burnside;
    }

    std::vector<Hom> orbit_reps;
    if (!rep.orbits_capped) ks_orbits(p, g, opts, &orbit_reps);

    auto census = abelian_census(g);
    for (const auto& entry : census.entries) {
        KsReport::SubgroupLine line;
        line.type_name = entry.type_name();
        line.ks_h_w = count_homs(p, g, &entry.subgroups.front(), opts.jobs);
        if (!rep.orbits_capped) {
            // orbits whose image embeds in some subgroup of this type
            long long n = 0;
            for (const auto& hom : orbit_reps) {
                auto img = subgroup_closure(g, std::vector<ElemIndex>(hom.begin(), hom.end()));
                bool inside = false;
                for (const auto& sub : entry.subgroups) {
                    if (std::includes(sub.begin(), sub.end(), img.begin(), img.end())) {
                        inside = true;
                        break;
                    }
                }
                if (inside) ++n;
            }
            line.ks_h_g = n;
        } else if (rep.genus >= 1 && ab.torsion.empty()) {
            line.ks_h_g = ks_h_g(entry.n_h, entry.subgroup_order(), rep.genus);
        }
        rep.per_subgroup.push_back(std::move(line));
    }
    return rep;
}

}  // namespace hlirred
