#include "hlirred/criteria.hpp"

#include <algorithm>
#include <set>

#include "hlirred/checked.hpp"
#include "hlirred/diagram.hpp"
#include "hlirred/errors.hpp"

namespace hlirred {

std::string to_string(CriterionId id) {
    switch (id) {
        case CriterionId::C11: return "C11";
        case CriterionId::C12: return "C12";
        case CriterionId::C13: return "C13";
        case CriterionId::C14: return "C14";
    }
    return "?";
}

bool needs_a5(CriterionId id) { return id == CriterionId::C14; }

namespace {

CriterionResult divisibility_family(CriterionId id, long long ks, int genus,
                                    int k_lo, int k_hi, auto modulus_of, auto dividend_of) {
    CriterionResult res;
    res.id = id;
    for (int k = k_lo; k <= k_hi; ++k) {
        DivisibilityTrial t;
        t.k = k;
        t.modulus = modulus_of(k);
        t.dividend = dividend_of(k, ks, genus);
        t.remainder = ((t.dividend % t.modulus) + t.modulus) % t.modulus;
        if (t.remainder == 0) res.witnesses.push_back(k);
        res.trail.push_back(t);
    }
    res.satisfied = !res.witnesses.empty();
    return res;
}

}  // namespace

CriterionResult c11(long long ks_a4, int genus) {
    if (genus < 1) throw std::invalid_argument("c11: genus must be >= 1");
    return divisibility_family(
        CriterionId::C11, ks_a4, genus, 0, 0, [](int) { return 12LL; },
        [](int, long long ks, int g) {
            return checked_add(ks, checked_add(checked_mul(6, checked_pow(3, g - 1)),
                                               checked_mul(2, checked_pow(4, g - 1))));
        });
}

CriterionResult c12(long long ks_a4, int genus) {
    if (genus < 1) throw std::invalid_argument("c12: genus must be >= 1");
    return divisibility_family(
        CriterionId::C12, ks_a4, genus, 0, 1, [](int k) { return 12LL + 24 * k; },
        [](int k, long long ks, int g) {
            return checked_add(ks,
                               checked_add(checked_mul(6 + 16 * k, checked_pow(3, g - 1)),
                                           checked_mul(2 + 6 * k, checked_pow(4, g - 1))));
        });
}

CriterionResult c13(long long ks_a4, int genus) {
    if (genus < 2) throw std::invalid_argument("c13: genus must be >= 2");
    return divisibility_family(
        CriterionId::C13, ks_a4, genus, 0, 4, [](int k) { return 48LL + 24 * k; },
        [](int k, long long ks, int g) {
            return checked_add(ks,
                               checked_add(checked_mul(26 + 16 * k, checked_pow(3, g - 2)),
                                           checked_mul(8 + 6 * k, checked_pow(4, g - 2))));
        });
}

CriterionResult c14(long long ks_a5, int genus) {
    if (genus < 1) throw std::invalid_argument("c14: genus must be >= 1");
    return divisibility_family(
        CriterionId::C14, ks_a5, genus, 0, 0, [](int) { return 60LL; },
        [](int, long long ks, int g) {
            long long v = checked_add(ks, checked_mul(14, checked_pow(4, g - 1)));
            v = checked_add(v, checked_mul(19, checked_pow(3, g - 1)));
            return checked_add(v, checked_mul(22, checked_pow(5, g - 1)));
        });
}

CriterionResult evaluate_criterion(CriterionId id, long long ks, int genus) {
    switch (id) {
        case CriterionId::C11: return c11(ks, genus);
        case CriterionId::C12: return c12(ks, genus);
        case CriterionId::C13: return c13(ks, genus);
        case CriterionId::C14: return c14(ks, genus);
    }
    throw std::invalid_argument("unknown criterion");
}

std::string CriterionResult::audit() const {
    std::string s = to_string(id);
    const bool family = trail.size() > 1;
    if (satisfied) {
        s += " satisfied k=";
        if (!family) {
            s += "—";  // em dash: no k parameter
        } else {
            for (std::size_t i = 0; i < witnesses.size(); ++i)
                s += (i ? "," : "") + std::to_string(witnesses[i]);
        }
        return s;
    }
    s += " failed: ";
    for (std::size_t i = 0; i < trail.size(); ++i) {
        const auto& t = trail[i];
        if (i) s += ", ";
        if (family) s += "k=" + std::to_string(t.k) + ": ";
        s += std::to_string(t.dividend) + " mod " + std::to_string(t.modulus) + " = " +
             std::to_string(t.remainder);
    }
    return s;
}

bool Rule::involves(CriterionId id) const {
    for (const auto& clause : clauses)
        for (auto c : clause)
            if (c == id) return true;
    return false;
}

std::vector<CriterionId> Rule::criteria() const {
    std::set<CriterionId> s;
    for (const auto& clause : clauses)
        for (auto c : clause) s.insert(c);
    return {s.begin(), s.end()};
}

std::string Rule::describe() const {
    if (!available) return "no rule: " + unavailable_reason;
    std::string s;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        if (i) s += " and ";
        const auto& clause = clauses[i];
        std::string part;
        for (std::size_t j = 0; j < clause.size(); ++j) {
            if (j) part += " or ";
            part += "fail " + to_string(clause[j]);
        }
        s += clause.size() > 1 && clauses.size() > 1 ? "(" + part + ")" : part;
    }
    return s;
}

namespace {

using Clause = std::vector<CriterionId>;
using Cnf = std::vector<Clause>;

// Rule rows for exactly known rank, keyed by rank - genus. Empty optional =
// no rule for that rank.
std::optional<Cnf> rule_for_exact_rank(const std::vector<int>& type, int genus,
                                       int components, int rank) {
    const int excess = rank - genus;
    const bool knot = components == 1;
    auto is = [&](std::initializer_list<int> t) {
        return type == std::vector<int>(t);
    };

    if (knot) {
        if (genus != 2 && genus != 3) return std::nullopt;
        // rank = genus forces the trivial handlebody knot, which is a
        // one-sum of trivial knots; both trivial-factor criteria must hold
        if (excess == 0) return Cnf{{CriterionId::C11}, {CriterionId::C14}};
        if (excess == 1) return Cnf{{CriterionId::C11, CriterionId::C14}};
        if (excess == 2) return Cnf{{CriterionId::C11}, {CriterionId::C12}};
        return std::nullopt;
    }
    if (components == 2) {
        if (!(is({1, 1}) || is({0, 2}) || is({1, 0, 1}) || is({0, 1, 1}))) return std::nullopt;
        if (excess == 0) return Cnf{{CriterionId::C11, CriterionId::C14}};
        if (excess == 1) {
            if (is({1, 1}) || is({0, 2})) return Cnf{{CriterionId::C11}, {CriterionId::C12}};
            if (is({1, 0, 1}))
                return Cnf{{CriterionId::C11}, {CriterionId::C12}, {CriterionId::C13}};
            return std::nullopt;  // [0,1,1]: not applicable
        }
        return std::nullopt;
    }
    if (components == 3) {
        if (!(is({2, 1}) || is({1, 2}) || is({2, 0, 1}))) return std::nullopt;
        if (excess == 0) return Cnf{{CriterionId::C11}, {CriterionId::C13}};
        if (excess == 1 && is({2, 1}))
            return Cnf{{CriterionId::C11}, {CriterionId::C12}, {CriterionId::C13}};
        return std::nullopt;
    }
    if (components == 4 && is({3, 1})) {
        if (excess == 0) return Cnf{{CriterionId::C11}, {CriterionId::C13}};
        return std::nullopt;
    }
    return std::nullopt;
}

void absorb(Cnf& cnf) {
    for (auto& clause : cnf) {
        std::sort(clause.begin(), clause.end());
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    }
    std::sort(cnf.begin(), cnf.end());
    cnf.erase(std::unique(cnf.begin(), cnf.end()), cnf.end());
    // drop any clause that is a superset of another
    Cnf kept;
    for (const auto& clause : cnf) {
        bool subsumed = false;
        for (const auto& other : cnf)
            if (other != clause &&
                std::includes(clause.begin(), clause.end(), other.begin(), other.end())) {
                subsumed = true;
                break;
            }
        if (!subsumed) kept.push_back(clause);
    }
    cnf = std::move(kept);
}

}  // namespace

Rule dispatch(const std::vector<int>& type_vector, const RankAssertion& rank) {
    Rule rule;
    rule.type_vector = type_vector;
    rule.rank_case = (rank.exact ? "r=" : "r<=") + std::to_string(rank.value);

    if (type_vector.empty()) throw std::invalid_argument("dispatch: empty type vector");
    int genus = 0, components = 0;
    for (std::size_t i = 0; i < type_vector.size(); ++i) {
        if (type_vector[i] < 0) throw std::invalid_argument("dispatch: negative type entry");
        genus += int(i + 1) * type_vector[i];
        components += type_vector[i];
    }
    if (genus < 1 || components < 1)
        throw std::invalid_argument("dispatch: malformed type vector");
    if (rank.value < genus) throw std::invalid_argument("dispatch: rank below genus");

    const int lo = rank.exact ? rank.value : genus;
    Cnf combined;
    for (int r = lo; r <= rank.value; ++r) {
        auto cnf = rule_for_exact_rank(type_vector, genus, components, r);
        if (!cnf) {
            rule.available = false;
            rule.unavailable_reason = "no rule for type " + [&] {
                std::string s = "[";
                for (std::size_t i = 0; i < type_vector.size(); ++i)
                    s += (i ? "," : "") + std::to_string(type_vector[i]);
                return s + "]";
            }() + " at rank " + std::to_string(r);
            return rule;
        }
        combined.insert(combined.end(), cnf->begin(), cnf->end());
    }
    absorb(combined);
    rule.available = true;
    rule.clauses = std::move(combined);
    return rule;
}

std::string to_string(Conclusion c) {
    switch (c) {
        case Conclusion::Irreducible: return "Irreducible";
        case Conclusion::Inconclusive: return "Inconclusive";
        case Conclusion::RuleUnavailable: return "RuleUnavailable";
    }
    return "?";
}

std::string to_string(Mark m) {
    switch (m) {
        case Mark::Check: return "✓";
        case Mark::Question: return "?";
        case Mark::NotApplicable: return "n.a.";
    }
    return "?";
}

const CriterionResult* Verdict::result_for(CriterionId id) const {
    for (const auto& r : results)
        if (r.id == id) return &r;
    return nullptr;
}

Verdict evaluate_verdict(const std::vector<int>& type_vector, const RankAssertion& rank,
                         std::optional<long long> ks_a4, std::optional<long long> ks_a5) {
    Verdict v;
    v.rule = dispatch(type_vector, rank);
    if (!v.rule.available) {
        v.conclusion = Conclusion::RuleUnavailable;
        v.explanation = v.rule.unavailable_reason;
        return v;
    }
    int genus = 0;
    for (std::size_t i = 0; i < type_vector.size(); ++i) genus += int(i + 1) * type_vector[i];

    for (CriterionId id : v.rule.criteria()) {
        const auto& ks = needs_a5(id) ? ks_a5 : ks_a4;
        if (!ks) {
            v.conclusion = Conclusion::RuleUnavailable;
            v.explanation = "rule needs ks_" + std::string(needs_a5(id) ? "A5" : "A4") +
                            " for " + to_string(id) + " but no value is available";
            return v;
        }
        v.results.push_back(evaluate_criterion(id, *ks, genus));
    }

    bool all_clauses_hold = true;
    for (const auto& clause : v.rule.clauses) {
        bool clause_holds = false;
        for (auto id : clause)
            if (!v.result_for(id)->satisfied) clause_holds = true;
        if (!clause_holds) all_clauses_hold = false;
    }
    v.conclusion = all_clauses_hold ? Conclusion::Irreducible : Conclusion::Inconclusive;

    bool any_a4 = false, all_a4_failed = true;
    for (auto id : v.rule.criteria()) {
        if (needs_a5(id)) continue;
        any_a4 = true;
        if (v.result_for(id)->satisfied) all_a4_failed = false;
    }
    v.a4_mark = !any_a4 ? Mark::NotApplicable
                        : (all_a4_failed ? Mark::Check : Mark::Question);
    if (v.rule.involves(CriterionId::C14))
        v.a5_mark = v.result_for(CriterionId::C14)->satisfied ? Mark::Question : Mark::Check;
    else
        v.a5_mark = Mark::NotApplicable;
    return v;
}

Verdict evaluate_verdict(const LinkRecord& rec) {
    return evaluate_verdict(rec.type_vector, rec.rank, rec.ks.a4, rec.ks.a5);
}

PublishedKs resolve_ks(const LinkRecord& rec, const HomCountOptions& opts, bool need_a4,
                       bool need_a5) {
    PublishedKs ks = rec.ks;
    if ((ks.a4 || !need_a4) && (ks.a5 || !need_a5)) return ks;

    std::optional<Presentation> pres;
    if (rec.presentation_text) {
        pres = parse_presentation(*rec.presentation_text);
    } else if (rec.diagram_text) {
        pres = wirtinger(parse_diagram(*rec.diagram_text));
    }
    if (!pres) return ks;

    auto enumerate = [&](const char* group_name) -> long long {
        FiniteGroup g = builtin_group(group_name);
        try {
            return ks_orbits(*pres, g, opts);
        } catch (const CapExceeded&) {
            return ks_burnside(*pres, g, opts.jobs);
        }
    };
    if (need_a4 && !ks.a4) ks.a4 = enumerate("A4");
    if (need_a5 && !ks.a5) ks.a5 = enumerate("A5");
    return ks;
}

}  // namespace hlirred
