#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlirred/catalog.hpp"
#include "hlirred/homcount.hpp"

namespace hlirred {

// The four divisibility criteria. C11/C12/C13 test ks_A4, C14 tests ks_A5;
// a reducible link with the matching factor type satisfies the divisibility,
// so a *failed* criterion certifies that factor type away.
enum class CriterionId { C11, C12, C13, C14 };
std::string to_string(CriterionId id);
bool needs_a5(CriterionId id);

struct DivisibilityTrial {
    int k = 0;
    long long dividend = 0;
    long long modulus = 0;
    long long remainder = 0;
};

struct CriterionResult {
    CriterionId id = CriterionId::C11;
    bool satisfied = false;
    std::vector<int> witnesses;  // k values achieving divisibility
    std::vector<DivisibilityTrial> trail;

    std::string audit() const;  // e.g. "C11 failed: 56 mod 12 = 8"
};

// (1.1)  12 | ks_A4 + 6 3^(g-1) + 2 4^(g-1)
CriterionResult c11(long long ks_a4, int genus);
// (1.2)  12+24k | ks_A4 + (6+16k) 3^(g-1) + (2+6k) 4^(g-1),  k in {0,1}
CriterionResult c12(long long ks_a4, int genus);
// (1.3)  48+24k | ks_A4 + (26+16k) 3^(g-2) + (8+6k) 4^(g-2),  k in {0..4};
// genus must be >= 2 (the 2-generator link factor carries genus 2)
CriterionResult c13(long long ks_a4, int genus);
// (1.4)  60 | ks_A5 + 14 4^(g-1) + 19 3^(g-1) + 22 5^(g-1)
CriterionResult c14(long long ks_a5, int genus);

CriterionResult evaluate_criterion(CriterionId id, long long ks, int genus);

// A rule in conjunctive form over "criterion failed" atoms: the link is
// irreducible iff every clause contains at least one failed criterion.
struct Rule {
    bool available = false;
    std::string unavailable_reason;
    std::vector<int> type_vector;
    std::string rank_case;  // "r=3", "r<=4", ...
    std::vector<std::vector<CriterionId>> clauses;

    bool involves(CriterionId id) const;
    std::vector<CriterionId> criteria() const;  // deduplicated, in id order
    std::string describe() const;
};

// The dispatch table: knots of genus 2..3 at ranks g..g+2, the
// multi-component rows at ranks g and g+1, and for an upper-bound rank the
// conjunction of the rules for every rank in [g, bound] (unavailable when
// any of those is missing). Redundant clauses are absorbed.
Rule dispatch(const std::vector<int>& type_vector, const RankAssertion& rank);

enum class Conclusion { Irreducible, Inconclusive, RuleUnavailable };
enum class Mark { Check, Question, NotApplicable };
std::string to_string(Conclusion c);
std::string to_string(Mark m);  // "✓", "?", "n.a."

struct Verdict {
    Conclusion conclusion = Conclusion::RuleUnavailable;
    Rule rule;
    std::vector<CriterionResult> results;  // one per criterion the rule involves
    std::string explanation;               // set when the rule cannot be applied
    // Table-style per-column marks: Check = the column's criteria all failed.
    Mark a4_mark = Mark::NotApplicable;
    Mark a5_mark = Mark::NotApplicable;

    const CriterionResult* result_for(CriterionId id) const;
};

Verdict evaluate_verdict(const std::vector<int>& type_vector, const RankAssertion& rank,
                         std::optional<long long> ks_a4, std::optional<long long> ks_a5);
Verdict evaluate_verdict(const LinkRecord& rec);

// Published ks values, falling back to enumeration of the attached
// presentation (or diagram) when a value is missing.
PublishedKs resolve_ks(const LinkRecord& rec, const HomCountOptions& opts = {},
                       bool need_a4 = true, bool need_a5 = true);

}  // namespace hlirred
