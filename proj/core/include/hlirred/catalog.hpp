#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlirred/presentation.hpp"

namespace hlirred {

// Rank of the knot group: an exact value or an upper bound, as published.
struct RankAssertion {
    int value = 0;
    bool exact = true;

    static RankAssertion exactly(int r) { return {r, true}; }
    static RankAssertion at_most(int r) { return {r, false}; }
    friend bool operator==(const RankAssertion&, const RankAssertion&) = default;
};

struct PublishedKs {
    std::optional<long long> a4;
    std::optional<long long> a5;
    friend bool operator==(const PublishedKs&, const PublishedKs&) = default;
};

// One catalog entry. type_vector[i] counts components of genus i+1;
// genus = sum (i+1) * type_vector[i]. rank >= genus always.
struct LinkRecord {
    std::string name;
    std::vector<int> type_vector;
    RankAssertion rank;
    std::optional<std::string> presentation_text;
    std::optional<std::string> diagram_text;
    PublishedKs ks;
    std::string notes;

    int genus() const;
    int component_count() const;
};

// Validates the record invariants; throws std::invalid_argument on failure.
void validate_record(const LinkRecord& rec);

std::vector<LinkRecord> load_catalog(const std::string& path);
void save_catalog(const std::string& path, const std::vector<LinkRecord>& records);

// JSON text forms, used by load/save and by tests.
std::vector<LinkRecord> parse_catalog(const std::string& json_text);
std::string dump_catalog(const std::vector<LinkRecord>& records);

}  // namespace hlirred
