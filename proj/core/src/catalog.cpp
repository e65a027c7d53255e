#include "hlirred/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hlirred/errors.hpp"

namespace hlirred {

using json = nlohmann::ordered_json;

int LinkRecord::genus() const {
    int g = 0;
    for (std::size_t i = 0; i < type_vector.size(); ++i) g += int(i + 1) * type_vector[i];
    return g;
}

int LinkRecord::component_count() const {
    int m = 0;
    for (int n : type_vector) m += n;
    return m;
}

void validate_record(const LinkRecord& rec) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("record '" + rec.name + "': " + why);
    };
    if (rec.name.empty()) fail("empty name");
    if (rec.type_vector.empty()) fail("empty type vector");
    for (int n : rec.type_vector)
        if (n < 0) fail("negative entry in type vector");
    const int g = rec.genus();
    if (g < 1) fail("genus must be at least 1");
    if (rec.rank.value < g)
        fail("rank " + std::to_string(rec.rank.value) + " below genus " + std::to_string(g));
    if (rec.presentation_text) {
        Presentation p = parse_presentation(*rec.presentation_text);
        if (rec.rank.exact && rec.rank.value > p.rank_upper_bound())
            fail("exact rank exceeds generator count of attached presentation");
    }
}

namespace {

LinkRecord record_from_json(const json& j) {
    LinkRecord rec;
    rec.name = j.at("name").get<std::string>();
    rec.type_vector = j.at("type").get<std::vector<int>>();
    const auto& rank = j.at("rank");
    if (rank.contains("exact"))
        rec.rank = RankAssertion::exactly(rank.at("exact").get<int>());
    else if (rank.contains("max"))
        rec.rank = RankAssertion::at_most(rank.at("max").get<int>());
    else
        throw std::invalid_argument("record '" + rec.name + "': rank needs 'exact' or 'max'");
    if (j.contains("presentation")) rec.presentation_text = j.at("presentation").get<std::string>();
    if (j.contains("diagram")) rec.diagram_text = j.at("diagram").get<std::string>();
    if (j.contains("ks")) {
        const auto& ks = j.at("ks");
        if (ks.contains("A4")) rec.ks.a4 = ks.at("A4").get<long long>();
        if (ks.contains("A5")) rec.ks.a5 = ks.at("A5").get<long long>();
    }
    if (j.contains("notes")) rec.notes = j.at("notes").get<std::string>();
    validate_record(rec);
    return rec;
}

json record_to_json(const LinkRecord& rec) {
    json j;
    j["name"] = rec.name;
    j["type"] = rec.type_vector;
    j["rank"] = rec.rank.exact ? json{{"exact", rec.rank.value}} : json{{"max", rec.rank.value}};
    if (rec.presentation_text) j["presentation"] = *rec.presentation_text;
    if (rec.diagram_text) j["diagram"] = *rec.diagram_text;
    if (rec.ks.a4 || rec.ks.a5) {
        json ks;
        if (rec.ks.a4) ks["A4"] = *rec.ks.a4;
        if (rec.ks.a5) ks["A5"] = *rec.ks.a5;
        j["ks"] = std::move(ks);
    }
    if (!rec.notes.empty()) j["notes"] = rec.notes;
    return j;
}

}  // namespace

std::vector<LinkRecord> parse_catalog(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("catalog JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ParseError("catalog JSON: top level must be an array");
    std::vector<LinkRecord> records;
    records.reserve(doc.size());
    for (const auto& j : doc) records.push_back(record_from_json(j));
    return records;
}

std::string dump_catalog(const std::vector<LinkRecord>& records) {
    json doc = json::array();
    for (const auto& rec : records) doc.push_back(record_to_json(rec));
    return doc.dump(2) + "\n";
}

std::vector<LinkRecord> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

void save_catalog(const std::string& path, const std::vector<LinkRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write catalog file: " + path);
    out << dump_catalog(records);
}

}  // namespace hlirred
