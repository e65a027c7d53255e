// hlirred: ks-invariants of handlebody links and the divisibility-based
// irreducibility test.
//
// Subcommands:
//   homs       count homomorphisms of a presented knot group into a group
//   verdict    apply the irreducibility criteria to catalog records
//   table      render a catalog as an aligned invariant table
//   wirtinger  compile a spine diagram to its Wirtinger presentation

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hlirred/catalog.hpp"
#include "hlirred/criteria.hpp"
#include "hlirred/diagram.hpp"
#include "hlirred/errors.hpp"
#include "hlirred/group.hpp"
#include "hlirred/ksinv.hpp"

using namespace hlirred;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitStrict = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int default_jobs() {
    if (const char* env = std::getenv("HLIRRED_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 0;  // engine default: hardware concurrency
}

FiniteGroup group_from_spec(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) {
        std::string path = spec.substr(5);
        std::vector<Perm> gens;
        std::istringstream in(slurp(path));
        std::string line;
        int degree = 0;
        std::vector<std::string> cycle_texts;
        while (std::getline(in, line)) {
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            cycle_texts.push_back(line);
            degree = std::max(degree, parse_cycles(line).degree());
        }
        if (cycle_texts.empty()) throw ParseError("group file has no generators: " + path);
        for (const auto& t : cycle_texts) gens.push_back(parse_cycles(t, degree));
        return make_group(gens, kDefaultGroupOrderCap, "file:" + path);
    }
    return builtin_group(spec);
}

std::string type_vector_str(const std::vector<int>& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + "]";
}

std::string rank_str(const RankAssertion& r) {
    return (r.exact ? "" : "<=") + std::to_string(r.value);
}

// ---------------------------------------------------------------- homs ----

int cmd_homs(const std::string& pres_path, const std::string& group_spec, bool as_json,
             int jobs, long long orbit_cap) {
    auto p = parse_presentation(slurp(pres_path));
    auto g = group_from_spec(group_spec);
    HomCountOptions opts;
    opts.jobs = jobs;
    opts.orbit_cap = orbit_cap;
    auto rep = compute_ks_report(p, g, opts);

    if (as_json) {
        ojson j;
        j["presentation"] = pres_path;
        j["group"] = rep.group_name;
        j["genus"] = rep.genus;
        j["ks_w"] = rep.ks_w;
        j["ks"] = rep.ks;
        j["ks_burnside"] = rep.ks_burnside;
        j["orbits_capped"] = rep.orbits_capped;
        ojson per;
        for (const auto& line : rep.per_subgroup)
            per[line.type_name] = ojson{{"ks_h_w", line.ks_h_w}, {"ks_h_g", line.ks_h_g}};
        j["per_subgroup"] = std::move(per);
        if (!rep.orbits_capped) {
            ojson census;
            for (int i = 0; i < kImageTypeCount; ++i) {
                if (rep.census.homs_by_type[i] == 0) continue;
                census[to_string(ImageType(i))] =
                    ojson{{"homs", rep.census.homs_by_type[i]},
                          {"orbits", rep.census.orbits_by_type[i]}};
            }
            j["census"] = std::move(census);
            j["surjective_orbits"] = rep.surjective_orbits;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "presentation: " << pres_path << "  (" << p.gen_names.size()
              << (p.gen_names.size() == 1 ? " generator, " : " generators, ")
              << p.relators.size() << (p.relators.size() == 1 ? " relator)\n" : " relators)\n");
    std::cout << "group: " << rep.group_name << " (order " << g.order() << ")\n";
    std::cout << "genus (abelianization rank): " << rep.genus << "\n";
    std::cout << "ks_w = " << rep.ks_w << "\n";
    if (rep.orbits_capped) {
        std::cout << "ks = " << rep.ks << "  (burnside; orbit cap exceeded)\n";
    } else {
        std::cout << "ks = " << rep.ks << "  (orbit enumeration)\n";
        std::cout << "ks_burnside = " << rep.ks_burnside << "\n";
    }
    std::cout << "per-subgroup (fixed representative / up to conjugacy):\n";
    for (const auto& line : rep.per_subgroup)
        std::cout << "  " << line.type_name << ": ks_H_w=" << line.ks_h_w
                  << " ks_H_G=" << line.ks_h_g << "\n";
    if (!rep.orbits_capped) {
        std::cout << "image census (homs/orbits):\n";
        for (int i = 0; i < kImageTypeCount; ++i) {
            if (rep.census.homs_by_type[i] == 0) continue;
            std::cout << "  " << to_string(ImageType(i)) << ": "
                      << rep.census.homs_by_type[i] << "/" << rep.census.orbits_by_type[i]
                      << "\n";
        }
        std::cout << "surjective orbits: " << rep.surjective_orbits << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- verdict ----

ojson verdict_to_json(const std::string& name, const LinkRecord& rec, const Verdict& v) {
    ojson j;
    j["name"] = name;
    j["type"] = rec.type_vector;
    j["rank"] = rank_str(rec.rank);
    j["conclusion"] = to_string(v.conclusion);
    if (v.conclusion == Conclusion::RuleUnavailable) {
        j["explanation"] = v.explanation;
        return j;
    }
    j["rule"] = v.rule.describe();
    ojson crits = ojson::array();
    for (const auto& r : v.results) {
        ojson c;
        c["id"] = to_string(r.id);
        c["satisfied"] = r.satisfied;
        c["witnesses"] = r.witnesses;
        ojson trail = ojson::array();
        for (const auto& t : r.trail)
            trail.push_back(ojson{{"k", t.k},
                                  {"dividend", t.dividend},
                                  {"modulus", t.modulus},
                                  {"remainder", t.remainder}});
        c["trail"] = std::move(trail);
        crits.push_back(std::move(c));
    }
    j["criteria"] = std::move(crits);
    j["a4_mark"] = to_string(v.a4_mark);
    j["a5_mark"] = to_string(v.a5_mark);
    return j;
}

std::string verdict_line(const Verdict& v) {
    if (v.conclusion == Conclusion::RuleUnavailable)
        return to_string(v.conclusion) + " (" + v.explanation + ")";
    std::string s = to_string(v.conclusion) + " (";
    for (std::size_t i = 0; i < v.results.size(); ++i)
        s += (i ? "; " : "") + v.results[i].audit();
    return s + ")";
}

Verdict verdict_for_record(const LinkRecord& rec, int jobs) {
    auto rule = dispatch(rec.type_vector, rec.rank);
    bool need_a4 = false, need_a5 = false;
    for (auto id : rule.criteria()) (needs_a5(id) ? need_a5 : need_a4) = true;
    HomCountOptions opts;
    opts.jobs = jobs;
    auto ks = rule.available ? resolve_ks(rec, opts, need_a4, need_a5) : rec.ks;
    return evaluate_verdict(rec.type_vector, rec.rank, ks.a4, ks.a5);
}

int cmd_verdict(const std::string& catalog_path, const std::string& name, bool all,
                bool as_json, bool strict, int jobs) {
    auto records = load_catalog(catalog_path);
    std::vector<const LinkRecord*> selected;
    if (all) {
        for (const auto& r : records) selected.push_back(&r);
    } else {
        for (const auto& r : records)
            if (r.name == name) selected.push_back(&r);
        if (selected.empty()) throw ParseError("no record named '" + name + "' in catalog");
    }

    bool any_unavailable = false;
    ojson out = ojson::array();
    for (const auto* rec : selected) {
        auto v = verdict_for_record(*rec, jobs);
        if (v.conclusion == Conclusion::RuleUnavailable) any_unavailable = true;
        if (as_json) {
            out.push_back(verdict_to_json(rec->name, *rec, v));
        } else {
            std::cout << rec->name << ": " << verdict_line(v) << "\n";
            if (v.conclusion != Conclusion::RuleUnavailable)
                std::cout << "  rule: " << v.rule.describe() << "  [type "
                          << type_vector_str(rec->type_vector) << ", r="
                          << rank_str(rec->rank) << "]\n";
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    if (strict && any_unavailable) return kExitStrict;
    return 0;
}

// --------------------------------------------------------------- table ----

int cmd_table(const std::string& catalog_path, bool as_json, int jobs) {
    auto records = load_catalog(catalog_path);
    struct Row {
        std::string name, rank, ks4, m4, ks5, m5, conclusion;
    };
    std::vector<Row> rows;
    for (const auto& rec : records) {
        auto v = verdict_for_record(rec, jobs);
        Row row;
        row.name = rec.name;
        row.rank = rank_str(rec.rank);
        row.ks4 = rec.ks.a4 ? std::to_string(*rec.ks.a4) : "-";
        row.ks5 = rec.ks.a5 ? std::to_string(*rec.ks.a5) : "-";
        if (v.conclusion == Conclusion::RuleUnavailable) {
            row.m4 = row.m5 = to_string(Mark::NotApplicable);
        } else {
            row.m4 = to_string(v.a4_mark);
            row.m5 = to_string(v.a5_mark);
        }
        row.conclusion = to_string(v.conclusion);
        rows.push_back(std::move(row));
    }

    if (as_json) {
        ojson out = ojson::array();
        for (const auto& r : rows)
            out.push_back(ojson{{"name", r.name},
                                {"rank", r.rank},
                                {"ks_A4", r.ks4},
                                {"A4_mark", r.m4},
                                {"ks_A5", r.ks5},
                                {"A5_mark", r.m5},
                                {"conclusion", r.conclusion}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    auto display_width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char c : s)
            if ((c & 0xC0) != 0x80) ++w;  // count code points, not bytes
        return w;
    };
    auto width = [&](auto get, std::size_t head) {
        std::size_t w = head;
        for (const auto& r : rows) w = std::max(w, display_width(get(r)));
        return w;
    };
    std::size_t wn = width([](const Row& r) -> const std::string& { return r.name; }, 4);
    std::size_t wr = width([](const Row& r) -> const std::string& { return r.rank; }, 4);
    std::size_t w4 = width([](const Row& r) -> const std::string& { return r.ks4; }, 5);
    std::size_t w5 = width([](const Row& r) -> const std::string& { return r.ks5; }, 5);
    auto pad = [&](const std::string& s, std::size_t w) {
        std::size_t dw = display_width(s);
        return s + std::string(w - std::min(w, dw), ' ');
    };
    std::cout << pad("name", wn) << "  " << pad("rank", wr) << "  " << pad("ks_A4", w4)
              << "  " << pad("A4", 4) << "  " << pad("ks_A5", w5) << "  " << pad("A5", 4)
              << "  verdict\n";
    for (const auto& r : rows)
        std::cout << pad(r.name, wn) << "  " << pad(r.rank, wr) << "  " << pad(r.ks4, w4)
                  << "  " << pad(r.m4, 4) << "  " << pad(r.ks5, w5) << "  " << pad(r.m5, 4)
                  << "  " << r.conclusion << "\n";
    return 0;
}

// ----------------------------------------------------------- wirtinger ----

int cmd_wirtinger(const std::string& diagram_path) {
    auto d = parse_diagram(slurp(diagram_path));
    auto p = wirtinger(d);
    auto gt = genus_and_type(d);
    std::cout << save_presentation(p);
    std::cout << "# genus " << gt.genus << ", type " << type_vector_str(gt.type_vector)
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ks-invariants and irreducibility tests for handlebody links"};
    app.require_subcommand(1);
    int jobs = default_jobs();

    std::string pres_path, group_spec = "A4", catalog_path, record_name, diagram_path;
    bool as_json = false, all = false, strict = false;
    long long orbit_cap = HomCountOptions{}.orbit_cap;

    auto* homs = app.add_subcommand("homs", "count homomorphisms and report ks invariants");
    homs->add_option("--pres", pres_path, "presentation file")->required();
    homs->add_option("--group", group_spec, "A4|A5|V4|Zn:<n>|Sn:<n>|file:<path>");
    homs->add_flag("--json", as_json, "emit JSON");
    homs->add_option("--jobs", jobs, "worker threads (default HLIRRED_JOBS or all cores)")
        ->check(CLI::PositiveNumber);
    homs->add_option("--orbit-cap", orbit_cap, "max homs to materialize for orbit counting")
        ->check(CLI::PositiveNumber);

    auto* verdict = app.add_subcommand("verdict", "apply the irreducibility criteria");
    verdict->add_option("--catalog", catalog_path, "catalog JSON file")->required();
    verdict->add_option("name", record_name, "record name");
    verdict->add_flag("--all", all, "evaluate every record");
    verdict->add_flag("--json", as_json, "emit JSON");
    verdict->add_flag("--strict", strict, "exit 4 when a rule is unavailable");
    verdict->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* table = app.add_subcommand("table", "render a catalog as an invariant table");
    table->add_option("--catalog", catalog_path, "catalog JSON file")->required();
    table->add_flag("--json", as_json, "emit JSON");
    table->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* wirt = app.add_subcommand("wirtinger", "compile a diagram to a presentation");
    wirt->add_option("--diagram", diagram_path, "diagram file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (homs->parsed()) return cmd_homs(pres_path, group_spec, as_json, jobs, orbit_cap);
        if (verdict->parsed()) {
            if (!all && record_name.empty())
                throw ParseError("verdict needs a record name or --all");
            return cmd_verdict(catalog_path, record_name, all, as_json, strict, jobs);
        }
        if (table->parsed()) return cmd_table(catalog_path, as_json, jobs);
        if (wirt->parsed()) return cmd_wirtinger(diagram_path);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
