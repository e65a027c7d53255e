#include "hlirred/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "hlirred/errors.hpp"

namespace hlirred {

namespace {

int parse_arc(const std::string& tok, int arc_count, int lineno) {
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (...) {
        throw ParseError("expected arc number, got '" + tok + "'", lineno);
    }
    if (pos != tok.size()) throw ParseError("expected arc number, got '" + tok + "'", lineno);
    if (v < 1 || v > arc_count)
        throw ParseError("arc " + std::to_string(v) + " out of range 1.." +
                             std::to_string(arc_count),
                         lineno);
    return v - 1;
}

}  // namespace

DiagramCode parse_diagram(const std::string& text) {
    DiagramCode d;
    bool saw_arcs = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "arcs") {
            if (saw_arcs) throw ParseError("second 'arcs' line", lineno);
            if (!(ls >> d.arc_count) || d.arc_count < 1)
                throw ParseError("'arcs' needs a positive count", lineno);
            saw_arcs = true;
        } else if (head == "x") {
            if (!saw_arcs) throw ParseError("'arcs' must come first", lineno);
            std::string sign, a, o, c;
            if (!(ls >> sign >> a >> o >> c))
                throw ParseError("crossing needs: x <+|-> <under_in> <over> <under_out>", lineno);
            if (sign != "+" && sign != "-")
                throw ParseError("crossing sign must be '+' or '-'", lineno);
            Crossing cr;
            cr.sign = sign == "+" ? +1 : -1;
            cr.under_in = parse_arc(a, d.arc_count, lineno);
            cr.over = parse_arc(o, d.arc_count, lineno);
            cr.under_out = parse_arc(c, d.arc_count, lineno);
            d.crossings.push_back(cr);
        } else if (head == "v") {
            if (!saw_arcs) throw ParseError("'arcs' must come first", lineno);
            Vertex v;
            for (int k = 0; k < 3; ++k) {
                std::string tok;
                if (!(ls >> tok))
                    throw ParseError("vertex needs three <arc>:<in|out> incidences", lineno);
                auto colon = tok.find(':');
                if (colon == std::string::npos)
                    throw ParseError("vertex incidence must look like 3:in or 3:out", lineno);
                v.ends[k].arc = parse_arc(tok.substr(0, colon), d.arc_count, lineno);
                std::string dir = tok.substr(colon + 1);
                if (dir == "in") v.ends[k].incoming = true;
                else if (dir == "out") v.ends[k].incoming = false;
                else throw ParseError("vertex direction must be 'in' or 'out'", lineno);
            }
            d.vertices.push_back(v);
        } else {
            throw ParseError("expected 'arcs', 'x', 'v' or comment", lineno);
        }
        std::string extra;
        if (ls >> extra) throw ParseError("trailing junk '" + extra + "'", lineno);
    }
    if (!saw_arcs) throw ParseError("missing 'arcs' line");

    // end bookkeeping: each arc is an interval (one start, one end) or a circle
    std::vector<int> starts(d.arc_count, 0), finishes(d.arc_count, 0);
    for (const auto& c : d.crossings) {
        finishes[c.under_in]++;
        starts[c.under_out]++;
    }
    for (const auto& v : d.vertices)
        for (const auto& e : v.ends)
            (e.incoming ? finishes : starts)[e.arc]++;
    for (int a = 0; a < d.arc_count; ++a) {
        if (!((starts[a] == 1 && finishes[a] == 1) || (starts[a] == 0 && finishes[a] == 0)))
            throw ParseError("arc " + std::to_string(a + 1) + " has " + std::to_string(starts[a]) +
                             " starts and " + std::to_string(finishes[a]) +
                             " ends; expected 1/1 or a closed circle");
    }
    return d;
}

Presentation wirtinger(const DiagramCode& d) {
    Presentation p;
    p.gen_names.reserve(d.arc_count);
    for (int a = 0; a < d.arc_count; ++a) {
        if (d.arc_count <= 26)
            p.gen_names.push_back(std::string(1, char('a' + a)));
        else
            p.gen_names.push_back("a" + std::to_string(a + 1));
    }
    for (const auto& c : d.crossings) {
        // c.under_out  =  over^sign  under_in  over^-sign
        Word w;
        w.letters.push_back({std::uint16_t(c.under_out), +1});
        w.letters.push_back({std::uint16_t(c.over), std::int8_t(c.sign)});
        w.letters.push_back({std::uint16_t(c.under_in), -1});
        w.letters.push_back({std::uint16_t(c.over), std::int8_t(-c.sign)});
        p.relators.push_back(std::move(w));
    }
    for (const auto& v : d.vertices) {
        Word w;
        for (const auto& e : v.ends)
            w.letters.push_back({std::uint16_t(e.arc), std::int8_t(e.incoming ? +1 : -1)});
        p.relators.push_back(std::move(w));
    }
    return p;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GenusAndType genus_and_type(const DiagramCode& d) {
    // strands: arcs glued across crossings (the over arc stays separate)
    UnionFind strands(d.arc_count);
    for (const auto& c : d.crossings) strands.unite(c.under_in, c.under_out);

    // components: strands joined at vertices
    UnionFind comp(d.arc_count);
    for (const auto& c : d.crossings) comp.unite(c.under_in, c.under_out);
    for (const auto& v : d.vertices) {
        comp.unite(v.ends[0].arc, v.ends[1].arc);
        comp.unite(v.ends[0].arc, v.ends[2].arc);
    }

    std::map<int, int> edge_count, vertex_count;  // per component root
    std::map<int, bool> seen_strand;
    for (int a = 0; a < d.arc_count; ++a) {
        int s = strands.find(a);
        if (!seen_strand[s]) {
            seen_strand[s] = true;
            edge_count[comp.find(a)]++;
        }
    }
    for (const auto& v : d.vertices) vertex_count[comp.find(v.ends[0].arc)]++;

    GenusAndType out;
    std::vector<int> genera;
    for (auto& [root, e] : edge_count) {
        int nv = vertex_count.count(root) ? vertex_count[root] : 0;
        int genus = nv == 0 ? 1 : e - nv + 1;  // vertexless component is a circle
        genera.push_back(genus);
    }
    int max_genus = genera.empty() ? 0 : *std::max_element(genera.begin(), genera.end());
    out.type_vector.assign(max_genus, 0);
    for (int g : genera) {
        out.type_vector[g - 1]++;
        out.genus += g;
    }
    return out;
}

}  // namespace hlirred
