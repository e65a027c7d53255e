#pragma once

#include <string>
#include <vector>

#include "hlirred/presentation.hpp"

namespace hlirred {

// A spine diagram: oriented arcs, crossings, and trivalent vertices.
//
// A crossing records the over strand as one unbroken arc and the under
// strand as an (in, out) pair; the sign selects whether the outgoing
// under-arc is conjugated by the over meridian or by its inverse. A vertex
// records its three incident arc ends in the cyclic order the diagram
// author wrote them (counterclockwise by convention).
struct Crossing {
    int sign = +1;  // +1 or -1
    int under_in = 0;
    int over = 0;
    int under_out = 0;
};

struct VertexIncidence {
    int arc = 0;
    bool incoming = true;
};

struct Vertex {
    VertexIncidence ends[3];
};

struct DiagramCode {
    int arc_count = 0;
    std::vector<Crossing> crossings;
    std::vector<Vertex> vertices;
};

// Text grammar: `arcs N`; crossing lines `x <+|-> <under_in> <over>
// <under_out>`; vertex lines `v <arc>:<in|out> <arc>:<in|out> <arc>:<in|out>`;
// `#` comments. Arcs are named 1..N. Validates that every arc either has
// exactly one start and one end consumed (an interval) or none (a closed
// circle, which may still pass over crossings).
DiagramCode parse_diagram(const std::string& text);

// Wirtinger presentation: one generator per arc; per crossing (s, a, o, c)
// the relator c (o^s a o^-s)^-1; per vertex the product of incident
// meridians in the listed cyclic order, incoming with exponent +1 and
// outgoing with -1.
Presentation wirtinger(const DiagramCode& d);

struct GenusAndType {
    int genus = 0;
    std::vector<int> type_vector;  // [i] = components of genus i+1
};

// Abstract spine graph: under-arcs merge across crossings into strands,
// vertices are nodes; per component the genus is E - V + 1, a vertexless
// circle counting 1. The type vector tallies components by genus.
GenusAndType genus_and_type(const DiagramCode& d);

}  // namespace hlirred
