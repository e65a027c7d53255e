#include "hlirred/perm.hpp"

#include <algorithm>
#include <numeric>

#include "hlirred/errors.hpp"

namespace hlirred {

bool Perm::is_identity() const {
    for (int x = 0; x < degree(); ++x)
        if (images[x] != x) return false;
    return true;
}

bool Perm::is_bijection() const {
    std::vector<bool> hit(images.size(), false);
    for (auto v : images) {
        if (v >= images.size() || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

Perm identity_perm(int degree) {
    std::vector<std::uint8_t> imgs(degree);
    std::iota(imgs.begin(), imgs.end(), std::uint8_t{0});
    return Perm(std::move(imgs));
}

Perm operator*(const Perm& a, const Perm& b) {
    Perm r;
    r.images.resize(a.images.size());
    for (std::size_t x = 0; x < a.images.size(); ++x) r.images[x] = a.images[b.images[x]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r;
    r.images.resize(p.images.size());
    for (std::size_t x = 0; x < p.images.size(); ++x) r.images[p.images[x]] = std::uint8_t(x);
    return r;
}

Perm parse_cycles(const std::string& text, int degree) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
    };
    skip_ws();
    if (text.compare(i, 2, "id") == 0) i += 2;
    int max_point = -1;
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
        ++i;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (i >= text.size()) throw ParseError("unterminated cycle");
            if (text[i] == ')') { ++i; break; }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected point index in cycle");
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            if (v > 254) throw ParseError("point index too large");
            cyc.push_back(v);
            max_point = std::max(max_point, v);
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    int n = std::max(degree, max_point + 1);
    if (n == 0) n = 1;
    Perm p = identity_perm(n);
    for (const auto& cyc : cycles)
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
            if (p.images[from] != from) throw ParseError("point repeated across cycles");
            p.images[from] = std::uint8_t(to);
        }
    if (!p.is_bijection()) throw ParseError("cycles do not define a bijection");
    return p;
}

std::string to_cycles(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.images.size(), false);
    for (int start = 0; start < p.degree(); ++start) {
        if (seen[start] || p.images[start] == start) continue;
        out += '(';
        int x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) out += ' ';
            out += std::to_string(x);
            first = false;
            x = p.images[x];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

}  // namespace hlirred
