#include "hlirred/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "hlirred/checked.hpp"
#include "hlirred/errors.hpp"

namespace hlirred {

Word Word::inverted() const {
    Word w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back({it->gen, std::int8_t(-it->exp)});
    return w;
}

int Presentation::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < gen_names.size(); ++i)
        if (gen_names[i] == name) return int(i);
    return -1;
}

namespace {

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

// One whitespace-delimited token: either an exact generator name (first
// letter possibly upcased for the inverse) or a run of single letters.
void append_token(const Presentation& p, const std::string& tok, Word& out, int line, int col) {
    auto try_exact = [&](const std::string& t, int exp) {
        int g = p.gen_index(t);
        if (g < 0) return false;
        out.letters.push_back({std::uint16_t(g), std::int8_t(exp)});
        return true;
    };
    if (try_exact(tok, +1)) return;
    if (!tok.empty() && std::isupper(static_cast<unsigned char>(tok[0]))) {
        std::string lowered = tok;
        lowered[0] = char(std::tolower(static_cast<unsigned char>(lowered[0])));
        if (try_exact(lowered, -1)) return;
    }
    for (std::size_t i = 0; i < tok.size(); ++i) {
        char c = tok[i];
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError("unknown generator letter '" + std::string(1, c) + "'", line,
                             col + int(i) + 1);
        bool upper = std::isupper(static_cast<unsigned char>(c));
        std::string name(1, char(std::tolower(static_cast<unsigned char>(c))));
        int g = p.gen_index(name);
        if (g < 0)
            throw ParseError("unknown generator letter '" + std::string(1, c) + "'", line,
                             col + int(i) + 1);
        out.letters.push_back({std::uint16_t(g), std::int8_t(upper ? -1 : +1)});
    }
}

Word parse_word(const Presentation& p, const std::string& text, int line, int col0) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        std::size_t j = i;
        while (j < text.size() && is_word_char(text[j])) ++j;
        if (j == i)
            throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in word",
                             line, col0 + int(i) + 1);
        append_token(p, text.substr(i, j - i), w, line, col0 + int(i));
        i = j;
    }
    return w;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation p;
    bool saw_gens = false;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::vector<std::pair<std::string, int>> pending_rels;  // text + line
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);

        if (line.rfind("gens", 0) == 0 &&
            (line.size() == 4 || std::isspace(static_cast<unsigned char>(line[4])))) {
            if (saw_gens) throw ParseError("second 'gens' line", lineno);
            saw_gens = true;
            std::istringstream gs(line.substr(4));
            std::string name;
            while (gs >> name) {
                if (!std::islower(static_cast<unsigned char>(name[0])))
                    throw ParseError("generator name must start with a lowercase letter", lineno);
                for (char c : name)
                    if (!is_word_char(c))
                        throw ParseError("bad character in generator name", lineno);
                if (p.gen_index(name) >= 0)
                    throw ParseError("duplicate generator '" + name + "'", lineno);
                p.gen_names.push_back(name);
            }
        } else if (line.rfind("rel", 0) == 0 &&
                   (line.size() == 3 || std::isspace(static_cast<unsigned char>(line[3])))) {
            pending_rels.emplace_back(line.substr(3), lineno);
        } else {
            throw ParseError("expected 'gens', 'rel' or comment", lineno, int(b) + 1);
        }
    }
    if (!saw_gens) throw ParseError("missing 'gens' line");
    for (auto& [body, ln] : pending_rels) {
        auto eq = body.find('=');
        if (eq == std::string::npos) {
            Word w = parse_word(p, body, ln, 3);
            if (w.letters.empty()) throw ParseError("empty relator", ln);
            p.relators.push_back(std::move(w));
        } else {
            if (body.find('=', eq + 1) != std::string::npos)
                throw ParseError("more than one '=' in relator", ln);
            Word u = parse_word(p, body.substr(0, eq), ln, 3);
            Word v = parse_word(p, body.substr(eq + 1), ln, 3 + int(eq) + 1);
            Word w = u;
            auto vi = v.inverted();
            w.letters.insert(w.letters.end(), vi.letters.begin(), vi.letters.end());
            if (w.letters.empty()) throw ParseError("empty relator", ln);
            p.relators.push_back(std::move(w));
        }
    }
    return p;
}

std::string save_presentation(const Presentation& p) {
    std::string out = "gens";
    bool single_letters = true;
    for (const auto& n : p.gen_names) {
        out += " " + n;
        if (n.size() != 1) single_letters = false;
    }
    out += "\n";
    for (const auto& rel : p.relators) {
        out += "rel ";
        for (std::size_t i = 0; i < rel.letters.size(); ++i) {
            const auto& l = rel.letters[i];
            std::string name = p.gen_names[l.gen];
            if (l.exp < 0) name[0] = char(std::toupper(static_cast<unsigned char>(name[0])));
            if (!single_letters && i) out += " ";
            out += name;
        }
        out += "\n";
    }
    return out;
}

Presentation free_product(const Presentation& a, const Presentation& b) {
    Presentation p = a;
    p.label.reset();
    for (const auto& name : b.gen_names) {
        std::string candidate = name;
        for (int suffix = 2; p.gen_index(candidate) >= 0; ++suffix)
            candidate = name + std::to_string(suffix);
        p.gen_names.push_back(candidate);
    }
    const std::uint16_t off = std::uint16_t(a.gen_names.size());
    for (const auto& rel : b.relators) {
        Word w = rel;
        for (auto& l : w.letters) l.gen = std::uint16_t(l.gen + off);
        p.relators.push_back(std::move(w));
    }
    return p;
}

namespace {

// Smith normal form over the integers, destructive, checked arithmetic.
void smith_diagonal(std::vector<std::vector<long long>>& m, std::vector<long long>& diag) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r0 = 0, c0 = 0;
    while (r0 < rows && c0 < cols) {
        // locate a pivot of minimal absolute value
        std::size_t pr = r0, pc = c0;
        long long best = 0;
        for (std::size_t i = r0; i < rows; ++i)
            for (std::size_t j = c0; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
                    best = std::abs(m[i][j]);
                    pr = i;
                    pc = j;
                }
        if (best == 0) break;
        std::swap(m[r0], m[pr]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);

        bool clean = true;
        for (std::size_t i = r0 + 1; i < rows; ++i) {
            if (m[i][c0] == 0) continue;
            long long q = m[i][c0] / m[r0][c0];
            if (q != 0)
                for (std::size_t j = c0; j < cols; ++j)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[r0][j]));
            if (m[i][c0] != 0) clean = false;
        }
        for (std::size_t j = c0 + 1; j < cols; ++j) {
            if (m[r0][j] == 0) continue;
            long long q = m[r0][j] / m[r0][c0];
            if (q != 0)
                for (std::size_t i = r0; i < rows; ++i)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][c0]));
            if (m[r0][j] != 0) clean = false;
        }
        if (!clean) continue;  // another reduction round at the same pivot
        diag.push_back(std::abs(m[r0][c0]));
        ++r0;
        ++c0;
    }
    // enforce the divisibility chain
    for (std::size_t i = 0; i + 1 < diag.size();) {
        bool fixed = true;
        for (std::size_t j = i + 1; j < diag.size(); ++j)
            if (diag[j] % diag[i] != 0) {
                long long g = std::gcd(diag[i], diag[j]);
                long long l = diag[i] / g * diag[j];
                diag[i] = g;
                diag[j] = l;
                fixed = false;
            }
        if (fixed) ++i;
    }
    std::sort(diag.begin(), diag.end());
}

}  // namespace

Abelianization abelianization(const Presentation& p) {
    const std::size_t gens = p.gen_names.size();
    std::vector<std::vector<long long>> m(p.relators.size(), std::vector<long long>(gens, 0));
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const auto& l : p.relators[r].letters) m[r][l.gen] += l.exp;

    std::vector<long long> diag;
    smith_diagonal(m, diag);

    Abelianization ab;
    ab.free_rank = int(gens - diag.size());
    for (long long d : diag)
        if (d > 1) ab.torsion.push_back(d);
    return ab;
}

}  // namespace hlirred
