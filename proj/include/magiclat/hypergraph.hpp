#ifndef MAGICLAT_HYPERGRAPH_HPP
#define MAGICLAT_HYPERGRAPH_HPP

#include <magiclat/matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace magiclat {

/// Point indices are 1-based in all I/O; internally we keep them 1-based too
/// so nothing can leak a shifted index.
using Line = std::vector<int>;  // strictly increasing point indices

struct Hypergraph {
    int n = 0;                // number of points, labeled 1..n
    std::vector<Line> lines;  // input order preserved

    std::size_t line_count() const { return lines.size(); }

    /// Common line size if all lines agree, absent otherwise (or if no lines).
    std::optional<int> uniform_k() const {
        if (lines.empty()) return std::nullopt;
        const std::size_t k = lines.front().size();
        for (const Line& l : lines)
            if (l.size() != k) return std::nullopt;
        return static_cast<int>(k);
    }

    std::vector<int> point_degrees() const {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (const Line& l : lines)
            for (int p : l) ++deg[static_cast<std::size_t>(p - 1)];
        return deg;
    }

    bool operator==(const Hypergraph&) const = default;
};

struct ParseError : std::runtime_error {
    int line_number;  // 1-based line in the input text
    ParseError(int ln, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ": " + what), line_number(ln) {}
};

namespace detail {

inline bool is_blank_or_comment(const std::string& s) {
    for (char c : s) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

inline std::vector<long> parse_int_tokens(const std::string& s, int ln) {
    std::vector<long> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') break;
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw ParseError(ln, "malformed token '" + tok + "'");
        }
        if (used != tok.size()) throw ParseError(ln, "malformed token '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

}  // namespace detail

/// Parses the multi-hypergraph text format: '#' comments, "n m k" header,
/// m lines of k point indices each, sections separated by a lone "%".
inline std::vector<Hypergraph> parse_hypergraphs(const std::string& text) {
    std::vector<Hypergraph> out;
    std::istringstream in(text);
    std::string raw;
    int ln = 0;

    enum class State { Header, Lines };
    State state = State::Header;
    Hypergraph h;
    long want_m = 0, want_k = 0;
    std::set<Line> seen;
    bool any_content = false;

    auto finish_section = [&](int at_line) {
        if (state == State::Header) {
            if (any_content) return;  // nothing started
            throw ParseError(at_line, "empty section");
        }
        if (static_cast<long>(h.lines.size()) != want_m)
            throw ParseError(at_line, "expected " + std::to_string(want_m) + " lines, got " +
                                          std::to_string(h.lines.size()));
        out.push_back(std::move(h));
        h = Hypergraph{};
        seen.clear();
        state = State::Header;
        any_content = false;
    };

    while (std::getline(in, raw)) {
        ++ln;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (detail::is_blank_or_comment(raw)) continue;
        std::string stripped = raw;
        stripped.erase(0, stripped.find_first_not_of(" \t"));
        stripped.erase(stripped.find_last_not_of(" \t") + 1);
        if (stripped == "%") {
            if (!any_content) throw ParseError(ln, "separator before any hypergraph");
            finish_section(ln);
            continue;
        }
        any_content = true;
        std::vector<long> toks = detail::parse_int_tokens(raw, ln);
        if (toks.empty()) continue;
        if (state == State::Header) {
            if (toks.size() != 3)
                throw ParseError(ln, "header must be 'n m k'");
            if (toks[0] < 1) throw ParseError(ln, "n must be positive");
            if (toks[1] < 0) throw ParseError(ln, "m must be nonnegative");
            if (toks[1] > 0 && toks[2] < 1) throw ParseError(ln, "k must be positive");
            h.n = static_cast<int>(toks[0]);
            want_m = toks[1];
            want_k = toks[2];
            state = State::Lines;
            if (want_m == 0) { /* section is complete once a '%' or EOF arrives */ }
        } else {
            if (static_cast<long>(h.lines.size()) == want_m)
                throw ParseError(ln, "more than " + std::to_string(want_m) + " lines in section");
            if (static_cast<long>(toks.size()) != want_k)
                throw ParseError(ln, "expected " + std::to_string(want_k) + " points on a line, got " +
                                         std::to_string(toks.size()));
            Line l;
            for (long v : toks) {
                if (v < 1 || v > h.n)
                    throw ParseError(ln, "point index " + std::to_string(v) + " out of range 1.." +
                                             std::to_string(h.n));
                l.push_back(static_cast<int>(v));
            }
            std::sort(l.begin(), l.end());
            if (std::adjacent_find(l.begin(), l.end()) != l.end())
                throw ParseError(ln, "duplicate point within a line");
            if (!seen.insert(l).second) throw ParseError(ln, "duplicate line");
            h.lines.push_back(std::move(l));
        }
    }
    ++ln;
    if (any_content || out.empty()) {
        if (!any_content) throw ParseError(ln, "no hypergraph in input");
        finish_section(ln);
    }
    return out;
}

/// Single-hypergraph parse; rejects multi-section input.
inline Hypergraph parse_hypergraph(const std::string& text) {
    std::vector<Hypergraph> all = parse_hypergraphs(text);
    if (all.size() != 1)
        throw ParseError(1, "expected exactly one hypergraph, found " + std::to_string(all.size()));
    return all.front();
}

/// Emits the canonical file format: "n m k" header then one line per line,
/// points ascending, single spaces, LF endings.  Requires a uniform line
/// size (the format cannot express anything else).
inline std::string serialize(const Hypergraph& h) {
    std::optional<int> k = h.uniform_k();
    if (!k && !h.lines.empty())
        throw std::invalid_argument("serialize: file format requires k-uniform lines");
    std::ostringstream out;
    out << h.n << ' ' << h.lines.size() << ' ' << (k ? *k : 0) << '\n';
    for (const Line& l : h.lines) {
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (i) out << ' ';
            out << l[i];
        }
        out << '\n';
    }
    return out.str();
}

inline std::string serialize(const std::vector<Hypergraph>& hs) {
    std::string out;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        if (i) out += "%\n";
        out += serialize(hs[i]);
    }
    return out;
}

/// Which configuration axioms a hypergraph violates.
enum class Axiom { PointPairReuse, LinePairReuse, LineDegree, PointDegree };

inline const char* axiom_tag(Axiom a) {
    switch (a) {
        case Axiom::PointPairReuse: return "point-pair-reuse";
        case Axiom::LinePairReuse: return "line-pair-reuse";
        case Axiom::LineDegree: return "line-degree";
        case Axiom::PointDegree: return "point-degree";
    }
    return "?";
}

struct StructureReport {
    bool is_k_uniform = false;
    std::optional<int> k;
    bool is_configuration = false;
    std::vector<Axiom> violated_axioms;
    std::vector<int> point_degrees;
    bool symmetric = false;  // n == m

    bool violates(Axiom a) const {
        return std::find(violated_axioms.begin(), violated_axioms.end(), a) !=
               violated_axioms.end();
    }
};

/// Checks the configuration axioms: (a) point pairs share at most one line,
/// (b) line pairs meet in at most one point, (c) equal line sizes,
/// (d) equal point degrees.  Total function; never throws.
inline StructureReport validate(const Hypergraph& h) {
    StructureReport r;
    r.point_degrees = h.point_degrees();
    r.symmetric = static_cast<std::size_t>(h.n) == h.line_count();
    r.k = h.uniform_k();
    r.is_k_uniform = r.k.has_value();

    const std::size_t m = h.line_count();
    bool pair_reuse = false, line_reuse = false;
    std::set<std::pair<int, int>> used_pairs;
    for (const Line& l : h.lines)
        for (std::size_t i = 0; i < l.size(); ++i)
            for (std::size_t j = i + 1; j < l.size(); ++j)
                if (!used_pairs.insert({l[i], l[j]}).second) pair_reuse = true;
    for (std::size_t a = 0; a < m && !line_reuse; ++a)
        for (std::size_t b = a + 1; b < m && !line_reuse; ++b) {
            std::vector<int> inter;
            std::set_intersection(h.lines[a].begin(), h.lines[a].end(), h.lines[b].begin(),
                                  h.lines[b].end(), std::back_inserter(inter));
            if (inter.size() > 1) line_reuse = true;
        }
    if (pair_reuse) r.violated_axioms.push_back(Axiom::PointPairReuse);
    if (line_reuse) r.violated_axioms.push_back(Axiom::LinePairReuse);
    if (!r.is_k_uniform) r.violated_axioms.push_back(Axiom::LineDegree);
    bool degrees_equal = true;
    for (int d : r.point_degrees)
        if (d != r.point_degrees.front()) degrees_equal = false;
    if (!degrees_equal) r.violated_axioms.push_back(Axiom::PointDegree);

    r.is_configuration = r.violated_axioms.empty() && !h.lines.empty();
    return r;
}

/// m x n 0/1 matrix; entry (i,j) = 1 iff point j+1 lies on line i+1.
inline IntMatrix incidence_matrix(const Hypergraph& h) {
    IntMatrix a(h.line_count(), static_cast<std::size_t>(h.n));
    for (std::size_t i = 0; i < h.line_count(); ++i)
        for (int p : h.lines[i]) a.at(i, static_cast<std::size_t>(p - 1)) = 1;
    return a;
}

}  // namespace magiclat

#endif
