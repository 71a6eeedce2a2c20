#ifndef MAGICLAT_SUBSTRUCTURES_HPP
#define MAGICLAT_SUBSTRUCTURES_HPP

#include <magiclat/hypergraph.hpp>
#include <magiclat/magic.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace magiclat {

/// Four lines forming a complete quadrilateral (pairwise single
/// intersections, no three concurrent, lines covered by the six
/// intersection points) force 2 f(p) = 2 f(q) for each pair of opposite
/// points p, q not sharing a quadrilateral line.
struct QuadConstraint {
    int p = 0, q = 0;                       // 1-based point indices, p < q
    std::array<std::size_t, 4> quad_lines;  // 0-based line indices, ascending
};

inline std::vector<QuadConstraint> find_quadrilateral_constraints(const Hypergraph& h) {
    std::vector<QuadConstraint> out;
    const std::size_t m = h.line_count();

    auto single_meet = [&](std::size_t a, std::size_t b) -> std::optional<int> {
        std::vector<int> inter;
        std::set_intersection(h.lines[a].begin(), h.lines[a].end(), h.lines[b].begin(),
                              h.lines[b].end(), std::back_inserter(inter));
        if (inter.size() == 1) return inter[0];
        return std::nullopt;
    };

    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            for (std::size_t c = b + 1; c < m; ++c)
                for (std::size_t d = c + 1; d < m; ++d) {
                    const std::array<std::size_t, 4> quad{a, b, c, d};
                    // six pairwise intersection points, all single and distinct
                    int meet[4][4];
                    std::set<int> pts;
                    bool ok = true;
                    for (int i = 0; i < 4 && ok; ++i)
                        for (int j = i + 1; j < 4 && ok; ++j) {
                            auto x = single_meet(quad[static_cast<std::size_t>(i)],
                                                 quad[static_cast<std::size_t>(j)]);
                            if (!x) {
                                ok = false;
                                break;
                            }
                            meet[i][j] = *x;
                            pts.insert(*x);
                        }
                    if (!ok || pts.size() != 6) continue;  // three concurrent lines collapse points
                    // every point of every chosen line must be an intersection point,
                    // otherwise the four-line combination leaves stray terms
                    for (std::size_t li : quad) {
                        for (int p : h.lines[li])
                            if (!pts.count(p)) {
                                ok = false;
                                break;
                            }
                        if (!ok) break;
                    }
                    if (!ok) continue;
                    // opposite point pairs: the three ways to split the four lines 2+2
                    const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
                    for (const auto& s : splits) {
                        int p = meet[s[0]][s[1]] < meet[s[2]][s[3]] ? meet[s[0]][s[1]]
                                                                    : meet[s[2]][s[3]];
                        int q = meet[s[0]][s[1]] < meet[s[2]][s[3]] ? meet[s[2]][s[3]]
                                                                    : meet[s[0]][s[1]];
                        out.push_back({p, q, quad});
                    }
                }
    return out;
}

namespace detail {

struct Pattern {
    int n;                           // pattern points, labeled 1..n
    std::vector<std::array<int, 3>> lines;  // 3-uniform
};

/// Figure-style forbidden patterns on a 3x3 grid; adding the unmarked lines
/// and subtracting the marked rows leaves e_p - e_q.
inline const std::vector<Pattern>& forbidden_patterns() {
    // points: 1..9 laid out as rows {1,2,3}, {4,5,6}, {7,8,9}; pattern B adds point 10
    static const std::vector<Pattern> pats = {
        // three full rows vs. column 1, column 3, and the bent line {1,5,8};
        // ordered so consecutive lines share points (prunes the embedding search)
        {9,
         {{{1, 2, 3}}, {{1, 4, 7}}, {{1, 5, 8}}, {{4, 5, 6}}, {{7, 8, 9}}, {{3, 6, 9}}}},
        // three full columns vs. rows {2,3,10}, {4,5,6}, {7,8,9}
        {10,
         {{{1, 4, 7}}, {{2, 5, 8}}, {{4, 5, 6}}, {{7, 8, 9}}, {{2, 3, 10}}, {{3, 6, 9}}}},
    };
    return pats;
}

/// Injective embedding search: map pattern lines to distinct host lines so
/// that the induced point map is a consistent injection.
inline bool embeds(const Pattern& pat, const Hypergraph& h) {
    const std::size_t m = h.line_count();
    std::vector<int> point_map(static_cast<std::size_t>(pat.n) + 1, 0);  // pattern -> host, 0 = unset
    std::vector<char> host_point_used(static_cast<std::size_t>(h.n) + 1, 0);
    std::vector<char> host_line_used(m, 0);

    auto dfs = [&](auto&& self, std::size_t li) -> bool {
        if (li == pat.lines.size()) return true;
        const auto& pl = pat.lines[li];
        for (std::size_t hl = 0; hl < m; ++hl) {
            if (host_line_used[hl]) continue;
            const Line& target = h.lines[hl];
            // mapped pattern points must land inside the host line
            bool fits = true;
            std::vector<int> free_pat;
            std::vector<char> taken(target.size(), 0);
            for (int pp : pl) {
                int hp = point_map[static_cast<std::size_t>(pp)];
                if (hp == 0) {
                    free_pat.push_back(pp);
                    continue;
                }
                auto it = std::find(target.begin(), target.end(), hp);
                if (it == target.end()) {
                    fits = false;
                    break;
                }
                taken[static_cast<std::size_t>(it - target.begin())] = 1;
            }
            if (!fits) continue;
            std::vector<int> free_host;
            for (std::size_t i = 0; i < target.size(); ++i)
                if (!taken[i] && !host_point_used[static_cast<std::size_t>(target[i])])
                    free_host.push_back(target[i]);
            if (free_host.size() < free_pat.size()) continue;
            // try every injective assignment of the unmapped pattern points
            std::sort(free_host.begin(), free_host.end());
            std::vector<int> pick(free_pat.size());
            auto assign = [&](auto&& self2, std::size_t idx, std::vector<int>& pool) -> bool {
                if (idx == free_pat.size()) {
                    host_line_used[hl] = 1;
                    bool ok = self(self, li + 1);
                    host_line_used[hl] = 0;
                    return ok;
                }
                for (std::size_t t = 0; t < pool.size(); ++t) {
                    int hp = pool[t];
                    if (hp == 0) continue;
                    pool[t] = 0;
                    point_map[static_cast<std::size_t>(free_pat[idx])] = hp;
                    host_point_used[static_cast<std::size_t>(hp)] = 1;
                    if (self2(self2, idx + 1, pool)) {
                        point_map[static_cast<std::size_t>(free_pat[idx])] = 0;
                        host_point_used[static_cast<std::size_t>(hp)] = 0;
                        pool[t] = hp;
                        return true;
                    }
                    point_map[static_cast<std::size_t>(free_pat[idx])] = 0;
                    host_point_used[static_cast<std::size_t>(hp)] = 0;
                    pool[t] = hp;
                }
                return false;
            };
            if (free_pat.empty()) {
                // fully determined: the mapped points must cover the host line
                std::size_t covered = 0;
                for (char t : taken) covered += static_cast<std::size_t>(t);
                if (covered != target.size()) continue;
                host_line_used[hl] = 1;
                bool ok = self(self, li + 1);
                host_line_used[hl] = 0;
                if (ok) return true;
            } else {
                if (assign(assign, 0, free_host)) return true;
            }
        }
        return false;
    };
    return dfs(dfs, 0);
}

}  // namespace detail

struct ForbiddenScan {
    bool found = false;
    int pattern = 0;  // 1 = nine-point pattern, 2 = ten-point pattern
};

/// Scans a 3-uniform hypergraph for the two six-line forbidden patterns.
inline ForbiddenScan scan_small_forbidden(const Hypergraph& h) {
    std::optional<int> k = h.uniform_k();
    if (!k || *k != 3)
        throw std::invalid_argument("scan_small_forbidden: hypergraph is not 3-uniform");
    const auto& pats = detail::forbidden_patterns();
    for (std::size_t i = 0; i < pats.size(); ++i)
        if (detail::embeds(pats[i], h)) return {true, static_cast<int>(i + 1)};
    return {false, 0};
}

}  // namespace magiclat

#endif
