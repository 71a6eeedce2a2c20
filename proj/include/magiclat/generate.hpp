#ifndef MAGICLAT_GENERATE_HPP
#define MAGICLAT_GENERATE_HPP

#include <magiclat/hypergraph.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace magiclat {

namespace detail {

using Triple = std::array<int, 3>;  // strictly increasing point indices

/// True iff some point relabeling makes the sorted triple list strictly
/// lexicographically smaller.  Works on partial line sets too, which is what
/// lets the orderly search prune non-canonical prefixes early.
class CanonicityTester {
public:
    CanonicityTester(int n, const std::vector<Triple>& lines)
        : n_(n), lines_(lines),
          new_of_(static_cast<std::size_t>(n) + 1, 0),
          old_of_(static_cast<std::size_t>(n) + 1, 0),
          line_used_(lines.size(), false) {}

    bool smaller_relabeling_exists() { return dfs(0); }

private:
    bool dfs(std::size_t t) {
        if (t == lines_.size()) return false;  // relabeled list equals the original
        const Triple& target = lines_[t];
        for (std::size_t li = 0; li < lines_.size(); ++li) {
            if (line_used_[li]) continue;
            const Triple& l = lines_[li];
            Triple mt;
            if (!min_triple(l, mt)) continue;
            if (mt < target) return true;
            if (mt > target) continue;
            if (place_matching(t, li, target)) return true;
        }
        return false;
    }

    /// Smallest sorted triple the line can relabel to under the current
    /// partial map (unmapped points take the smallest free new labels).
    bool min_triple(const Triple& l, Triple& out) {
        int fixed[3];
        std::size_t nf = 0, nu = 0;
        for (int p : l) {
            int v = new_of_[static_cast<std::size_t>(p)];
            if (v)
                fixed[nf++] = v;
            else
                ++nu;
        }
        std::size_t w = 0;
        for (int v = 1; v <= n_ && nu > 0; ++v)
            if (!old_of_[static_cast<std::size_t>(v)]) {
                fixed[nf + w] = v;
                ++w;
                --nu;
            }
        if (w + nf != 3) return false;  // no free labels left (cannot happen for valid n)
        std::sort(fixed, fixed + 3);
        out = {fixed[0], fixed[1], fixed[2]};
        return true;
    }

    /// Try every injective completion making line li relabel exactly to
    /// `target`, recursing to position t+1.
    bool place_matching(std::size_t t, std::size_t li, const Triple& target) {
        // split target values into already-fixed and still-needed
        bool val_fixed[3] = {false, false, false};
        std::vector<int> free_pts;
        for (int p : lines_[li]) {
            int v = new_of_[static_cast<std::size_t>(p)];
            if (!v) {
                free_pts.push_back(p);
                continue;
            }
            bool hit = false;
            for (int i = 0; i < 3; ++i)
                if (!val_fixed[i] && target[static_cast<std::size_t>(i)] == v) {
                    val_fixed[i] = true;
                    hit = true;
                    break;
                }
            if (!hit) return false;  // a mapped point falls outside the target triple
        }
        std::vector<int> needed;
        for (int i = 0; i < 3; ++i)
            if (!val_fixed[i]) {
                int v = target[static_cast<std::size_t>(i)];
                if (old_of_[static_cast<std::size_t>(v)]) return false;  // label taken elsewhere
                needed.push_back(v);
            }
        if (needed.size() != free_pts.size()) return false;

        line_used_[li] = true;
        std::sort(free_pts.begin(), free_pts.end());
        bool found = false;
        do {
            for (std::size_t i = 0; i < needed.size(); ++i) {
                new_of_[static_cast<std::size_t>(free_pts[i])] = needed[i];
                old_of_[static_cast<std::size_t>(needed[i])] = free_pts[i];
            }
            found = dfs(t + 1);
            for (std::size_t i = 0; i < needed.size(); ++i) {
                new_of_[static_cast<std::size_t>(free_pts[i])] = 0;
                old_of_[static_cast<std::size_t>(needed[i])] = 0;
            }
        } while (!found && std::next_permutation(free_pts.begin(), free_pts.end()));
        line_used_[li] = false;
        return found;
    }

    int n_;
    const std::vector<Triple>& lines_;
    std::vector<int> new_of_;   // old point -> new label, 0 = unset
    std::vector<int> old_of_;   // new label -> old point, 0 = unset
    std::vector<bool> line_used_;
};

inline bool is_canonical(int n, const std::vector<Triple>& lines) {
    return !CanonicityTester(n, lines).smaller_relabeling_exists();
}

class N3Generator {
public:
    N3Generator(int n, const std::function<void(const Hypergraph&)>& emit)
        : n_(n), emit_(emit),
          deg_(static_cast<std::size_t>(n) + 1, 0),
          pair_used_(static_cast<std::size_t>((n + 1) * (n + 1)), false) {}

    void run() {
        if (n_ < 7) return;  // no n3-configuration on fewer than 7 points
        lines_.reserve(static_cast<std::size_t>(n_));
        // the canonical first line is always {1,2,3}
        push({1, 2, 3});
        extend();
        pop({1, 2, 3});
    }

private:
    bool pair(int a, int b) const {
        return pair_used_[static_cast<std::size_t>(a * (n_ + 1) + b)];
    }
    void set_pair(int a, int b, bool v) {
        pair_used_[static_cast<std::size_t>(a * (n_ + 1) + b)] = v;
        pair_used_[static_cast<std::size_t>(b * (n_ + 1) + a)] = v;
    }
    void push(const Triple& t) {
        lines_.push_back(t);
        for (int p : t) ++deg_[static_cast<std::size_t>(p)];
        set_pair(t[0], t[1], true);
        set_pair(t[0], t[2], true);
        set_pair(t[1], t[2], true);
    }
    void pop(const Triple& t) {
        lines_.pop_back();
        for (int p : t) --deg_[static_cast<std::size_t>(p)];
        set_pair(t[0], t[1], false);
        set_pair(t[0], t[2], false);
        set_pair(t[1], t[2], false);
    }

    void extend() {
        if (!is_canonical(n_, lines_)) return;
        if (lines_.size() == static_cast<std::size_t>(n_)) {
            for (int p = 1; p <= n_; ++p)
                if (deg_[static_cast<std::size_t>(p)] != 3) return;
            Hypergraph h;
            h.n = n_;
            for (const Triple& t : lines_) h.lines.push_back({t[0], t[1], t[2]});
            emit_(h);
            return;
        }
        // the next line must start at the smallest point of degree < 3
        int a = 0;
        for (int p = 1; p <= n_; ++p)
            if (deg_[static_cast<std::size_t>(p)] < 3) {
                a = p;
                break;
            }
        if (a == 0) return;  // all degrees full but fewer than n lines: dead
        const Triple& last = lines_.back();
        if (a < last[0]) return;  // that point can never be covered again
        for (int b = a + 1; b <= n_; ++b) {
            if (deg_[static_cast<std::size_t>(b)] >= 3 || pair(a, b)) continue;
            for (int c = b + 1; c <= n_; ++c) {
                if (deg_[static_cast<std::size_t>(c)] >= 3 || pair(a, c) || pair(b, c)) continue;
                Triple t{a, b, c};
                if (t <= last) continue;
                push(t);
                extend();
                pop(t);
            }
        }
    }

    int n_;
    const std::function<void(const Hypergraph&)>& emit_;
    std::vector<Triple> lines_;
    std::vector<int> deg_;
    std::vector<bool> pair_used_;
};

}  // namespace detail

/// Streams every n3-configuration exactly once up to isomorphism, in
/// canonical lexicographic order of the line lists.
inline void generate_n3(int n, const std::function<void(const Hypergraph&)>& emit) {
    if (n < 7) throw std::invalid_argument("generate_n3: n must be at least 7");
    detail::N3Generator(n, emit).run();
}

inline std::vector<Hypergraph> generate_n3(int n) {
    std::vector<Hypergraph> out;
    generate_n3(n, [&](const Hypergraph& h) { out.push_back(h); });
    return out;
}

}  // namespace magiclat

#endif
