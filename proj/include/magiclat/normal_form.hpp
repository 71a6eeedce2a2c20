#ifndef MAGICLAT_NORMAL_FORM_HPP
#define MAGICLAT_NORMAL_FORM_HPP

#include <magiclat/matrix.hpp>

#include <cstddef>
#include <vector>

namespace magiclat {

/// Row-style Hermite normal form: u * original = h with u unimodular,
/// positive pivots strictly moving right, entries above each pivot reduced
/// into [0, pivot), zero rows last.
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;  // one per nonzero row of h
};

inline HnfResult hnf(const IntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    HnfResult res{m, IntMatrix::identity(nr), 0, {}};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;

    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        // Clear column c below row r by repeated smallest-pivot reduction.
        while (true) {
            std::size_t best = nr;
            for (std::size_t i = r; i < nr; ++i) {
                if (h.at(i, c) == 0) continue;
                if (best == nr || cmpabs(h.at(i, c).get_mpz_t(), h.at(best, c).get_mpz_t()) < 0)
                    best = i;
            }
            if (best == nr) break;  // column clear
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            bool others = false;
            for (std::size_t i = r + 1; i < nr; ++i) {
                if (h.at(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h.at(i, c) != 0) others = true;
            }
            if (!others) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        // Reduce entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

/// Smith normal form: u * original * v = d with u, v unimodular and
/// d diagonal with each invariant factor dividing the next.
struct SnfResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    std::vector<Int> invariant_factors;  // the positive diagonal entries, in order
};

inline SnfResult snf(const IntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    SnfResult res{m, IntMatrix::identity(nr), IntMatrix::identity(nc), {}};
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const std::size_t lim = nr < nc ? nr : nc;
    for (std::size_t t = 0; t < lim; ++t) {
        // Move a smallest nonzero entry of the trailing block to (t, t).
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                if (d.at(i, j) == 0) continue;
                if (pi == nr ||
                    cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == nr) break;  // trailing block is zero
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (d.at(i, t) != 0) {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    clean = false;
                }
            }
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
        // Enforce divisibility d[t][t] | d[i][j] for the trailing block;
        // on failure fold the offending entry into column t and redo this step.
        bool redo = false;
        for (std::size_t i = t + 1; i < nr && !redo; ++i)
            for (std::size_t j = t + 1; j < nc && !redo; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    d.add_row_multiple(t, i, 1);
                    u.add_row_multiple(t, i, 1);
                    redo = true;
                }
        if (redo) {
            --t;
            continue;
        }
    }
    for (std::size_t t = 0; t < lim; ++t)
        if (d.at(t, t) != 0) res.invariant_factors.push_back(d.at(t, t));
    return res;
}

/// Basis of the saturated integer kernel {x : m x = 0}, via SNF.
inline std::vector<std::vector<Int>> kernel_int(const IntMatrix& m) {
    SnfResult s = snf(m);
    const std::size_t r = s.invariant_factors.size();
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = r; j < m.cols(); ++j) {
        std::vector<Int> col(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) col[i] = s.v.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

/// Invariant factors >= 2 plus free rank: the shape of a finitely
/// generated abelian group.
struct AbelianGroupStructure {
    std::vector<Int> torsion;  // each >= 2, each dividing the next
    std::size_t free_rank = 0;

    bool operator==(const AbelianGroupStructure&) const = default;
};

/// Structure of Z^n / (row lattice of m) where n = m.cols().
inline AbelianGroupStructure cokernel(const IntMatrix& m, const SnfResult& s) {
    AbelianGroupStructure g;
    for (const Int& f : s.invariant_factors)
        if (f > 1) g.torsion.push_back(f);
    g.free_rank = m.cols() - s.invariant_factors.size();
    return g;
}

}  // namespace magiclat

#endif
