#ifndef MAGICLAT_MEMBERSHIP_HPP
#define MAGICLAT_MEMBERSHIP_HPP

#include <magiclat/matrix.hpp>
#include <magiclat/normal_form.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace magiclat {

/// Coefficients x with x * m = v over Z, if v lies in the Z-row space of m.
/// Reduces v against a precomputed row HNF and maps the reduction
/// coefficients back through the unimodular transform.
inline std::optional<std::vector<Int>> rowspace_membership_int(const HnfResult& hf,
                                                               const IntMatrix& m,
                                                               const std::vector<Int>& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("rowspace_membership_int: dimension mismatch");
    std::vector<Int> rem = v;
    std::vector<Int> t(hf.rank);
    for (std::size_t i = 0; i < hf.rank; ++i) {
        const std::size_t c = hf.pivot_cols[i];
        if (rem[c] % hf.h.at(i, c) != 0) return std::nullopt;
        t[i] = rem[c] / hf.h.at(i, c);
        if (t[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) rem[j] -= t[i] * hf.h.at(i, j);
    }
    for (const Int& a : rem)
        if (a != 0) return std::nullopt;
    // v = sum t_i h_i = (t^T u) m
    std::vector<Int> x(m.rows());
    for (std::size_t i = 0; i < hf.rank; ++i) {
        if (t[i] == 0) continue;
        for (std::size_t j = 0; j < m.rows(); ++j) x[j] += t[i] * hf.u.at(i, j);
    }
    if (row_vector_times(x, m) != v)
        throw std::logic_error("rowspace_membership_int: verification failed");
    return x;
}

inline std::optional<std::vector<Int>> rowspace_membership_int(const IntMatrix& m,
                                                               const std::vector<Int>& v) {
    return rowspace_membership_int(hnf(m), m, v);
}

namespace detail {

/// Fraction-free (Bareiss) elimination of an integer matrix in place.
/// Returns the pivot columns; rows end up in echelon order.
inline std::vector<std::size_t> bareiss(IntMatrix& a) {
    const std::size_t nr = a.rows(), nc = a.cols();
    std::vector<std::size_t> piv;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (a.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p == nr) continue;
        a.swap_rows(r, p);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) {
                a.at(i, j) = a.at(r, c) * a.at(i, j) - a.at(i, c) * a.at(r, j);
                a.at(i, j) /= prev;  // exact division (Bareiss)
            }
            a.at(i, c) = 0;
        }
        prev = a.at(r, c);
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace detail

/// Rational rank via fraction-free elimination.
inline std::size_t rational_rank(const IntMatrix& m) {
    IntMatrix a = m;
    return detail::bareiss(a).size();
}

/// Rational coefficients x with x * m = v, if v lies in the Q-row space of m.
/// Fraction-free elimination of the augmented system; rationals appear only
/// in the final back-substitution.  Free variables are set to 0.
inline std::optional<std::vector<Rat>> rowspace_membership_rat(const IntMatrix& m,
                                                               const std::vector<Int>& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("rowspace_membership_rat: dimension mismatch");
    // Solve m^T x = v: augment the transpose with v as last column.
    const std::size_t nr = m.cols(), nc = m.rows();
    IntMatrix a(nr, nc + 1);
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j) a.at(i, j) = m.at(j, i);
        a.at(i, nc) = v[i];
    }
    std::vector<std::size_t> piv = detail::bareiss(a);
    if (!piv.empty() && piv.back() == nc) return std::nullopt;  // pivot in rhs: inconsistent
    const std::size_t r = piv.size();
    std::vector<Rat> x(nc);
    for (std::size_t i = r; i-- > 0;) {
        Rat s(a.at(i, nc));
        for (std::size_t j = piv[i] + 1; j < nc; ++j)
            if (a.at(i, j) != 0) s -= Rat(a.at(i, j)) * x[j];
        s /= Rat(a.at(i, piv[i]));
        s.canonicalize();
        x[piv[i]] = s;
    }
    // exact verification: x * m = v
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rat acc = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (x[i] != 0) acc += x[i] * Rat(m.at(i, j));
        if (acc != Rat(v[j])) return std::nullopt;
    }
    return x;
}

}  // namespace magiclat

#endif
