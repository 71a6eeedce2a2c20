#ifndef MAGICLAT_MAGIC_HPP
#define MAGICLAT_MAGIC_HPP

#include <magiclat/hypergraph.hpp>
#include <magiclat/matrix.hpp>
#include <magiclat/membership.hpp>
#include <magiclat/normal_form.hpp>

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace magiclat {

/// Integer combination of lines with zero coefficient sum whose weighted
/// line sum equals denominator * (e_p - e_q).  denominator is 1 for
/// certificates over Z; over Q it clears the rational coefficients.
struct Certificate {
    int p = 0, q = 0;            // 1-based point indices, p < q
    std::vector<Int> coeffs;     // one per line, input order
    Int denominator = 1;

    /// Exact check of both certificate identities against the hypergraph.
    bool verifies(const Hypergraph& h) const {
        if (coefficient_sum(coeffs) != 0) return false;
        std::vector<Int> target(static_cast<std::size_t>(h.n));
        target[static_cast<std::size_t>(p - 1)] = denominator;
        target[static_cast<std::size_t>(q - 1)] = -denominator;
        return row_vector_times(coeffs, incidence_matrix(h)) == target;
    }
};

/// Value of one point in a witness group: one residue per torsion factor
/// (reduced into [0, d_i)) then one integer per free coordinate.
using GroupElement = std::vector<Int>;

struct GroupLabeling {
    AbelianGroupStructure group;
    std::vector<GroupElement> values;  // one per point
    GroupElement magic_constant;
};

struct IntLabeling {
    std::vector<Int> values;  // one per point
    Int magic_constant = 0;
};

struct Verdict {
    enum class Kind { Magic, NotMagic };
    Kind kind = Kind::Magic;
    // Magic witnesses (exactly one set, depending on the deciding routine).
    std::optional<GroupLabeling> group_witness;
    std::optional<IntLabeling> int_witness;
    // NotMagic obstruction.
    std::optional<Certificate> obstruction;

    bool magic() const { return kind == Kind::Magic; }
};

inline void require_uniform(const Hypergraph& h, const char* who) {
    if (!h.uniform_k())
        throw std::invalid_argument(std::string(who) + ": hypergraph is not k-uniform");
}

/// (m-1) x n matrix whose row i is line (base+2+i) minus the base line of the
/// incidence matrix.  Its integer kernel is the full lattice of line-invariant
/// Z-labelings; its row lattice cuts out the witness cokernel.
inline IntMatrix difference_matrix(const Hypergraph& h, std::size_t base_line = 0) {
    const std::size_t m = h.line_count();
    if (m == 0) throw std::invalid_argument("difference_matrix: hypergraph has no lines");
    IntMatrix a = incidence_matrix(h);
    IntMatrix d(m - 1, static_cast<std::size_t>(h.n));
    std::size_t r = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i == base_line) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) d.at(r, j) = a.at(i, j) - a.at(base_line, j);
        ++r;
    }
    return d;
}

namespace detail {

inline GroupElement reduce_element(const AbelianGroupStructure& g, GroupElement e) {
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
        mpz_fdiv_r(e[i].get_mpz_t(), e[i].get_mpz_t(), g.torsion[i].get_mpz_t());
    return e;
}

/// Witness labeling into the cokernel of the line-difference lattice.
/// Line invariance is automatic (line differences map to zero); injectivity
/// holds exactly when no point difference lies in the Z-row space of the
/// incidence matrix.
inline GroupLabeling cokernel_labeling(const Hypergraph& h) {
    IntMatrix d = difference_matrix(h);
    SnfResult s = snf(d);
    const std::size_t n = static_cast<std::size_t>(h.n);
    const std::size_t rank = s.invariant_factors.size();

    AbelianGroupStructure g = cokernel(d, s);

    // Quotient map: e_j -> row j of v, keeping coordinates with d_i >= 2
    // (mod d_i) plus the free coordinates past the rank.
    std::vector<std::size_t> kept;  // coordinate indices of v columns
    for (std::size_t i = 0; i < rank; ++i)
        if (s.invariant_factors[i] > 1) kept.push_back(i);
    for (std::size_t i = rank; i < n; ++i) kept.push_back(i);

    GroupLabeling lab;
    lab.group = g;
    lab.values.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        GroupElement e;
        e.reserve(kept.size());
        for (std::size_t c : kept) e.push_back(s.v.at(j, c));
        lab.values[j] = reduce_element(g, std::move(e));
    }
    GroupElement c(kept.size());
    for (int p : h.lines.front())
        for (std::size_t i = 0; i < kept.size(); ++i)
            c[i] += lab.values[static_cast<std::size_t>(p - 1)][i];
    lab.magic_constant = reduce_element(g, std::move(c));
    return lab;
}

}  // namespace detail

/// Decides magicness over some abelian group: not magic iff e_p - e_q lies
/// in the Z-row space of the incidence matrix for some pair p < q (first
/// such pair in lexicographic order is reported).
inline Verdict decide_some_group(const Hypergraph& h) {
    require_uniform(h, "decide_some_group");
    IntMatrix a = incidence_matrix(h);
    HnfResult hf = hnf(a);
    const std::size_t n = static_cast<std::size_t>(h.n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            std::vector<Int> v(n);
            v[p] = 1;
            v[q] = -1;
            if (auto x = rowspace_membership_int(hf, a, v)) {
                Certificate cert{static_cast<int>(p + 1), static_cast<int>(q + 1),
                                 std::move(*x), 1};
                if (!cert.verifies(h))
                    throw std::logic_error("decide_some_group: certificate failed to verify");
                Verdict out;
                out.kind = Verdict::Kind::NotMagic;
                out.obstruction = std::move(cert);
                return out;
            }
        }
    Verdict out;
    out.kind = Verdict::Kind::Magic;
    out.group_witness = detail::cokernel_labeling(h);
    return out;
}

/// Decides magicness over Z: not magic iff e_p - e_q lies in the Q-row
/// space of the incidence matrix for some pair.  The certificate scales
/// the rational coefficients by their common denominator.
inline Verdict decide_over_int(const Hypergraph& h);

/// Injective line-invariant integer labeling, built from the saturated
/// integer kernel of the difference matrix by escalation: repeatedly add a
/// multiple of a kernel vector that separates a colliding pair, choosing
/// the multiplier so no separated pair collapses.
inline IntLabeling int_labeling(const Hypergraph& h) {
    require_uniform(h, "int_labeling");
    const std::size_t n = static_cast<std::size_t>(h.n);
    std::vector<std::vector<Int>> basis = kernel_int(difference_matrix(h));

    std::vector<Int> f(n);
    while (true) {
        // first colliding pair
        std::size_t ci = n, cj = n;
        for (std::size_t i = 0; i < n && ci == n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (f[i] == f[j]) {
                    ci = i;
                    cj = j;
                    break;
                }
        if (ci == n) break;
        const std::vector<Int>* sep = nullptr;
        for (const auto& b : basis)
            if (b[ci] != b[cj]) {
                sep = &b;
                break;
            }
        if (!sep)
            throw std::invalid_argument(
                "int_labeling: hypergraph is not magic over Z (points " + std::to_string(ci + 1) +
                " and " + std::to_string(cj + 1) + " are inseparable)");
        const std::vector<Int>& hv = *sep;
        // lambda values that would merge a currently-separated pair
        std::set<Int> bad;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (hv[i] == hv[j]) continue;
                Int num = f[j] - f[i], den = hv[i] - hv[j];
                if (num % den == 0) bad.insert(num / den);
            }
        Int lambda = 1;
        while (bad.count(lambda)) ++lambda;
        for (std::size_t i = 0; i < n; ++i) f[i] += lambda * hv[i];
    }
    IntLabeling lab;
    lab.values = std::move(f);
    for (int p : h.lines.front()) lab.magic_constant += lab.values[static_cast<std::size_t>(p - 1)];
    return lab;
}

inline Verdict decide_over_int(const Hypergraph& h) {
    require_uniform(h, "decide_over_int");
    IntMatrix a = incidence_matrix(h);
    const std::size_t n = static_cast<std::size_t>(h.n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            std::vector<Int> v(n);
            v[p] = 1;
            v[q] = -1;
            if (auto x = rowspace_membership_rat(a, v)) {
                Int d = 1;
                for (const Rat& c : *x) d = lcm(d, Int(c.get_den()));
                Certificate cert;
                cert.p = static_cast<int>(p + 1);
                cert.q = static_cast<int>(q + 1);
                cert.denominator = d;
                cert.coeffs.reserve(x->size());
                for (const Rat& c : *x) {
                    Rat scaled = c * Rat(d);
                    scaled.canonicalize();
                    cert.coeffs.emplace_back(scaled.get_num());
                }
                if (!cert.verifies(h))
                    throw std::logic_error("decide_over_int: certificate failed to verify");
                Verdict out;
                out.kind = Verdict::Kind::NotMagic;
                out.obstruction = std::move(cert);
                return out;
            }
        }
    Verdict out;
    out.kind = Verdict::Kind::Magic;
    out.int_witness = int_labeling(h);
    return out;
}

/// Witness construction for a hypergraph known (or checked) to be magic over
/// some group.  Throws with the obstruction pair if the precondition fails.
inline std::pair<AbelianGroupStructure, GroupLabeling> witness_group_labeling(const Hypergraph& h) {
    Verdict v = decide_some_group(h);
    if (!v.magic())
        throw std::invalid_argument("witness_group_labeling: not magic over any group (points " +
                                    std::to_string(v.obstruction->p) + " and " +
                                    std::to_string(v.obstruction->q) + ")");
    return {v.group_witness->group, *v.group_witness};
}

struct VerifyResult {
    bool ok = false;
    std::string diagnostic;  // empty when ok

    explicit operator bool() const { return ok; }
};

inline VerifyResult verify_labeling(const Hypergraph& h, const GroupLabeling& lab) {
    const std::size_t n = static_cast<std::size_t>(h.n);
    const std::size_t width = lab.group.torsion.size() + lab.group.free_rank;
    if (lab.values.size() != n) return {false, "value count does not match point count"};
    if (lab.magic_constant.size() != width) return {false, "magic constant has wrong shape"};
    for (const GroupElement& e : lab.values)
        if (e.size() != width) return {false, "a value has wrong shape for the group"};

    auto reduced = [&](const GroupElement& e) { return detail::reduce_element(lab.group, e); };

    for (std::size_t i = 0; i < h.line_count(); ++i) {
        GroupElement sum(width);
        for (int p : h.lines[i])
            for (std::size_t c = 0; c < width; ++c)
                sum[c] += lab.values[static_cast<std::size_t>(p - 1)][c];
        if (reduced(sum) != reduced(lab.magic_constant))
            return {false, "line " + std::to_string(i + 1) + " sum differs from magic constant"};
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (reduced(lab.values[i]) == reduced(lab.values[j]))
                return {false, "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                   " share a label"};
    return {true, {}};
}

inline VerifyResult verify_labeling(const Hypergraph& h, const IntLabeling& lab) {
    const std::size_t n = static_cast<std::size_t>(h.n);
    if (lab.values.size() != n) return {false, "value count does not match point count"};
    for (std::size_t i = 0; i < h.line_count(); ++i) {
        Int sum = 0;
        for (int p : h.lines[i]) sum += lab.values[static_cast<std::size_t>(p - 1)];
        if (sum != lab.magic_constant)
            return {false, "line " + std::to_string(i + 1) + " sum differs from magic constant"};
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (lab.values[i] == lab.values[j])
                return {false, "points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                   " share a label"};
    return {true, {}};
}

}  // namespace magiclat

#endif
