// Howell normal form and exact linear-system solving over Z/N.
//
// The Howell form is the canonical row form for row spans of matrices over a
// residue ring: two matrices have the same row span iff their Howell forms are
// identical. Compared with a plain echelon form it carries one extra closure
// property: for every row with leading entry d, the shifted row (N/d)*row is
// again in the span of the later rows. That property is what makes greedy
// left-to-right reduction a complete membership test.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "residue.hpp"

namespace centra {

// Row-canonical basis of a submodule of (Z/N)^cols.
//
// Invariants: rows are nonzero with strictly increasing leading columns;
// each leading entry divides N; entries above a leading entry are reduced
// modulo it. Every span element has a unique coordinate vector c with
// c[i] in [0, N/lead_val[i]).
struct HowellForm {
    i64 n = 0;   // modulus
    int cols = 0;
    std::vector<Vec> rows;
    std::vector<int> lead_col;
    std::vector<i64> lead_val;

    bool operator==(const HowellForm& o) const = default;

    // Number of elements of the spanned submodule.
    u64 cardinality() const {
        unsigned __int128 c = 1;
        for (i64 d : lead_val) {
            c *= static_cast<u64>(n / d);
            if (c > std::numeric_limits<u64>::max())
                throw std::overflow_error("howell: span cardinality overflows u64");
        }
        return static_cast<u64>(c);
    }

    // Greedy reduction of v by the basis; v is in the span iff the residual
    // is zero. Completeness relies on the Howell closure property.
    Vec reduce(Vec v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            i64 c = v[static_cast<std::size_t>(lead_col[r])];
            if (c % lead_val[r] != 0) continue;
            i64 q = c / lead_val[r];
            if (q == 0) continue;
            for (int j = lead_col[r]; j < cols; ++j)
                v[static_cast<std::size_t>(j)] =
                    floormod(v[static_cast<std::size_t>(j)] - q * rows[r][static_cast<std::size_t>(j)], n);
        }
        return v;
    }

    bool contains(const Vec& v) const {
        Vec r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](i64 x) { return x == 0; });
    }

    // Span element for a coefficient tuple (one coefficient per row).
    Vec combine(const std::vector<u64>& coeff) const {
        Vec v(static_cast<std::size_t>(cols), 0);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            i64 c = static_cast<i64>(coeff[r] % static_cast<u64>(n));
            if (c == 0) continue;
            for (int j = lead_col[r]; j < cols; ++j)
                v[static_cast<std::size_t>(j)] =
                    floormod(v[static_cast<std::size_t>(j)] + c * rows[r][static_cast<std::size_t>(j)], n);
        }
        return v;
    }
};

// In-place Howell reduction. Row operations are unimodular 2x2 gcd steps plus
// unit scalings, and for each pivot with a proper divisor d of N the shifted
// row (N/d)*row is appended so later columns absorb it.
inline HowellForm howell_form(std::vector<Vec> m, int cols, i64 n) {
    if (n < 1) throw std::invalid_argument("howell: modulus must be >= 1");
    for (auto& row : m) {
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("howell: ragged matrix");
        for (auto& x : row) x = floormod(x, n);
    }
    if (n == 1) m.clear(); // (Z/1)^cols is trivial

    std::size_t r = 0;
    for (int col = 0; col < cols && r < m.size(); ++col) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][static_cast<std::size_t>(col)] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);

        for (std::size_t i = r + 1; i < m.size(); ++i) {
            i64 b = m[i][static_cast<std::size_t>(col)];
            if (b == 0) continue;
            i64 a = m[r][static_cast<std::size_t>(col)];
            auto [g, s, t] = xgcd(a, b);
            i64 af = a / g, bf = b / g;
            // [s t; -bf af] has determinant 1, so the row span is preserved.
            for (int j = col; j < cols; ++j) {
                i64 x = m[r][static_cast<std::size_t>(j)], y = m[i][static_cast<std::size_t>(j)];
                m[r][static_cast<std::size_t>(j)] = floormod(s * x + t * y, n);
                m[i][static_cast<std::size_t>(j)] = floormod(af * y - bf * x, n);
            }
        }

        i64 u = lifting_unit(m[r][static_cast<std::size_t>(col)], n);
        if (u != 1)
            for (int j = col; j < cols; ++j)
                m[r][static_cast<std::size_t>(j)] = floormod(u * m[r][static_cast<std::size_t>(j)], n);
        i64 d = m[r][static_cast<std::size_t>(col)];

        if (d != 1) {
            i64 shift = n / d;
            Vec extra(static_cast<std::size_t>(cols), 0);
            bool nonzero = false;
            for (int j = col + 1; j < cols; ++j) {
                extra[static_cast<std::size_t>(j)] = floormod(shift * m[r][static_cast<std::size_t>(j)], n);
                nonzero |= extra[static_cast<std::size_t>(j)] != 0;
            }
            if (nonzero) m.push_back(std::move(extra));
        }

        for (std::size_t i = 0; i < r; ++i) {
            i64 q = m[i][static_cast<std::size_t>(col)] / d;
            if (q == 0) continue;
            for (int j = col; j < cols; ++j)
                m[i][static_cast<std::size_t>(j)] =
                    floormod(m[i][static_cast<std::size_t>(j)] - q * m[r][static_cast<std::size_t>(j)], n);
        }
        ++r;
    }

    HowellForm h;
    h.n = n;
    h.cols = cols;
    for (std::size_t i = 0; i < r; ++i) {
        int lc = 0;
        while (m[i][static_cast<std::size_t>(lc)] == 0) ++lc;
        h.rows.push_back(std::move(m[i]));
        h.lead_col.push_back(lc);
        h.lead_val.push_back(h.rows.back()[static_cast<std::size_t>(lc)]);
    }
    return h;
}

// Solutions of A*t = b over Z/N as a coset particular + ker. The kernel comes
// out of the Howell form of [A^T | I]: combinations whose A^T part vanished
// are exactly the kernel vectors, and their identity-block tails are already
// in Howell form.
struct LinearSolution {
    bool consistent = false;
    Vec particular;     // canonical: reduced by the kernel basis
    HowellForm kernel;  // basis of {t : A*t = 0}

    u64 cardinality() const { return consistent ? kernel.cardinality() : 0; }

    bool contains(const Vec& t) const {
        if (!consistent) return false;
        Vec d(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            d[i] = floormod(t[i] - particular[i], kernel.n);
        return kernel.contains(d);
    }

    // Solution for a kernel coefficient tuple.
    Vec solution(const std::vector<u64>& coeff) const {
        Vec v = kernel.combine(coeff);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = floormod(v[i] + particular[i], kernel.n);
        return v;
    }

    // Two cosets are equal iff the kernels agree (Howell form is canonical)
    // and the particular solutions differ by a kernel element.
    bool same_solution_set(const LinearSolution& o) const {
        if (consistent != o.consistent) return false;
        if (!consistent) return true;
        if (!(kernel == o.kernel)) return false;
        Vec d(particular.size());
        for (std::size_t i = 0; i < particular.size(); ++i)
            d[i] = floormod(particular[i] - o.particular[i], kernel.n);
        return kernel.contains(d);
    }
};

inline LinearSolution solve_mod(const std::vector<Vec>& a, const Vec& b, int unknowns, i64 n) {
    const int m = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != m)
        throw std::invalid_argument("solve_mod: rhs length mismatch");

    std::vector<Vec> aug(static_cast<std::size_t>(unknowns),
                         Vec(static_cast<std::size_t>(m + unknowns), 0));
    for (int i = 0; i < unknowns; ++i) {
        for (int r = 0; r < m; ++r) {
            if (static_cast<int>(a[static_cast<std::size_t>(r)].size()) != unknowns)
                throw std::invalid_argument("solve_mod: ragged matrix");
            aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] =
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
        }
        aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(m + i)] = 1;
    }
    HowellForm h = howell_form(std::move(aug), m + unknowns, n);

    LinearSolution s;
    s.kernel.n = n;
    s.kernel.cols = unknowns;
    for (std::size_t r = 0; r < h.rows.size(); ++r) {
        if (h.lead_col[r] < m) continue;
        Vec tail(h.rows[r].begin() + m, h.rows[r].end());
        s.kernel.rows.push_back(std::move(tail));
        s.kernel.lead_col.push_back(h.lead_col[r] - m);
        s.kernel.lead_val.push_back(h.lead_val[r]);
    }

    // Reduce (b | 0); if the equation block empties, the negated tail of the
    // accumulated combination is a particular solution.
    Vec v(static_cast<std::size_t>(m + unknowns), 0);
    for (int r = 0; r < m; ++r) v[static_cast<std::size_t>(r)] = floormod(b[static_cast<std::size_t>(r)], n);
    v = h.reduce(std::move(v));
    for (int r = 0; r < m; ++r)
        if (v[static_cast<std::size_t>(r)] != 0) return s; // inconsistent

    s.consistent = true;
    s.particular.resize(static_cast<std::size_t>(unknowns));
    for (int i = 0; i < unknowns; ++i)
        s.particular[static_cast<std::size_t>(i)] = floormod(-v[static_cast<std::size_t>(m + i)], n);
    s.particular = s.kernel.reduce(std::move(s.particular));
    return s;
}

} // namespace centra
