// Additive maps on a finite ring and the centralizer-law predicates.
//
// An additive map T on a ring with additive group (Z/N)^k is a k*k matrix
// over Z/N: column j holds the coordinates of T(g_j). The generator-level
// predicates here are exactly equivalent to quantifying over all elements:
// biadditive laws (left/right centralizer) reduce to the generator grid, and
// Jordan laws reduce to generators plus pairwise sums through the polar form
// B(x,y) = Q(x+y) - Q(x) - Q(y) of the quadratic residual Q.
#pragma once

#include <optional>
#include <vector>

#include "ring.hpp"

namespace centra {

struct AdditiveMap {
    int k = 0;
    i64 n = 0;
    std::vector<i64> m; // row-major k*k; m[i*k+j] = coefficient of g_i in T(g_j)

    bool operator==(const AdditiveMap& o) const = default;

    static AdditiveMap zero(const RingSpec& r) {
        return AdditiveMap{r.k, r.n,
                           std::vector<i64>(static_cast<std::size_t>(r.k) *
                                                static_cast<std::size_t>(r.k),
                                            0)};
    }

    static AdditiveMap identity(const RingSpec& r) {
        AdditiveMap t = zero(r);
        for (int i = 0; i < r.k; ++i) t.entry(i, i) = 1;
        return t;
    }

    static AdditiveMap from_matrix(const RingSpec& r, std::vector<Vec> rows) {
        if (static_cast<int>(rows.size()) != r.k)
            throw std::invalid_argument("additive map: expected " + std::to_string(r.k) + " rows");
        AdditiveMap t = zero(r);
        for (int i = 0; i < r.k; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != r.k)
                throw std::invalid_argument("additive map: ragged matrix");
            for (int j = 0; j < r.k; ++j)
                t.entry(i, j) = floormod(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], r.n);
        }
        return t;
    }

    // Matrix built from the flat unknown vector used by the identity solver
    // (same row-major layout).
    static AdditiveMap from_flat(const RingSpec& r, const Vec& flat) {
        AdditiveMap t = zero(r);
        for (std::size_t i = 0; i < t.m.size(); ++i) t.m[i] = floormod(flat[i], r.n);
        return t;
    }

    i64& entry(int i, int j) { return m[static_cast<std::size_t>(i * k + j)]; }
    i64 entry(int i, int j) const { return m[static_cast<std::size_t>(i * k + j)]; }

    Vec flat() const { return m; }

    std::vector<Vec> rows() const {
        std::vector<Vec> out(static_cast<std::size_t>(k), Vec(static_cast<std::size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(i, j);
        return out;
    }

    bool is_zero() const {
        for (i64 x : m)
            if (x != 0) return false;
        return true;
    }

    Vec apply(const Vec& x) const {
        Vec y(static_cast<std::size_t>(k), 0);
        for (int j = 0; j < k; ++j) {
            i64 c = x[static_cast<std::size_t>(j)];
            if (c == 0) continue;
            for (int i = 0; i < k; ++i)
                y[static_cast<std::size_t>(i)] =
                    floormod(y[static_cast<std::size_t>(i)] + c * entry(i, j), n);
        }
        return y;
    }
};

// Left multiplication x -> alpha * x.
inline AdditiveMap scalar_map(const RingSpec& r, const Vec& alpha) {
    AdditiveMap t = AdditiveMap::zero(r);
    for (int j = 0; j < r.k; ++j) {
        Vec col = r.mul(alpha, r.gen(j));
        for (int i = 0; i < r.k; ++i) t.entry(i, j) = col[static_cast<std::size_t>(i)];
    }
    return t;
}

// If T is x -> alpha*x for a central alpha, returns alpha. Requires a unity:
// alpha is read off as T(1).
inline std::optional<Vec> is_scalar_form(const RingSpec& r, const AdditiveMap& t) {
    Vec alpha = t.apply(r.one());
    for (int i = 0; i < r.k; ++i) {
        Vec g = r.gen(i);
        if (r.mul(alpha, g) != r.mul(g, alpha)) return std::nullopt;
    }
    if (!(t == scalar_map(r, alpha))) return std::nullopt;
    return alpha;
}

// A violation of a law: the instantiation elements it failed at, plus the two
// sides that disagree.
struct Violation {
    std::vector<Vec> at;
    Vec lhs, rhs;
};

struct CheckResult {
    bool holds = false;
    std::optional<Violation> violation;
};

enum class Law { left, right, two_sided, jordan_left, jordan_right };

inline const char* law_name(Law law) {
    switch (law) {
        case Law::left: return "left-centralizer";
        case Law::right: return "right-centralizer";
        case Law::two_sided: return "two-sided-centralizer";
        case Law::jordan_left: return "jordan-left";
        case Law::jordan_right: return "jordan-right";
    }
    return "?";
}

inline Law law_from_name(const std::string& s) {
    if (s == "left-centralizer" || s == "left") return Law::left;
    if (s == "right-centralizer" || s == "right") return Law::right;
    if (s == "two-sided-centralizer" || s == "two-sided") return Law::two_sided;
    if (s == "jordan-left") return Law::jordan_left;
    if (s == "jordan-right") return Law::jordan_right;
    throw parse_error("unknown law '" + s + "'");
}

namespace detail {

// lhs/rhs of a law at concrete elements. Jordan laws use only x.
inline std::pair<Vec, Vec> law_sides(const RingSpec& r, const AdditiveMap& t, Law law,
                                     const Vec& x, const Vec& y) {
    switch (law) {
        case Law::left: return {t.apply(r.mul(x, y)), r.mul(t.apply(x), y)};
        case Law::right: return {t.apply(r.mul(x, y)), r.mul(x, t.apply(y))};
        case Law::jordan_left: return {t.apply(r.mul(x, x)), r.mul(t.apply(x), x)};
        case Law::jordan_right: return {t.apply(r.mul(x, x)), r.mul(x, t.apply(x))};
        case Law::two_sided: break;
    }
    throw std::logic_error("law_sides: two_sided is checked as left + right");
}

inline CheckResult check_grid(const RingSpec& r, const AdditiveMap& t, Law law) {
    for (int i = 0; i < r.k; ++i)
        for (int j = 0; j < r.k; ++j) {
            Vec x = r.gen(i), y = r.gen(j);
            auto [lhs, rhs] = law_sides(r, t, law, x, y);
            if (lhs != rhs)
                return {false, Violation{{std::move(x), std::move(y)}, std::move(lhs), std::move(rhs)}};
        }
    return {true, std::nullopt};
}

// Jordan laws: Q vanishes on all elements iff it vanishes on generators and
// its polar form vanishes on generator pairs.
inline CheckResult check_jordan(const RingSpec& r, const AdditiveMap& t, Law law) {
    const bool left = law == Law::jordan_left;
    for (int i = 0; i < r.k; ++i) {
        Vec x = r.gen(i);
        auto [lhs, rhs] = law_sides(r, t, law, x, x);
        if (lhs != rhs) return {false, Violation{{std::move(x)}, std::move(lhs), std::move(rhs)}};
    }
    for (int i = 0; i < r.k; ++i)
        for (int j = i + 1; j < r.k; ++j) {
            Vec x = r.gen(i), y = r.gen(j);
            Vec anti = r.add(r.mul(x, y), r.mul(y, x));
            Vec lhs = t.apply(anti);
            Vec rhs = left ? r.add(r.mul(t.apply(x), y), r.mul(t.apply(y), x))
                           : r.add(r.mul(x, t.apply(y)), r.mul(y, t.apply(x)));
            if (lhs != rhs)
                return {false, Violation{{std::move(x), std::move(y)}, std::move(lhs), std::move(rhs)}};
        }
    return {true, std::nullopt};
}

} // namespace detail

// Generator-level law check; equivalent to the all-elements check.
inline CheckResult check_law(const RingSpec& r, const AdditiveMap& t, Law law) {
    switch (law) {
        case Law::left:
        case Law::right: return detail::check_grid(r, t, law);
        case Law::jordan_left:
        case Law::jordan_right: return detail::check_jordan(r, t, law);
        case Law::two_sided: {
            CheckResult l = detail::check_grid(r, t, Law::left);
            if (!l.holds) return l;
            return detail::check_grid(r, t, Law::right);
        }
    }
    throw std::logic_error("check_law: bad law");
}

inline bool is_left_centralizer(const RingSpec& r, const AdditiveMap& t) {
    return check_law(r, t, Law::left).holds;
}
inline bool is_right_centralizer(const RingSpec& r, const AdditiveMap& t) {
    return check_law(r, t, Law::right).holds;
}
inline bool is_two_sided_centralizer(const RingSpec& r, const AdditiveMap& t) {
    return check_law(r, t, Law::two_sided).holds;
}
inline bool is_jordan_left_centralizer(const RingSpec& r, const AdditiveMap& t) {
    return check_law(r, t, Law::jordan_left).holds;
}
inline bool is_jordan_right_centralizer(const RingSpec& r, const AdditiveMap& t) {
    return check_law(r, t, Law::jordan_right).holds;
}

// Defining identity evaluated over every element (pair). The slow reference
// the generator-level checks are measured against.
inline CheckResult exhaustive_check(const RingSpec& r, const AdditiveMap& t, Law law,
                                    const Budget& budget = {}) {
    require_enumerable(r, budget.enumeration, "exhaustive_check");
    const u64 card = r.cardinality();
    const bool unary = law == Law::jordan_left || law == Law::jordan_right;
    if (law == Law::two_sided) {
        CheckResult l = exhaustive_check(r, t, Law::left, budget);
        if (!l.holds) return l;
        return exhaustive_check(r, t, Law::right, budget);
    }
    for (u64 ix = 0; ix < card; ++ix) {
        Vec x = r.element(ix);
        if (unary) {
            auto [lhs, rhs] = detail::law_sides(r, t, law, x, x);
            if (lhs != rhs) return {false, Violation{{std::move(x)}, std::move(lhs), std::move(rhs)}};
            continue;
        }
        for (u64 iy = 0; iy < card; ++iy) {
            Vec y = r.element(iy);
            auto [lhs, rhs] = detail::law_sides(r, t, law, x, y);
            if (lhs != rhs)
                return {false, Violation{{std::move(x), std::move(y)}, std::move(lhs), std::move(rhs)}};
        }
    }
    return {true, std::nullopt};
}

} // namespace centra
