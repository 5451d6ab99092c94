// Reduce "which additive maps satisfy this identity" to linear algebra.
//
// An additive map is determined by its k*k coefficient matrix t, with
// t[i*k+j] the g_i coordinate of T(g_j). For a validated identity every term
// is linear in the one map it applies, so fixing the variables turns each
// equation into k linear conditions on t over Z/N. The instantiation set per
// variable is: generators for degree-1 variables, generators plus pairwise
// sums for degree-2 variables. That grid is equivalent to quantifying over
// the whole ring: degree-1 positions are additive, and a degree-2 position
// is a quadratic map whose polarization is pinned down by values on
// generators and their pairwise sums.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "additive_map.hpp"
#include "howell.hpp"
#include "identity.hpp"
#include "ring.hpp"

namespace centra {

inline std::vector<Vec> instantiation_set(const RingSpec& r, int degree) {
    std::vector<Vec> out;
    for (int i = 0; i < r.k; ++i) out.push_back(r.gen(i));
    if (degree >= 2)
        for (int i = 0; i < r.k; ++i)
            for (int j = i + 1; j < r.k; ++j) out.push_back(r.add(r.gen(i), r.gen(j)));
    return out;
}

struct CompiledSystem {
    std::vector<Vec> a; // rows of length k*k
    Vec b;
    int unknowns = 0;
    i64 n = 0;
    u64 tuples = 0; // variable assignments instantiated
};

using Bindings = std::map<std::string, const AdditiveMap*>;

inline CompiledSystem compile_identity(const RingSpec& r, const Identity& id,
                                       const Bindings& bindings, const Budget& budget) {
    IdentityInfo info = validate_identity(id);
    for (const std::string& s : info.known_slots) {
        auto it = bindings.find(s);
        if (it == bindings.end() || !it->second)
            throw parse_error("identity: map slot '" + s + "' is not bound");
        if (it->second->k != r.k || it->second->n != r.n)
            throw parse_error("identity: binding for '" + s + "' does not match the ring");
    }

    const int k = r.k;
    std::vector<std::vector<Vec>> domains;
    u64 tuples = 1;
    for (const std::string& v : info.vars) {
        domains.push_back(instantiation_set(r, info.degree.at(v)));
        u64 sz = domains.back().size();
        if (tuples > budget.instantiation / sz + 1) throw budget_error("instantiation budget exceeded");
        tuples *= sz;
    }
    if (tuples * id.equations.size() > budget.instantiation)
        throw budget_error("instantiation budget exceeded");

    CompiledSystem sys;
    sys.unknowns = k * k;
    sys.n = r.n;
    sys.tuples = tuples;

    std::map<std::string, Vec> assign;
    std::vector<std::size_t> idx(info.vars.size(), 0);
    const int nvars = static_cast<int>(info.vars.size());

    // One tuple -> (equations * k) rows: the g_b coordinates of lhs - rhs.
    auto emit_rows = [&]() {
        for (const Equation& eq : id.equations) {
            std::vector<Vec> arows(k, Vec(static_cast<std::size_t>(k) * k, 0));
            Vec cval = r.zero(); // constant part: terms without the unknown
            for (int side = 0; side < 2; ++side) {
                const i64 sign = side == 0 ? 1 : -1;
                for (const Term& t : (side == 0 ? eq.lhs : eq.rhs)) {
                    bool unknown = false;
                    for (const Factor& f : t.factors)
                        if (f.is_map && f.slot == id.unknown) unknown = true;
                    if (!unknown) {
                        cval = r.add(cval, r.smul(sign, evaluate_term(r, t, assign, bindings)));
                        continue;
                    }
                    // coeff * P * T(w) * S with P, S plain-variable products.
                    std::optional<Vec> pre, suf;
                    Vec w;
                    bool seen_map = false;
                    for (const Factor& f : t.factors) {
                        if (f.is_map) {
                            std::optional<Vec> arg;
                            for (const std::string& v : f.args) {
                                const Vec& x = assign.at(v);
                                arg = arg ? r.mul(*arg, x) : x;
                            }
                            w = *arg;
                            seen_map = true;
                            continue;
                        }
                        const Vec& x = assign.at(f.var);
                        auto& acc = seen_map ? suf : pre;
                        acc = acc ? r.mul(*acc, x) : x;
                    }
                    const i64 c0 = floormod(sign * t.coeff, r.n);
                    if (c0 == 0) continue;
                    for (int i = 0; i < k; ++i) {
                        Vec pg = pre ? r.mul(*pre, r.gen(i)) : r.gen(i);
                        Vec pgs = suf ? r.mul(pg, *suf) : pg;
                        for (int j = 0; j < k; ++j) {
                            const i64 c = floormod(c0 * w[static_cast<std::size_t>(j)], r.n);
                            if (c == 0) continue;
                            for (int b = 0; b < k; ++b) {
                                const i64 f = pgs[static_cast<std::size_t>(b)];
                                if (f == 0) continue;
                                i64& cell = arows[static_cast<std::size_t>(b)]
                                                  [static_cast<std::size_t>(i) * k + j];
                                cell = floormod(cell + c * f, r.n);
                            }
                        }
                    }
                }
            }
            for (int b = 0; b < k; ++b) {
                sys.a.push_back(std::move(arows[static_cast<std::size_t>(b)]));
                sys.b.push_back(floormod(-cval[static_cast<std::size_t>(b)], r.n));
            }
        }
    };

    if (nvars == 0) throw parse_error("identity: no variables");
    for (;;) {
        for (int v = 0; v < nvars; ++v) assign[info.vars[static_cast<std::size_t>(v)]] = domains[static_cast<std::size_t>(v)][idx[static_cast<std::size_t>(v)]];
        emit_rows();
        int v = 0;
        while (v < nvars) {
            if (++idx[static_cast<std::size_t>(v)] < domains[static_cast<std::size_t>(v)].size()) break;
            idx[static_cast<std::size_t>(v)] = 0;
            ++v;
        }
        if (v == nvars) break;
    }
    return sys;
}

// The solutions of one (or several simultaneous) identities: a coset of a
// kernel subgroup inside (Z/N)^(k*k), or empty.
struct SolutionSpace {
    int k = 0;
    i64 n = 0;
    LinearSolution lin;

    bool consistent() const { return lin.consistent; }
    u64 cardinality() const { return lin.cardinality(); }

    bool contains(const AdditiveMap& t) const {
        if (t.k != k || t.n != n) return false;
        return lin.contains(t.m);
    }

    AdditiveMap map_at(const Vec& coeffs) const {
        const std::vector<u64> c(coeffs.begin(), coeffs.end());
        return AdditiveMap{k, n, lin.solution(c)};
    }

    // All solutions, coefficient on kernel row 0 varying fastest. Throws
    // budget_error rather than returning a truncated list.
    std::vector<AdditiveMap> enumerate(const Budget& budget) const {
        if (!lin.consistent) return {};
        if (cardinality() > budget.solution_enumeration)
            throw budget_error("solution enumeration budget exceeded");
        std::vector<AdditiveMap> out;
        const std::size_t rows = lin.kernel.rows.size();
        std::vector<i64> radix(rows), coeff(rows, 0);
        for (std::size_t i = 0; i < rows; ++i) radix[i] = n / gcd_i64(lin.kernel.lead_val[i], n);
        for (;;) {
            out.push_back(map_at(coeff));
            std::size_t i = 0;
            while (i < rows) {
                if (++coeff[i] < radix[i]) break;
                coeff[i] = 0;
                ++i;
            }
            if (i == rows) break;
        }
        return out;
    }

    bool same_set(const SolutionSpace& other) const {
        return k == other.k && n == other.n && lin.same_solution_set(other.lin);
    }
};

inline SolutionSpace solve_system(const RingSpec& r, const CompiledSystem& sys) {
    SolutionSpace s;
    s.k = r.k;
    s.n = r.n;
    s.lin = solve_mod(sys.a, sys.b, sys.unknowns, sys.n);
    return s;
}

inline SolutionSpace solve_identity(const RingSpec& r, const Identity& id,
                                    const Bindings& bindings, const Budget& budget) {
    return solve_system(r, compile_identity(r, id, bindings, budget));
}

// Intersection of the solution sets of several identities.
inline SolutionSpace solve_identities(const RingSpec& r, const std::vector<Identity>& ids,
                                      const Bindings& bindings, const Budget& budget) {
    CompiledSystem all;
    all.unknowns = r.k * r.k;
    all.n = r.n;
    for (const Identity& id : ids) {
        CompiledSystem sys = compile_identity(r, id, bindings, budget);
        all.tuples += sys.tuples;
        for (auto& row : sys.a) all.a.push_back(std::move(row));
        for (i64 v : sys.b) all.b.push_back(v);
    }
    return solve_system(r, all);
}

// Coarse behavioural buckets for a single map; first match wins.
enum class MapClass { zero, scalar, two_sided, left_only, right_only, jordan_left_only, other };

inline const char* map_class_name(MapClass c) {
    switch (c) {
        case MapClass::zero: return "zero";
        case MapClass::scalar: return "scalar";
        case MapClass::two_sided: return "two-sided";
        case MapClass::left_only: return "left-only";
        case MapClass::right_only: return "right-only";
        case MapClass::jordan_left_only: return "jordan-left-only";
        case MapClass::other: return "other";
    }
    return "other";
}

struct MapClassification {
    MapClass cls = MapClass::other;
    std::optional<Vec> alpha; // central scalar when cls == scalar
};

inline MapClassification classify_map(const RingSpec& r, const AdditiveMap& t) {
    MapClassification out;
    if (t.is_zero()) {
        out.cls = MapClass::zero;
        return out;
    }
    if (r.unital()) {
        if (auto alpha = is_scalar_form(r, t)) {
            out.cls = MapClass::scalar;
            out.alpha = *alpha;
            return out;
        }
    }
    const bool left = check_law(r, t, Law::left).holds;
    const bool right = check_law(r, t, Law::right).holds;
    if (left && right) out.cls = MapClass::two_sided;
    else if (left) out.cls = MapClass::left_only;
    else if (right) out.cls = MapClass::right_only;
    else if (check_law(r, t, Law::jordan_left).holds) out.cls = MapClass::jordan_left_only;
    else out.cls = MapClass::other;
    return out;
}

struct SpaceClassification {
    std::map<std::string, u64> counts; // bucket name -> count
    u64 total = 0;                     // maps actually classified
    u64 cardinality = 0;               // size of the space
    bool sampled = false;              // true when total < cardinality
};

inline SpaceClassification classify_space(const RingSpec& r, const SolutionSpace& space,
                                          const Budget& budget) {
    SpaceClassification out;
    if (!space.consistent()) return out;
    out.cardinality = space.cardinality();
    if (out.cardinality <= budget.solution_enumeration) {
        for (const AdditiveMap& t : space.enumerate(budget)) {
            ++out.counts[map_class_name(classify_map(r, t).cls)];
            ++out.total;
        }
        return out;
    }
    // Over budget: classify the particular solution and each basis offset,
    // flagged as a sample rather than a census.
    out.sampled = true;
    const std::size_t rows = space.lin.kernel.rows.size();
    Vec coeff(rows, 0);
    ++out.counts[map_class_name(classify_map(r, space.map_at(coeff)).cls)];
    ++out.total;
    for (std::size_t i = 0; i < rows; ++i) {
        coeff.assign(rows, 0);
        coeff[i] = 1;
        ++out.counts[map_class_name(classify_map(r, space.map_at(coeff)).cls)];
        ++out.total;
    }
    return out;
}

} // namespace centra
