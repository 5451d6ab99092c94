// Brute-force reference checks, independent of the linear-system solver.
//
// For rings small enough we compile addition, multiplication, and map
// application into index tables, then quantify identities over every element
// tuple and enumerate every additive map. The solver must agree with these
// results; the acceptance campaigns cross-check the two on millions of
// (map, identity) pairs.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "additive_map.hpp"
#include "identity.hpp"
#include "ring.hpp"

namespace centra {

struct CompiledRing {
    const RingSpec* r = nullptr;
    u64 size = 0;
    bool tables = false;            // index tables built (size <= cap)
    std::vector<u32> add_tab, mul_tab; // size*size, row-major
    std::vector<Vec> elems;            // element coordinates, when tables
    mutable std::map<i64, std::vector<u32>> smul_tabs; // per-coefficient, built lazily

    static CompiledRing compile(const RingSpec& ring, const Budget& budget, u64 table_cap = 2048) {
        CompiledRing c;
        c.r = &ring;
        c.size = ring.cardinality();
        require_enumerable(ring, budget.enumeration, "ring compilation");
        if (c.size > table_cap) return c; // fall back to coordinate arithmetic
        c.tables = true;
        c.add_tab.resize(c.size * c.size);
        c.mul_tab.resize(c.size * c.size);
        c.elems.resize(c.size);
        for (u64 i = 0; i < c.size; ++i) c.elems[i] = ring.element(i);
        for (u64 i = 0; i < c.size; ++i)
            for (u64 j = 0; j < c.size; ++j) {
                c.add_tab[i * c.size + j] =
                    static_cast<u32>(ring.index_of(ring.add(c.elems[i], c.elems[j])));
                c.mul_tab[i * c.size + j] =
                    static_cast<u32>(ring.index_of(ring.mul(c.elems[i], c.elems[j])));
            }
        return c;
    }

    const Vec& element(u64 i, Vec& scratch) const {
        if (!elems.empty()) return elems[i];
        scratch = r->element(i);
        return scratch;
    }

    u64 add(u64 a, u64 b) const {
        if (tables) return add_tab[a * size + b];
        return r->index_of(r->add(r->element(a), r->element(b)));
    }
    u64 mul(u64 a, u64 b) const {
        if (tables) return mul_tab[a * size + b];
        return r->index_of(r->mul(r->element(a), r->element(b)));
    }
    u64 smul(i64 c, u64 a) const {
        if (!tables) return r->index_of(r->smul(c, r->element(a)));
        const i64 cm = floormod(c, r->n);
        auto it = smul_tabs.find(cm);
        if (it == smul_tabs.end()) {
            std::vector<u32> tab(size);
            for (u64 x = 0; x < size; ++x)
                tab[x] = static_cast<u32>(r->index_of(r->smul(cm, r->element(x))));
            it = smul_tabs.emplace(cm, std::move(tab)).first;
        }
        return it->second[a];
    }
    u64 zero() const { return 0; } // element(0) is the zero vector in index order
};

struct CompiledMap {
    std::vector<u32> img; // img[x] = index of T(element(x))

    static CompiledMap compile(const CompiledRing& cr, const AdditiveMap& t) {
        CompiledMap c;
        c.img.resize(cr.size);
        Vec scratch;
        for (u64 x = 0; x < cr.size; ++x)
            c.img[x] = static_cast<u32>(cr.r->index_of(t.apply(cr.element(x, scratch))));
        return c;
    }

    u64 apply(u64 x) const { return img[x]; }
};

using CompiledBindings = std::map<std::string, const CompiledMap*>;

// Flattened evaluator for one identity over a compiled ring. Variables become
// positions in an index tuple, slots become handles that can be rebound
// cheaply; evaluating a tuple touches no string keys. Rebinding the unknown
// and re-running satisfied() is how the brute-force map sweeps stay fast.
struct OracleProgram {
    struct PTerm {
        i64 coeff = 1;
        int slot = 0;
        std::vector<int> pre, args, suf; // variable positions
    };
    struct PEq {
        std::vector<PTerm> lhs, rhs;
    };

    const CompiledRing* cr = nullptr;
    int nvars = 0;
    std::vector<PEq> eqs;
    std::vector<std::string> slot_names;
    std::vector<const CompiledMap*> slots;

    static OracleProgram compile(const CompiledRing& cr, const Identity& id,
                                 const IdentityInfo& info, const CompiledBindings& known) {
        OracleProgram p;
        p.cr = &cr;
        p.nvars = static_cast<int>(info.vars.size());
        auto var_pos = [&](const std::string& v) {
            for (int i = 0; i < p.nvars; ++i)
                if (info.vars[static_cast<std::size_t>(i)] == v) return i;
            throw parse_error("oracle: unknown variable '" + v + "'");
        };
        auto slot_pos = [&](const std::string& s) {
            for (std::size_t i = 0; i < p.slot_names.size(); ++i)
                if (p.slot_names[i] == s) return static_cast<int>(i);
            p.slot_names.push_back(s);
            auto it = known.find(s);
            p.slots.push_back(it == known.end() ? nullptr : it->second);
            return static_cast<int>(p.slot_names.size() - 1);
        };
        auto compile_term = [&](const Term& t) {
            PTerm pt;
            pt.coeff = t.coeff;
            bool seen_map = false;
            for (const Factor& f : t.factors) {
                if (f.is_map) {
                    pt.slot = slot_pos(f.slot);
                    for (const std::string& v : f.args) pt.args.push_back(var_pos(v));
                    seen_map = true;
                } else {
                    (seen_map ? pt.suf : pt.pre).push_back(var_pos(f.var));
                }
            }
            return pt;
        };
        for (const Equation& eq : id.equations) {
            PEq pe;
            for (const Term& t : eq.lhs) pe.lhs.push_back(compile_term(t));
            for (const Term& t : eq.rhs) pe.rhs.push_back(compile_term(t));
            p.eqs.push_back(std::move(pe));
        }
        return p;
    }

    void bind(const std::string& name, const CompiledMap* m) {
        for (std::size_t i = 0; i < slot_names.size(); ++i)
            if (slot_names[i] == name) {
                slots[i] = m;
                return;
            }
        // A slot the identity never mentions is legal to bind; it is a no-op.
    }

    u64 eval_term(const PTerm& t, const u64* idx) const {
        u64 arg = idx[t.args[0]];
        for (std::size_t i = 1; i < t.args.size(); ++i) arg = cr->mul(arg, idx[t.args[i]]);
        u64 acc = slots[static_cast<std::size_t>(t.slot)]->apply(arg);
        for (std::size_t i = t.pre.size(); i-- > 0;) acc = cr->mul(idx[t.pre[i]], acc);
        for (int v : t.suf) acc = cr->mul(acc, idx[v]);
        return cr->smul(t.coeff, acc);
    }

    u64 eval_side(const std::vector<PTerm>& side, const u64* idx) const {
        u64 sum = eval_term(side[0], idx);
        for (std::size_t i = 1; i < side.size(); ++i) sum = cr->add(sum, eval_term(side[i], idx));
        return sum;
    }

    bool holds_at(const u64* idx) const {
        for (const PEq& eq : eqs)
            if (eval_side(eq.lhs, idx) != eval_side(eq.rhs, idx)) return false;
        return true;
    }

    // Quantify over every element tuple. This is the ground truth the grid
    // instantiations must reproduce.
    bool satisfied(const Budget& budget) const {
        for (const CompiledMap* m : slots)
            if (!m) throw parse_error("oracle: unbound map slot");
        u64 tuples = 1;
        for (int i = 0; i < nvars; ++i) {
            if (tuples > budget.instantiation / cr->size + 1)
                throw budget_error("oracle instantiation budget exceeded");
            tuples *= cr->size;
        }
        if (tuples > budget.instantiation) throw budget_error("oracle instantiation budget exceeded");

        std::vector<u64> idx(static_cast<std::size_t>(nvars), 0);
        for (;;) {
            if (!holds_at(idx.data())) return false;
            int v = 0;
            while (v < nvars) {
                if (++idx[static_cast<std::size_t>(v)] < cr->size) break;
                idx[static_cast<std::size_t>(v)] = 0;
                ++v;
            }
            if (v == nvars) break;
        }
        return true;
    }
};

// One-shot convenience wrapper.
inline bool oracle_satisfies(const CompiledRing& cr, const Identity& id, const IdentityInfo& info,
                             const CompiledBindings& maps, const Budget& budget) {
    return OracleProgram::compile(cr, id, info, maps).satisfied(budget);
}

// Total number of additive-map candidates: n^(k*k), guarded by the budget.
inline u64 total_maps(const RingSpec& r, u64 map_budget) {
    u64 total = 1;
    for (int i = 0; i < r.k * r.k; ++i) {
        if (total > map_budget / static_cast<u64>(r.n) + 1)
            throw budget_error("map enumeration budget exceeded");
        total *= static_cast<u64>(r.n);
    }
    if (total > map_budget) throw budget_error("map enumeration budget exceeded");
    return total;
}

inline AdditiveMap map_from_index(const RingSpec& r, u64 index) {
    AdditiveMap t = AdditiveMap::zero(r);
    for (std::size_t d = 0; d < t.m.size(); ++d) {
        t.m[d] = static_cast<i64>(index % static_cast<u64>(r.n));
        index /= static_cast<u64>(r.n);
    }
    return t;
}

// Visit maps with index in [begin, end); the decomposition into ranges does
// not affect the set visited, so chunked runs tile the full enumeration.
template <typename F>
inline void for_each_map(const RingSpec& r, u64 begin, u64 end, F&& f) {
    if (begin >= end) return;
    AdditiveMap t = map_from_index(r, begin);
    for (u64 i = begin;;) {
        f(t, i);
        if (++i >= end) break;
        // increment base-n counter in place; digit 0 fastest
        for (std::size_t d = 0; d < t.m.size(); ++d) {
            if (++t.m[d] < r.n) break;
            t.m[d] = 0;
        }
    }
}

// Deterministic pseudo-random sources. Modulo bias is irrelevant here; what
// matters is that a seed pins the exact sequence on every platform.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(u64 seed) : eng(seed) {}
    u64 below(u64 n) { return eng() % n; }
    i64 residue(i64 n) { return static_cast<i64>(eng() % static_cast<u64>(n)); }
};

inline AdditiveMap random_map(const RingSpec& r, Rng& rng) {
    AdditiveMap t = AdditiveMap::zero(r);
    for (auto& c : t.m) c = rng.residue(r.n);
    return t;
}

inline Vec random_element(const RingSpec& r, Rng& rng) {
    Vec v(static_cast<std::size_t>(r.k));
    for (auto& c : v) c = rng.residue(r.n);
    return v;
}

// Exhaustive check of one law through the compiled tables; same semantics as
// exhaustive_check() but cheap enough to run over tens of thousands of maps.
inline bool compiled_law_holds(const CompiledRing& cr, const CompiledMap& m, Law law) {
    const u64 sz = cr.size;
    switch (law) {
        case Law::left:
            for (u64 x = 0; x < sz; ++x)
                for (u64 y = 0; y < sz; ++y)
                    if (m.apply(cr.mul(x, y)) != cr.mul(m.apply(x), y)) return false;
            return true;
        case Law::right:
            for (u64 x = 0; x < sz; ++x)
                for (u64 y = 0; y < sz; ++y)
                    if (m.apply(cr.mul(x, y)) != cr.mul(x, m.apply(y))) return false;
            return true;
        case Law::two_sided:
            return compiled_law_holds(cr, m, Law::left) && compiled_law_holds(cr, m, Law::right);
        case Law::jordan_left:
            for (u64 x = 0; x < sz; ++x)
                if (m.apply(cr.mul(x, x)) != cr.mul(m.apply(x), x)) return false;
            return true;
        case Law::jordan_right:
            for (u64 x = 0; x < sz; ++x)
                if (m.apply(cr.mul(x, x)) != cr.mul(x, m.apply(x))) return false;
            return true;
    }
    return false;
}

} // namespace centra
