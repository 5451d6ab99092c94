#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <centra/constructors.hpp>
#include <centra/oracle.hpp>
#include <centra/solver.hpp>

using namespace centra;

namespace {

// Ground truth: enumerate every additive map and keep those satisfying the
// identity at every variable assignment, via the reference evaluator.
std::set<std::vector<i64>> brute_space(const RingSpec& r, const Identity& id,
                                       const Bindings& known) {
    IdentityInfo info = validate_identity(id);
    const u64 total = total_maps(r, 1u << 30);
    const u64 card = r.cardinality();
    std::set<std::vector<i64>> out;
    for_each_map(r, 0, total, [&](const AdditiveMap& t, u64) {
        Bindings maps = known;
        maps[id.unknown] = &t;
        std::map<std::string, Vec> assign;
        std::vector<u64> idx(info.vars.size(), 0);
        bool ok = true;
        for (;;) {
            for (std::size_t v = 0; v < info.vars.size(); ++v)
                assign[info.vars[v]] = r.element(idx[v]);
            if (!identity_holds_at(r, id, assign, maps)) {
                ok = false;
                break;
            }
            std::size_t v = 0;
            while (v < idx.size()) {
                if (++idx[v] < card) break;
                idx[v] = 0;
                ++v;
            }
            if (v == idx.size()) break;
        }
        if (ok) out.insert(t.m);
    });
    return out;
}

void compare_with_brute(const RingSpec& r, const std::string& key, const Bindings& known = {}) {
    INFO("ring " << r.name << ", identity " << key);
    Identity id = resolve_identity(key);
    Budget budget;
    SolutionSpace space = solve_identity(r, id, known, budget);
    auto brute = brute_space(r, id, known);
    REQUIRE(space.cardinality() == brute.size());
    for (const auto& m : brute) REQUIRE(space.contains(AdditiveMap{r.k, r.n, m}));
    for (const AdditiveMap& t : space.enumerate(budget)) REQUIRE(brute.count(t.m) == 1);
}

} // namespace

TEST_CASE("solver space equals brute force on cyclic rings", "[solver]") {
    for (i64 n : {2, 3, 4, 9}) {
        RingSpec r = cyclic_ring(n);
        compare_with_brute(r, "left-centralizer");
        compare_with_brute(r, "jordan-left");
        compare_with_brute(r, "vukman-1999");
        compare_with_brute(r, "vukman-2001");
        compare_with_brute(r, "vukman-ulbl-2003b");
    }
}

TEST_CASE("solver space equals brute force on the antisymmetric triple ring", "[solver]") {
    RingSpec f = antisymmetric_triple_ring(cyclic_ring(2)); // 512 maps
    compare_with_brute(f, "left-centralizer");
    compare_with_brute(f, "right-centralizer");
    compare_with_brute(f, "jordan-left");
    compare_with_brute(f, "two-sided");
    // every triple product vanishes, so the sandwich law is vacuous
    Identity sandwich = resolve_identity("vukman-2001");
    SolutionSpace space = solve_identity(f, sandwich, {}, Budget{});
    REQUIRE(space.cardinality() == 512);
    compare_with_brute(f, "vukman-2001");
}

TEST_CASE("known slots fold into the right-hand side", "[solver]") {
    RingSpec r = cyclic_ring(9);
    AdditiveMap t0 = scalar_map(r, Vec{4});
    Bindings known{{"T0", &t0}};
    compare_with_brute(r, "mn-jordan(1,1)", known);
    SolutionSpace space = solve_identity(r, resolve_identity("mn-jordan(1,1)"), known, Budget{});
    REQUIRE(space.cardinality() == 1);
    REQUIRE(space.contains(t0));
}

TEST_CASE("missing or mismatched bindings are rejected", "[solver]") {
    RingSpec r = matrix_ring(cyclic_ring(3), 2);
    Identity id = resolve_identity("mn-jordan(1,1)");
    REQUIRE_THROWS_AS(solve_identity(r, id, {}, Budget{}), parse_error);
    RingSpec other = cyclic_ring(4);
    AdditiveMap wrong = AdditiveMap::zero(other);
    Bindings bad{{"T0", &wrong}};
    REQUIRE_THROWS_AS(solve_identity(r, id, bad, Budget{}), parse_error);
}

TEST_CASE("intersecting the one-sided Jordan laws gives the two-sided space", "[solver]") {
    RingSpec r = matrix_ring(cyclic_ring(3), 2);
    Budget budget;
    SolutionSpace both = solve_identities(
        r, {resolve_identity("jordan-left"), resolve_identity("jordan-right")}, {}, budget);
    SolutionSpace two = solve_identity(r, resolve_identity("two-sided"), {}, budget);
    REQUIRE(both.same_set(two));
    REQUIRE(both.cardinality() == 3);
}

TEST_CASE("every builtin's solution space passes random full-element spot checks", "[solver]") {
    RingSpec r = matrix_ring(cyclic_ring(3), 2);
    Budget budget;
    AdditiveMap t0 = scalar_map(r, r.one());
    Rng rng(99);
    for (const CatalogEntry& e : builtin_identities()) {
        INFO("identity " << e.key);
        Identity id = resolve_identity(e.key);
        IdentityInfo info = validate_identity(id);
        Bindings known;
        if (info.known_slots.count("T0")) known["T0"] = &t0;
        SolutionSpace space = solve_identity(r, id, known, budget);
        REQUIRE(space.consistent());
        // Small spaces in full; large ones through random kernel coefficients.
        std::vector<AdditiveMap> members;
        if (space.cardinality() <= 128) {
            members = space.enumerate(budget);
        } else {
            const std::size_t rows = space.lin.kernel.rows.size();
            for (int s = 0; s < 32; ++s) {
                Vec coeff(rows);
                for (auto& c : coeff) c = rng.residue(r.n);
                members.push_back(space.map_at(coeff));
            }
        }
        for (const AdditiveMap& t : members) {
            Bindings maps = known;
            maps[id.unknown] = &t;
            std::map<std::string, Vec> assign;
            for (int check = 0; check < 60; ++check) {
                for (const std::string& v : info.vars) assign[v] = random_element(r, rng);
                REQUIRE(identity_holds_at(r, id, assign, maps));
            }
        }
    }
}

TEST_CASE("solution spaces respect budgets", "[solver]") {
    RingSpec r = matrix_ring(cyclic_ring(3), 2);
    Budget tiny;
    tiny.instantiation = 1;
    REQUIRE_THROWS_AS(solve_identity(r, resolve_identity("jordan-left"), {}, tiny), budget_error);

    Budget small;
    small.solution_enumeration = 10;
    SolutionSpace space = solve_identity(r, resolve_identity("jordan-left"), {}, small);
    REQUIRE(space.cardinality() == 81);
    REQUIRE_THROWS_AS(space.enumerate(small), budget_error);
    SpaceClassification cls = classify_space(r, space, small);
    REQUIRE(cls.sampled);
    REQUIRE(cls.total < cls.cardinality);
    REQUIRE(cls.cardinality == 81);
}

TEST_CASE("map classification buckets match their definitions", "[solver]") {
    RingSpec r = matrix_ring(cyclic_ring(3), 2);
    REQUIRE(classify_map(r, AdditiveMap::zero(r)).cls == MapClass::zero);
    REQUIRE(classify_map(r, scalar_map(r, Vec{2, 0, 0, 2})).cls == MapClass::scalar);
    REQUIRE(classify_map(r, scalar_map(r, Vec{0, 1, 0, 0})).cls == MapClass::left_only);
    AdditiveMap right = AdditiveMap::zero(r);
    for (int j = 0; j < r.k; ++j) {
        Vec col = r.mul(r.gen(j), Vec{0, 1, 0, 0});
        for (int i = 0; i < r.k; ++i) right.entry(i, j) = col[static_cast<std::size_t>(i)];
    }
    REQUIRE(classify_map(r, right).cls == MapClass::right_only);

    RingSpec tri = triangular_pair_ring(cyclic_ring(2));
    REQUIRE(classify_map(tri, second_projection_map(tri)).cls == MapClass::jordan_left_only);

    // The two-sided space of M_2(Z_3) is {0, I, 2I}: one zero map, two scalars.
    SpaceClassification cls =
        classify_space(r, solve_identity(r, resolve_identity("two-sided"), {}, Budget{}), Budget{});
    REQUIRE(cls.counts.at("zero") == 1);
    REQUIRE(cls.counts.at("scalar") == 2);
    REQUIRE(cls.total == 3);
    REQUIRE_FALSE(cls.sampled);
}

TEST_CASE("full solution spaces classify without sampling", "[solver]") {
    RingSpec r = matrix_ring(cyclic_ring(2), 2);
    Budget budget;
    SolutionSpace space = solve_identity(r, resolve_identity("jordan-left"), {}, budget);
    SpaceClassification cls = classify_space(r, space, budget);
    REQUIRE_FALSE(cls.sampled);
    REQUIRE(cls.total == space.cardinality());
    u64 sum = 0;
    for (const auto& [name, count] : cls.counts) sum += count;
    REQUIRE(sum == cls.total);
}
