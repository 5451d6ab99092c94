// Bundled verification campaigns. A campaign is a JSON manifest entry naming
// a ring, an identity or map or predicate, and the expected outcome; the
// runner executes it and records expected-vs-actual check entries. Expected
// outcomes live in the manifest (data), not here, so an expectation that the
// implementation refutes shows up as a failed campaign, never as a silently
// adjusted number.
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "oracle.hpp"
#include "solver.hpp"
#include "version.hpp"

namespace centra {

struct CheckEntry {
    std::string name;
    json expect, actual;
    bool pass = false;
};

struct CampaignResult {
    std::string id;
    int criterion = 0;
    std::string kind, title;
    bool pass = true;
    std::vector<CheckEntry> checks;
    json info = json::object();
    double ms = 0.0;
};

inline json ring_info(const RingSpec& r) {
    return {{"name", r.name},
            {"exponent", r.n},
            {"rank", r.k},
            {"cardinality", r.cardinality()},
            {"unital", r.unital()}};
}

inline json violation_json(const Violation& v) {
    return {{"at", v.at}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

class CampaignRunner {
  public:
    explicit CampaignRunner(const Budget& budget) : budget_(budget) {}

    CampaignResult run(const json& c) {
        CampaignResult res;
        res.id = c.at("id").get<std::string>();
        res.criterion = c.value("criterion", 0);
        res.kind = c.at("kind").get<std::string>();
        res.title = c.value("title", std::string());
        const auto start = std::chrono::steady_clock::now();
        if (res.kind == "map-check") run_map_check(c, res);
        else if (res.kind == "solve") run_solve(c, res);
        else if (res.kind == "solve-grid") run_solve_grid(c, res);
        else if (res.kind == "staged") run_staged(c, res);
        else if (res.kind == "ring-predicate") run_ring_predicate(c, res);
        else if (res.kind == "oracle-maps") run_oracle_maps(c, res);
        else if (res.kind == "kernel-fuzz") run_kernel_fuzz(c, res);
        else if (res.kind == "polarization-fuzz") run_polarization(c, res);
        else throw parse_error("unknown campaign kind '" + res.kind + "'");
        res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                           start)
                     .count();
        for (const CheckEntry& e : res.checks) res.pass = res.pass && e.pass;
        return res;
    }

  private:
    Budget budget_;

    void check(CampaignResult& res, std::string name, json expect, json actual) {
        CheckEntry e;
        e.name = std::move(name);
        e.pass = (expect == actual);
        e.expect = std::move(expect);
        e.actual = std::move(actual);
        res.checks.push_back(std::move(e));
    }

    static Vec coords(const json& j) { return j.get<Vec>(); }

    void run_map_check(const json& c, CampaignResult& res) {
        RingSpec r = parse_ring_expr(c.at("ring").get<std::string>());
        const json& mj = c.at("map");
        AdditiveMap t =
            mj.is_string() ? parse_map_expr(r, mj.get<std::string>()) : map_from_json(r, mj);
        res.info["ring"] = ring_info(r);
        res.info["map"] = t.rows();

        for (const json& e : c.value("laws", json::array())) {
            const std::string lname = e.at("law").get<std::string>();
            const Law law = law_from_name(lname);
            const bool exhaustive = e.value("exhaustive", false);
            const std::string base = lname + (exhaustive ? "-exhaustive" : "");
            CheckResult out = exhaustive ? exhaustive_check(r, t, law, budget_)
                                         : check_law(r, t, law);
            check(res, base, e.at("expect"), out.holds);
            if (e.contains("witness"))
                check(res, base + "/witness", e.at("witness"),
                      out.violation ? violation_json(*out.violation) : json(nullptr));
            if (e.contains("violates_at")) {
                const json& w = e.at("violates_at");
                auto [lhs, rhs] = detail::law_sides(r, t, law, coords(w.at("x")), coords(w.at("y")));
                check(res, base + "/violates-at",
                      json{{"violated", true}, {"lhs", w.at("lhs")}, {"rhs", w.at("rhs")}},
                      json{{"violated", lhs != rhs}, {"lhs", lhs}, {"rhs", rhs}});
            }
        }

        for (const json& e : c.value("identities", json::array()))
            check_membership(res, r, t, e);
    }

    // Membership of one map in one identity's solution set, probed three
    // independent ways: solver space, full-quantification oracle, and random
    // full-element spot checks.
    void check_membership(CampaignResult& res, const RingSpec& r, const AdditiveMap& t,
                          const json& e) {
        const std::string key = e.at("identity").get<std::string>();
        Identity id = resolve_identity(key);
        IdentityInfo info = validate_identity(id);

        SolutionSpace space = solve_identity(r, id, {}, budget_);
        const bool member = space.contains(t);
        check(res, key + "/member", e.at("expect"), member);

        u64 tuples = 1;
        bool feasible = true;
        for (std::size_t i = 0; i < info.vars.size() && feasible; ++i) {
            if (tuples > budget_.instantiation / r.cardinality()) feasible = false;
            else tuples *= r.cardinality();
        }
        if (feasible) {
            CompiledRing cring = CompiledRing::compile(r, budget_);
            CompiledMap cmap = CompiledMap::compile(cring, t);
            CompiledBindings cb;
            cb[id.unknown] = &cmap;
            const bool oracle = oracle_satisfies(cring, id, info, cb, budget_);
            check(res, key + "/oracle-agrees", member, oracle);
        }

        // Random spot checks certify a positive expectation only; a failing
        // identity has no guaranteed violation density.
        if (e.contains("random_checks") && e.at("expect").get<bool>()) {
            const int count = e.at("random_checks").get<int>();
            Rng rng(e.value("seed", static_cast<u64>(1)));
            Bindings maps;
            maps[id.unknown] = &t;
            std::map<std::string, Vec> assign;
            int failures = 0;
            for (int i = 0; i < count; ++i) {
                for (const std::string& v : info.vars) assign[v] = random_element(r, rng);
                if (!identity_holds_at(r, id, assign, maps)) ++failures;
            }
            check(res, key + "/random-clean", 0, failures);
        }
    }

    void run_solve(const json& c, CampaignResult& res) {
        Identity id = resolve_identity(c.at("identity").get<std::string>());
        const std::string cmp_key = c.value("compare_with", std::string());
        json cases_info = json::array();
        for (const json& cj : c.at("cases")) {
            const std::string rx = cj.at("ring").get<std::string>();
            RingSpec r = parse_ring_expr(rx);
            SolutionSpace space = solve_identity(r, id, {}, budget_);

            if (cj.contains("cardinality"))
                check(res, rx + "/cardinality", cj.at("cardinality"), space.cardinality());
            if (cj.value("only_zero", false))
                check(res, rx + "/only-zero", true,
                      space.cardinality() == 1 && space.contains(AdditiveMap::zero(r)));
            if (cj.value("all_scalar", false)) {
                bool all = true;
                for (const AdditiveMap& m : space.enumerate(budget_))
                    if (!is_scalar_form(r, m)) {
                        all = false;
                        break;
                    }
                check(res, rx + "/all-scalar", true, all);
            }
            if (cj.value("scalar_space", false)) {
                std::vector<Vec> zs = center(r, budget_);
                bool contains_all = true;
                for (const Vec& alpha : zs)
                    if (!space.contains(scalar_map(r, alpha))) {
                        contains_all = false;
                        break;
                    }
                check(res, rx + "/scalar-space",
                      json{{"cardinality", zs.size()}, {"contains_all_central_scalars", true}},
                      json{{"cardinality", space.cardinality()},
                           {"contains_all_central_scalars", contains_all}});
            }
            if (cj.contains("torsion_free")) {
                const i64 m = cj.at("torsion_free").get<i64>();
                check(res, rx + "/torsion-free-" + std::to_string(m), true,
                      is_k_torsion_free(r, m, budget_));
            }
            if (!cmp_key.empty()) {
                SolutionSpace other = solve_identity(r, resolve_identity(cmp_key), {}, budget_);
                check(res, rx + "/same-space-as-" + cmp_key, true, space.same_set(other));
            }

            SpaceClassification cls = classify_space(r, space, budget_);
            cases_info.push_back(json{{"ring", ring_info(r)},
                                      {"classification", cls.counts},
                                      {"sampled", cls.sampled}});
        }
        res.info["identity"] = print_identity(id);
        res.info["cases"] = std::move(cases_info);
    }

    void run_solve_grid(const json& c, CampaignResult& res) {
        json cases_info = json::array();
        for (const json& cj : c.at("cases")) {
            const std::string rx = cj.at("ring").get<std::string>();
            RingSpec r = parse_ring_expr(rx);
            const i64 m = cj.at("m").get<i64>(), n = cj.at("n").get<i64>();
            const std::string tag =
                rx + "/(" + std::to_string(m) + "," + std::to_string(n) + ")";
            Identity id = resolve_identity("mn-jordan(" + std::to_string(m) + "," +
                                           std::to_string(n) + ")");

            const i64 hyp = n * (m + n) * (m + n) * (m + n);
            check(res, tag + "/hypothesis-gcd", 1, gcd_i64(hyp, r.n));

            bool all_pin = true;
            json bindings_info = json::array();
            for (const Vec& alpha : center(r, budget_)) {
                AdditiveMap t0 = scalar_map(r, alpha);
                Bindings b;
                b["T0"] = &t0;
                SolutionSpace sp = solve_identity(r, id, b, budget_);
                const bool pin = sp.cardinality() == 1 && sp.contains(t0);
                all_pin = all_pin && pin;
                bindings_info.push_back(
                    json{{"alpha", alpha}, {"cardinality", sp.cardinality()}, {"pinned", pin}});
            }
            check(res, tag + "/bindings-pin-t0", true, all_pin);
            // Weaker torsion conditions, reported but not asserted.
            cases_info.push_back(json{{"ring", ring_info(r)},
                                      {"identity", print_identity(id)},
                                      {"bindings", std::move(bindings_info)},
                                      {"m_plus_n_torsion_free", gcd_i64(m + n, r.n) == 1},
                                      {"n_torsion_free", gcd_i64(n, r.n) == 1}});
        }
        res.info["cases"] = std::move(cases_info);
    }

    void run_staged(const json& c, CampaignResult& res) {
        RingSpec r = parse_ring_expr(c.at("ring").get<std::string>());
        Identity s1 = resolve_identity(c.at("stage1").get<std::string>());
        Identity s2 = resolve_identity(c.at("stage2").get<std::string>());

        SolutionSpace sp1 = solve_identity(r, s1, {}, budget_);
        check(res, "stage1/cardinality", c.at("expect_stage1_cardinality"), sp1.cardinality());
        if (c.value("expect_stage1_all_scalar", false)) {
            bool all = true;
            for (const AdditiveMap& m : sp1.enumerate(budget_))
                if (!is_scalar_form(r, m)) {
                    all = false;
                    break;
                }
            check(res, "stage1/all-scalar", true, all);
        }

        bool all_pin = true;
        for (const AdditiveMap& t0 : sp1.enumerate(budget_)) {
            Bindings b;
            b["T0"] = &t0;
            SolutionSpace sp2 = solve_identity(r, s2, b, budget_);
            all_pin = all_pin && sp2.cardinality() == 1 && sp2.contains(t0);
        }
        check(res, "stage2/pins-each-solution", true, all_pin);
        res.info["ring"] = ring_info(r);
        res.info["stage1"] = print_identity(s1);
        res.info["stage2"] = print_identity(s2);
    }

    void run_ring_predicate(const json& c, CampaignResult& res) {
        json cases_info = json::array();
        for (const json& cj : c.at("cases")) {
            const std::string rx = cj.at("ring").get<std::string>();
            RingSpec r = parse_ring_expr(rx);
            const std::string pred = cj.at("predicate").get<std::string>();
            if (pred == "semiprime") {
                auto w = semiprime_witness(r, budget_);
                check(res, rx + "/semiprime", cj.at("expect"), !w.has_value());
                if (cj.contains("witness"))
                    check(res, rx + "/semiprime-witness", cj.at("witness"),
                          w ? json(*w) : json(nullptr));
            } else if (pred == "prime") {
                auto w = prime_witness(r, budget_);
                check(res, rx + "/prime", cj.at("expect"), !w.has_value());
                if (cj.contains("witness"))
                    check(res, rx + "/prime-witness", cj.at("witness"),
                          w ? json{{"a", w->first}, {"b", w->second}} : json(nullptr));
            } else if (pred == "unital") {
                check(res, rx + "/unital", cj.at("expect"), r.unital());
            } else if (pred == "associative") {
                check(res, rx + "/associative", cj.at("expect"),
                      !check_associativity(r).has_value());
            } else if (pred == "cardinality") {
                check(res, rx + "/cardinality", cj.at("expect"), r.cardinality());
            } else if (pred == "center-size") {
                check(res, rx + "/center-size", cj.at("expect"), center(r, budget_).size());
            } else if (pred == "torsion-free") {
                const i64 m = cj.at("m").get<i64>();
                check(res, rx + "/torsion-free-" + std::to_string(m), cj.at("expect"),
                      is_k_torsion_free(r, m, budget_));
            } else {
                throw parse_error("unknown ring predicate '" + pred + "'");
            }
            cases_info.push_back(json{{"ring", ring_info(r)}, {"predicate", pred}});
        }
        res.info["cases"] = std::move(cases_info);
    }

    void run_oracle_maps(const json& c, CampaignResult& res) {
        RingSpec r = parse_ring_expr(c.at("ring").get<std::string>());
        CompiledRing cring = CompiledRing::compile(r, budget_);
        const u64 total = total_maps(r, budget_.map_enumeration);
        const u64 chunks = std::max<u64>(1, c.value("chunks", 1));
        json per = json::array();
        for (const json& ij : c.at("identities")) {
            const std::string key = ij.get<std::string>();
            Identity id = resolve_identity(key);
            IdentityInfo info = validate_identity(id);
            SolutionSpace space = solve_identity(r, id, {}, budget_);
            OracleProgram prog = OracleProgram::compile(cring, id, info, {});
            u64 mismatches = 0, hits = 0;
            for (u64 ci = 0; ci < chunks; ++ci) {
                const u64 begin = total / chunks * ci + std::min(ci, total % chunks);
                const u64 end = begin + total / chunks + (ci < total % chunks ? 1 : 0);
                for_each_map(r, begin, end, [&](const AdditiveMap& t, u64) {
                    CompiledMap cm = CompiledMap::compile(cring, t);
                    prog.bind(id.unknown, &cm);
                    const bool o = prog.satisfied(budget_);
                    if (o) ++hits;
                    if (o != space.contains(t)) ++mismatches;
                });
            }
            check(res, key + "/solver-oracle-mismatches", 0, mismatches);
            check(res, key + "/satisfying-count", space.cardinality(), hits);
            per.push_back(json{{"identity", key}, {"cardinality", space.cardinality()}});
        }
        res.info["ring"] = ring_info(r);
        res.info["maps"] = total;
        res.info["identities"] = std::move(per);
    }

    void run_kernel_fuzz(const json& c, CampaignResult& res) {
        const std::vector<i64> moduli = c.at("moduli").get<std::vector<i64>>();
        const int count = c.at("count").get<int>();
        const u64 max_dim = c.value("max_dim", static_cast<u64>(6));
        Rng rng(c.value("seed", static_cast<u64>(1)));

        auto matvec = [](const std::vector<Vec>& a, const Vec& t, i64 n) {
            Vec out(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) {
                i64 s = 0;
                for (std::size_t j = 0; j < t.size(); ++j) s += a[i][j] * t[j];
                out[i] = floormod(s, n);
            }
            return out;
        };

        int mismatches = 0, consistent = 0;
        for (int s = 0; s < count; ++s) {
            const i64 n = moduli[static_cast<std::size_t>(s) % moduli.size()];
            const int rows = static_cast<int>(1 + rng.below(max_dim));
            const int cols = static_cast<int>(1 + rng.below(max_dim));
            std::vector<Vec> a(static_cast<std::size_t>(rows), Vec(static_cast<std::size_t>(cols)));
            for (auto& row : a)
                for (auto& v : row) v = rng.residue(n);
            Vec b;
            if (s % 2 == 0) {
                Vec t(static_cast<std::size_t>(cols));
                for (auto& v : t) v = rng.residue(n);
                b = matvec(a, t, n); // consistent by construction
            } else {
                b.resize(static_cast<std::size_t>(rows));
                for (auto& v : b) v = rng.residue(n);
            }

            LinearSolution sol = solve_mod(a, b, cols, n);
            u64 bcount = 0;
            bool contained = true;
            Vec t(static_cast<std::size_t>(cols), 0);
            for (;;) {
                if (matvec(a, t, n) == b) {
                    ++bcount;
                    if (!sol.consistent || !sol.contains(t)) contained = false;
                }
                std::size_t d = 0;
                while (d < t.size()) {
                    if (++t[d] < n) break;
                    t[d] = 0;
                    ++d;
                }
                if (d == t.size()) break;
            }
            const bool ok =
                sol.consistent ? (contained && bcount == sol.cardinality()) : bcount == 0;
            if (sol.consistent) ++consistent;
            if (!ok) ++mismatches;
        }
        check(res, "mismatches", 0, mismatches);
        res.info["systems"] = count;
        res.info["consistent_systems"] = consistent;
    }

    void run_polarization(const json& c, CampaignResult& res) {
        RingSpec r1 = parse_ring_expr(c.at("exhaustive_ring").get<std::string>());
        CompiledRing cr1 = CompiledRing::compile(r1, budget_);
        const u64 total = total_maps(r1, budget_.map_enumeration);
        u64 dis1 = 0;
        for_each_map(r1, 0, total, [&](const AdditiveMap& t, u64) {
            const bool grid = check_law(r1, t, Law::jordan_left).holds;
            CompiledMap cm = CompiledMap::compile(cr1, t);
            if (grid != compiled_law_holds(cr1, cm, Law::jordan_left)) ++dis1;
        });
        check(res, "exhaustive-ring-disagreements", 0, dis1);

        RingSpec r2 = parse_ring_expr(c.at("random_ring").get<std::string>());
        CompiledRing cr2 = CompiledRing::compile(r2, budget_);
        const int cnt = c.at("random_count").get<int>();
        Rng rng(c.value("seed", static_cast<u64>(1)));
        u64 dis2 = 0;
        for (int i = 0; i < cnt; ++i) {
            AdditiveMap t = random_map(r2, rng);
            const bool grid = check_law(r2, t, Law::jordan_left).holds;
            CompiledMap cm = CompiledMap::compile(cr2, t);
            if (grid != compiled_law_holds(cr2, cm, Law::jordan_left)) ++dis2;
        }
        check(res, "random-ring-disagreements", 0, dis2);
        res.info["exhaustive_maps"] = total;
        res.info["random_maps"] = cnt;
    }
};

inline json load_manifest(const std::string& path) {
    json m = load_json_file(path);
    if (!m.is_object() || !m.contains("campaigns") || !m.at("campaigns").is_array())
        throw parse_error("manifest '" + path + "' has no campaigns array");
    return m;
}

inline std::vector<json> select_campaigns(const json& manifest, const std::string& filter) {
    std::vector<json> out;
    for (const json& cj : manifest.at("campaigns"))
        if (filter.empty() ||
            cj.at("id").get<std::string>().find(filter) != std::string::npos)
            out.push_back(cj);
    return out;
}

inline double round_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

inline json check_json(const CheckEntry& e) {
    return {{"name", e.name}, {"expect", e.expect}, {"actual", e.actual}, {"pass", e.pass}};
}

// Canonical aggregate report: campaigns sorted by id, keys sorted by the json
// library, timings segregated so the rest is byte-stable across runs.
inline json build_report(std::vector<CampaignResult> results) {
    std::sort(results.begin(), results.end(),
              [](const CampaignResult& a, const CampaignResult& b) { return a.id < b.id; });
    json campaigns = json::array();
    json times = json::object();
    std::size_t passed = 0;
    double total_ms = 0.0;
    for (const CampaignResult& r : results) {
        json checks = json::array();
        for (const CheckEntry& e : r.checks) checks.push_back(check_json(e));
        campaigns.push_back(json{{"id", r.id},
                                 {"criterion", r.criterion},
                                 {"kind", r.kind},
                                 {"title", r.title},
                                 {"pass", r.pass},
                                 {"checks", std::move(checks)},
                                 {"info", r.info}});
        times[r.id] = round_ms(r.ms);
        total_ms += r.ms;
        if (r.pass) ++passed;
    }
    return {{"schema", 1},
            {"tool", {{"name", tool_name}, {"version", tool_version}}},
            {"campaigns", std::move(campaigns)},
            {"summary",
             {{"total", results.size()},
              {"passed", passed},
              {"failed", results.size() - passed},
              {"pass", passed == results.size()}}},
            {"timings", {{"total_ms", round_ms(total_ms)}, {"campaigns", std::move(times)}}}};
}

} // namespace centra
