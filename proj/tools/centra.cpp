// centra: exact analysis of centralizer-style identities on finite rings.
#include <CLI11.hpp>

#include <cstdlib>
#include <deque>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <centra/campaign.hpp>

using namespace centra;

namespace {

std::string dump_vec(const Vec& v) { return json(v).dump(); }

void write_json_file(const json& j, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw parse_error("cannot write '" + path + "'");
    f << j.dump(2) << "\n";
}

std::string default_manifest() {
    if (const char* env = std::getenv("CENTRA_MANIFEST"); env && *env) return env;
#ifdef CENTRA_DATA_DIR
    return std::string(CENTRA_DATA_DIR) + "/campaigns.json";
#else
    return "data/campaigns.json";
#endif
}

void describe_ring(const RingSpec& r) {
    std::cout << "ring " << r.name << ": exponent " << r.n << ", rank " << r.k
              << ", cardinality " << r.cardinality()
              << (r.unital() ? ", unital" : ", no unity") << "\n";
}

std::string violation_text(const Violation& v) {
    std::string s = "at ";
    for (std::size_t i = 0; i < v.at.size(); ++i) s += (i ? ", " : "") + dump_vec(v.at[i]);
    return s + ": lhs " + dump_vec(v.lhs) + " != rhs " + dump_vec(v.rhs);
}

// Full-quantification tuple count, or nullopt when it would blow the budget.
std::optional<u64> oracle_tuples(const RingSpec& r, const IdentityInfo& info,
                                 const Budget& budget) {
    u64 tuples = 1;
    for (std::size_t i = 0; i < info.vars.size(); ++i) {
        if (tuples > budget.instantiation / r.cardinality()) return std::nullopt;
        tuples *= r.cardinality();
    }
    return tuples;
}

struct BoundMaps {
    std::deque<AdditiveMap> owned;
    Bindings bindings;
};

BoundMaps parse_bindings(const RingSpec& r, const std::vector<std::string>& specs) {
    BoundMaps out;
    for (const std::string& s : specs) {
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw parse_error("--bind expects NAME=MAPEXPR, got '" + s + "'");
        out.owned.push_back(parse_map_expr(r, s.substr(eq + 1)));
    }
    std::size_t i = 0;
    for (const std::string& s : specs) out.bindings[s.substr(0, s.find('='))] = &out.owned[i++];
    return out;
}

int cmd_ring_check(const std::string& ring_expr, bool show_center, bool semiprime, bool prime,
                   i64 torsion, const std::string& json_path) {
    const Budget budget = Budget::from_env();
    RingSpec r = parse_ring_expr(ring_expr);
    describe_ring(r);
    json out = ring_info(r);

    auto aw = check_associativity(r);
    out["associative"] = !aw.has_value();
    if (aw) {
        std::cout << "associative: NO, (g" << aw->i << "*g" << aw->j << ")*g" << aw->l << " = "
                  << dump_vec(aw->lhs) << " but g" << aw->i << "*(g" << aw->j << "*g" << aw->l
                  << ") = " << dump_vec(aw->rhs) << "\n";
        out["associativity_witness"] = {
            {"i", aw->i}, {"j", aw->j}, {"l", aw->l}, {"lhs", aw->lhs}, {"rhs", aw->rhs}};
    }
    if (show_center) {
        std::vector<Vec> zs = center(r, budget);
        std::cout << "center: " << zs.size() << " elements\n";
        for (const Vec& z : zs) std::cout << "  " << dump_vec(z) << "\n";
        out["center"] = zs;
    }
    if (semiprime) {
        auto w = semiprime_witness(r, budget);
        out["semiprime"] = !w.has_value();
        if (w) {
            std::cout << "semiprime: NO, a*R*a = 0 for a " << dump_vec(*w) << "\n";
            out["semiprime_witness"] = *w;
        } else {
            std::cout << "semiprime: yes\n";
        }
    }
    if (prime) {
        auto w = prime_witness(r, budget);
        out["prime"] = !w.has_value();
        if (w) {
            std::cout << "prime: NO, a*R*b = 0 for a " << dump_vec(w->first) << ", b "
                      << dump_vec(w->second) << "\n";
            out["prime_witness"] = {{"a", w->first}, {"b", w->second}};
        } else {
            std::cout << "prime: yes\n";
        }
    }
    if (torsion > 0) {
        const bool tf = is_k_torsion_free(r, torsion, budget);
        std::cout << torsion << "-torsion-free: " << (tf ? "yes" : "no") << "\n";
        out["torsion_free"] = {{"m", torsion}, {"holds", tf}};
    }
    if (!json_path.empty()) write_json_file(out, json_path);
    return 0;
}

int cmd_solve(const std::string& ring_expr, const std::string& identity_key,
              const std::vector<std::string>& binds, bool verify_sufficiency, u64 enumerate_cap,
              const std::string& json_path) {
    Budget budget = Budget::from_env();
    if (enumerate_cap > 0) budget.solution_enumeration = enumerate_cap;
    RingSpec r = parse_ring_expr(ring_expr);
    Identity id = resolve_identity(identity_key);
    IdentityInfo info = validate_identity(id);
    BoundMaps bm = parse_bindings(r, binds);

    describe_ring(r);
    std::cout << "identity " << id.key << ": " << print_identity(id) << "\n";

    SolutionSpace space = solve_identity(r, id, bm.bindings, budget);
    json out = {{"ring", ring_info(r)},
                {"identity", id.key},
                {"text", print_identity(id)},
                {"consistent", space.consistent()},
                {"cardinality", space.cardinality()}};
    if (!space.consistent()) {
        std::cout << "no additive map satisfies the identity (inconsistent system)\n";
    } else {
        std::cout << "solution space: " << space.cardinality() << " additive maps\n";
        SpaceClassification cls = classify_space(r, space, budget);
        out["classification"] = cls.counts;
        out["classification_sampled"] = cls.sampled;
        std::cout << "classification" << (cls.sampled ? " (sampled basis)" : "") << ":\n";
        for (const auto& [name, count] : cls.counts)
            std::cout << "  " << name << ": " << count << "\n";
        if (space.cardinality() <= 16) {
            json members = json::array();
            for (const AdditiveMap& m : space.enumerate(budget)) members.push_back(m.rows());
            out["members"] = std::move(members);
        }
    }

    if (verify_sufficiency && space.consistent()) {
        const auto tuples = oracle_tuples(r, info, budget);
        if (!tuples) {
            std::cout << "sufficiency: skipped, full quantification over " << info.vars.size()
                      << " variables exceeds the instantiation budget\n";
            out["sufficiency"] = {{"verified", false}, {"reason", "tuple budget"}};
        } else {
            CompiledRing cring = CompiledRing::compile(r, budget);
            CompiledBindings cb;
            std::deque<CompiledMap> owned;
            for (const auto& [name, mp] : bm.bindings) {
                owned.push_back(CompiledMap::compile(cring, *mp));
                cb[name] = &owned.back();
            }
            OracleProgram prog = OracleProgram::compile(cring, id, info, cb);
            u64 members = 0, mismatches = 0;
            for (const AdditiveMap& m : space.enumerate(budget)) {
                CompiledMap cm = CompiledMap::compile(cring, m);
                prog.bind(id.unknown, &cm);
                if (!prog.satisfied(budget)) ++mismatches;
                ++members;
            }
            std::cout << "sufficiency: " << members << " members re-checked over all " << *tuples
                      << " tuples, mismatches " << mismatches << "\n";
            out["sufficiency"] = {
                {"verified", mismatches == 0}, {"members", members}, {"mismatches", mismatches}};
        }
    }
    if (!json_path.empty()) write_json_file(out, json_path);
    return 0;
}

int cmd_check_map(const std::string& ring_expr, const std::string& map_expr,
                  std::vector<std::string> laws, const std::vector<std::string>& identities,
                  bool exhaustive, const std::string& json_path) {
    const Budget budget = Budget::from_env();
    RingSpec r = parse_ring_expr(ring_expr);
    AdditiveMap t = parse_map_expr(r, map_expr);
    describe_ring(r);
    std::cout << "map rows " << json(t.rows()).dump() << "\n";
    json out = {{"ring", ring_info(r)}, {"map", t.rows()}};

    if (laws.empty() && identities.empty())
        laws = {"left-centralizer", "right-centralizer", "two-sided-centralizer", "jordan-left",
                "jordan-right"};

    json jlaws = json::object();
    for (const std::string& lname : laws) {
        const Law law = law_from_name(lname);
        CheckResult res = exhaustive ? exhaustive_check(r, t, law, budget) : check_law(r, t, law);
        std::cout << lname << ": " << (res.holds ? "holds" : "FAILS")
                  << (exhaustive ? " (all elements)" : " (generator grid)");
        if (res.violation) std::cout << ", " << violation_text(*res.violation);
        std::cout << "\n";
        jlaws[lname] = res.violation
                           ? json{{"holds", res.holds}, {"violation", violation_json(*res.violation)}}
                           : json{{"holds", res.holds}};
    }
    if (!jlaws.empty()) out["laws"] = std::move(jlaws);

    json jids = json::object();
    for (const std::string& key : identities) {
        Identity id = resolve_identity(key);
        IdentityInfo info = validate_identity(id);
        SolutionSpace space = solve_identity(r, id, {}, budget);
        const bool member = space.contains(t);
        std::cout << "identity " << id.key << ": " << (member ? "member" : "NOT a member")
                  << " of the solution space";
        json j = {{"member", member}};
        if (const auto tuples = oracle_tuples(r, info, budget)) {
            CompiledRing cring = CompiledRing::compile(r, budget);
            CompiledMap cm = CompiledMap::compile(cring, t);
            CompiledBindings cb;
            cb[id.unknown] = &cm;
            const bool oracle = oracle_satisfies(cring, id, info, cb, budget);
            std::cout << (oracle == member ? ", oracle agrees" : ", ORACLE DISAGREES");
            j["oracle"] = oracle;
        }
        std::cout << "\n";
        jids[id.key] = std::move(j);
    }
    if (!jids.empty()) out["identities"] = std::move(jids);

    if (!json_path.empty()) write_json_file(out, json_path);
    return 0;
}

int cmd_verify_all(const std::string& filter, const std::string& manifest_path,
                   const std::string& json_path) {
    const Budget budget = Budget::from_env();
    const json manifest = load_manifest(manifest_path);
    const std::vector<json> selected = select_campaigns(manifest, filter);
    if (selected.empty()) {
        std::cerr << "no campaign id matches filter '" << filter << "'\n";
        return 2;
    }

    CampaignRunner runner(budget);
    std::vector<CampaignResult> results;
    results.reserve(selected.size());
    for (const json& cj : selected) {
        CampaignResult res = runner.run(cj);
        std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.id << "  " << res.title << "  ("
                  << res.checks.size() << " checks, " << round_ms(res.ms) << " ms)\n";
        if (!res.pass)
            for (const CheckEntry& e : res.checks)
                if (!e.pass)
                    std::cout << "       check " << e.name << ": expect " << e.expect.dump()
                              << ", actual " << e.actual.dump() << "\n";
        results.push_back(std::move(res));
    }

    json report = build_report(std::move(results));
    const auto& summary = report.at("summary");
    std::cout << "summary: " << summary.at("passed").get<u64>() << "/"
              << summary.at("total").get<u64>() << " campaigns passed\n";
    if (!json_path.empty()) write_json_file(report, json_path);
    return summary.at("pass").get<bool>() ? 0 : 1;
}

int cmd_catalog(const std::string& json_path) {
    std::cout << "builtin identities (use the key with solve / check-map):\n";
    json out = json::array();
    for (const CatalogEntry& e : builtin_identities()) {
        std::cout << "  " << e.key;
        for (std::size_t i = e.key.size(); i < 22; ++i) std::cout << ' ';
        std::cout << e.text;
        for (std::size_t i = e.text.size(); i < 44; ++i) std::cout << ' ';
        std::cout << "  " << e.note << "\n";
        out.push_back(json{{"key", e.key}, {"text", e.text}, {"note", e.note}});
    }
    std::cout << "\nparameterized: mn-jordan(m,n) for any m, n >= 1\n";
    std::cout << "raw text is accepted too, e.g. \"2*T(x*y*x) = x*T(y)*x\";\n";
    std::cout << "grammar: terms c*F1*...*Fk, each with exactly one map application T(...)\n";
    std::cout << "or S(...) for named known slots; variables are lowercase, powers use ^.\n";
    if (!json_path.empty()) write_json_file(out, json_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact centralizer-identity analysis on finite rings"};
    app.require_subcommand(1);

    // ring check RING [flags]
    CLI::App* ring = app.add_subcommand("ring", "inspect a ring");
    ring->require_subcommand(1);
    CLI::App* ring_check = ring->add_subcommand("check", "structure and predicate report");
    std::string rc_ring, rc_json;
    bool rc_center = false, rc_semiprime = false, rc_prime = false;
    i64 rc_torsion = 0;
    ring_check->add_option("ring", rc_ring, "ring expression, e.g. M:2:Zn:9")->required();
    ring_check->add_flag("--center", rc_center, "list central elements");
    ring_check->add_flag("--semiprime", rc_semiprime, "test semiprimeness, witness if not");
    ring_check->add_flag("--prime", rc_prime, "test primeness, witness pair if not");
    ring_check->add_option("--torsion", rc_torsion, "test m-torsion-freeness for this m");
    ring_check->add_option("--json", rc_json, "write the report as JSON to this file");

    // solve RING IDENTITY [flags]
    CLI::App* solve = app.add_subcommand("solve", "solve an identity for all additive maps");
    std::string sv_ring, sv_identity, sv_json;
    std::vector<std::string> sv_binds;
    bool sv_sufficiency = false;
    u64 sv_cap = 0;
    solve->add_option("ring", sv_ring, "ring expression")->required();
    solve->add_option("identity", sv_identity, "catalog key, mn-jordan(m,n), or identity text")
        ->required();
    solve->add_option("--bind", sv_binds, "bind a known slot, NAME=MAPEXPR (repeatable)");
    solve->add_flag("--verify-sufficiency", sv_sufficiency,
                    "re-check every solution over all element tuples");
    solve->add_option("--enumerate-cap", sv_cap, "max solutions to enumerate or classify");
    solve->add_option("--json", sv_json, "write the report as JSON to this file");

    // check-map RING MAP [flags]
    CLI::App* check_map = app.add_subcommand("check-map", "test one additive map against laws");
    std::string cm_ring, cm_map, cm_json;
    std::vector<std::string> cm_identities;
    bool cm_left = false, cm_right = false, cm_two = false, cm_jl = false, cm_jr = false;
    bool cm_exhaustive = false;
    check_map->add_option("ring", cm_ring, "ring expression")->required();
    check_map->add_option("map", cm_map, "map expression, e.g. scalar:2 or @file.json")
        ->required();
    check_map->add_flag("--left", cm_left, "check the left centralizer law");
    check_map->add_flag("--right", cm_right, "check the right centralizer law");
    check_map->add_flag("--two-sided", cm_two, "check both centralizer laws");
    check_map->add_flag("--jordan-left", cm_jl, "check the Jordan left law");
    check_map->add_flag("--jordan-right", cm_jr, "check the Jordan right law");
    check_map->add_flag("--exhaustive", cm_exhaustive, "quantify over elements, not generators");
    check_map->add_option("--identity", cm_identities,
                          "also test membership in this identity's solution space (repeatable)");
    check_map->add_option("--json", cm_json, "write the report as JSON to this file");

    // verify-all [flags]
    CLI::App* verify = app.add_subcommand("verify-all", "run the bundled verification campaigns");
    std::string va_filter, va_manifest = default_manifest(), va_json;
    verify->add_option("--filter", va_filter, "run only campaigns whose id contains this text");
    verify->add_option("--manifest", va_manifest, "campaign manifest path")
        ->capture_default_str();
    verify->add_option("--json", va_json, "write the aggregate report as JSON to this file");

    // catalog
    CLI::App* catalog = app.add_subcommand("catalog", "list builtin identities");
    std::string cat_json;
    catalog->add_option("--json", cat_json, "write the catalog as JSON to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ring_check->parsed())
            return cmd_ring_check(rc_ring, rc_center, rc_semiprime, rc_prime, rc_torsion, rc_json);
        if (solve->parsed())
            return cmd_solve(sv_ring, sv_identity, sv_binds, sv_sufficiency, sv_cap, sv_json);
        if (check_map->parsed()) {
            std::vector<std::string> laws;
            if (cm_left) laws.emplace_back("left-centralizer");
            if (cm_right) laws.emplace_back("right-centralizer");
            if (cm_two) laws.emplace_back("two-sided-centralizer");
            if (cm_jl) laws.emplace_back("jordan-left");
            if (cm_jr) laws.emplace_back("jordan-right");
            return cmd_check_map(cm_ring, cm_map, laws, cm_identities, cm_exhaustive, cm_json);
        }
        if (verify->parsed()) return cmd_verify_all(va_filter, va_manifest, va_json);
        if (catalog->parsed()) return cmd_catalog(cat_json);
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
