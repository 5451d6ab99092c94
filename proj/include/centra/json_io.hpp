// JSON (de)serialization for rings and maps, plus the ring expression
// mini-language used by the CLI:
//
//   Zn:<n>        residues mod n
//   M:<r>:<expr>  r x r matrices over <expr>
//   F3:<expr>     antisymmetric triples over <expr>
//   TRI:<expr>    upper-triangular pairs over F3(<expr>)
//   @file.json    ring presentation from a file
//
// Ring files carry {name, exponent, rank, unity, mul_table}; map files carry
// a bare rank x rank matrix or {"matrix": [...]}.
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "additive_map.hpp"
#include "constructors.hpp"
#include "ring.hpp"

namespace centra {

using json = nlohmann::json;

inline json ring_to_json(const RingSpec& r) {
    json j;
    j["name"] = r.name;
    j["exponent"] = r.n;
    j["rank"] = r.k;
    if (r.unity) j["unity"] = *r.unity;
    else j["unity"] = nullptr;
    json table = json::array();
    for (int i = 0; i < r.k; ++i) {
        json row = json::array();
        for (int jj = 0; jj < r.k; ++jj)
            row.push_back(r.mul_table[static_cast<std::size_t>(i) * r.k + jj]);
        table.push_back(std::move(row));
    }
    j["mul_table"] = std::move(table);
    return j;
}

inline RingSpec ring_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("ring json: expected an object");
    for (const char* key : {"exponent", "rank", "mul_table"})
        if (!j.contains(key)) throw parse_error(std::string("ring json: missing '") + key + "'");
    const i64 n = j.at("exponent").get<i64>();
    const int k = j.at("rank").get<int>();
    const json& table = j.at("mul_table");
    if (!table.is_array() || static_cast<int>(table.size()) != k)
        throw parse_error("ring json: mul_table must have 'rank' rows");
    std::vector<Vec> mul;
    for (const json& row : table) {
        if (!row.is_array() || static_cast<int>(row.size()) != k)
            throw parse_error("ring json: mul_table rows must have 'rank' entries");
        for (const json& cell : row) mul.push_back(cell.get<Vec>());
    }
    std::optional<Vec> unity;
    if (j.contains("unity") && !j.at("unity").is_null()) unity = j.at("unity").get<Vec>();
    std::string name = j.value("name", std::string("ring"));
    return make_ring(name, n, k, mul, unity);
}

inline json map_to_json(const AdditiveMap& t) {
    json j;
    j["matrix"] = t.rows();
    return j;
}

inline AdditiveMap map_from_json(const RingSpec& r, const json& j) {
    const json& m = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
    if (!m.is_array()) throw parse_error("map json: expected a matrix");
    std::vector<Vec> rows;
    for (const json& row : m) rows.push_back(row.get<Vec>());
    return AdditiveMap::from_matrix(r, rows);
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error("bad json in '" + path + "': " + e.what());
    }
    return j;
}

inline i64 parse_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        i64 v = std::stoll(s, &used);
        if (used != s.size()) throw parse_error("");
        return v;
    } catch (const std::logic_error&) {
        throw parse_error(std::string("expected an integer for ") + what + ", got '" + s + "'");
    }
}

inline RingSpec parse_ring_expr(const std::string& expr) {
    if (expr.empty()) throw parse_error("empty ring expression");
    if (expr[0] == '@') return ring_from_json(load_json_file(expr.substr(1)));
    if (expr.rfind("Zn:", 0) == 0) {
        const i64 n = parse_int(expr.substr(3), "Zn exponent");
        return cyclic_ring(n);
    }
    if (expr.rfind("M:", 0) == 0) {
        const std::string rest = expr.substr(2);
        const std::size_t colon = rest.find(':');
        if (colon == std::string::npos) throw parse_error("M: expects M:<r>:<ring>");
        const i64 r = parse_int(rest.substr(0, colon), "matrix size");
        if (r < 1 || r > 8) throw parse_error("matrix size must be in 1..8");
        return matrix_ring(parse_ring_expr(rest.substr(colon + 1)), static_cast<int>(r));
    }
    if (expr.rfind("F3:", 0) == 0) return antisymmetric_triple_ring(parse_ring_expr(expr.substr(3)));
    if (expr.rfind("TRI:", 0) == 0) return triangular_pair_ring(parse_ring_expr(expr.substr(4)));
    throw parse_error("bad ring expression '" + expr +
                      "' (want Zn:<n>, M:<r>:<expr>, F3:<expr>, TRI:<expr>, or @file)");
}

// Map expressions: @file, zero, identity, second-projection (pair rings),
// scalar:<c> (c * unity, unital rings), or scalar:<c0>,<c1>,... (left
// multiplication by the coordinate vector), or an inline json matrix.
inline AdditiveMap parse_map_expr(const RingSpec& r, const std::string& expr) {
    if (expr.empty()) throw parse_error("empty map expression");
    if (expr[0] == '@') return map_from_json(r, load_json_file(expr.substr(1)));
    if (expr == "zero") return AdditiveMap::zero(r);
    if (expr == "identity") return AdditiveMap::identity(r);
    if (expr == "second-projection") return second_projection_map(r);
    if (expr.rfind("scalar:", 0) == 0) {
        const std::string body = expr.substr(7);
        Vec alpha;
        if (body.find(',') == std::string::npos) {
            alpha = r.smul(parse_int(body, "scalar"), r.one());
        } else {
            std::stringstream ss(body);
            std::string part;
            while (std::getline(ss, part, ',')) alpha.push_back(parse_int(part, "scalar coordinate"));
            if (static_cast<int>(alpha.size()) != r.k)
                throw parse_error("scalar coordinate vector must have length " + std::to_string(r.k));
            for (auto& c : alpha) c = floormod(c, r.n);
        }
        return scalar_map(r, alpha);
    }
    if (expr[0] == '[') {
        try {
            return map_from_json(r, json::parse(expr));
        } catch (const json::exception& e) {
            throw parse_error(std::string("bad inline map json: ") + e.what());
        }
    }
    throw parse_error("bad map expression '" + expr +
                      "' (want @file, zero, identity, scalar:..., or a json matrix)");
}

} // namespace centra
