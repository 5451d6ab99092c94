// Identity AST, the small identity language, and the builtin catalog.
//
// An identity is a chain of equations between sums of terms. A term is an
// integer coefficient times a product of factors, each factor a plain
// variable or a map slot applied to a monomial: 2*T(x*y*x) = T(x)*y*x + ...
// Map slots are uppercase identifiers; "T" is the unknown being solved for,
// anything else (T0, ...) must be bound to a concrete additive map.
//
// Solvability rests on two structural rules checked by validate():
//  * every term carries exactly one map application, so each side is
//    homogeneous of degree one in the maps, and
//  * each variable occurs the same number of times (1 or 2) in every term,
//    so the residual is additive or a quadratic map in that variable and the
//    generator / generator-plus-pairwise-sum instantiations are exactly
//    equivalent to quantifying over all ring elements. Mixed degrees break
//    that equivalence (e.g. T(x^2) + 7*T(x) = 0 over Z/8) and are rejected.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "additive_map.hpp"
#include "ring.hpp"

namespace centra {

struct Factor {
    bool is_map = false;
    std::string var;               // when !is_map
    std::string slot;              // when is_map
    std::vector<std::string> args; // monomial of variables, nonempty
};

struct Term {
    i64 coeff = 1;
    std::vector<Factor> factors;
};

struct Equation {
    std::vector<Term> lhs, rhs;
};

struct Identity {
    std::string key;  // catalog key or "" for ad-hoc identities
    std::vector<Equation> equations;
    std::string unknown = "T";
};

namespace dsl {

struct Token {
    enum Kind { integer, ident, star, plus, minus, eq, lparen, rparen, caret, end } kind;
    std::string text;
    i64 value = 0;
};

inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        if (c >= '0' && c <= '9') {
            std::size_t j = i;
            while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
            out.push_back({Token::integer, src.substr(i, j - i),
                           static_cast<i64>(std::stoll(src.substr(i, j - i)))});
            i = j;
            continue;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= 'A' && src[j] <= 'Z') ||
                    (src[j] >= '0' && src[j] <= '9') || src[j] == '_'))
                ++j;
            out.push_back({Token::ident, src.substr(i, j - i), 0});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '*': k = Token::star; break;
            case '+': k = Token::plus; break;
            case '-': k = Token::minus; break;
            case '=': k = Token::eq; break;
            case '(': k = Token::lparen; break;
            case ')': k = Token::rparen; break;
            case '^': k = Token::caret; break;
            default: throw parse_error("identity: unexpected character '" + std::string(1, c) + "'");
        }
        out.push_back({k, std::string(1, c), 0});
        ++i;
    }
    out.push_back({Token::end, "", 0});
    return out;
}

inline bool is_slot_name(const std::string& s) { return !s.empty() && s[0] >= 'A' && s[0] <= 'Z'; }

class Parser {
  public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    Identity parse() {
        Identity id;
        std::vector<std::vector<Term>> sides;
        sides.push_back(parse_expr());
        while (peek().kind == Token::eq) {
            next();
            sides.push_back(parse_expr());
        }
        if (sides.size() < 2) throw parse_error("identity: expected '='");
        expect(Token::end, "end of input");
        for (std::size_t i = 0; i + 1 < sides.size(); ++i)
            id.equations.push_back(Equation{sides[i], sides[i + 1]});
        return id;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }
    void expect(Token::Kind k, const char* what) {
        if (peek().kind != k)
            throw parse_error(std::string("identity: expected ") + what + " near '" + peek().text + "'");
        next();
    }

    std::vector<Term> parse_expr() {
        std::vector<Term> terms;
        i64 sign = 1;
        if (peek().kind == Token::minus) {
            next();
            sign = -1;
        } else if (peek().kind == Token::plus) {
            next();
        }
        terms.push_back(parse_term(sign));
        while (peek().kind == Token::plus || peek().kind == Token::minus) {
            sign = next().kind == Token::plus ? 1 : -1;
            terms.push_back(parse_term(sign));
        }
        return terms;
    }

    Term parse_term(i64 sign) {
        Term t;
        t.coeff = sign;
        bool saw_factor = false;
        if (peek().kind == Token::integer) {
            t.coeff *= next().value;
            if (peek().kind != Token::star)
                throw parse_error("identity: a term cannot be a bare integer");
            next();
        }
        for (;;) {
            parse_factor(t);
            saw_factor = true;
            if (peek().kind != Token::star) break;
            next();
        }
        if (!saw_factor) throw parse_error("identity: empty term");
        return t;
    }

    void parse_factor(Term& t) {
        if (peek().kind != Token::ident)
            throw parse_error("identity: expected a variable or map near '" + peek().text + "'");
        std::string name = next().text;
        if (is_slot_name(name)) {
            expect(Token::lparen, "'(' after map name");
            Factor f;
            f.is_map = true;
            f.slot = name;
            parse_monomial(f.args);
            expect(Token::rparen, "')'");
            t.factors.push_back(std::move(f));
            return;
        }
        append_power(t.factors, name);
    }

    void parse_monomial(std::vector<std::string>& out) {
        for (;;) {
            if (peek().kind != Token::ident || is_slot_name(peek().text))
                throw parse_error("identity: map arguments must be variables");
            std::string name = next().text;
            std::size_t reps = parse_exponent();
            for (std::size_t i = 0; i < reps; ++i) out.push_back(name);
            if (peek().kind != Token::star) break;
            next();
        }
    }

    void append_power(std::vector<Factor>& fs, const std::string& name) {
        std::size_t reps = parse_exponent();
        for (std::size_t i = 0; i < reps; ++i) {
            Factor f;
            f.var = name;
            fs.push_back(std::move(f));
        }
    }

    std::size_t parse_exponent() {
        if (peek().kind != Token::caret) return 1;
        next();
        if (peek().kind != Token::integer || peek().value < 1)
            throw parse_error("identity: exponent must be a positive integer");
        return static_cast<std::size_t>(next().value);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

inline std::string print_monomial(const std::vector<std::string>& vars) {
    std::string out;
    for (std::size_t i = 0; i < vars.size();) {
        std::size_t j = i;
        while (j < vars.size() && vars[j] == vars[i]) ++j;
        if (!out.empty()) out += "*";
        out += vars[i];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

inline std::string print_side(const std::vector<Term>& terms) {
    std::string out;
    for (std::size_t ti = 0; ti < terms.size(); ++ti) {
        const Term& t = terms[ti];
        i64 c = t.coeff;
        if (ti == 0) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        i64 a = c < 0 ? -c : c;
        std::string body;
        // Merge adjacent plain-variable repeats into powers; map factors
        // print their monomial the same way.
        std::size_t i = 0;
        while (i < t.factors.size()) {
            if (!body.empty()) body += "*";
            const Factor& f = t.factors[i];
            if (f.is_map) {
                body += f.slot + "(" + print_monomial(f.args) + ")";
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < t.factors.size() && !t.factors[j].is_map && t.factors[j].var == f.var) ++j;
            body += f.var;
            if (j - i > 1) body += "^" + std::to_string(j - i);
            i = j;
        }
        if (a != 1) out += std::to_string(a) + "*";
        out += body;
    }
    return out;
}

} // namespace dsl

inline Identity parse_identity(const std::string& src) { return dsl::Parser(src).parse(); }

inline std::string print_identity(const Identity& id) {
    // A chain a = b = c prints each distinct side once.
    std::string out = dsl::print_side(id.equations.front().lhs);
    for (const Equation& eq : id.equations) out += " = " + dsl::print_side(eq.rhs);
    return out;
}

// Static facts about a validated identity.
struct IdentityInfo {
    std::vector<std::string> vars;      // sorted
    std::map<std::string, int> degree;  // uniform per-term occurrence count, 1 or 2
    std::set<std::string> known_slots;  // slots other than the unknown
};

inline IdentityInfo validate_identity(const Identity& id) {
    IdentityInfo info;
    if (id.equations.empty()) throw parse_error("identity: no equations");
    bool has_unknown = false;
    std::map<std::string, int> uniform;

    auto scan_term = [&](const Term& t) {
        if (t.factors.empty()) throw parse_error("identity: empty term");
        int maps = 0;
        std::map<std::string, int> occ;
        for (const Factor& f : t.factors) {
            if (!f.is_map) {
                ++occ[f.var];
                continue;
            }
            ++maps;
            if (f.args.empty()) throw parse_error("identity: empty map argument");
            if (f.slot == id.unknown) has_unknown = true;
            else info.known_slots.insert(f.slot);
            for (const std::string& v : f.args) ++occ[v];
        }
        if (maps != 1)
            throw parse_error("identity: every term must apply exactly one map (found " +
                              std::to_string(maps) + ")");
        for (auto& [v, c] : occ) {
            if (c > 2) throw parse_error("identity: variable '" + v + "' has degree > 2");
            auto [it, fresh] = uniform.emplace(v, c);
            if (!fresh && it->second != c)
                throw parse_error("identity: variable '" + v +
                                  "' must have the same degree in every term");
        }
        return occ;
    };

    // Every variable must appear in every term; collect the global set first.
    std::set<std::string> all_vars;
    for (const Equation& eq : id.equations)
        for (const auto* side : {&eq.lhs, &eq.rhs})
            for (const Term& t : *side) {
                auto occ = scan_term(t);
                for (auto& [v, c] : occ) all_vars.insert(v);
            }
    for (const Equation& eq : id.equations)
        for (const auto* side : {&eq.lhs, &eq.rhs})
            for (const Term& t : *side) {
                std::set<std::string> seen;
                for (const Factor& f : t.factors) {
                    if (f.is_map)
                        for (const std::string& v : f.args) seen.insert(v);
                    else seen.insert(f.var);
                }
                if (seen.size() != all_vars.size())
                    throw parse_error("identity: every variable must occur in every term");
            }

    if (!has_unknown)
        throw parse_error("identity: the unknown map '" + id.unknown + "' never occurs");
    info.degree = std::move(uniform);
    for (auto& [v, d] : info.degree) info.vars.push_back(v);
    return info;
}

// Direct evaluation at a concrete assignment; the reference semantics used by
// the oracles, independent of the compiled linear system.
inline Vec evaluate_term(const RingSpec& r, const Term& t,
                         const std::map<std::string, Vec>& assign,
                         const std::map<std::string, const AdditiveMap*>& maps) {
    std::optional<Vec> acc;
    for (const Factor& f : t.factors) {
        Vec value;
        if (f.is_map) {
            std::optional<Vec> arg;
            for (const std::string& v : f.args) {
                const Vec& x = assign.at(v);
                arg = arg ? r.mul(*arg, x) : x;
            }
            value = maps.at(f.slot)->apply(*arg);
        } else {
            value = assign.at(f.var);
        }
        acc = acc ? r.mul(*acc, value) : std::move(value);
    }
    return r.smul(t.coeff, *acc);
}

inline Vec evaluate_side(const RingSpec& r, const std::vector<Term>& side,
                         const std::map<std::string, Vec>& assign,
                         const std::map<std::string, const AdditiveMap*>& maps) {
    Vec sum = r.zero();
    for (const Term& t : side) sum = r.add(sum, evaluate_term(r, t, assign, maps));
    return sum;
}

inline bool identity_holds_at(const RingSpec& r, const Identity& id,
                              const std::map<std::string, Vec>& assign,
                              const std::map<std::string, const AdditiveMap*>& maps) {
    for (const Equation& eq : id.equations)
        if (evaluate_side(r, eq.lhs, assign, maps) != evaluate_side(r, eq.rhs, assign, maps))
            return false;
    return true;
}

struct CatalogEntry {
    std::string key;
    std::string text;
    std::string note;
};

// Builtin identities. mn-jordan is a family; mn_jordan_text() instantiates
// concrete (m, n) coefficients.
inline std::string mn_jordan_text(i64 m, i64 n) {
    auto coef = [](i64 c, const std::string& body) {
        return c == 1 ? body : std::to_string(c) + "*" + body;
    };
    return coef(m + n, "T(x^2)") + " = " + coef(m, "T(x)*x") + " + " + coef(n, "x*T0(x)");
}

inline const std::vector<CatalogEntry>& builtin_identities() {
    static const std::vector<CatalogEntry> entries = {
        {"left-centralizer", "T(x*y) = T(x)*y", "module property over itself"},
        {"right-centralizer", "T(x*y) = x*T(y)", "mirror of left-centralizer"},
        {"two-sided", "T(x*y) = T(x)*y = x*T(y)", "both centralizer laws as a chain"},
        {"jordan-left", "T(x^2) = T(x)*x", "left centralizer on squares only"},
        {"jordan-right", "T(x^2) = x*T(x)", "mirror of jordan-left"},
        {"vukman-1999", "2*T(x^2) = T(x)*x + x*T(x)", "symmetrized Jordan law"},
        {"vukman-2001", "2*T(x*y*x) = x*T(y)*x", "inner sandwich law"},
        {"vukman-ulbl-2003a", "2*T(x*y*x) = T(x)*y*x + x*y*T(x)", "outer sandwich law"},
        {"vukman-ulbl-2003b", "3*T(x*y*x) = T(x)*y*x + x*T(y)*x + x*y*T(x)",
         "balanced sandwich law"},
        {"mn-jordan(1,1)", mn_jordan_text(1, 1), "weighted Jordan law with known slot T0"},
        {"mn-jordan(1,2)", mn_jordan_text(1, 2), "weighted Jordan law with known slot T0"},
        {"mn-jordan(2,1)", mn_jordan_text(2, 1), "weighted Jordan law with known slot T0"},
        {"jordan-left-t0", mn_jordan_text(1, 1), "alias of mn-jordan(1,1)"},
    };
    return entries;
}

// Accepts a catalog key, an mn-jordan(m,n) instance, or raw identity text.
inline Identity resolve_identity(const std::string& what) {
    for (const CatalogEntry& e : builtin_identities())
        if (e.key == what) {
            Identity id = parse_identity(e.text);
            id.key = e.key;
            return id;
        }
    if (what.rfind("mn-jordan(", 0) == 0 && what.back() == ')') {
        std::string inner = what.substr(10, what.size() - 11);
        std::size_t comma = inner.find(',');
        if (comma == std::string::npos) throw parse_error("mn-jordan: expected (m,n)");
        i64 m = 0, n = 0;
        try {
            m = std::stoll(inner.substr(0, comma));
            n = std::stoll(inner.substr(comma + 1));
        } catch (const std::logic_error&) {
            throw parse_error("mn-jordan: bad parameters in '" + what + "'");
        }
        if (m < 1 || n < 1) throw parse_error("mn-jordan: m, n must be >= 1");
        Identity id = parse_identity(mn_jordan_text(m, n));
        id.key = "mn-jordan(" + std::to_string(m) + "," + std::to_string(n) + ")";
        return id;
    }
    if (what.find('=') != std::string::npos) return parse_identity(what);
    throw parse_error("unknown identity '" + what + "' (not a catalog key and not identity text)");
}

} // namespace centra
