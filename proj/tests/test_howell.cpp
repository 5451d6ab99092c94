#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include <centra/howell.hpp>

using namespace centra;

namespace {

// Brute-force span of a row set in (Z/n)^cols, via closure under row addition.
std::set<Vec> span_set(const std::vector<Vec>& rows, int cols, i64 n) {
    std::set<Vec> out{Vec(static_cast<std::size_t>(cols), 0)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec> snapshot(out.begin(), out.end());
        for (const Vec& v : snapshot)
            for (const Vec& r : rows) {
                Vec w(v);
                for (std::size_t i = 0; i < w.size(); ++i) w[i] = floormod(w[i] + r[i], n);
                if (out.insert(std::move(w)).second) grew = true;
            }
    }
    return out;
}

std::vector<Vec> random_rows(std::mt19937_64& eng, int count, int cols, i64 n) {
    std::vector<Vec> rows(static_cast<std::size_t>(count), Vec(static_cast<std::size_t>(cols)));
    for (auto& row : rows)
        for (auto& v : row) v = static_cast<i64>(eng() % static_cast<u64>(n));
    return rows;
}

Vec matvec(const std::vector<Vec>& a, const Vec& t, i64 n) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        i64 s = 0;
        for (std::size_t j = 0; j < t.size(); ++j) s += a[i][j] * t[j];
        out[i] = floormod(s, n);
    }
    return out;
}

} // namespace

TEST_CASE("howell form preserves the row span exactly", "[howell]") {
    std::mt19937_64 eng(11);
    for (i64 n : {2, 3, 4, 6, 9, 12})
        for (int cols = 1; cols <= 3; ++cols)
            for (int trial = 0; trial < 6; ++trial) {
                auto rows = random_rows(eng, trial % 4, cols, n);
                HowellForm hf = howell_form(rows, cols, n);
                auto brute = span_set(rows, cols, n);
                REQUIRE(hf.cardinality() == brute.size());
                for (const Vec& v : brute) REQUIRE(hf.contains(v));
                // and nothing extra: reduce() is a retraction onto the span
                REQUIRE(span_set(hf.rows, cols, n) == brute);
            }
}

TEST_CASE("howell form is canonical across generating sets", "[howell]") {
    std::mt19937_64 eng(23);
    for (i64 n : {4, 6, 9}) {
        const int cols = 3;
        auto rows = random_rows(eng, 3, cols, n);
        // Second generating set: original rows plus random combinations,
        // presented in a different order.
        std::vector<Vec> noisy = rows;
        for (int extra = 0; extra < 3; ++extra) {
            Vec combo(static_cast<std::size_t>(cols), 0);
            for (const Vec& r : rows) {
                i64 c = static_cast<i64>(eng() % static_cast<u64>(n));
                for (std::size_t i = 0; i < combo.size(); ++i)
                    combo[i] = floormod(combo[i] + c * r[i], n);
            }
            noisy.push_back(std::move(combo));
        }
        std::reverse(noisy.begin(), noisy.end());
        HowellForm a = howell_form(rows, cols, n);
        HowellForm b = howell_form(noisy, cols, n);
        REQUIRE(a.rows == b.rows);
        REQUIRE(a.lead_col == b.lead_col);
        REQUIRE(a.lead_val == b.lead_val);
    }
}

TEST_CASE("howell leads are staircase-shaped divisors of n", "[howell]") {
    std::mt19937_64 eng(37);
    for (i64 n : {4, 6, 8, 9, 12}) {
        auto rows = random_rows(eng, 4, 4, n);
        HowellForm hf = howell_form(rows, 4, n);
        for (std::size_t i = 0; i < hf.rows.size(); ++i) {
            if (i > 0) REQUIRE(hf.lead_col[i] > hf.lead_col[i - 1]);
            REQUIRE(n % hf.lead_val[i] == 0); // lead divides n after normalization
        }
    }
}

TEST_CASE("solve_mod matches brute force over composite moduli", "[howell]") {
    std::mt19937_64 eng(51);
    for (i64 n : {2, 3, 4, 6, 9, 12})
        for (int trial = 0; trial < 10; ++trial) {
            const int rows = 1 + static_cast<int>(eng() % 4);
            const int cols = 1 + static_cast<int>(eng() % 4);
            auto a = random_rows(eng, rows, cols, n);
            Vec b;
            if (trial % 2 == 0) {
                Vec t(static_cast<std::size_t>(cols));
                for (auto& v : t) v = static_cast<i64>(eng() % static_cast<u64>(n));
                b = matvec(a, t, n);
            } else {
                b.resize(static_cast<std::size_t>(rows));
                for (auto& v : b) v = static_cast<i64>(eng() % static_cast<u64>(n));
            }

            LinearSolution sol = solve_mod(a, b, cols, n);
            u64 brute = 0;
            Vec t(static_cast<std::size_t>(cols), 0);
            for (;;) {
                if (matvec(a, t, n) == b) {
                    ++brute;
                    REQUIRE(sol.consistent);
                    REQUIRE(sol.contains(t));
                }
                std::size_t d = 0;
                while (d < t.size()) {
                    if (++t[d] < n) break;
                    t[d] = 0;
                    ++d;
                }
                if (d == t.size()) break;
            }
            REQUIRE(sol.cardinality() == brute);
        }
}

TEST_CASE("same_solution_set distinguishes equal and shifted systems", "[howell]") {
    const i64 n = 6;
    // x + 2y == 4 presented two ways: alone, and with a redundant doubled row.
    std::vector<Vec> a1 = {{1, 2}};
    std::vector<Vec> a2 = {{1, 2}, {2, 4}};
    LinearSolution s1 = solve_mod(a1, {4}, 2, n);
    LinearSolution s2 = solve_mod(a2, {4, 2}, 2, n);
    REQUIRE(s1.same_solution_set(s2));
    // different right-hand side: same kernel, different particular
    LinearSolution s3 = solve_mod(a1, {5}, 2, n);
    REQUIRE_FALSE(s1.same_solution_set(s3));
    // inconsistent system: 0 == 1
    LinearSolution s4 = solve_mod({{0, 0}}, {1}, 2, n);
    REQUIRE_FALSE(s4.consistent);
    REQUIRE(s4.cardinality() == 0);
}
