#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <random>

#include <centra/constructors.hpp>

using namespace centra;

namespace {

// Textbook 2x2 matrix product, independent of the structure-constant path.
// Coordinate layout: (a, b, c, d) = [a b; c d].
Vec mat2_mul(const Vec& x, const Vec& y, i64 n) {
    return {floormod(x[0] * y[0] + x[1] * y[2], n), floormod(x[0] * y[1] + x[1] * y[3], n),
            floormod(x[2] * y[0] + x[3] * y[2], n), floormod(x[2] * y[1] + x[3] * y[3], n)};
}

Vec random_elem(const RingSpec& r, std::mt19937_64& eng) {
    Vec v(static_cast<std::size_t>(r.k));
    for (auto& x : v) x = static_cast<i64>(eng() % static_cast<u64>(r.n));
    return v;
}

} // namespace

TEST_CASE("matrix ring multiplication matches the textbook product", "[constructors]") {
    std::mt19937_64 eng(5);
    for (i64 n : {2, 3, 4, 9}) {
        RingSpec r = matrix_ring(cyclic_ring(n), 2);
        REQUIRE(r.k == 4);
        REQUIRE(r.n == n);
        REQUIRE(r.unital());
        REQUIRE(r.one() == Vec{1, 0, 0, 1});
        for (int trial = 0; trial < 50; ++trial) {
            Vec x = random_elem(r, eng), y = random_elem(r, eng);
            REQUIRE(r.mul(x, y) == mat2_mul(x, y, n));
        }
    }
}

TEST_CASE("unit matrices satisfy e_ij e_kl = [j=k] e_il", "[constructors]") {
    RingSpec r = matrix_ring(cyclic_ring(4), 2);
    auto e = [&](int i, int j) { return r.gen(i * 2 + j); };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    REQUIRE(r.mul(e(i, j), e(k, l)) == (j == k ? e(i, l) : r.zero()));
}

TEST_CASE("nested matrix construction gives a valid 16-dimensional ring", "[constructors]") {
    RingSpec r = matrix_ring(matrix_ring(cyclic_ring(2), 2), 2);
    REQUIRE(r.k == 16);
    REQUIRE(r.cardinality() == 65536);
    REQUIRE(r.unital());
    REQUIRE_FALSE(check_associativity(r).has_value());
    std::mt19937_64 eng(9);
    // spot-check distributivity-compatible bilinearity: (x+y)z = xz + yz
    for (int trial = 0; trial < 20; ++trial) {
        Vec x = random_elem(r, eng), y = random_elem(r, eng), z = random_elem(r, eng);
        REQUIRE(r.mul(r.add(x, y), z) == r.add(r.mul(x, z), r.mul(y, z)));
    }
}

TEST_CASE("antisymmetric triple ring multiplies by the cross rule", "[constructors]") {
    for (i64 n : {2, 3}) {
        RingSpec f = antisymmetric_triple_ring(cyclic_ring(n));
        REQUIRE(f.k == 3);
        REQUIRE_FALSE(f.unital());
        REQUIRE_FALSE(check_associativity(f).has_value());
        const u64 card = f.cardinality();
        for (u64 ia = 0; ia < card; ++ia)
            for (u64 ib = 0; ib < card; ++ib) {
                Vec a = f.element(ia), b = f.element(ib);
                Vec expect{0, 0, floormod(a[0] * b[1] - a[1] * b[0], n)};
                REQUIRE(f.mul(a, b) == expect);
            }
    }
}

TEST_CASE("triangular pair ring squares into its second slot", "[constructors]") {
    RingSpec base = antisymmetric_triple_ring(cyclic_ring(2));
    RingSpec tri = triangular_pair_ring(cyclic_ring(2));
    REQUIRE(tri.k == 6);
    REQUIRE(tri.cardinality() == 64);
    REQUIRE_FALSE(tri.unital());
    const int kb = base.k;
    for (u64 ia = 0; ia < tri.cardinality(); ++ia)
        for (u64 ib = 0; ib < tri.cardinality(); ++ib) {
            Vec a = tri.element(ia), b = tri.element(ib);
            Vec a1(a.begin(), a.begin() + kb), b1(b.begin(), b.begin() + kb);
            Vec prod = base.mul(a1, b1);
            Vec expect(static_cast<std::size_t>(tri.k), 0);
            for (int i = 0; i < kb; ++i) expect[static_cast<std::size_t>(kb + i)] = prod[static_cast<std::size_t>(i)];
            REQUIRE(tri.mul(a, b) == expect);
        }
    // every product of three elements vanishes
    Vec x = tri.element(37), y = tri.element(58), z = tri.element(11);
    REQUIRE(tri.is_zero(tri.mul(tri.mul(x, y), z)));
    REQUIRE(tri.is_zero(tri.mul(x, tri.mul(y, z))));
}

TEST_CASE("second projection keeps the second slot and kills the first", "[constructors]") {
    RingSpec tri = triangular_pair_ring(cyclic_ring(2));
    AdditiveMap t = second_projection_map(tri);
    const int kb = tri.k / 2;
    for (u64 idx = 0; idx < tri.cardinality(); ++idx) {
        Vec a = tri.element(idx);
        Vec img = t.apply(a);
        for (int i = 0; i < kb; ++i) {
            REQUIRE(img[static_cast<std::size_t>(i)] == 0);
            REQUIRE(img[static_cast<std::size_t>(kb + i)] == a[static_cast<std::size_t>(kb + i)]);
        }
    }
    // rejects rings that are not triangular pairs
    REQUIRE_THROWS_AS(second_projection_map(antisymmetric_triple_ring(cyclic_ring(2))),
                      std::invalid_argument);
}

TEST_CASE("constructor argument validation", "[constructors]") {
    REQUIRE_THROWS_AS(cyclic_ring(1), std::invalid_argument);
    REQUIRE_THROWS_AS(matrix_ring(cyclic_ring(2), 0), std::invalid_argument);
}
