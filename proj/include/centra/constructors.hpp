// Ring constructors: cyclic rings, matrix rings over a base ring, and the two
// non-unital rings used by the bundled counterexample campaigns.
#pragma once

#include <string>

#include "additive_map.hpp"
#include "ring.hpp"

namespace centra {

// Z/n with its usual multiplication; generator g_0 = 1 is the unity.
inline RingSpec cyclic_ring(i64 n) {
    return make_ring("Z" + std::to_string(n), n, 1, {Vec{1}}, Vec{1});
}

// M_r(base) presented on generators g_m * e_ij, ordered (i, j) row-major with
// the base generator index varying fastest. Matrix units multiply by
// e_ij e_kl = [j == k] e_il; the base structure constants ride along.
inline RingSpec matrix_ring(const RingSpec& base, int r) {
    if (r < 1) throw std::invalid_argument("matrix_ring: size must be >= 1");
    const int kb = base.k;
    const int k = r * r * kb;
    auto gen_index = [&](int i, int j, int m) { return (i * r + j) * kb + m; };

    std::vector<Vec> table(static_cast<std::size_t>(k) * static_cast<std::size_t>(k),
                           Vec(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int m = 0; m < kb; ++m)
                for (int jj = 0; jj < r; ++jj)
                    for (int l = 0; l < r; ++l)
                        for (int mm = 0; mm < kb; ++mm) {
                            if (j != jj) continue; // e_ij e_(jj)l vanishes unless j == jj
                            const Vec& prod = base.mul_table[static_cast<std::size_t>(m * kb + mm)];
                            Vec& cell = table[static_cast<std::size_t>(gen_index(i, j, m)) *
                                                  static_cast<std::size_t>(k) +
                                              static_cast<std::size_t>(gen_index(jj, l, mm))];
                            for (int c = 0; c < kb; ++c)
                                cell[static_cast<std::size_t>(gen_index(i, l, c))] =
                                    prod[static_cast<std::size_t>(c)];
                        }

    std::optional<Vec> unity;
    if (base.unital()) {
        Vec u(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < r; ++i)
            for (int m = 0; m < kb; ++m)
                u[static_cast<std::size_t>(gen_index(i, i, m))] = base.one()[static_cast<std::size_t>(m)];
        unity = std::move(u);
    }
    return make_ring("M" + std::to_string(r) + "(" + base.name + ")", base.n, k,
                     std::move(table), std::move(unity));
}

// Triples (x, y, z) over the base with product
//   (x1,y1,z1)(x2,y2,z2) = (0, 0, x1*y2 - x2*y1).
// Non-unital; every square and every product of three factors is zero.
// Components are blocks of the generator list: x = [0,kb), y = [kb,2kb),
// z = [2kb,3kb).
inline RingSpec antisymmetric_triple_ring(const RingSpec& base) {
    const int kb = base.k;
    const int k = 3 * kb;
    std::vector<Vec> table(static_cast<std::size_t>(k) * static_cast<std::size_t>(k),
                           Vec(static_cast<std::size_t>(k), 0));
    auto at = [&](int a, int b) -> Vec& {
        return table[static_cast<std::size_t>(a) * static_cast<std::size_t>(k) +
                     static_cast<std::size_t>(b)];
    };
    for (int m = 0; m < kb; ++m)
        for (int mm = 0; mm < kb; ++mm) {
            const Vec& fwd = base.mul_table[static_cast<std::size_t>(m * kb + mm)];
            for (int c = 0; c < kb; ++c) {
                // x-gen times y-gen lands in z with + sign, y-gen times x-gen
                // with - sign; all other component pairs vanish.
                at(m, kb + mm)[static_cast<std::size_t>(2 * kb + c)] =
                    fwd[static_cast<std::size_t>(c)];
                at(kb + mm, m)[static_cast<std::size_t>(2 * kb + c)] =
                    floormod(-fwd[static_cast<std::size_t>(c)], base.n);
            }
        }
    return make_ring("F3(" + base.name + ")", base.n, k, std::move(table), std::nullopt);
}

// Pairs (A, B) of antisymmetric triples with product
//   (A1,B1)(A2,B2) = (0, A1*A2).
// Non-unital; every square is zero. A = generators [0,3kb), B = [3kb,6kb).
inline RingSpec triangular_pair_ring(const RingSpec& base) {
    RingSpec f = antisymmetric_triple_ring(base);
    const int kf = f.k;
    const int k = 2 * kf;
    std::vector<Vec> table(static_cast<std::size_t>(k) * static_cast<std::size_t>(k),
                           Vec(static_cast<std::size_t>(k), 0));
    for (int u = 0; u < kf; ++u)
        for (int v = 0; v < kf; ++v) {
            const Vec& prod = f.mul_table[static_cast<std::size_t>(u * kf + v)];
            Vec& cell = table[static_cast<std::size_t>(u) * static_cast<std::size_t>(k) +
                              static_cast<std::size_t>(v)];
            for (int c = 0; c < kf; ++c)
                cell[static_cast<std::size_t>(kf + c)] = prod[static_cast<std::size_t>(c)];
        }
    return make_ring("TRI(" + base.name + ")", base.n, k, std::move(table), std::nullopt);
}

// The projection (A, B) -> (0, B) on a triangular_pair_ring; a Jordan left
// centralizer that is not a left centralizer.
inline AdditiveMap second_projection_map(const RingSpec& tri) {
    if (tri.k % 2 != 0)
        throw std::invalid_argument("second_projection_map: expected a triangular pair ring");
    AdditiveMap t = AdditiveMap::zero(tri);
    const int half = tri.k / 2;
    for (int j = half; j < tri.k; ++j) t.entry(j, j) = 1;
    return t;
}

} // namespace centra
