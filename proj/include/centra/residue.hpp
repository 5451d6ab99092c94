// Scalar arithmetic on residues mod N. Everything here works on int64 values
// normalized to [0, N); N need not be prime.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace centra {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u32 = std::uint32_t;

// Coordinate and row vectors throughout the library.
using Vec = std::vector<i64>;

// Thrown when an operation would exceed a configured enumeration budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed specs, expressions, or identity source text.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline i64 floormod(i64 a, i64 n) {
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

inline i64 gcd_i64(i64 a, i64 b) {
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
struct xgcd_result {
    i64 g, s, t;
};

inline xgcd_result xgcd(i64 a, i64 b) {
    i64 s0 = 1, t0 = 0, s1 = 0, t1 = 1;
    while (b != 0) {
        i64 q = a / b;
        i64 r = a - q * b;
        a = b;
        b = r;
        i64 s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = s1;
        t0 = t1;
        s1 = s2;
        t1 = t2;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    return {a, s0, t0};
}

// Inverse of a mod n; requires gcd(a, n) == 1.
inline i64 modinv(i64 a, i64 n) {
    auto [g, s, t] = xgcd(floormod(a, n), n);
    (void)t;
    if (g != 1)
        throw std::invalid_argument("modinv: " + std::to_string(a) +
                                    " is not a unit mod " + std::to_string(n));
    return floormod(s, n);
}

// A unit u mod n with u*a == gcd(a, n) (mod n). Lets row reduction normalize a
// pivot to a divisor of n without losing row-span information.
inline i64 lifting_unit(i64 a, i64 n) {
    a = floormod(a, n);
    if (a == 0) return 1;
    i64 g = gcd_i64(a, n);
    i64 b = a / g, n2 = n / g;
    i64 u = (n2 == 1) ? 1 : modinv(b % n2, n2);
    // u is a unit mod n2; shift by multiples of n2 until it is a unit mod n.
    while (gcd_i64(u, n) != 1) u += n2;
    return floormod(u, n);
}

} // namespace centra
