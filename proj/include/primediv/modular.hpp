#pragma once

// Word-sized modular arithmetic. Moduli are below 2^63 so that sums of two
// residues never overflow.

#include <cstdint>
#include <optional>

namespace primediv::mod {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 add(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return s >= m ? s - m : s;
}

inline u64 sub(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 pow(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul(r, base, m);
        base = mul(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Reduces a signed value into [0, m).
inline u64 reduce(std::int64_t v, u64 m) {
    auto r = static_cast<std::int64_t>(static_cast<__int128>(v) % static_cast<__int128>(m));
    return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
}

/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<u64> inverse(u64 a, u64 m);

/// Jacobi symbol (a/n) for odd positive n.
int jacobi(u64 a, u64 n);

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(u64 n);

/// A square root of a modulo an odd prime p, if a is a square.
std::optional<u64> sqrt(u64 a, u64 p);

}  // namespace primediv::mod
