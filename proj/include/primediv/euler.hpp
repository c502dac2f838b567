#pragma once

#include <cstdint>

#include "primediv/real.hpp"

namespace primediv {

/// Upper bound for the sum of 1/p^2 over primes p > bound, given pi(bound).
/// Uses pi(x) <= C x / log x with Dusart's C for x >= 355991 and the
/// Rosser-Schoenfeld constant 1.25506 below.
Real prime_square_tail(std::uint64_t bound, std::uint64_t pi_bound);

/// prod_{p <= bound} (1 - p/(p^3 - 1)). The value is the partial product,
/// which overestimates the infinite product; abs_error covers the tail and
/// rounding. Memoized per bound. Requires bound >= 100.
ApproxReal euler_S(std::uint64_t bound);

/// prod_{p <= bound} (1 - 1/(p(p-1))), Artin's constant; same conventions.
ApproxReal artin_constant(std::uint64_t bound);

}  // namespace primediv
