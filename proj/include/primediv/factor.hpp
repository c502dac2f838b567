#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace primediv {

/// Prime factorization: primes strictly increasing, exponents positive.
/// The factorization of 1 is empty.
struct Factorization {
    std::vector<std::pair<std::uint64_t, unsigned>> pairs;

    std::uint64_t value() const;
    bool operator==(const Factorization&) const = default;
};

/// Trial division by the primes below 10^4, then Brent-Pollard rho on any
/// composite cofactor. Deterministic.
Factorization factorize(std::uint64_t n);

/// Same contract for arbitrary-size integers; |n| is factored.
struct BigFactorization {
    std::vector<std::pair<mpz_class, unsigned>> pairs;
};
BigFactorization factorize(const mpz_class& n);

bool is_prime(const mpz_class& n);

/// The distinct prime divisors of |n| (n != 0).
std::vector<mpz_class> prime_divisors(const mpz_class& n);

}  // namespace primediv
