#include <doctest.h>

#include <random>

#include "primediv/factor.hpp"
#include "primediv/modular.hpp"
#include "primediv/primes.hpp"
#include "primediv/rational.hpp"

using namespace primediv;

TEST_CASE("rationals stay in lowest terms") {
    ExactRational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a.str() == "-3/2");
    CHECK(ExactRational(4).str() == "4/1");
    CHECK(ExactRational(4).str(false) == "4");
    CHECK(ExactRational::parse("10/4") == ExactRational(5, 2));
    CHECK(ExactRational::parse("-7") == ExactRational(-7));
    CHECK(ExactRational(2, 3) + ExactRational(1, 6) == ExactRational(5, 6));
    CHECK(ExactRational(2, 3).pow(-2) == ExactRational(9, 4));
    CHECK(ExactRational(1, 3) < ExactRational(1, 2));
    CHECK_THROWS(ExactRational(1, 0));
    CHECK(valuation(mpz_class(72), mpz_class(2)) == 3);
}

TEST_CASE("modular helpers") {
    CHECK(mod::pow(2, 10, 1000) == 24);
    CHECK(mod::inverse(3, 7).value() == 5);
    CHECK_FALSE(mod::inverse(6, 9).has_value());
    CHECK(mod::reduce(-3, 7) == 4);
    CHECK(mod::jacobi(2, 13) == -1);
    CHECK(mod::jacobi(3, 13) == 1);
    auto s = mod::sqrt(10, 13);
    REQUIRE(s.has_value());
    CHECK(*s * *s % 13 == 10);
    CHECK_FALSE(mod::sqrt(2, 13).has_value());
    // near 2^63: products must not overflow
    const std::uint64_t big = 9223372036854775783ULL;  // prime
    CHECK(mod::is_prime(big));
    CHECK(mod::mul(big - 1, big - 1, big) == 1);
}

TEST_CASE("primality agrees with a sieve below 10^5") {
    auto primes = primes_up_to(100000);
    std::size_t k = 0;
    for (std::uint64_t n = 0; n <= 100000; ++n) {
        bool sieve = k < primes.size() && primes[k] == n;
        if (sieve) ++k;
        REQUIRE(mod::is_prime(n) == sieve);
    }
    CHECK(mod::is_prime(1000000007));
    CHECK_FALSE(mod::is_prime(3215031751ULL));  // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("factorize examples") {
    CHECK(factorize(18).pairs == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 2}});
    CHECK(factorize(8).pairs == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}});
    CHECK(factorize(1).pairs.empty());
}

TEST_CASE("factorize: product, order and primality of the factors") {
    std::mt19937_64 rng(12345);
    std::vector<std::uint64_t> cases{600851475143ULL, 1000000016000000063ULL, 4611686014132420609ULL,
                                     999999000001ULL * 3};
    for (int i = 0; i < 300; ++i) cases.push_back(rng() >> (rng() % 40));
    for (std::uint64_t n : cases) {
        if (n == 0) continue;
        Factorization f = factorize(n);
        CHECK(f.value() == n);
        for (std::size_t k = 0; k < f.pairs.size(); ++k) {
            CHECK(mod::is_prime(f.pairs[k].first));
            CHECK(f.pairs[k].second > 0);
            if (k) CHECK(f.pairs[k - 1].first < f.pairs[k].first);
        }
    }
}

TEST_CASE("big factorization") {
    // 2^64 + 1 = 274177 * 67280421310721, and 998244353 * (10^9 + 7) * (10^9 + 9)
    for (const char* text : {"18446744073709551617", "998244368971909710889394239"}) {
        mpz_class n(text);
        auto f = factorize(n);
        mpz_class prod = 1;
        for (auto& [p, e] : f.pairs) {
            CHECK(is_prime(p));
            for (unsigned i = 0; i < e; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
    CHECK(factorize(mpz_class("18446744073709551617")).pairs.size() == 2);
    CHECK(factorize(mpz_class("998244368971909710889394239")).pairs.size() == 3);
    CHECK(prime_divisors(mpz_class(-44)) == std::vector<mpz_class>{2, 11});
}

TEST_CASE("enumerate primes") {
    CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
    CHECK(primes_up_to(1).empty());
    CHECK(prime_count(1000000) == 78498);
    // segment boundaries
    CHECK(prime_count(262144) == 23000);
    CHECK(prime_count(262145) == 23000);
    CHECK(prime_count(10000000) == 664579);
}
