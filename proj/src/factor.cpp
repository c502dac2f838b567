#include "primediv/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "primediv/modular.hpp"

namespace primediv {

namespace {

constexpr std::uint32_t kTrialLimit = 10000;

const std::vector<std::uint32_t>& trial_primes() {
    static const std::vector<std::uint32_t> table = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint32_t j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return table;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
std::uint64_t rho(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) {
            return static_cast<std::uint64_t>((static_cast<mod::u128>(mod::mul(x, x, n)) + c) % n);
        };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        constexpr std::uint64_t m = 128;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mod::mul(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_u64(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    if (n == 1) return;
    if (mod::is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = rho(n);
    split_u64(d, out);
    split_u64(n / d, out);
}

mpz_class rho_big(const mpz_class& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        auto f = [&](const mpz_class& x) {
            mpz_class v = x * x + c;
            return mpz_class(v % n);
        };
        mpz_class x = 2, y = 2, g = 1, q = 1, ys = 2;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                mpz_class diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_big(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (mpz_fits_ulong_p(n.get_mpz_t())) {
        std::map<std::uint64_t, unsigned> small;
        split_u64(n.get_ui(), small);
        for (auto& [p, e] : small) out[mpz_class(static_cast<unsigned long>(p))] += e;
        return;
    }
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class d = rho_big(n);
    split_big(d, out);
    split_big(mpz_class(n / d), out);
}

}  // namespace

std::uint64_t Factorization::value() const {
    std::uint64_t v = 1;
    for (auto& [p, e] : pairs)
        for (unsigned i = 0; i < e; ++i) v *= p;
    return v;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize: zero");
    Factorization out;
    for (std::uint32_t p : trial_primes()) {
        if (static_cast<std::uint64_t>(p) * p > n) break;
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.pairs.emplace_back(p, e);
    }
    if (n > 1) {
        std::map<std::uint64_t, unsigned> rest;
        split_u64(n, rest);
        for (auto& pe : rest) out.pairs.push_back(pe);
    }
    return out;
}

BigFactorization factorize(const mpz_class& value) {
    if (value == 0) throw std::domain_error("factorize: zero");
    mpz_class n = abs(value);
    std::map<mpz_class, unsigned> found;
    for (std::uint32_t p : trial_primes()) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            found[mpz_class(p)] = e;
        }
        if (n == 1) break;
    }
    split_big(n, found);
    BigFactorization out;
    for (auto& pe : found) out.pairs.push_back(pe);
    return out;
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (mpz_fits_ulong_p(n.get_mpz_t())) return mod::is_prime(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<mpz_class> prime_divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    for (auto& [p, e] : factorize(n).pairs) out.push_back(p);
    return out;
}

}  // namespace primediv
