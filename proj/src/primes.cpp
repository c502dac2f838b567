#include "primediv/primes.hpp"

#include <algorithm>
#include <cmath>

namespace primediv {

namespace {

constexpr std::uint64_t kSegment = 1 << 18;

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return out;
}

}  // namespace

void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn) {
    if (limit < 2) return;
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
    while (root * root > limit) --root;
    while ((root + 1) * (root + 1) <= limit) ++root;
    const std::vector<std::uint64_t> base = small_primes(root);
    std::vector<char> composite(kSegment);
    for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
        std::uint64_t hi = std::min(limit, lo + kSegment - 1);
        std::fill(composite.begin(), composite.end(), 0);
        for (std::uint64_t p : base) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t j = start; j <= hi; j += p) composite[j - lo] = 1;
        }
        for (std::uint64_t n = lo; n <= hi; ++n)
            if (!composite[n - lo]) fn(n);
    }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for_each_prime(limit, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

std::uint64_t prime_count(std::uint64_t limit) {
    std::uint64_t n = 0;
    for_each_prime(limit, [&](std::uint64_t) { ++n; });
    return n;
}

}  // namespace primediv
