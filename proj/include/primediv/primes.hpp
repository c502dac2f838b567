#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace primediv {

/// Calls fn(p) for every prime p <= limit in ascending order. Segmented:
/// memory is O(sqrt(limit) + segment).
void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

std::uint64_t prime_count(std::uint64_t limit);

}  // namespace primediv
