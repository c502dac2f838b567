#pragma once

// Certified bounds for tails of sums of multiplicative functions supported on
// squarefree integers, exploiting the cancellation in sum mu(k)/k^2.

#include <cstdint>
#include <functional>
#include <vector>

namespace primediv {

class MobiusTail {
public:
    /// Tabulates M(n) = sum_{k<=n} mu(k)/k for n <= table_limit and the
    /// smallest prime factors up to divisor_limit.
    explicit MobiusTail(std::uint32_t table_limit = 1'000'000, std::uint32_t divisor_limit = 40'000);

    /// Shared instance with the default limits; construction is thread-safe.
    static const MobiusTail& shared();

    /// Upper bound for |sum_{k > y} mu(k)/k^2|, y >= 0.
    double mu_square_tail(double y) const;

    /// Upper bound for |sum_{j > J} mu(j) prod_{p | j} w(p)| with w >= 0.
    /// w must equal 1/(p(p-1)) for every prime p >= generic_from, and
    /// generic_from must not exceed divisor_limit.
    double tail_bound(const std::function<double(std::uint64_t)>& w, std::uint64_t generic_from, double J) const;

    std::uint32_t divisor_limit() const { return divisor_limit_; }

private:
    std::uint32_t table_limit_, divisor_limit_;
    std::vector<double> abs_m_;      // |M(n)|
    std::vector<double> suffix_max_; // max_{n <= k <= table_limit} |M(k)|
    std::vector<std::uint32_t> spf_; // smallest prime factor up to divisor_limit
};

}  // namespace primediv
