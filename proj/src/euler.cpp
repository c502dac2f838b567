#include "primediv/euler.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "primediv/errors.hpp"
#include "primediv/primes.hpp"

namespace primediv {

Real prime_square_tail(std::uint64_t bound, std::uint64_t pi_bound) {
    // sum_{p>B} p^-2 = -pi(B)/B^2 + 2 int_B^inf pi(t) t^-3 dt
    //               <= -pi(B)/B^2 + 2C / (B log B)
    Real b(bound);
    Real lb = log(b);
    Real c = bound >= 355991 ? Real(1) + 1 / lb + Real("2.51") / (lb * lb) : Real("1.25506");
    Real tail = 2 * c / (b * lb) - Real(pi_bound) / (b * b);
    return tail * (1 + 1e-20);
}

namespace {

template <class Factor>
ApproxReal euler_product(std::uint64_t bound, Factor factor, Real tail_scale) {
    if (bound < 100) throw ContractViolation("Euler product bound below 100");
    Real prod = 1;
    std::uint64_t n = 0;
    for_each_prime(bound, [&](std::uint64_t p) {
        prod *= factor(Real(p));
        ++n;
    });
    // each factor carries at most 3 roundings, each product one more
    Real rounding = prod * 5 * Real(n) * unit_roundoff();
    Real tail = prime_square_tail(bound, n) * tail_scale;
    return {prod, prod * tail + rounding};
}

std::mutex memo_mutex;
std::map<std::uint64_t, ApproxReal> s_memo, artin_memo;

}  // namespace

ApproxReal euler_S(std::uint64_t bound) {
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = s_memo.find(bound); it != s_memo.end()) return it->second;
    }
    // sum_{p>B} p/(p^3-1) <= (1 - B^-3)^-1 sum_{p>B} p^-2
    Real b(bound);
    ApproxReal out = euler_product(
        bound, [](const Real& p) { return 1 - p / (p * p * p - 1); }, 1 / (1 - 1 / (b * b * b)));
    std::lock_guard lock(memo_mutex);
    s_memo.emplace(bound, out);
    return out;
}

ApproxReal artin_constant(std::uint64_t bound) {
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = artin_memo.find(bound); it != artin_memo.end()) return it->second;
    }
    // 1/(p(p-1)) <= p^-2 / (1 - 1/B)
    Real b(bound);
    ApproxReal out = euler_product(
        bound, [](const Real& p) { return 1 - 1 / (p * (p - 1)); }, 1 / (1 - 1 / b));
    std::lock_guard lock(memo_mutex);
    artin_memo.emplace(bound, out);
    return out;
}

}  // namespace primediv
