#include "primediv/mobius_tail.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace primediv {

namespace {

// Slack for double rounding in the tabulated partial sums and in the bound
// arithmetic; both are many orders of magnitude below the bounds produced.
constexpr double kTableSlack = 1e-11;
constexpr double kInflate = 1.0 + 1e-9;

// sum_{k>=1} mu(k)/k^2 = 6/pi^2 < 0.608, and every tail is at most that.
constexpr double kFullTail = 0.608;

}  // namespace

MobiusTail::MobiusTail(std::uint32_t table_limit, std::uint32_t divisor_limit)
    : table_limit_(table_limit), divisor_limit_(divisor_limit) {
    std::uint32_t top = std::max(table_limit, divisor_limit);
    std::vector<std::uint32_t> spf(top + 1, 0);
    std::vector<std::uint32_t> primes;
    std::vector<signed char> mu(top + 1, 0);
    mu[1] = 1;
    for (std::uint32_t i = 2; i <= top; ++i) {
        if (spf[i] == 0) {
            spf[i] = i;
            primes.push_back(i);
            mu[i] = -1;
        }
        for (std::uint32_t p : primes) {
            std::uint64_t ip = static_cast<std::uint64_t>(i) * p;
            if (p > spf[i] || ip > top) break;
            spf[ip] = p;
            mu[ip] = p == spf[i] ? 0 : static_cast<signed char>(-mu[i]);
        }
    }
    abs_m_.assign(table_limit + 1, 0.0);
    double m = 0;
    for (std::uint32_t n = 1; n <= table_limit; ++n) {
        m += mu[n] / static_cast<double>(n);
        abs_m_[n] = std::fabs(m) + kTableSlack;
    }
    suffix_max_.assign(table_limit + 2, 0.0);
    for (std::uint32_t n = table_limit; n >= 1; --n) suffix_max_[n] = std::max(abs_m_[n], suffix_max_[n + 1]);
    spf.resize(divisor_limit + 1);
    spf_ = std::move(spf);
}

const MobiusTail& MobiusTail::shared() {
    static const MobiusTail instance;
    return instance;
}

double MobiusTail::mu_square_tail(double y) const {
    if (y < 1) return kFullTail;
    auto n = static_cast<std::uint64_t>(std::floor(y));
    double trivial = 1.0 / static_cast<double>(n);
    if (n >= table_limit_) return trivial;
    // Abel summation against M, with |M(k)| <= 1 beyond the table:
    // sum_{k>n} mu(k)/k^2 = -M(n)/(n+1) + sum_{k>n} M(k) (1/k - 1/(k+1))
    double n1 = static_cast<double>(n + 1);
    double t1 = 1.0 / (static_cast<double>(table_limit_) + 1);
    double bound = abs_m_[n] / n1 + suffix_max_[n + 1] * (1.0 / n1 - t1) + t1;
    return std::min(trivial, bound) * kInflate;
}

double MobiusTail::tail_bound(const std::function<double(std::uint64_t)>& w, std::uint64_t generic_from,
                              double J) const {
    if (generic_from > divisor_limit_) throw std::invalid_argument("MobiusTail: generic_from too large");
    // With H(j) = mu(j) prod w(p), write H = (mu(k)/k^2) * c. Then c is
    // multiplicative with c(p^a) = p^(-2(a-1)) * delta_p, delta_p = p^-2 - w(p),
    // and sum_{j>J} H(j) = sum_d c(d) sum_{k > J/d} mu(k)/k^2.
    const std::uint32_t D0 = divisor_limit_;
    std::vector<double> delta(D0 + 1, 0.0);
    std::vector<double> c(D0 + 1, 0.0);
    c[1] = 1;
    double rankin = 1;  // prod_p (1 + sum_a |c(p^a)| p^(1.5a))
    for (std::uint32_t p = 2; p <= D0; ++p) {
        if (spf_[p] != p) continue;
        double pd = p;
        delta[p] = 1.0 / (pd * pd) - w(p);
        rankin *= 1 + std::fabs(delta[p]) * std::pow(pd, 1.5) / (1 - 1 / std::sqrt(pd));
    }
    // primes above D0 are generic: |c(p^a)| p^(1.5a) summed over a is at most
    // 1.13 p^-1.5, and sum_{n > D0} n^-1.5 <= 2 / sqrt(D0)
    rankin *= std::exp(2.5 / std::sqrt(static_cast<double>(D0)));

    double main = std::fabs(c[1]) * mu_square_tail(J);
    for (std::uint32_t d = 2; d <= D0; ++d) {
        std::uint32_t p = spf_[d];
        std::uint32_t rest = d;
        double pa = 1;  // p^(a-1) squared, inverted below
        unsigned a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        for (unsigned i = 1; i < a; ++i) pa *= static_cast<double>(p) * p;
        c[d] = c[rest] * delta[p] / pa;
        if (c[d] != 0) main += std::fabs(c[d]) * mu_square_tail(J / d);
    }
    double remainder = kFullTail * rankin / std::pow(static_cast<double>(D0), 1.5);
    return (main + remainder) * kInflate;
}

}  // namespace primediv
