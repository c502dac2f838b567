#include "primediv/density.hpp"

#include <numeric>
#include <vector>

#include "primediv/errors.hpp"
#include "primediv/euler.hpp"
#include "primediv/factor.hpp"
#include "primediv/mobius_tail.hpp"

namespace primediv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// zeta(2) zeta(3) / zeta(6) = sum_j mu(j)^2 / (j phi(j)), rounded up
constexpr double kK1 = 1.9435964369;

struct ArithmeticTables {
    std::vector<u64> phi;
    std::vector<signed char> mu;
};

ArithmeticTables tables_up_to(u64 n) {
    ArithmeticTables t;
    t.phi.resize(n + 1);
    t.mu.assign(n + 1, 1);
    std::iota(t.phi.begin(), t.phi.end(), 0);
    std::vector<bool> composite(n + 1, false);
    for (u64 p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        for (u64 k = p; k <= n; k += p) {
            if (k > p) composite[k] = true;
            t.phi[k] = t.phi[k] / p * (p - 1);
            t.mu[k] = static_cast<signed char>(-t.mu[k]);
        }
        for (u64 k = p * p; k <= n; k += p * p) t.mu[k] = 0;
    }
    t.mu[0] = 0;
    return t;
}

u64 phi_product(u64 i, u64 j, const ArithmeticTables& t) {
    u64 g = std::gcd(i, j);
    return t.phi[i] * t.phi[j] / t.phi[g] * g;
}


// Sum of +-1/deg over a rectangle, with the rounding accumulated so far.
struct RawSum {
    Real value{0};
    Real abs_terms{0};
    u64 terms = 0;
    ApproxReal finish(const Real& tail) const {
        Real rounding = abs_terms * 2 * Real(terms + 1) * unit_roundoff();
        return {value, tail + rounding};
    }
};

RawSum raw_double_sum(const DegreeOracle& oracle, u64 i_max, u64 j_max, const ArithmeticTables& t,
                      unsigned cofactor) {
    RawSum s;
    for (u64 i = 1; i <= i_max; ++i) {
        for (u64 j = 1; j <= j_max; ++j) {
            if (t.mu[j] == 0) continue;
            u64 deg = oracle(i, j);
            if (cofactor != 0) {
                u128 base = static_cast<u128>(i) * i * j * phi_product(i, j, t);
                if (static_cast<u128>(deg) * cofactor < base)
                    throw ContractViolation("degree oracle below naive_degree / cofactor");
            }
            Real term = 1 / Real(deg);
            s.value += t.mu[j] > 0 ? term : Real(-term);
            s.abs_terms += term;
            ++s.terms;
        }
    }
    return s;
}

// sum_{i > I} 1/(i^2 phi(i)) <= 2 K1 / I^2, via i/phi(i) = sum_{d|i} mu(d)^2/phi(d)
// and sum_{m > y} m^-3 <= 2/y^2.
double inverse_square_totient_tail(u64 I) { return 2 * kK1 / (static_cast<double>(I) * I); }

// sum_{j > J} mu(j)^2/(j phi(j)) <= 2 K1 / J, likewise with sum_{m > y} m^-2 <= 2/y.
double squarefree_totient_tail(double J) { return 2 * kK1 / J; }

DensityResult scaled(const ExactRational& c, u64 euler_bound, std::string id) {
    return {c, c * euler_S(euler_bound), std::move(id)};
}

}  // namespace

u64 euler_phi(u64 n) {
    if (n == 0) throw ContractViolation("euler_phi(0)");
    u64 out = n;
    for (auto& [p, e] : factorize(n).pairs) out = out / p * (p - 1);
    return out;
}

int moebius(u64 n) {
    if (n == 0) throw ContractViolation("moebius(0)");
    int out = 1;
    for (auto& [p, e] : factorize(n).pairs) {
        if (e > 1) return 0;
        out = -out;
    }
    return out;
}

int degree_exponent_t(u64 i, u64 j) {
    if (i == 0 || j == 0) throw ContractViolation("degree_exponent_t: indices must be positive");
    auto divides = [&](u64 d) { return (i % d == 0) || (j % d == 0); };
    int v2 = 0;
    for (u64 x = i; x % 2 == 0; x /= 2) ++v2;
    for (u64 x = j; x % 2 == 0 && v2 < 2; x /= 2) ++v2;
    bool four = v2 >= 2;
    int t = divides(5) ? 1 : 0;
    if (i % 2 == 0) return t + (four ? 1 : 0) + (divides(11) ? 1 : 0);
    if (j % 2 == 0) return t + (four ? 1 : 0);
    return t;
}

namespace {

u128 naive_degree_wide(u64 i, u64 j) {
    u64 g = std::gcd(i, j);
    u128 phi = static_cast<u128>(euler_phi(i)) * euler_phi(j) / euler_phi(g) * g;
    return static_cast<u128>(i) * i * j * phi;
}

u64 narrow(u128 v) {
    if (v >> 63) throw ContractViolation("degree exceeds 63 bits");
    return static_cast<u64>(v);
}

}  // namespace

u64 naive_degree(u64 i, u64 j) { return narrow(naive_degree_wide(i, j)); }

u64 lemma41_degree(u64 i, u64 j) {
    u128 base = naive_degree_wide(i, j);
    int t = degree_exponent_t(i, j);
    u128 deg = t == 0 ? base * 2 : (base >> (t - 1));
    return narrow(deg);
}

ExactRational euler_factor(u64 p) {
    ExactRational pp(static_cast<std::int64_t>(p));
    return ExactRational(1) - pp / (pp.pow(3) - 1);
}

ExactRational s_mn(u64 m, u64 n) {
    if (m == 0 || n == 0) throw ContractViolation("s_mn: indices must be positive");
    ExactRational mn = ExactRational(static_cast<std::int64_t>(m)) * ExactRational(static_cast<std::int64_t>(n));
    ExactRational out = mn.pow(-3);
    for (auto& [p, e] : factorize(n).pairs) {
        ExactRational pp(static_cast<std::int64_t>(p));
        out *= -pp.pow(4) / (pp.pow(3) - pp - 1);
    }
    for (auto& [p, e] : factorize(m).pairs) {
        if (n % p == 0) continue;
        ExactRational pp(static_cast<std::int64_t>(p));
        out *= (pp.pow(3) + pp.pow(2)) / (pp.pow(3) - pp - 1);
    }
    return out;
}

ExactRational split_coefficient(bool include_correction) {
    ExactRational sum = s_mn(1, 1) + s_mn(2, 2) + s_mn(2, 5) + s_mn(2, 11) + s_mn(2, 10) + s_mn(2, 22) +
                        s_mn(2, 55) + s_mn(2, 110);
    if (include_correction) sum += s_mn(1, 5) - s_mn(2, 5);
    return sum / 2;
}

InertComponents inert_components() {
    // density of the congruence class, over the Euler factors excluded from
    // the product
    return {ExactRational(1, 4) / (euler_factor(2) * euler_factor(5)),
            ExactRational(1, 8) / (euler_factor(2) * euler_factor(5) * euler_factor(11))};
}

DensityResult delta_split_closed(u64 euler_bound) {
    return scaled(split_coefficient(), euler_bound, "delta_split_closed");
}

DensityResult delta_inert_closed(u64 euler_bound) {
    return scaled(inert_components().total(), euler_bound, "delta_inert_closed");
}

DensityResult delta_inert_three_mod_four(u64 euler_bound) {
    return scaled(inert_components().three_mod_four, euler_bound, "delta_inert_3mod4");
}

DensityResult delta_inert_one_mod_four(u64 euler_bound) {
    return scaled(inert_components().one_mod_four, euler_bound, "delta_inert_1mod4");
}

DensityResult delta_total(u64 euler_bound) {
    return scaled(split_coefficient() + inert_components().total(), euler_bound, "delta_total");
}

ApproxReal two_variable_sum_generic(const DegreeOracle& oracle, u64 i_max, u64 j_max, unsigned cofactor) {
    if (i_max == 0 || j_max == 0) throw ContractViolation("two_variable_sum_generic: empty range");
    if (cofactor == 0) throw ContractViolation("two_variable_sum_generic: cofactor must be positive");
    ArithmeticTables t = tables_up_to(std::max(i_max, j_max));
    RawSum s = raw_double_sum(oracle, i_max, j_max, t, cofactor);
    // |terms| <= cofactor mu(j)^2 / (i^2 j phi(i) phi(j))
    double c2 = 0;
    for (u64 i = 1; i <= i_max; ++i) c2 += 1.0 / (static_cast<double>(i) * i * t.phi[i]);
    double tail = cofactor * (kK1 * inverse_square_totient_tail(i_max) + c2 * squarefree_totient_tail(j_max));
    return s.finish(Real(tail * (1 + 1e-9)));
}

ApproxReal truncated_split_sum(u64 i_max, u64 j_max) {
    if (i_max == 0 || j_max == 0) throw ContractViolation("truncated_split_sum: empty range");
    ArithmeticTables t = tables_up_to(std::max(i_max, j_max));
    RawSum s = raw_double_sum(lemma41_degree, i_max, j_max, t, 0);

    // For fixed i the j-sum is (2^t(i,1) / (2 i^2 phi(i))) sum_j mu(j) prod_{p|j} rho_p g_i(p)
    // with g_i(p) = 1/p^2 for p | i, 1/(p(p-1)) otherwise, and rho_p = 2 exactly
    // when p = 2, 5, 11 adds to t.
    const MobiusTail& mt = MobiusTail::shared();
    double tail = 0;
    for (u64 i = 1; i <= i_max; ++i) {
        auto rho = [&](u64 p) -> double {
            if (p == 2) return i % 4 == 2 ? 2 : 1;
            if (p == 5) return i % 5 != 0 ? 2 : 1;
            if (p == 11) return (i % 2 == 0 && i % 11 != 0) ? 2 : 1;
            return 1;
        };
        auto w = [&](u64 p) {
            double pd = static_cast<double>(p);
            double g = i % p == 0 ? 1 / (pd * pd) : 1 / (pd * (pd - 1));
            return rho(p) * g;
        };
        u64 generic_from = std::max<u64>(12, i + 1);
        double jt = generic_from <= mt.divisor_limit() ? mt.tail_bound(w, generic_from, static_cast<double>(j_max))
                                                      : 8 * squarefree_totient_tail(static_cast<double>(j_max));
        double weight = std::ldexp(1.0, degree_exponent_t(i, 1)) / (2.0 * i * i * t.phi[i]);
        tail += weight * jt;
    }
    // i > i_max: 2^t <= 8 and prod_p (1 + rho_p g_i(p)) <= 1.4094 K1
    tail += 4 * 1.4094 * kK1 * inverse_square_totient_tail(i_max);
    return s.finish(Real(tail * (1 + 1e-9)));
}

ExactRational violation_density(u64 ell) {
    ExactRational l(static_cast<std::int64_t>(ell));
    return l / (l.pow(3) - 1);
}

ExactRational violation_k_term(u64 ell, u64 k) {
    ExactRational inv = ExactRational(1) / ExactRational(static_cast<std::int64_t>(ell));
    ExactRational sum;
    for (u64 i = 1; i <= k; ++i) {
        auto ii = static_cast<std::int64_t>(i);
        sum += inv.pow(ii) * (inv.pow(ii - 1) - inv.pow(ii));
    }
    return inv.pow(static_cast<std::int64_t>(k)) * sum;
}

ExactRational violation_k_term_closed(u64 ell, u64 k) {
    ExactRational l(static_cast<std::int64_t>(ell));
    auto kk = static_cast<std::int64_t>(k);
    return (l.pow(-kk) - l.pow(-3 * kk)) / (l + 1);
}

ExactRational violation_k_sum_limit(u64 ell) {
    // sum_{k>=1} x^k = x/(1-x) for x = 1/l and x = 1/l^3
    ExactRational l(static_cast<std::int64_t>(ell));
    auto geometric = [](const ExactRational& x) { return x / (ExactRational(1) - x); };
    return (geometric(l.inverse()) - geometric(l.pow(-3))) / (l + 1);
}

namespace {

u64 halving_index(u64 r) {
    if (r < 2 || moebius(r) == 0) throw UnsupportedBase("artin: base must be squarefree and >= 2");
    // discriminant of Q(sqrt(r)), and the least j at which the degree halves
    u64 d = r % 4 == 1 ? r : 4 * r;
    return std::lcm<u64>(2, d);
}

}  // namespace

ExactRational artin_correction(u64 r) {
    u64 L = halving_index(r);
    int mu = moebius(L);
    if (mu == 0) return 1;
    ExactRational local = 1;
    for (auto& [p, e] : factorize(L).pairs) {
        auto pp = static_cast<std::int64_t>(p);
        local *= ExactRational(1) - ExactRational(1, pp * (pp - 1));
    }
    auto lphi = static_cast<std::int64_t>(L * euler_phi(L));
    return ExactRational(1) + ExactRational(mu, lphi) / local;
}

ApproxReal artin_additive(u64 r, u64 j_max) {
    u64 L = halving_index(r);
    if (j_max == 0) throw ContractViolation("artin_additive: j_max must be positive");
    bool halving = moebius(L) != 0;
    ArithmeticTables t = tables_up_to(j_max);
    RawSum s;
    for (u64 j = 1; j <= j_max; ++j) {
        if (t.mu[j] == 0) continue;
        u64 deg = j * t.phi[j];
        if (halving && j % L == 0) deg /= 2;
        Real term = 1 / Real(deg);
        s.value += t.mu[j] > 0 ? term : Real(-term);
        s.abs_terms += term;
        ++s.terms;
    }
    // Halving doubles the terms with L | j, so the sum splits as
    // sum mu(j)/(j phi(j)) + mu(L)/(L phi(L)) sum_{(m, L) = 1} mu(m)/(m phi(m)).
    const MobiusTail& mt = MobiusTail::shared();
    auto plain = [](u64 p) {
        double pd = static_cast<double>(p);
        return 1 / (pd * (pd - 1));
    };
    double jm = static_cast<double>(j_max);
    double tail = mt.tail_bound(plain, 2, jm);
    if (halving) {
        auto coprime = [&](u64 p) { return L % p == 0 ? 0.0 : plain(p); };
        double y = jm / static_cast<double>(L);
        double second = L + 1 <= mt.divisor_limit() ? mt.tail_bound(coprime, L + 1, y) : squarefree_totient_tail(y);
        tail += second / (static_cast<double>(L) * static_cast<double>(euler_phi(L)));
    }
    return s.finish(Real(tail * (1 + 1e-9)));
}

ApproxReal artin_product(const ExactRational& correction, u64 prime_bound) {
    return correction * artin_constant(prime_bound);
}

ApproxReal two_variable_product(const ExactRational& correction, u64 prime_bound) {
    return correction * euler_S(prime_bound);
}

}  // namespace primediv
