#pragma once

// Exact and certified-decimal evaluation of the density formulas: the
// constant S, the S_{m,n} coefficients, the split/inert/total densities of
// the (1,1,3,1) sequence, Artin densities and violation densities.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "primediv/rational.hpp"
#include "primediv/real.hpp"

namespace primediv {

inline constexpr std::uint64_t kDefaultEulerBound = 10'000'000;

struct DensityResult {
    std::optional<ExactRational> coefficient;  // multiple of S, when applicable
    ApproxReal decimal;
    std::string formula_id;
};

std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);

/// The exponent t of the degree formula: with D = {4,5,11} for even i,
/// {4,5} for odd i and even j, {5} for odd ij, t = #{d in D : d | ij}.
int degree_exponent_t(std::uint64_t i, std::uint64_t j);
/// 2^(1-t) i^2 j phi(ij). Throws ContractViolation on 64-bit overflow.
std::uint64_t lemma41_degree(std::uint64_t i, std::uint64_t j);
/// i^2 j phi(ij), the degree without entanglement.
std::uint64_t naive_degree(std::uint64_t i, std::uint64_t j);

/// 1 - p/(p^3 - 1).
ExactRational euler_factor(std::uint64_t p);

/// S_{m,n} / S = (mn)^-3 prod_{p|n} -p^4/(p^3-p-1) prod_{p|m, p!|n} (p^3+p^2)/(p^3-p-1).
ExactRational s_mn(std::uint64_t m, std::uint64_t n);

/// Half the S_{m,n} combination; without the correction term S_{1,5} - S_{2,5}
/// when include_correction is false.
ExactRational split_coefficient(bool include_correction = true);

struct InertComponents {
    ExactRational three_mod_four;  // primes p = 3 mod 4
    ExactRational one_mod_four;    // primes p = 1 mod 4
    ExactRational total() const { return three_mod_four + one_mod_four; }
};
/// Both components from their Euler-factor expressions.
InertComponents inert_components();

DensityResult delta_split_closed(std::uint64_t euler_bound = kDefaultEulerBound);
DensityResult delta_inert_closed(std::uint64_t euler_bound = kDefaultEulerBound);
DensityResult delta_inert_three_mod_four(std::uint64_t euler_bound = kDefaultEulerBound);
DensityResult delta_inert_one_mod_four(std::uint64_t euler_bound = kDefaultEulerBound);
DensityResult delta_total(std::uint64_t euler_bound = kDefaultEulerBound);

using DegreeOracle = std::function<std::uint64_t(std::uint64_t, std::uint64_t)>;

/// sum_{i <= i_max} sum_{j <= j_max} mu(j) / oracle(i, j). The tail bound
/// assumes oracle(i, j) >= naive_degree(i, j) / cofactor and uses absolute
/// values only; ContractViolation if the assumption fails in range.
ApproxReal two_variable_sum_generic(const DegreeOracle& oracle, std::uint64_t i_max, std::uint64_t j_max,
                                    unsigned cofactor = 4);

/// The same double sum with lemma41_degree, with a tail bound that uses the
/// cancellation in the j-sums.
ApproxReal truncated_split_sum(std::uint64_t i_max, std::uint64_t j_max);

/// l/(l^3 - 1).
ExactRational violation_density(std::uint64_t ell);
/// l^-k sum_{i=1..k} l^-i (l^-(i-1) - l^-i), evaluated term by term.
ExactRational violation_k_term(std::uint64_t ell, std::uint64_t k);
/// (l^-k - l^-3k)/(l+1).
ExactRational violation_k_term_closed(std::uint64_t ell, std::uint64_t k);
/// sum_{k>=1} of the closed term, by the geometric series.
ExactRational violation_k_sum_limit(std::uint64_t ell);

/// sum_{j <= j_max} mu(j)/[F_j : Q] for a positive squarefree base r >= 2.
/// Throws UnsupportedBase otherwise.
ApproxReal artin_additive(std::uint64_t r, std::uint64_t j_max);
/// The factor c_r with artin_additive(r, infinity) = c_r * A, from the same
/// degree rule: 1 + mu(L)/(L phi(L)) prod_{p | L} (1 - 1/(p(p-1)))^-1 when
/// the halving index L is squarefree, else 1. Gives 20/19 for r = 5.
ExactRational artin_correction(std::uint64_t r);
/// correction * prod_{l <= bound} (1 - 1/(l(l-1))).
ApproxReal artin_product(const ExactRational& correction, std::uint64_t prime_bound);
/// correction * S.
ApproxReal two_variable_product(const ExactRational& correction, std::uint64_t prime_bound);

}  // namespace primediv
