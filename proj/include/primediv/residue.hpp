#pragma once

// Per-prime computations: splitting type, reduction of q and r, orders, the
// membership test and the brute-force period oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primediv/factor.hpp"
#include "primediv/recurrence.hpp"

namespace primediv {

enum class PrimeCase { Split, Inert, Ramified, Bad };

std::string to_string(PrimeCase c);  // "split", "inert", ...

/// A recurrence with its quotients, their alpha-coordinates and the bad set
/// computed once. Only recurrences whose classification supports membership
/// (Torsion, NonTorsion) can be prepared.
struct PreparedRecurrence {
    Recurrence rec;
    QuadraticContext ctx;
    Classification classification;
    Orientation orientation = Orientation::Canonical;
    AlgebraicNumber q, r;
    std::pair<ExactRational, ExactRational> q_coords, r_coords;
    mpz_class initial_norm;
    /// Primes dividing disc_poly * a0 * initial_norm, ascending.
    std::vector<std::uint64_t> bad_set;

    /// Throws DegenerateRecurrenceError naming the classification when it is
    /// not Torsion or NonTorsion.
    static PreparedRecurrence make(const Recurrence& rec, Orientation o = Orientation::Canonical);

    bool is_bad(std::uint64_t p) const;
};

/// Ramified when p divides disc_poly, otherwise Bad when p is in bad_set,
/// otherwise Split or Inert by the quadratic character of disc_poly (p = 2:
/// disc = 1 mod 8 splits, 5 mod 8 is inert).
PrimeCase prime_case(std::uint64_t p, const QuadraticContext& ctx, const std::vector<std::uint64_t>& bad_set);

/// Image of an element of O in F_p^* (split) or in F_p[T]/(f) (inert), where
/// T stands for alpha. Split values sit in c0 with c1 = 0.
struct ResidueRep {
    PrimeCase kind = PrimeCase::Split;
    std::uint64_t p = 0;
    std::uint64_t c0 = 0, c1 = 0;
    std::uint64_t a1 = 0, a0 = 0;  // f mod p, needed for inert products

    ResidueRep operator*(const ResidueRep& o) const;
    ResidueRep pow(std::uint64_t e) const;
    bool is_one() const { return c0 == 1 % p && c1 == 0; }
    /// p - 1 (split) or p + 1 (inert: order of the norm-one kernel).
    std::uint64_t group_order() const { return kind == PrimeCase::Inert ? p + 1 : p - 1; }
    bool operator==(const ResidueRep&) const = default;
};

/// The smallest root of f mod p for a split or rational-kind prime.
std::uint64_t canonical_root(const QuadraticContext& ctx, std::uint64_t p);

/// Reduction of c0 + c1*alpha. Throws NotInvertibleError when a denominator
/// or the norm vanishes mod p, ContractViolation for Ramified/Bad cases.
ResidueRep reduce(const std::pair<ExactRational, ExactRational>& coords, const QuadraticContext& ctx,
                  std::uint64_t p, PrimeCase c);
ResidueRep reduce(const AlgebraicNumber& x, const QuadraticContext& ctx, std::uint64_t p, PrimeCase c);

/// Exact order of g in a cyclic group of order dividing group_order.
/// Throws ContractViolation if g^group_order != 1.
std::uint64_t element_order(const ResidueRep& g, const Factorization& group_order);

enum class CheckMethod { Orders, Oracle };

struct PrimeCheck {
    std::uint64_t p = 0;
    PrimeCase kind = PrimeCase::Bad;
    bool divides = false;
    std::optional<std::uint64_t> ord_r, ord_q;
    CheckMethod method = CheckMethod::Oracle;
    bool operator==(const PrimeCheck&) const = default;
};

/// Orders for Split/Inert primes, period oracle for Ramified/Bad ones.
PrimeCheck check_prime(const PreparedRecurrence& prep, std::uint64_t p);

/// Does p divide some term? Uses the order criterion for good primes.
bool divides_sequence(const PreparedRecurrence& prep, std::uint64_t p);
bool divides_sequence(const Recurrence& rec, std::uint64_t p, Orientation o = Orientation::Canonical);

/// Brute force: iterate (x_n, x_{n+1}) mod p until the state repeats. When
/// p | a0 the state map is not invertible and p^2 + 1 states are scanned.
bool period_oracle(const Recurrence& rec, std::uint64_t p);

/// The ell-part of ord(q) divides the ell-part of ord(r). Good primes only.
bool ell_part_inclusion(const PreparedRecurrence& prep, std::uint64_t p, std::uint64_t ell);

/// r^((p+1)/2) == (-1)^((p-1)/2) in F_p[T]/(f), p inert and odd.
bool check_43(const PreparedRecurrence& prep, std::uint64_t p);

struct Check44 {
    bool odd_order = false;       // ord(q) in the norm-one kernel is odd
    bool norm_is_square = false;  // the initial norm (-11 for (1,1,3,1)) is a square mod p
};
/// p inert, p = 1 mod 4.
Check44 check_44(const PreparedRecurrence& prep, std::uint64_t p);

}  // namespace primediv
