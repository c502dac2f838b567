#pragma once

// Second-order recurrences x_{n+2} = a1*x_{n+1} + a0*x_n, their root and
// initial quotients, and the torsion classification.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "primediv/quadratic.hpp"

namespace primediv {

/// The four defining integers of a second-order recurrent sequence.
/// Construction rejects a0 = 0 with FirstOrderError.
class Recurrence {
public:
    Recurrence(std::int64_t a1, std::int64_t a0, std::int64_t x0, std::int64_t x1);

    /// (1,1,3,1): 3, 1, 4, 5, 9, 14, ... the CLI default.
    static Recurrence default_sequence() { return {1, 1, 3, 1}; }
    static Recurrence lucas() { return {1, 1, 2, 1}; }

    std::int64_t a1() const { return a1_; }
    std::int64_t a0() const { return a0_; }
    std::int64_t x0() const { return x0_; }
    std::int64_t x1() const { return x1_; }

    QuadraticContext context() const;

    /// x1^2 - a1*x0*x1 - a0*x0^2, the norm of x1 - alpha*x0. Zero exactly when
    /// the sequence has order below 2.
    mpz_class initial_norm() const;

    std::string str() const;
    bool operator==(const Recurrence&) const = default;

private:
    std::int64_t a1_, a0_, x0_, x1_;
};

/// Which root of f is called alpha. Swapped exchanges alpha and its
/// conjugate, which inverts both quotients.
enum class Orientation { Canonical, Swapped };

/// r = alpha / conj(alpha). Throws InseparableError when disc_poly = 0.
AlgebraicNumber root_quotient(const Recurrence& rec, Orientation o = Orientation::Canonical);

/// q = (x1 - alpha*x0) / (x1 - conj(alpha)*x0). Throws InseparableError when
/// disc_poly = 0 and DegenerateInitialError when the sequence has order < 2.
AlgebraicNumber initial_quotient(const Recurrence& rec, Orientation o = Orientation::Canonical);

enum class ClassificationKind { FirstOrderReject, Inseparable, DegenerateRootOfUnity, Torsion, NonTorsion };
enum class QuotientKind { Rational, Quadratic, Undefined };

struct Classification {
    ClassificationKind kind = ClassificationKind::FirstOrderReject;
    QuotientKind quotient_kind = QuotientKind::Undefined;
    /// For torsion cases found through nonzero valuations: q^m * r^(-n) is a
    /// root of unity. Absent when both quotients are units.
    std::optional<std::pair<std::int64_t, std::int64_t>> torsion_relation;

    bool supports_membership() const {
        return kind == ClassificationKind::Torsion || kind == ClassificationKind::NonTorsion;
    }
};

Classification classify(const Recurrence& rec);
/// Accepts a0 = 0 and reports FirstOrderReject instead of throwing.
Classification classify(std::int64_t a1, std::int64_t a0, std::int64_t x0, std::int64_t x1);

/// Torsion test for a pair of nonzero elements of one field, r not a root of
/// unity: is q a torsion element of Q(r)^* / <r>?
bool is_torsion_pair(const AlgebraicNumber& q, const AlgebraicNumber& r,
                     std::optional<std::pair<std::int64_t, std::int64_t>>* relation = nullptr);

/// x_n mod m by linear iteration, m >= 2.
std::uint64_t term_mod(const Recurrence& rec, std::uint64_t n, std::uint64_t m);

std::string to_string(ClassificationKind k);
std::string to_string(QuotientKind k);

}  // namespace primediv
