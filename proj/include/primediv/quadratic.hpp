#pragma once

// Exact arithmetic in Q and in quadratic fields Q(sqrt(D)).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "primediv/rational.hpp"

namespace primediv {

enum class FieldKind { Rational, Quadratic };
enum class BasisMode { SqrtBasis, HalfIntegerBasis };

/// An element a + b*sqrt(D) of Q(sqrt(D)) with D squarefree. D = 1 denotes
/// the field Q itself, in which case b is always zero.
///
/// The integral basis coordinates (u, v) with value u + v*omega are exposed
/// through u() and v(): omega = sqrt(D), or (1 + sqrt(D))/2 when D = 1 mod 4.
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;
    AlgebraicNumber(mpz_class D, ExactRational a, ExactRational b);
    static AlgebraicNumber rational(ExactRational a) { return {1, std::move(a), 0}; }

    const mpz_class& D() const { return D_; }
    const ExactRational& a() const { return a_; }
    const ExactRational& b() const { return b_; }

    FieldKind field_kind() const { return D_ == 1 ? FieldKind::Rational : FieldKind::Quadratic; }
    BasisMode basis_mode() const;
    ExactRational u() const;
    ExactRational v() const;

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    bool is_one() const { return b_.is_zero() && a_ == ExactRational(1); }

    AlgebraicNumber conj() const { return {D_, a_, -b_}; }
    ExactRational norm() const { return a_ * a_ - ExactRational(D_) * b_ * b_; }
    ExactRational trace() const { return a_ + a_; }
    AlgebraicNumber inverse() const;
    AlgebraicNumber pow(std::int64_t e) const;

    /// True iff some power x^k, 1 <= k <= 12, equals 1. Quadratic fields only
    /// contain roots of unity of order dividing 4 or 6.
    bool is_root_of_unity() const;

    AlgebraicNumber operator-() const { return {D_, -a_, -b_}; }
    AlgebraicNumber& operator+=(const AlgebraicNumber& o);
    AlgebraicNumber& operator-=(const AlgebraicNumber& o);
    AlgebraicNumber& operator*=(const AlgebraicNumber& o);
    AlgebraicNumber& operator/=(const AlgebraicNumber& o) { return *this *= o.inverse(); }
    friend AlgebraicNumber operator+(AlgebraicNumber x, const AlgebraicNumber& y) { return x += y; }
    friend AlgebraicNumber operator-(AlgebraicNumber x, const AlgebraicNumber& y) { return x -= y; }
    friend AlgebraicNumber operator*(AlgebraicNumber x, const AlgebraicNumber& y) { return x *= y; }
    friend AlgebraicNumber operator/(AlgebraicNumber x, const AlgebraicNumber& y) { return x /= y; }
    friend bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y) {
        return x.D_ == y.D_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

    /// "a + b*sqrt(D)" (or just "a" when rational).
    std::string str() const;

private:
    void require_same_field(const AlgebraicNumber& o) const;

    mpz_class D_{1};
    ExactRational a_{0};
    ExactRational b_{0};
};

/// Splitting data of f = T^2 - a1*T - a0 over Q.
struct QuadraticContext {
    mpz_class a1, a0;
    mpz_class disc_poly;  // a1^2 + 4*a0
    mpz_class D;          // squarefree part of disc_poly (1 in the rational kind)
    mpz_class k;          // disc_poly = k^2 * D, k >= 0
    FieldKind field_kind = FieldKind::Rational;
    BasisMode basis_mode = BasisMode::SqrtBasis;

    static QuadraticContext from_coefficients(const mpz_class& a1, const mpz_class& a0);

    /// The canonical root alpha = (a1 + sqrt(disc_poly))/2 and its conjugate.
    AlgebraicNumber alpha() const;
    AlgebraicNumber alpha_conj() const;

    /// Discriminant of the ring of integers (D or 4D); 1 in the rational kind.
    mpz_class field_discriminant() const;

    /// Coordinates (c0, c1) with x = c0 + c1*alpha. Requires disc_poly != 0.
    std::pair<ExactRational, ExactRational> alpha_coordinates(const AlgebraicNumber& x) const;
};

/// A prime ideal of the ring of integers, labelled by the rational prime below
/// it. Split primes carry branch +1 or -1 (the embeddings sqrt(D) -> +s, -s
/// in Z_p); inert and ramified primes, and primes of Q, carry branch 0.
struct PrimeIdealLabel {
    mpz_class p;
    int branch = 0;
    auto operator<=>(const PrimeIdealLabel& o) const {
        int c = cmp(p, o.p);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return branch <=> o.branch;
    }
    bool operator==(const PrimeIdealLabel& o) const { return p == o.p && branch == o.branch; }
};

/// The nonzero valuations of x at the prime ideals of its field.
std::map<PrimeIdealLabel, int> prime_valuations(const AlgebraicNumber& x);

/// A root of y^2 = D in Z/p^n Z for a prime p that splits in Q(sqrt(D)).
mpz_class padic_sqrt(const mpz_class& D, const mpz_class& p, unsigned n);

}  // namespace primediv
