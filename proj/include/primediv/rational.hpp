#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace primediv {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    ExactRational(std::int64_t num, std::int64_t den);
    ExactRational(const mpz_class& num, const mpz_class& den);
    explicit ExactRational(const mpz_class& n);
    explicit ExactRational(mpq_class q);

    /// Parses "num/den" or "num".
    static ExactRational parse(const std::string& text);

    const mpq_class& raw() const { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    ExactRational operator-() const { return ExactRational(mpq_class(-q_)); }
    ExactRational& operator+=(const ExactRational& o);
    ExactRational& operator-=(const ExactRational& o);
    ExactRational& operator*=(const ExactRational& o);
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    ExactRational abs() const { return ExactRational(mpq_class(::abs(q_))); }
    ExactRational inverse() const;
    /// Integer power; negative exponents require a nonzero value.
    ExactRational pow(std::int64_t e) const;

    /// "num/den", or just "num" when the denominator is 1 and `always_slash`
    /// is false.
    std::string str(bool always_slash = true) const;
    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

/// p-adic valuation of a nonzero integer.
int valuation(const mpz_class& n, const mpz_class& p);

}  // namespace primediv
