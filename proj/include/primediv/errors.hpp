#pragma once

#include <stdexcept>
#include <string>

namespace primediv {

/// f = T^2 - a1*T - a0 has a double root, so the root quotient is 1.
class InseparableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// x1 equals alpha*x0 or conj(alpha)*x0: the sequence has order < 2.
class DegenerateInitialError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// a0 = 0, the sequence satisfies a first-order recurrence.
class FirstOrderError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A denominator or norm vanishes modulo the prime.
class NotInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A documented precondition of an operation was not met.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The recurrence class (degenerate, inseparable, ...) is not supported by
/// the requested operation. The message names the classification.
class DegenerateRecurrenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Artin base outside the supported class (positive squarefree >= 2).
class UnsupportedBase : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace primediv
