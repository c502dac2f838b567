#pragma once

// Real numbers with an explicit absolute error bound.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <string>

#include "primediv/rational.hpp"

namespace primediv {

/// 113-bit mantissa binary float.
using Real = boost::multiprecision::cpp_bin_float_quad;

/// Unit roundoff of Real (round to nearest).
inline Real unit_roundoff() { return boost::multiprecision::ldexp(Real(1), -113); }

Real to_real(const ExactRational& x);

/// value is within abs_error of the quantity it approximates. Every operation
/// adds a rounding allowance so the bound stays valid.
struct ApproxReal {
    Real value{0};
    Real abs_error{0};

    double to_double() const { return value.convert_to<double>(); }
    double error_double() const;  // abs_error rounded up to double

    bool contains(const Real& x) const { return abs(value - x) <= abs_error; }

    friend ApproxReal operator+(const ApproxReal& a, const ApproxReal& b);
    friend ApproxReal operator-(const ApproxReal& a, const ApproxReal& b);
    friend ApproxReal operator*(const ApproxReal& a, const ApproxReal& b);
    friend ApproxReal operator*(const ExactRational& c, const ApproxReal& a);

    /// Fixed notation with the given number of digits after the point.
    std::string str(int digits = 15) const;
};

}  // namespace primediv
