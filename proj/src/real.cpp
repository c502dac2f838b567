#include "primediv/real.hpp"

#include <cmath>
#include <sstream>

namespace primediv {

Real to_real(const ExactRational& x) {
    return Real(x.num().get_str()) / Real(x.den().get_str());
}

double ApproxReal::error_double() const {
    double d = abs_error.convert_to<double>();
    return std::nextafter(d, INFINITY);
}

ApproxReal operator+(const ApproxReal& a, const ApproxReal& b) {
    Real v = a.value + b.value;
    return {v, a.abs_error + b.abs_error + abs(v) * unit_roundoff()};
}

ApproxReal operator-(const ApproxReal& a, const ApproxReal& b) {
    Real v = a.value - b.value;
    return {v, a.abs_error + b.abs_error + abs(v) * unit_roundoff()};
}

ApproxReal operator*(const ApproxReal& a, const ApproxReal& b) {
    Real v = a.value * b.value;
    Real err = abs(a.value) * b.abs_error + abs(b.value) * a.abs_error + a.abs_error * b.abs_error;
    return {v, err + abs(v) * unit_roundoff()};
}

ApproxReal operator*(const ExactRational& c, const ApproxReal& a) {
    // conversion of c rounds twice (num/den are exact below 2^113, the
    // division rounds once), then the product rounds once more
    Real cr = to_real(c);
    Real v = cr * a.value;
    return {v, abs(cr) * a.abs_error * (1 + 4 * unit_roundoff()) + abs(v) * 4 * unit_roundoff()};
}

std::string ApproxReal::str(int digits) const {
    std::ostringstream os;
    os.precision(digits);
    os << std::fixed << value;
    return os.str();
}

}  // namespace primediv
