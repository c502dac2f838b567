#include "primediv/rational.hpp"

#include <stdexcept>

namespace primediv {

ExactRational::ExactRational(std::int64_t n) : q_(mpz_class(static_cast<long>(n))) {}

ExactRational::ExactRational(std::int64_t num, std::int64_t den)
    : ExactRational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

ExactRational::ExactRational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("ExactRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

ExactRational::ExactRational(const mpz_class& n) : q_(n) {}

ExactRational::ExactRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

ExactRational ExactRational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return ExactRational(mpz_class(text));
    return ExactRational(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
}

ExactRational& ExactRational::operator+=(const ExactRational& o) {
    q_ += o.q_;
    return *this;
}
ExactRational& ExactRational::operator-=(const ExactRational& o) {
    q_ -= o.q_;
    return *this;
}
ExactRational& ExactRational::operator*=(const ExactRational& o) {
    q_ *= o.q_;
    return *this;
}
ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
    q_ /= o.q_;
    return *this;
}

ExactRational ExactRational::inverse() const {
    if (is_zero()) throw std::domain_error("ExactRational: inverse of zero");
    return ExactRational(mpq_class(1) / q_);
}

ExactRational ExactRational::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return ExactRational(n, d);
}

std::string ExactRational::str(bool always_slash) const {
    if (!always_slash && is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(false); }

int valuation(const mpz_class& n, const mpz_class& p) {
    if (n == 0) throw std::domain_error("valuation of zero");
    mpz_class m = n;
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

}  // namespace primediv
