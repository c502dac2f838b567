#include "primediv/quadratic.hpp"

#include <set>
#include <stdexcept>

#include "primediv/factor.hpp"

namespace primediv {

AlgebraicNumber::AlgebraicNumber(mpz_class D, ExactRational a, ExactRational b)
    : D_(std::move(D)), a_(std::move(a)), b_(std::move(b)) {
    if (D_ == 0) throw std::domain_error("AlgebraicNumber: D = 0");
    if (D_ == 1) {
        a_ += b_;
        b_ = 0;
    }
}

BasisMode AlgebraicNumber::basis_mode() const {
    mpz_class r = D_ % 4;
    if (r < 0) r += 4;
    return (D_ != 1 && r == 1) ? BasisMode::HalfIntegerBasis : BasisMode::SqrtBasis;
}

// u + v*(1 + sqrt(D))/2 = (u + v/2) + (v/2)*sqrt(D)
ExactRational AlgebraicNumber::u() const {
    return basis_mode() == BasisMode::HalfIntegerBasis ? a_ - b_ : a_;
}

ExactRational AlgebraicNumber::v() const {
    return basis_mode() == BasisMode::HalfIntegerBasis ? b_ * ExactRational(2) : b_;
}

void AlgebraicNumber::require_same_field(const AlgebraicNumber& o) const {
    if (D_ != o.D_) throw std::domain_error("AlgebraicNumber: operands from different fields");
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
    require_same_field(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) {
    require_same_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o) {
    require_same_field(o);
    ExactRational na = a_ * o.a_ + ExactRational(D_) * b_ * o.b_;
    ExactRational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    ExactRational n = norm();
    if (n.is_zero()) throw std::domain_error("AlgebraicNumber: inverse of zero");
    return {D_, a_ / n, -b_ / n};
}

AlgebraicNumber AlgebraicNumber::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    AlgebraicNumber result{D_, 1, 0};
    AlgebraicNumber base = *this;
    auto n = static_cast<std::uint64_t>(e);
    while (n) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return result;
}

bool AlgebraicNumber::is_root_of_unity() const {
    if (is_zero()) return false;
    if (is_rational()) return a_ == ExactRational(1) || a_ == ExactRational(-1);
    if (norm() != ExactRational(1)) return false;
    AlgebraicNumber power = *this;
    for (int k = 1; k <= 12; ++k) {
        if (power.is_one()) return true;
        power *= *this;
    }
    return false;
}

std::string AlgebraicNumber::str() const {
    if (b_.is_zero()) return a_.str(false);
    return a_.str(false) + " + " + b_.str(false) + "*sqrt(" + D_.get_str() + ")";
}

QuadraticContext QuadraticContext::from_coefficients(const mpz_class& a1, const mpz_class& a0) {
    QuadraticContext ctx;
    ctx.a1 = a1;
    ctx.a0 = a0;
    ctx.disc_poly = a1 * a1 + 4 * a0;
    if (ctx.disc_poly >= 0 && mpz_perfect_square_p(ctx.disc_poly.get_mpz_t())) {
        ctx.field_kind = FieldKind::Rational;
        ctx.D = 1;
        mpz_sqrt(ctx.k.get_mpz_t(), ctx.disc_poly.get_mpz_t());
        ctx.basis_mode = BasisMode::SqrtBasis;
        return ctx;
    }
    ctx.field_kind = FieldKind::Quadratic;
    mpz_class D = sgn(ctx.disc_poly) < 0 ? -1 : 1;
    mpz_class k = 1;
    for (auto& [p, e] : factorize(ctx.disc_poly).pairs) {
        for (unsigned i = 0; i < e / 2; ++i) k *= p;
        if (e % 2) D *= p;
    }
    ctx.D = D;
    ctx.k = k;
    mpz_class r = D % 4;
    if (r < 0) r += 4;
    ctx.basis_mode = r == 1 ? BasisMode::HalfIntegerBasis : BasisMode::SqrtBasis;
    return ctx;
}

AlgebraicNumber QuadraticContext::alpha() const {
    if (field_kind == FieldKind::Rational) return AlgebraicNumber::rational(ExactRational(a1 + k, 2));
    return {D, ExactRational(a1, 2), ExactRational(k, 2)};
}

AlgebraicNumber QuadraticContext::alpha_conj() const {
    if (field_kind == FieldKind::Rational) return AlgebraicNumber::rational(ExactRational(a1 - k, 2));
    return {D, ExactRational(a1, 2), ExactRational(-k, 2)};
}

mpz_class QuadraticContext::field_discriminant() const {
    if (field_kind == FieldKind::Rational) return 1;
    return basis_mode == BasisMode::HalfIntegerBasis ? D : mpz_class(4 * D);
}

std::pair<ExactRational, ExactRational> QuadraticContext::alpha_coordinates(const AlgebraicNumber& x) const {
    if (disc_poly == 0) throw std::domain_error("alpha_coordinates: inseparable polynomial");
    if (field_kind == FieldKind::Rational) {
        if (!x.is_rational()) throw std::domain_error("alpha_coordinates: element outside Q");
        return {x.a(), ExactRational(0)};
    }
    if (x.D() != D) throw std::domain_error("alpha_coordinates: element from another field");
    // sqrt(D) = (2*alpha - a1)/k
    ExactRational kk(k);
    ExactRational c1 = ExactRational(2) * x.b() / kk;
    ExactRational c0 = x.a() - x.b() * ExactRational(a1) / kk;
    return {c0, c1};
}

namespace {

mpz_class powm(const mpz_class& b, const mpz_class& e, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class sqrt_mod_prime(const mpz_class& a_in, const mpz_class& p) {
    mpz_class a = a_in % p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1)
        throw std::domain_error("sqrt_mod_prime: not a square");
    if (p % 4 == 3) return powm(a, (p + 1) / 4, p);
    mpz_class q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    mpz_class z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    mpz_class c = powm(z, q, p);
    mpz_class x = powm(a, (q + 1) / 2, p);
    mpz_class t = powm(a, q, p);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        mpz_class tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        mpz_class b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

int valuation_below(const mpz_class& residue, const mpz_class& p) {
    if (residue == 0) return -1;
    return valuation(residue, p);
}

}  // namespace

mpz_class padic_sqrt(const mpz_class& D, const mpz_class& p, unsigned n) {
    mpz_class modulus;
    if (p == 2) {
        mpz_class r = D % 8;
        if (r < 0) r += 8;
        if (r != 1) throw std::domain_error("padic_sqrt: 2 does not split");
        mpz_class s = 1;
        unsigned target = n + 2;
        for (unsigned e = 3; e < target; ++e) {
            mpz_class m;
            mpz_ui_pow_ui(m.get_mpz_t(), 2, e + 1);
            mpz_class diff = s * s - D;
            if (!mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t())) {
                mpz_class step;
                mpz_ui_pow_ui(step.get_mpz_t(), 2, e - 1);
                s += step;
            }
        }
        mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), n);
        mpz_class out = s % modulus;
        return out < 0 ? mpz_class(out + modulus) : out;
    }
    mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), n);
    mpz_class s = sqrt_mod_prime(D, p);
    // Newton iteration in Z/p^n
    for (;;) {
        mpz_class diff = (s * s - D) % modulus;
        if (diff == 0) break;
        mpz_class two_s = 2 * s, inv;
        mpz_invert(inv.get_mpz_t(), two_s.get_mpz_t(), modulus.get_mpz_t());
        s = (s - diff * inv) % modulus;
        if (s < 0) s += modulus;
    }
    return s;
}

std::map<PrimeIdealLabel, int> prime_valuations(const AlgebraicNumber& x) {
    if (x.is_zero()) throw std::domain_error("prime_valuations: zero");
    std::map<PrimeIdealLabel, int> out;
    if (x.D() == 1) {
        const ExactRational& a = x.a();
        std::set<mpz_class> primes;
        if (abs(a.num()) != 1)
            for (auto& p : prime_divisors(a.num())) primes.insert(p);
        if (a.den() != 1)
            for (auto& p : prime_divisors(a.den())) primes.insert(p);
        for (auto& p : primes) {
            int v = (mpz_divisible_p(a.num().get_mpz_t(), p.get_mpz_t()) ? valuation(a.num(), p) : 0) -
                    (mpz_divisible_p(a.den().get_mpz_t(), p.get_mpz_t()) ? valuation(a.den(), p) : 0);
            if (v != 0) out[{p, 0}] = v;
        }
        return out;
    }
    mpz_class d;
    mpz_lcm(d.get_mpz_t(), x.a().den().get_mpz_t(), x.b().den().get_mpz_t());
    mpz_class A = (x.a() * ExactRational(d)).num();
    mpz_class B = (x.b() * ExactRational(d)).num();
    const mpz_class& D = x.D();
    mpz_class norm_y = A * A - D * B * B;
    std::set<mpz_class> primes;
    if (abs(norm_y) != 1)
        for (auto& p : prime_divisors(norm_y)) primes.insert(p);
    if (d != 1)
        for (auto& p : prime_divisors(d)) primes.insert(p);

    mpz_class r4 = D % 4;
    if (r4 < 0) r4 += 4;
    mpz_class dk = r4 == 1 ? D : mpz_class(4 * D);
    for (auto& p : primes) {
        int vn = mpz_divisible_p(norm_y.get_mpz_t(), p.get_mpz_t()) ? valuation(norm_y, p) : 0;
        int vd = mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) ? valuation(d, p) : 0;
        int kron = mpz_kronecker(dk.get_mpz_t(), p.get_mpz_t());
        if (kron == 0) {
            if (int v = vn - 2 * vd) out[{p, 0}] = v;
        } else if (kron == -1) {
            if (int v = vn / 2 - vd) out[{p, 0}] = v;
        } else {
            unsigned precision = static_cast<unsigned>(vn) + 1;
            mpz_class s = padic_sqrt(D, p, precision);
            mpz_class modulus;
            mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), precision);
            for (int branch : {+1, -1}) {
                mpz_class img = (A + branch * B * s) % modulus;
                if (img < 0) img += modulus;
                int v_img = valuation_below(img, p);
                if (v_img < 0) throw std::logic_error("prime_valuations: insufficient p-adic precision");
                if (int v = v_img - vd) out[{p, branch}] = v;
            }
        }
    }
    return out;
}

}  // namespace primediv
