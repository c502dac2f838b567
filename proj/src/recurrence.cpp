#include "primediv/recurrence.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "primediv/errors.hpp"
#include "primediv/modular.hpp"

namespace primediv {

Recurrence::Recurrence(std::int64_t a1, std::int64_t a0, std::int64_t x0, std::int64_t x1)
    : a1_(a1), a0_(a0), x0_(x0), x1_(x1) {
    if (a0 == 0) throw FirstOrderError("recurrence with a0 = 0 is first order");
}

QuadraticContext Recurrence::context() const {
    return QuadraticContext::from_coefficients(mpz_class(static_cast<long>(a1_)),
                                               mpz_class(static_cast<long>(a0_)));
}

mpz_class Recurrence::initial_norm() const {
    mpz_class a1(static_cast<long>(a1_)), a0(static_cast<long>(a0_));
    mpz_class x0(static_cast<long>(x0_)), x1(static_cast<long>(x1_));
    return x1 * x1 - a1 * x0 * x1 - a0 * x0 * x0;
}

std::string Recurrence::str() const {
    std::ostringstream os;
    os << "(" << a1_ << "," << a0_ << "," << x0_ << "," << x1_ << ")";
    return os.str();
}

namespace {

std::pair<AlgebraicNumber, AlgebraicNumber> roots(const QuadraticContext& ctx, Orientation o) {
    if (ctx.disc_poly == 0) throw InseparableError("characteristic polynomial has a double root");
    if (o == Orientation::Canonical) return {ctx.alpha(), ctx.alpha_conj()};
    return {ctx.alpha_conj(), ctx.alpha()};
}

}  // namespace

AlgebraicNumber root_quotient(const Recurrence& rec, Orientation o) {
    auto [alpha, beta] = roots(rec.context(), o);
    return alpha / beta;
}

AlgebraicNumber initial_quotient(const Recurrence& rec, Orientation o) {
    auto [alpha, beta] = roots(rec.context(), o);
    if (rec.initial_norm() == 0) throw DegenerateInitialError("x1 is a root multiple of x0; order below 2");
    AlgebraicNumber x0(alpha.D(), ExactRational(rec.x0()), 0);
    AlgebraicNumber x1(alpha.D(), ExactRational(rec.x1()), 0);
    return (x1 - alpha * x0) / (x1 - beta * x0);
}

bool is_torsion_pair(const AlgebraicNumber& q, const AlgebraicNumber& r,
                     std::optional<std::pair<std::int64_t, std::int64_t>>* relation) {
    auto vq = prime_valuations(q);
    auto vr = prime_valuations(r);
    if (vr.empty()) {
        // r is a unit but not a root of unity, so the unit group has rank one
        // and the field is real quadratic: any other unit is torsion mod <r>.
        return vq.empty();
    }
    auto [label, r_val] = *vr.begin();
    auto it = vq.find(label);
    std::int64_t q_val = it == vq.end() ? 0 : it->second;
    // q^m = r^n on valuations: m*q_val = n*r_val
    std::int64_t g = std::gcd(q_val, static_cast<std::int64_t>(r_val));
    std::int64_t m = r_val / g, n = q_val / g;
    if (m < 0) {
        m = -m;
        n = -n;
    }
    std::set<PrimeIdealLabel> support;
    for (auto& kv : vq) support.insert(kv.first);
    for (auto& kv : vr) support.insert(kv.first);
    for (auto& lab : support) {
        std::int64_t a = vq.count(lab) ? vq.at(lab) : 0;
        std::int64_t b = vr.count(lab) ? vr.at(lab) : 0;
        if (m * a != n * b) return false;
    }
    AlgebraicNumber w = q.pow(m) * r.pow(-n);
    if (!w.is_root_of_unity()) return false;
    if (relation) *relation = std::make_pair(m, n);
    return true;
}

Classification classify(const Recurrence& rec) {
    Classification out;
    QuadraticContext ctx = rec.context();
    if (ctx.disc_poly == 0) {
        out.kind = ClassificationKind::Inseparable;
        return out;
    }
    out.quotient_kind = ctx.field_kind == FieldKind::Rational ? QuotientKind::Rational : QuotientKind::Quadratic;
    AlgebraicNumber r = root_quotient(rec);
    if (r.is_root_of_unity()) {
        out.kind = ClassificationKind::DegenerateRootOfUnity;
        return out;
    }
    if (rec.initial_norm() == 0) {
        // x1 = alpha*x0 or conj(alpha)*x0: a geometric sequence
        out.kind = ClassificationKind::FirstOrderReject;
        return out;
    }
    AlgebraicNumber q = initial_quotient(rec);
    std::optional<std::pair<std::int64_t, std::int64_t>> rel;
    out.kind = is_torsion_pair(q, r, &rel) ? ClassificationKind::Torsion : ClassificationKind::NonTorsion;
    out.torsion_relation = rel;
    return out;
}

Classification classify(std::int64_t a1, std::int64_t a0, std::int64_t x0, std::int64_t x1) {
    if (a0 == 0) return {};
    return classify(Recurrence(a1, a0, x0, x1));
}

std::uint64_t term_mod(const Recurrence& rec, std::uint64_t n, std::uint64_t m) {
    if (m < 2) throw ContractViolation("term_mod: modulus below 2");
    std::uint64_t a1 = mod::reduce(rec.a1(), m), a0 = mod::reduce(rec.a0(), m);
    std::uint64_t x = mod::reduce(rec.x0(), m), y = mod::reduce(rec.x1(), m);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t z = static_cast<std::uint64_t>(
            (static_cast<mod::u128>(a1) * y + static_cast<mod::u128>(a0) * x) % m);
        x = y;
        y = z;
    }
    return x;
}

std::string to_string(ClassificationKind k) {
    switch (k) {
        case ClassificationKind::FirstOrderReject: return "FirstOrderReject";
        case ClassificationKind::Inseparable: return "Inseparable";
        case ClassificationKind::DegenerateRootOfUnity: return "DegenerateRootOfUnity";
        case ClassificationKind::Torsion: return "Torsion";
        case ClassificationKind::NonTorsion: return "NonTorsion";
    }
    return "?";
}

std::string to_string(QuotientKind k) {
    switch (k) {
        case QuotientKind::Rational: return "Rational";
        case QuotientKind::Quadratic: return "Quadratic";
        case QuotientKind::Undefined: return "Undefined";
    }
    return "?";
}

}  // namespace primediv
