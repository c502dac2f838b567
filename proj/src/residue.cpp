#include "primediv/residue.hpp"

#include <algorithm>
#include <set>

#include "primediv/errors.hpp"
#include "primediv/modular.hpp"

namespace primediv {

std::string to_string(PrimeCase c) {
    switch (c) {
        case PrimeCase::Split: return "split";
        case PrimeCase::Inert: return "inert";
        case PrimeCase::Ramified: return "ramified";
        case PrimeCase::Bad: return "bad";
    }
    return "?";
}

namespace {

std::uint64_t mpz_mod(const mpz_class& x, std::uint64_t p) {
    return mpz_fdiv_ui(x.get_mpz_t(), p);
}

std::uint64_t rational_mod(const ExactRational& x, std::uint64_t p) {
    std::uint64_t den = mpz_mod(x.den(), p);
    auto inv = mod::inverse(den, p);
    if (!inv) throw NotInvertibleError("denominator vanishes mod " + std::to_string(p));
    return mod::mul(mpz_mod(x.num(), p), *inv, p);
}

}  // namespace

PreparedRecurrence PreparedRecurrence::make(const Recurrence& rec, Orientation o) {
    Classification cls = classify(rec);
    if (!cls.supports_membership())
        throw DegenerateRecurrenceError("recurrence " + rec.str() + " is " + to_string(cls.kind));
    QuadraticContext ctx = rec.context();
    AlgebraicNumber q = initial_quotient(rec, o);
    AlgebraicNumber r = root_quotient(rec, o);
    mpz_class nq = rec.initial_norm();
    std::set<mpz_class> bad;
    for (const mpz_class* v : {&ctx.disc_poly, &ctx.a0, &nq})
        for (auto& p : prime_divisors(*v)) bad.insert(p);
    PreparedRecurrence out{rec, ctx, cls, o, q, r, ctx.alpha_coordinates(q), ctx.alpha_coordinates(r), nq, {}};
    for (auto& p : bad) {
        // primes beyond 64 bits never occur as sieve inputs
        if (mpz_fits_ulong_p(p.get_mpz_t())) out.bad_set.push_back(p.get_ui());
    }
    return out;
}

bool PreparedRecurrence::is_bad(std::uint64_t p) const {
    return std::binary_search(bad_set.begin(), bad_set.end(), p);
}

PrimeCase prime_case(std::uint64_t p, const QuadraticContext& ctx, const std::vector<std::uint64_t>& bad_set) {
    std::uint64_t disc = mpz_mod(ctx.disc_poly, p);
    if (disc == 0) return PrimeCase::Ramified;
    if (std::find(bad_set.begin(), bad_set.end(), p) != bad_set.end()) return PrimeCase::Bad;
    if (ctx.field_kind == FieldKind::Rational) return PrimeCase::Split;
    if (p == 2) return mpz_mod(ctx.disc_poly, 8) == 1 ? PrimeCase::Split : PrimeCase::Inert;
    return mod::jacobi(disc, p) == 1 ? PrimeCase::Split : PrimeCase::Inert;
}

ResidueRep ResidueRep::operator*(const ResidueRep& o) const {
    ResidueRep out = *this;
    if (kind != PrimeCase::Inert) {
        out.c0 = mod::mul(c0, o.c0, p);
        return out;
    }
    // (x0 + x1 T)(y0 + y1 T) with T^2 = a1 T + a0
    std::uint64_t t2 = mod::mul(c1, o.c1, p);
    out.c0 = mod::add(mod::mul(c0, o.c0, p), mod::mul(t2, a0, p), p);
    out.c1 = mod::add(mod::add(mod::mul(c0, o.c1, p), mod::mul(c1, o.c0, p), p), mod::mul(t2, a1, p), p);
    return out;
}

ResidueRep ResidueRep::pow(std::uint64_t e) const {
    ResidueRep result = *this;
    result.c0 = 1 % p;
    result.c1 = 0;
    ResidueRep base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::uint64_t canonical_root(const QuadraticContext& ctx, std::uint64_t p) {
    std::uint64_t a1 = mpz_mod(ctx.a1, p), a0 = mpz_mod(ctx.a0, p);
    if (p == 2) {
        for (std::uint64_t u = 0; u < 2; ++u)
            if ((u * u + a1 * u + a0) % 2 == 0) return u;  // signs are irrelevant mod 2
        throw ContractViolation("canonical_root: f has no root mod 2");
    }
    auto s = mod::sqrt(mpz_mod(ctx.disc_poly, p), p);
    if (!s) throw ContractViolation("canonical_root: f has no root mod " + std::to_string(p));
    std::uint64_t half = (p + 1) / 2;
    std::uint64_t u1 = mod::mul(mod::add(a1, *s, p), half, p);
    std::uint64_t u2 = mod::mul(mod::sub(a1, *s, p), half, p);
    return std::min(u1, u2);
}

ResidueRep reduce(const std::pair<ExactRational, ExactRational>& coords, const QuadraticContext& ctx,
                  std::uint64_t p, PrimeCase c) {
    if (c != PrimeCase::Split && c != PrimeCase::Inert)
        throw ContractViolation("reduce: only split and inert primes reduce");
    ResidueRep out;
    out.kind = c;
    out.p = p;
    out.a1 = mpz_mod(ctx.a1, p);
    out.a0 = mpz_mod(ctx.a0, p);
    std::uint64_t c0 = rational_mod(coords.first, p);
    std::uint64_t c1 = rational_mod(coords.second, p);
    // N(c0 + c1 alpha) = c0^2 + a1 c0 c1 - a0 c1^2
    std::uint64_t norm = mod::sub(mod::add(mod::mul(c0, c0, p), mod::mul(mod::mul(out.a1, c0, p), c1, p), p),
                                  mod::mul(mod::mul(out.a0, c1, p), c1, p), p);
    if (norm == 0) throw NotInvertibleError("norm vanishes mod " + std::to_string(p));
    if (c == PrimeCase::Split) {
        std::uint64_t u = canonical_root(ctx, p);
        out.c0 = mod::add(c0, mod::mul(c1, u, p), p);
        out.c1 = 0;
    } else {
        out.c0 = c0;
        out.c1 = c1;
    }
    return out;
}

ResidueRep reduce(const AlgebraicNumber& x, const QuadraticContext& ctx, std::uint64_t p, PrimeCase c) {
    return reduce(ctx.alpha_coordinates(x), ctx, p, c);
}

std::uint64_t element_order(const ResidueRep& g, const Factorization& group_order) {
    std::uint64_t m = group_order.value();
    if (!g.pow(m).is_one()) throw ContractViolation("element_order: g^M != 1");
    for (auto& [ell, e] : group_order.pairs) {
        for (unsigned i = 0; i < e; ++i) {
            if (!g.pow(m / ell).is_one()) break;
            m /= ell;
        }
    }
    return m;
}

bool period_oracle(const Recurrence& rec, std::uint64_t p) {
    const std::uint64_t a1 = mod::reduce(rec.a1(), p), a0 = mod::reduce(rec.a0(), p);
    const std::uint64_t s0 = mod::reduce(rec.x0(), p), s1 = mod::reduce(rec.x1(), p);
    auto step = [&](std::uint64_t& x, std::uint64_t& y) {
        std::uint64_t z = mod::add(mod::mul(a1, y, p), mod::mul(a0, x, p), p);
        x = y;
        y = z;
    };
    std::uint64_t x = s0, y = s1;
    if (a0 != 0) {
        do {
            if (x == 0) return true;
            step(x, y);
        } while (x != s0 || y != s1);
        return false;
    }
    const std::uint64_t states = p * p + 1;
    for (std::uint64_t i = 0; i < states; ++i) {
        if (x == 0) return true;
        step(x, y);
    }
    return false;
}

namespace {

struct Orders {
    std::uint64_t ord_q, ord_r;
};

Orders orders(const PreparedRecurrence& prep, std::uint64_t p, PrimeCase c) {
    ResidueRep q = reduce(prep.q_coords, prep.ctx, p, c);
    ResidueRep r = reduce(prep.r_coords, prep.ctx, p, c);
    Factorization m = factorize(q.group_order());
    return {element_order(q, m), element_order(r, m)};
}

std::uint64_t ell_part(std::uint64_t n, std::uint64_t ell) {
    std::uint64_t out = 1;
    while (n % ell == 0) {
        n /= ell;
        out *= ell;
    }
    return out;
}

PrimeCase good_case(const PreparedRecurrence& prep, std::uint64_t p) {
    PrimeCase c = prime_case(p, prep.ctx, prep.bad_set);
    if (c != PrimeCase::Split && c != PrimeCase::Inert)
        throw ContractViolation("prime " + std::to_string(p) + " is " + to_string(c));
    return c;
}

}  // namespace

PrimeCheck check_prime(const PreparedRecurrence& prep, std::uint64_t p) {
    PrimeCheck out;
    out.p = p;
    out.kind = prime_case(p, prep.ctx, prep.bad_set);
    if (out.kind == PrimeCase::Ramified || out.kind == PrimeCase::Bad) {
        out.method = CheckMethod::Oracle;
        out.divides = period_oracle(prep.rec, p);
        return out;
    }
    Orders o = orders(prep, p, out.kind);
    out.method = CheckMethod::Orders;
    out.ord_q = o.ord_q;
    out.ord_r = o.ord_r;
    out.divides = o.ord_r % o.ord_q == 0;
    return out;
}

bool divides_sequence(const PreparedRecurrence& prep, std::uint64_t p) { return check_prime(prep, p).divides; }

bool divides_sequence(const Recurrence& rec, std::uint64_t p, Orientation o) {
    return divides_sequence(PreparedRecurrence::make(rec, o), p);
}

bool ell_part_inclusion(const PreparedRecurrence& prep, std::uint64_t p, std::uint64_t ell) {
    Orders o = orders(prep, p, good_case(prep, p));
    return ell_part(o.ord_r, ell) % ell_part(o.ord_q, ell) == 0;
}

bool check_43(const PreparedRecurrence& prep, std::uint64_t p) {
    if (good_case(prep, p) != PrimeCase::Inert || p == 2)
        throw ContractViolation("check_43 needs an odd inert prime");
    ResidueRep r = reduce(prep.r_coords, prep.ctx, p, PrimeCase::Inert);
    ResidueRep lhs = r.pow((p + 1) / 2);
    std::uint64_t sign = ((p - 1) / 2) % 2 == 0 ? 1 : p - 1;
    return lhs.c0 == sign && lhs.c1 == 0;
}

Check44 check_44(const PreparedRecurrence& prep, std::uint64_t p) {
    if (good_case(prep, p) != PrimeCase::Inert || p % 4 != 1)
        throw ContractViolation("check_44 needs an inert prime p = 1 mod 4");
    Orders o = orders(prep, p, PrimeCase::Inert);
    Check44 out;
    out.odd_order = o.ord_q % 2 == 1;
    out.norm_is_square = mod::jacobi(mpz_mod(prep.initial_norm, p), p) == 1;
    return out;
}

}  // namespace primediv
