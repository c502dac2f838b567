#include <doctest.h>

#include <random>

#include "primediv/errors.hpp"
#include "primediv/modular.hpp"
#include "primediv/recurrence.hpp"

using namespace primediv;

namespace {

AlgebraicNumber sqrt5(ExactRational a, ExactRational b) { return {5, std::move(a), std::move(b)}; }

const AlgebraicNumber eps = sqrt5(ExactRational(1, 2), ExactRational(1, 2));  // (1 + sqrt5)/2

}  // namespace

TEST_CASE("quadratic arithmetic") {
    AlgebraicNumber x = sqrt5(1, 2), y = sqrt5(ExactRational(1, 3), -1);
    CHECK(x * x.inverse() == sqrt5(1, 0));
    CHECK(x.norm() == ExactRational(1 - 20));
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x.trace() == ExactRational(2));
    CHECK(x.pow(3) == x * x * x);
    CHECK(x.pow(-2) * x.pow(2) == sqrt5(1, 0));
    CHECK_THROWS(sqrt5(0, 0).inverse());
    CHECK_THROWS(x + AlgebraicNumber(2, 1, 1));
    // half-integer coordinates
    CHECK(eps.basis_mode() == BasisMode::HalfIntegerBasis);
    CHECK(eps.u() == ExactRational(0));
    CHECK(eps.v() == ExactRational(1));
    CHECK(AlgebraicNumber(2, 1, 1).basis_mode() == BasisMode::SqrtBasis);
}

TEST_CASE("roots of unity") {
    CHECK(AlgebraicNumber(-1, 0, 1).is_root_of_unity());                            // i
    CHECK(AlgebraicNumber(-3, ExactRational(-1, 2), ExactRational(1, 2)).is_root_of_unity());  // zeta_3
    CHECK(AlgebraicNumber::rational(-1).is_root_of_unity());
    CHECK_FALSE(eps.is_root_of_unity());
    CHECK_FALSE(AlgebraicNumber(-1, ExactRational(3, 5), ExactRational(4, 5)).is_root_of_unity());
}

TEST_CASE("quadratic context") {
    auto c = QuadraticContext::from_coefficients(1, 1);
    CHECK(c.disc_poly == 5);
    CHECK(c.D == 5);
    CHECK(c.field_kind == FieldKind::Quadratic);
    CHECK(c.basis_mode == BasisMode::HalfIntegerBasis);
    CHECK(c.alpha() == eps);
    auto c2 = QuadraticContext::from_coefficients(2, 11);  // disc 48 = 4^2 * 3
    CHECK(c2.D == 3);
    CHECK(c2.k == 4);
    CHECK(c2.basis_mode == BasisMode::SqrtBasis);
    CHECK(c2.field_discriminant() == 12);
    auto c3 = QuadraticContext::from_coefficients(3, -2);
    CHECK(c3.field_kind == FieldKind::Rational);
    CHECK(c3.alpha() == AlgebraicNumber::rational(2));
    auto c4 = QuadraticContext::from_coefficients(1, -3);  // disc -11
    CHECK(c4.D == -11);
    // alpha-coordinates reconstruct the element
    AlgebraicNumber x(5, ExactRational(7, 3), ExactRational(-2, 9));
    auto [c0, c1] = c.alpha_coordinates(x);
    CHECK(AlgebraicNumber(5, c0, 0) + AlgebraicNumber(5, c1, 0) * c.alpha() == x);
}

TEST_CASE("prime ideal valuations") {
    // pi = 1 - 3 eps has norm -11; 11 splits in Q(sqrt5)
    AlgebraicNumber pi = sqrt5(1, 0) - sqrt5(3, 0) * eps;
    CHECK(pi.norm() == ExactRational(-11));
    auto v = prime_valuations(pi);
    REQUIRE(v.size() == 1);
    CHECK(v.begin()->first.p == 11);
    CHECK(v.begin()->second == 1);
    auto vq = prime_valuations(pi / pi.conj());
    REQUIRE(vq.size() == 2);
    int total = 0;
    for (auto& [lab, e] : vq) total += e;
    CHECK(total == 0);
    // inert 2 and 3, ramified sqrt5
    CHECK(prime_valuations(sqrt5(6, 0)).at({2, 0}) == 1);
    CHECK(prime_valuations(sqrt5(6, 0)).at({3, 0}) == 1);
    CHECK(prime_valuations(sqrt5(0, 1)).at({5, 0}) == 1);
    CHECK(prime_valuations(eps).empty());
    // 2 splits in Q(sqrt(-7)); (1 + sqrt(-7))/2 has norm 2
    auto v7 = prime_valuations(AlgebraicNumber(-7, ExactRational(1, 2), ExactRational(1, 2)));
    REQUIRE(v7.size() == 1);
    CHECK(v7.begin()->first.p == 2);
    CHECK(prime_valuations(AlgebraicNumber::rational(ExactRational(12, 5))).at({5, 0}) == -1);
}

TEST_CASE("p-adic square roots") {
    for (int p : {11, 19, 29}) {
        mpz_class pp(p), m;
        mpz_pow_ui(m.get_mpz_t(), pp.get_mpz_t(), 6);
        mpz_class s = padic_sqrt(5, pp, 6);
        mpz_class d = s * s - 5;
        CHECK(mpz_divisible_p(d.get_mpz_t(), m.get_mpz_t()));
    }
    mpz_class s = padic_sqrt(-7, 2, 10);
    mpz_class d = s * s + 7;
    CHECK(mpz_divisible_ui_p(d.get_mpz_t(), 1024));
}

TEST_CASE("root_quotient examples") {
    AlgebraicNumber r = root_quotient(Recurrence::default_sequence());
    CHECK(r == -(eps * eps));
    CHECK(r.norm() == ExactRational(1));
    CHECK(r * r.conj() == sqrt5(1, 0));
    CHECK(r.u() == ExactRational(-1));
    CHECK(r.v() == ExactRational(-1));
    CHECK(root_quotient(Recurrence(3, -2, 1, 5)) == AlgebraicNumber::rational(2));
    CHECK_THROWS_AS(root_quotient(Recurrence(2, -1, 1, 1)), InseparableError);
}

TEST_CASE("initial_quotient examples") {
    CHECK(initial_quotient(Recurrence::lucas()) == sqrt5(-1, 0));
    AlgebraicNumber q = initial_quotient(Recurrence::default_sequence());
    AlgebraicNumber pi = sqrt5(1, 0) - sqrt5(3, 0) * eps;
    CHECK(q * sqrt5(-11, 0) - pi * pi == sqrt5(0, 0));
    CHECK(q.norm() == ExactRational(1));
    CHECK_THROWS_AS(initial_quotient(Recurrence(3, -2, 1, 1)), DegenerateInitialError);
    CHECK_THROWS_AS(Recurrence(1, 0, 1, 1), FirstOrderError);
}

TEST_CASE("classify examples") {
    auto lucas = classify(Recurrence::lucas());
    CHECK(lucas.kind == ClassificationKind::Torsion);
    CHECK(lucas.quotient_kind == QuotientKind::Quadratic);
    auto main = classify(Recurrence::default_sequence());
    CHECK(main.kind == ClassificationKind::NonTorsion);
    CHECK(main.quotient_kind == QuotientKind::Quadratic);
    CHECK(classify(0, -1, 1, 1).kind == ClassificationKind::DegenerateRootOfUnity);
    CHECK(classify(1, 0, 1, 1).kind == ClassificationKind::FirstOrderReject);
    CHECK(classify(2, -1, 0, 1).kind == ClassificationKind::Inseparable);
    CHECK(classify(3, -2, 1, 1).kind == ClassificationKind::FirstOrderReject);
    CHECK(classify(3, -2, 1, 5).kind == ClassificationKind::NonTorsion);
    CHECK(classify(3, -2, 1, 5).quotient_kind == QuotientKind::Rational);
    // Fibonacci (q = 1), 2^n + 4^n (q = -1), 3^n - 2^n (q = 1)
    CHECK(classify(1, 1, 0, 1).kind == ClassificationKind::Torsion);
    CHECK(classify(6, -8, 2, 6).kind == ClassificationKind::Torsion);
    CHECK(classify(5, -6, 0, 1).kind == ClassificationKind::Torsion);
    // x_n = 4^n + 2^(n+1): q = -2 = -r, torsion with relation q = r * (-1)
    auto c = classify(6, -8, 3, 8);
    CHECK(c.kind == ClassificationKind::Torsion);
    REQUIRE(c.torsion_relation.has_value());
    CHECK(c.torsion_relation->first == 1);
    CHECK(c.torsion_relation->second == 1);
}

TEST_CASE("term_mod examples") {
    CHECK(term_mod(Recurrence::default_sequence(), 5, 1000000000) == 14);
    CHECK(term_mod(Recurrence::default_sequence(), 3, 5) == 0);
    CHECK(term_mod(Recurrence::lucas(), 4, 100) == 7);
    CHECK(term_mod(Recurrence(1, -1, -5, 3), 0, 7) == 2);
}

TEST_CASE("property: norms, orientation and scaling over a random corpus") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> coef(-9, 9);
    int tested = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int a1 = coef(rng), a0 = coef(rng), x0 = coef(rng), x1 = coef(rng);
        if (a0 == 0 || a1 * a1 + 4 * a0 == 0) continue;
        Recurrence rec(a1, a0, x0, x1);
        if (rec.initial_norm() == 0) continue;
        ++tested;
        AlgebraicNumber r = root_quotient(rec), q = initial_quotient(rec);
        if (rec.context().field_kind == FieldKind::Quadratic) {
            CHECK(r.norm() == ExactRational(1));
            CHECK(q.norm() == ExactRational(1));
        }
        CHECK(root_quotient(rec, Orientation::Swapped) == r.inverse());
        CHECK(initial_quotient(rec, Orientation::Swapped) == q.inverse());
        for (int k : {-3, 2, 7}) {
            Recurrence scaled(a1, a0, k * x0, k * x1);
            CHECK(initial_quotient(scaled) == q);
            CHECK(classify(scaled).kind == classify(rec).kind);
        }
        // the recurrence relation holds for iterated terms
        const std::uint64_t m = 1000003;
        for (std::uint64_t n = 0; n < 10; ++n) {
            std::uint64_t lhs = term_mod(rec, n + 2, m);
            std::uint64_t rhs = (mod::reduce(a1, m) * term_mod(rec, n + 1, m) +
                                 mod::reduce(a0, m) * term_mod(rec, n, m)) % m;
            CHECK(lhs == rhs);
        }
    }
    CHECK(tested > 200);
}
