#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qskein/scalar.hpp"

using namespace qskein;

namespace {

Scalar q_pow(long num, long den = 1) { return Scalar::q_power(make_rat(num, den)); }

// Theorem-style coefficient values used repeatedly below.
Scalar coeff_a() {
    return q_pow(5) + q_pow(4) + q_pow(1) + Scalar(1) + q_pow(-1) + q_pow(-4) +
           q_pow(-5);
}
Scalar coeff_b() {
    return -(q_pow(3) + q_pow(2) + q_pow(1) + q_pow(-1) + q_pow(-2) +
             q_pow(-3));
}

std::mt19937 rng(20240811);

Scalar random_laurent() {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-4, 4), coeff(-5, 5),
        den(1, 2);
    Laurent p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        p.add_term(make_rat(expo(rng), den(rng)), Int(coeff(rng)));
    return Scalar(p);
}

Scalar random_scalar() {
    Scalar den = random_laurent();
    while (den.is_zero()) den = random_laurent();
    return random_laurent() * den.inv();
}

}  // namespace

TEST_CASE("additive identity and basic field ops") {
    for (int i = 0; i < 50; ++i) {
        Scalar x = random_scalar();
        CHECK(x + Scalar() == x);
        CHECK(x * Scalar(1) == x);
        CHECK(x - x == Scalar());
        if (!x.is_zero()) CHECK(x * x.inv() == Scalar(1));
    }
}

TEST_CASE("paper product: f1 * g1 = 1/(q + 2 + 1/q)") {
    Scalar f1 = Scalar(1) / (Scalar(1) + q_pow(-1));
    Scalar g1 = Scalar(1) / (Scalar(1) + q_pow(1));
    Scalar expect = Scalar(1) / (q_pow(1) + Scalar(2) + q_pow(-1));
    CHECK(f1 * g1 == expect);
}

TEST_CASE("inverse of q - 1/q") {
    Scalar x = q_pow(1) - q_pow(-1);
    CHECK(x.inv() * x == Scalar(1));
}

TEST_CASE("quantum integers") {
    CHECK(quantum_int(0) == Scalar());
    CHECK(quantum_int(1) == Scalar(1));
    CHECK(quantum_int(2) == q_pow(1, 2) + q_pow(-1, 2));
    CHECK(quantum_int(3) == q_pow(1) + Scalar(1) + q_pow(-1));
    CHECK(quantum_int(-4) == -quantum_int(4));
    // defining formula
    for (long n = -8; n <= 8; ++n) {
        Scalar lhs = quantum_int(n);
        Scalar rhs = (q_pow(n, 2) - q_pow(-n, 2)) /
                     (q_pow(1, 2) - q_pow(-1, 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quantum integer product telescopes") {
    for (long m = 1; m <= 8; ++m) {
        for (long n = 1; n <= 8; ++n) {
            Scalar sum;
            for (long k = std::labs(m - n) + 1; k <= m + n - 1; k += 2)
                sum += quantum_int(k);
            CHECK(quantum_int(m) * quantum_int(n) == sum);
        }
    }
}

TEST_CASE("bar substitutes q -> 1/q") {
    CHECK(quantum_int(3).bar() == quantum_int(3));
    Scalar f1 = Scalar(1) / (Scalar(1) + q_pow(-1));
    Scalar g1 = Scalar(1) / (Scalar(1) + q_pow(1));
    CHECK(f1.bar() == g1);
    for (int i = 0; i < 40; ++i) {
        Scalar x = random_scalar(), y = random_scalar();
        CHECK(x.bar().bar() == x);
        CHECK((x * y).bar() == x.bar() * y.bar());
        CHECK((x + y).bar() == x.bar() + y.bar());
    }
}

TEST_CASE("eval at one") {
    CHECK(coeff_a().eval_at_one() == 7);
    CHECK(coeff_b().eval_at_one() == -6);
    for (long n = -20; n <= 20; ++n)
        CHECK(quantum_int(n).eval_at_one() == n);
}

TEST_CASE("eval at rational points") {
    Scalar x = q_pow(2) + q_pow(-1);
    CHECK(x.eval_at(make_rat(2)) == make_rat(9, 2));
    // pole detection
    Scalar y = Scalar(1) / (q_pow(1) - Scalar(2));
    CHECK_THROWS_AS((void)y.eval_at(make_rat(2)), pole_error);
    // fractional exponents need an exact root
    Scalar h = q_pow(1, 2);
    CHECK(h.eval_at(make_rat(4)) == 2);
    CHECK_THROWS_AS((void)h.eval_at(make_rat(2)), domain_error);
}

TEST_CASE("unit denominator detection") {
    CHECK(q_pow(6).is_unit_denominator());
    CHECK(!(Scalar(1) / (Scalar(1) + q_pow(1))).is_unit_denominator());
    CHECK(coeff_a().is_unit_denominator());
}

TEST_CASE("field axioms on random scalars") {
    for (int i = 0; i < 30; ++i) {
        Scalar x = random_scalar(), y = random_scalar(), z = random_scalar();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
    }
}

TEST_CASE("canonical rendering and parse round trip") {
    CHECK(coeff_a().to_string() ==
          "q^5 + q^4 + q + 1 + q^-1 + q^-4 + q^-5");
    CHECK(quantum_int(2).to_string() == "q^(1/2) + q^(-1/2)");
    Scalar f1 = Scalar(1) / (Scalar(1) + q_pow(-1));
    CHECK(f1.to_string() == "(q)/(q + 1)");
    CHECK(Scalar().to_string() == "0");

    for (int i = 0; i < 60; ++i) {
        Scalar x = random_scalar();
        CHECK(Scalar::parse(x.to_string()) == x);
    }
    CHECK_THROWS_AS(Scalar::parse("q^"), parse_error);
    CHECK_THROWS_AS(Scalar::parse("3 +"), parse_error);
}

TEST_CASE("square roots") {
    Scalar s = q_pow(2) / ((Scalar(1) + q_pow(1)) * (Scalar(1) + q_pow(1)));
    auto r = s.sqrt();
    REQUIRE(r.has_value());
    CHECK(*r * *r == s);
    CHECK(!(q_pow(1) + Scalar(1)).sqrt().has_value());
    // odd monomial exponents take half-integer roots
    auto m = q_pow(3).sqrt();
    REQUIRE(m.has_value());
    CHECK(*m == q_pow(3, 2));
}

TEST_CASE("normalization is idempotent and exact") {
    for (int i = 0; i < 40; ++i) {
        Scalar x = random_scalar();
        Scalar y(x.num(), x.den());
        CHECK(y == x);
        if (!x.is_zero()) {
            // gcd(num, den) must be trivial after normalization
            Laurent g = laurent_gcd(x.num(), x.den());
            CHECK(g.is_one());
        }
    }
    // inv(zero) rejected
    CHECK_THROWS_AS(Scalar().inv(), domain_error);
}
