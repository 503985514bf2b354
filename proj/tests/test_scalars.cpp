#include <doctest.h>

#include <random>

#include "aclt/bigint.hpp"
#include "aclt/polynomial.hpp"
#include "aclt/rational.hpp"

using namespace aclt;

TEST_CASE("BigInt arithmetic basics") {
    CHECK(BigInt(0).is_zero());
    CHECK(BigInt(12) + BigInt(30) == BigInt(42));
    CHECK(BigInt(12) - BigInt(30) == BigInt(-18));
    CHECK(BigInt(-7) * BigInt(-6) == BigInt(42));
    CHECK(BigInt(-7) * BigInt(6) == BigInt(-42));
    CHECK(BigInt(1) < BigInt(2));
    CHECK(BigInt(-5) < BigInt(3));
    CHECK((-BigInt(5)).to_string() == "-5");
}

TEST_CASE("BigInt survives multi-limb values") {
    // 2^200 by repeated doubling, checked against the known decimal expansion
    BigInt x = 1;
    for (int i = 0; i < 200; ++i) x *= BigInt(2);
    CHECK(x.to_string() == "1606938044258990275541962092341162602522202993782792835301376");
    BigInt y = BigInt::from_string(x.to_string());
    CHECK(x == y);
    CHECK((x - x).is_zero());
    CHECK(x + (-x) == BigInt(0));
    std::uint32_t rem = 0;
    CHECK(x.div_small(2, rem) * BigInt(2) == x);
    CHECK(rem == 0);
}

TEST_CASE("BigInt string round trip on random values") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        long long v = static_cast<long long>(rng() % 2000000000ull) - 1000000000ll;
        CHECK(BigInt::from_string(std::to_string(v)) == BigInt(v));
        CHECK(BigInt(v).to_string() == std::to_string(v));
    }
}

TEST_CASE("BigInt gcd") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    BigInt big = factorial(40), small = factorial(20);
    CHECK(BigInt::gcd(big, small) == small);
}

TEST_CASE("combinatorial helpers") {
    CHECK(factorial(6) == BigInt(720));
    CHECK(double_factorial(11) == BigInt(10395));
    CHECK(double_factorial(0) == BigInt(1));
    CHECK(binomial(8, 4) == BigInt(70));
    CHECK(binomial(4, 9) == BigInt(0));
    CHECK(falling_factorial(16, 3) == BigInt(16 * 15 * 14));
    CHECK(falling_factorial(3, 5) == BigInt(0));
    CHECK(factorial(20).to_string() == "2432902008176640000");
}

TEST_CASE("Rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(3, 4) < Rational(4, 5));
    CHECK(Rational(-3, 4) < Rational(1, 5));
    CHECK(Rational(1, 3).pow(3) == Rational(1, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("Rational strings") {
    CHECK(Rational(5, 2).to_string() == "5/2");
    CHECK(Rational(-5, 2).to_string() == "-5/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational::from_string("5/2") == Rational(5, 2));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational::from_string("6/-4") == Rational(-3, 2));
    CHECK(Rational(5, 2).to_double() == doctest::Approx(2.5));
}

TEST_CASE("Rational distributes on random triples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
    for (int t = 0; t < 300; ++t) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + b == b + a);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("GaussianRational complex arithmetic") {
    GaussianRational i{Rational(0), Rational(1)};
    CHECK(i * i == GaussianRational{Rational(-1)});
    GaussianRational z{Rational(1, 2), Rational(-3, 4)};
    CHECK(z * z.conj() == GaussianRational{z.modulus_squared()});
    CHECK((z / z) == GaussianRational{Rational(1)});
    CHECK(z.to_string() == "1/2-3/4i");
    CHECK(GaussianRational{Rational(0), Rational(2)}.to_string() == "2i");
    CHECK(GaussianRational{Rational(3)}.to_string() == "3");
}

TEST_CASE("Polynomial arithmetic and rendering") {
    Polynomial p = Polynomial::monomial(1);       // q
    Polynomial one{1};
    CHECK((one + p).to_string() == "1 + q");
    Polynomial f(std::vector<Rational>{5, 6, 3, 1});
    CHECK(f.to_string() == "5 + 6*q + 3*q^2 + q^3");
    CHECK(f.evaluate(1) == Rational(15));
    CHECK(f.evaluate(0) == Rational(5));
    CHECK(Polynomial::q_integer(3).to_string() == "1 + q + q^2");
    CHECK((p * p).to_string() == "q^2");
    CHECK((f - f).is_zero());
    CHECK(Polynomial{}.to_string() == "0");
    Polynomial g = Polynomial::q_integer(2) * Polynomial::q_integer(2);
    CHECK(g.to_string() == "1 + 2*q + q^2");
}
