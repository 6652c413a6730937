#include <doctest.h>

#include <random>

#include "ncnat/errors.hpp"
#include "ncnat/polynomial.hpp"

using ncnat::BigInt;
using ncnat::Polynomial;

namespace {
Polynomial q() { return Polynomial::monomial(BigInt{1}, 1); }
}

TEST_CASE("polynomial: ring basics") {
    Polynomial one_plus_q = Polynomial{1} + q();
    Polynomial one_minus_q = Polynomial{1} - q();
    CHECK(one_plus_q + one_minus_q == Polynomial{2});
    CHECK(one_plus_q * one_plus_q == Polynomial::parse("1 + 2q + q^2"));
    CHECK((one_plus_q * one_plus_q).evaluate(BigInt{1}) == BigInt{4});
    CHECK((one_plus_q * one_minus_q) == Polynomial::parse("1 - q^2"));
    CHECK(Polynomial{}.is_zero());
    CHECK((one_plus_q - one_plus_q).is_zero());
}

TEST_CASE("polynomial: text form") {
    CHECK(Polynomial{}.to_string() == "0");
    CHECK(Polynomial{7}.to_string() == "7");
    CHECK(Polynomial{-7}.to_string() == "-7");
    CHECK(q().to_string() == "q");
    CHECK((-q()).to_string() == "-q");
    CHECK((Polynomial{5} - Polynomial{2} * q() +
           Polynomial::monomial(BigInt{1}, 2)).to_string() == "5 - 2q + q^2");
    CHECK((Polynomial{5} - Polynomial::monomial(BigInt{1}, 2)).to_string() == "5 - q^2");
    CHECK((Polynomial{-3} + q()).to_string() == "-3 + q");
    CHECK(Polynomial::monomial(BigInt{4}, 3).to_string() == "4q^3");
}

TEST_CASE("polynomial: parser accepts any term order and round trips") {
    CHECK(Polynomial::parse("0").is_zero());
    CHECK(Polynomial::parse("q + 5") == Polynomial::parse("5 + q"));
    CHECK(Polynomial::parse("-q+3") == Polynomial{3} - q());
    CHECK(Polynomial::parse("2*q^2 - q + 1") == Polynomial::parse("1 - q + 2q^2"));
    CHECK(Polynomial::parse("q + q") == Polynomial{2} * q());
    CHECK(Polynomial::parse("3 - 3") == Polynomial{});
    CHECK_THROWS_AS(Polynomial::parse(""), ncnat::ParseError);
    CHECK_THROWS_AS(Polynomial::parse("q^"), ncnat::ParseError);
    CHECK_THROWS_AS(Polynomial::parse("1 + "), ncnat::ParseError);
    CHECK_THROWS_AS(Polynomial::parse("x"), ncnat::ParseError);
    CHECK_THROWS_AS(Polynomial::parse("1 1"), ncnat::ParseError);

    std::mt19937_64 rng(107);
    for (int i = 0; i < 500; ++i) {
        std::vector<BigInt> coeffs;
        for (int d = 0; d <= static_cast<int>(rng() % 6); ++d)
            coeffs.emplace_back(static_cast<long long>(rng() % 21) - 10);
        Polynomial p{std::move(coeffs)};
        CHECK(Polynomial::parse(p.to_string()) == p);
    }
}

TEST_CASE("polynomial: ring laws on random triples") {
    std::mt19937_64 rng(109);
    auto random_poly = [&] {
        std::vector<BigInt> coeffs;
        for (int d = 0; d <= static_cast<int>(rng() % 5); ++d)
            coeffs.emplace_back(static_cast<long long>(rng() % 201) - 100);
        return Polynomial{std::move(coeffs)};
    };
    for (int i = 0; i < 500; ++i) {
        Polynomial a = random_poly(), b = random_poly(), c = random_poly();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // Evaluation is a ring homomorphism.
        BigInt x{static_cast<long long>(rng() % 7) - 3};
        CHECK((a * b + c).evaluate(x) == a.evaluate(x) * b.evaluate(x) + c.evaluate(x));
    }
}

TEST_CASE("polynomial: canonical form has no trailing zeros") {
    Polynomial p{std::vector<BigInt>{BigInt{1}, BigInt{0}, BigInt{0}}};
    CHECK(p.degree() == 0);
    CHECK(p == Polynomial{1});
}
