#include "btconv/errors.hpp"
#include "btconv/exact.hpp"
#include "oracle.hpp"

#include "doctest.h"

#include <sstream>

using btconv::Rat;

TEST_CASE("rationals are canonical")
{
    CHECK(Rat(6, 4).str() == "3/2");
    CHECK(Rat(3, -6).str() == "-1/2");
    CHECK(Rat(0, -5).str() == "0");
    CHECK(Rat(8, 4).str() == "2");
    CHECK(Rat::parse("-10/4") == Rat(-5, 2));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat(4, 2).is_integer());
    CHECK(Rat(-9, 3).to_long() == -3);
    CHECK_THROWS_AS(Rat(1, 0), btconv::DomainError);
    CHECK_THROWS_AS(Rat::parse("1/0"), btconv::DomainError);
    CHECK_THROWS_AS(Rat::parse("x/2"), btconv::DomainError);
    CHECK_THROWS_AS(Rat(1, 2).to_long(), btconv::DomainError);
    CHECK_THROWS_AS(Rat(1) / Rat(0), btconv::DomainError);

    std::ostringstream os;
    os << Rat(-5, 7);
    CHECK(os.str() == "-5/7");
}

TEST_CASE("parse and str round trip")
{
    std::mt19937_64 rng(11);
    for (const Rat& r : oracle::random_rats(rng, 200)) {
        CHECK(Rat::parse(r.str()) == r);
    }
}

TEST_CASE("field axioms on random rationals")
{
    std::mt19937_64 rng(3);
    auto v = oracle::random_rats(rng, 60);
    for (std::size_t i = 0; i + 2 < v.size(); i += 3) {
        const Rat& a = v[i];
        const Rat& b = v[i + 1];
        const Rat& c = v[i + 2];
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) {
            CHECK(a / b * b == a);
        }
        CHECK(((a <=> b) == 0) == (a == b));
    }
}

TEST_CASE("pow")
{
    CHECK(btconv::pow(Rat(2), 10) == Rat(1024));
    CHECK(btconv::pow(Rat(-1, 2), 3) == Rat(-1, 8));
    CHECK(btconv::pow(Rat(2, 3), -2) == Rat(9, 4));
    CHECK(btconv::pow(Rat(0), 0) == Rat(1));
    CHECK_THROWS_AS(btconv::pow(Rat(0), -1), btconv::DomainError);
    CHECK(btconv::sign_power(-3) == Rat(-1));
    CHECK(btconv::sign_power(4) == Rat(1));
}

TEST_CASE("integer binomials")
{
    CHECK(btconv::binom_int(5, 2) == Rat(10));
    CHECK(btconv::binom_int(3, 5) == Rat(0));
    CHECK(btconv::binom_int(0, 0) == Rat(1));
    CHECK(btconv::binom_int(4, -1) == Rat(0));
    CHECK_THROWS_AS(btconv::binom_int(-1, 0), btconv::DomainError);
    for (long n = 0; n <= 30; ++n) {
        for (long k = -1; k <= n + 1; ++k) {
            REQUIRE(btconv::binom_int(n, k) == oracle::pascal(n, k));
        }
    }
}

TEST_CASE("rational binomials")
{
    CHECK(btconv::binom_rat(Rat(-1, 2), 2) == Rat(3, 8));
    CHECK(btconv::binom_rat(Rat(3, 2), 2) == Rat(3, 8));
    CHECK(btconv::binom_rat(Rat(7), 0) == Rat(1));
    CHECK(btconv::binom_rat(Rat(11, 2), 2) == Rat(99, 8));
    CHECK(btconv::binom_rat(Rat(-1, 2), 2) == btconv::binom_int(4, 2) / Rat(16));
    CHECK(btconv::binom_rat(Rat(5), -2) == Rat(0));

    std::mt19937_64 rng(5);
    for (const Rat& r : oracle::random_rats(rng, 40)) {
        for (long k = 0; k <= 8; ++k) {
            REQUIRE(btconv::binom_rat(r, k) == oracle::falling_binom(r, k));
            // upper negation
            REQUIRE(btconv::binom_rat(-r, k) == btconv::sign_power(k) * btconv::binom_rat(r + Rat(k - 1), k));
        }
    }
    // agrees with the integer kernel on integer arguments, including negative ones
    for (long n = -6; n <= 12; ++n) {
        for (long k = 0; k <= 8; ++k) {
            REQUIRE(btconv::binom_rat(Rat(n), k) == oracle::falling_binom(Rat(n), k));
        }
    }
}

TEST_CASE("inverse binomials")
{
    CHECK(btconv::inv_binom(Rat(4), 2) == Rat(1, 6));
    CHECK(btconv::inv_binom(Rat(-1, 2), 1) == Rat(-2));
    CHECK_THROWS_AS(btconv::inv_binom(Rat(2), 3), btconv::ZeroCoefficientError);
    try {
        btconv::inv_binom(Rat(2), 3);
    } catch (const btconv::ZeroCoefficientError& e) {
        CHECK(std::string(e.what()).find("binom(2, 3)") != std::string::npos);
    }
}

TEST_CASE("kronecker delta")
{
    CHECK(btconv::kron_delta(0, 0) == Rat(1));
    CHECK(btconv::kron_delta(1, 2) == Rat(0));
    CHECK(btconv::kron_delta(-3, -3) == Rat(1));
}

TEST_CASE("factorial memo cap")
{
    const auto cap = btconv::factorial_cap();
    btconv::set_factorial_cap(4);
    CHECK(btconv::factorial(10) == 3628800);
    CHECK(btconv::binom_int(20, 10) == Rat(184756));
    btconv::set_factorial_cap(cap);
    CHECK(btconv::factorial(0) == 1);
    CHECK_THROWS_AS(btconv::factorial(-1), btconv::DomainError);
}
