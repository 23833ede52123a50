#include "btconv/errors.hpp"
#include "btconv/polyring.hpp"
#include "oracle.hpp"

#include "doctest.h"

using namespace btconv;

namespace {

Poly P(std::initializer_list<long> c)
{
    return Poly(std::vector<Rat>(c.begin(), c.end()));
}

} // namespace

TEST_CASE("ring operations")
{
    const Poly t = Poly::monomial(Rat(1), 1);
    CHECK(poly_mul(t, t) == P({0, 0, 1}));
    CHECK(poly_eval(P({1, -2, 1}), Rat(1)) == Rat(0));
    CHECK(poly_mul(P({1, 1}), P({1, -1})) == P({1, 0, -1}));
    CHECK(poly_add(P({1, 2, 3}), P({0, 0, -3})) == P({1, 2}));
    CHECK(poly_scale(P({1, 2}), Rat(0)).is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(P({0, 0, 0}).degree() == -1);
    CHECK(Poly::affine_power(Rat(1), Rat(-1), 3) == P({1, -3, 3, -1}));
    CHECK_THROWS_AS(Poly::monomial(Rat(1), -1), DomainError);
    CHECK(P({1, 0, -1}).coeff(5) == Rat(0));
}

TEST_CASE("composition")
{
    CHECK(shift_compose(P({0, 0, 1}), Rat(1), Rat(-1)) == P({1, -2, 1}));
    CHECK(shift_compose(P({1, 1}), Rat(0), Rat(1)) == P({1, 1}));
    CHECK(shift_compose(P({0, 0, 0, 1}), Rat(1), Rat(1)) == P({1, 3, 3, 1}));
    for (long e = 0; e <= 8; ++e) {
        const Poly p = shift_compose(Poly::monomial(Rat(1), e), Rat(1), Rat(1));
        for (long i = 0; i <= e; ++i) {
            REQUIRE(p.coeff(i) == oracle::pascal(e, i));
        }
    }
}

TEST_CASE("ring laws and evaluation are compatible")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly a(oracle::random_rats(rng, 4));
        const Poly b(oracle::random_rats(rng, 3));
        const Poly c(oracle::random_rats(rng, 5));
        const Rat x = oracle::random_rats(rng, 1).front();
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == b * a);
        REQUIRE(poly_eval(a * b, x) == poly_eval(a, x) * poly_eval(b, x));
        REQUIRE(poly_eval(shift_compose(a, Rat(1), Rat(-1)), x) == poly_eval(a, Rat(1) - x));
    }
}

TEST_CASE("str")
{
    CHECK(Poly().str() == "0");
    CHECK(!P({1, -2, 1}).str().empty());
}

TEST_CASE("polynomial identities for pairs")
{
    CHECK(check_poly_first(catalog_pair("fibonacci"), 0));
    CHECK(check_poly_first(catalog_pair("fibonacci"), 5));
    CHECK(check_poly_second(catalog_pair("bernoulli"), 6));
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        for (long n = 0; n <= 8; ++n) {
            REQUIRE(check_poly_first(random_first_pair(seed), n));
            REQUIRE(check_poly_second(random_second_pair(seed), n));
        }
    }
    CHECK_THROWS_AS(check_poly_first(catalog_pair("bernoulli"), 2), KindMismatchError);
    CHECK_THROWS_AS(check_poly_second(catalog_pair("lucas"), 2), KindMismatchError);
}

TEST_CASE("polynomial identity at t = -1 reduces to the transform")
{
    // sum binom(n,k) s_{n-k} (-1)^k = (-1)^n sigma_n, since (1 + t) vanishes
    const Pair p = random_first_pair(9);
    for (long n = 0; n <= 8; ++n) {
        const PolySides sides = poly_sides_first(p, n);
        REQUIRE(poly_eval(sides.lhs, Rat(-1)) == sign_power(n) * p.sigma(n));
        REQUIRE(poly_eval(sides.rhs, Rat(-1)) == sign_power(n) * p.sigma(n));
    }
}

TEST_CASE("Sun's lemma")
{
    CHECK(check_sun_lemma(0, 0, 0));
    CHECK(check_sun_lemma(2, 3, 1));
    CHECK_THROWS_AS(check_sun_lemma(0, 2, 3), DomainError);
    CHECK_FALSE(sun_lemma_admissible(0, 2, 3));
    for (long m = 0; m <= 5; ++m) {
        for (long n = 0; n <= 5; ++n) {
            for (long r = 0; r <= 10; ++r) {
                if (sun_lemma_admissible(m, n, r)) {
                    REQUIRE(check_sun_lemma(m, n, r));
                }
            }
        }
    }
}

TEST_CASE("identity transfer")
{
    const Pair p = random_first_pair(77, 20);
    const SideReport chen = transfer_identity(sun_lemma_form(2, 3, 1), p);
    CHECK(chen.equal());
    // direct sums for the (2,3,1) instance
    Rat lhs;
    for (long k = 0; k <= 3; ++k) {
        lhs += sign_power(k - 1) * oracle::pascal(3, k) * oracle::pascal(k + 2, 1) * p.s(k + 1);
    }
    Rat rhs;
    for (long k = 0; k <= 2; ++k) {
        rhs += sign_power(k) * oracle::pascal(2, k) * oracle::pascal(k + 3, 1) * p.sigma(k + 2);
    }
    CHECK(lhs == rhs);

    for (long n = 0; n <= 6; ++n) {
        const Rat x(-5, 7);
        const SideReport r = transfer_identity(binomial_theorem_form(n), catalog_pair("power", {{"x", x}}));
        REQUIRE(r.equal());
    }
    CHECK(transfer_identity(sun_lemma_form(1, 2, 0), convert_kind(catalog_pair("bernoulli"))).equal());
    CHECK(transfer_identity(sun_lemma_form(1, 2, 0), catalog_pair("bernoulli")).equal());
    CHECK_THROWS_AS(PolyIdentityForm({{Rat(1), 1}}, {{Rat(1), 0}}), ValidationError);
    CHECK_THROWS_AS(PolyIdentityForm({{Rat(1), -1}}, {{Rat(1), 0}}), DomainError);
}

TEST_CASE("named polynomial identities")
{
    CHECK(check_named_poly("ps67scn_poly", {{"n", Rat(3)}}));
    const std::vector<Rat> grid = {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(3), Rat(-5, 7)};
    for (long n = 0; n <= 8; ++n) {
        const Rat N(n);
        CHECK(check_named_poly("odd_harmonic_poly", {{"n", N}}));
        CHECK(check_named_poly("partial_sum_poly", {{"n", N}}));
        CHECK(check_named_poly("ps67scn_poly", {{"n", N}}));
        for (long m = 0; m <= 3; ++m) {
            CHECK(check_named_poly("harmonic_poly", {{"n", N}, {"m", Rat(m)}}));
            CHECK(check_named_poly("jy2d3um_poly", {{"n", N}, {"m", Rat(m)}}));
        }
        for (const Rat& x : {Rat(0), Rat(1, 2), Rat(3)}) {
            for (const Rat& y : grid) {
                CHECK(check_named_poly("bernoulli_poly_identity", {{"n", N}, {"x", x}, {"y", y}}));
            }
        }
        for (long x = 0; x <= 3; ++x) {
            for (const Rat& y : grid) {
                CHECK(check_named_poly("binom_poly", {{"n", N}, {"x", Rat(x)}, {"y", y}}));
                CHECK(check_named_poly("binom_poly", {{"n", N}, {"x", Rat(x)}, {"y", y}, {"display", Rat(1)}}));
            }
        }
    }
    CHECK(named_poly_ids().size() == 7);
    CHECK_THROWS_AS(named_poly_sides("nope", {{"n", Rat(1)}}), UnknownNameError);
    CHECK_THROWS_AS(named_poly_sides("ps67scn_poly", {{"n", Rat(1)}, {"q", Rat(1)}}), DomainError);
    CHECK_THROWS_AS(named_poly_sides("ps67scn_poly", {}), DomainError);
}

TEST_CASE("harmonic polynomial at m = 0, n = 2")
{
    const PolySides s = named_poly_sides("harmonic_poly", {{"n", Rat(2)}, {"m", Rat(0)}});
    CHECK(s.lhs == Poly({Rat(0), Rat(2), Rat(3, 2)}));
    CHECK(s.equal());
}
