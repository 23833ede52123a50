#include "btconv/errors.hpp"
#include "btconv/pairs.hpp"
#include "oracle.hpp"

#include "doctest.h"

using namespace btconv;

namespace {

Seq seq_of(std::initializer_list<long> v)
{
    std::vector<Rat> out(v.begin(), v.end());
    return Seq(out);
}

// right side of p against a direct transform of its left side
void require_pair(const Pair& p, long depth)
{
    for (long n = 0; n <= depth && p.covers(n); ++n) {
        auto s = [&](long k) { return p.s(k); };
        const Rat direct = p.kind == Kind::First ? oracle::first_at(s, n) : oracle::second_at(s, n);
        INFO(p.label << " at n=" << n);
        REQUIRE(direct == p.sigma(n));
    }
}

} // namespace

TEST_CASE("first-kind transform examples")
{
    CHECK(bt_first(seq_of({1, 1, 1, 1})) == seq_of({1, 0, 0, 0}));
    CHECK(bt_first(seq_of({0, 1, 1, 2, 3})) == seq_of({0, -1, -1, -2, -3}));
    CHECK(bt_first(seq_of({2, 1, 3, 4, 7})) == seq_of({2, 1, 3, 4, 7}));
}

TEST_CASE("second-kind transform examples")
{
    CHECK(bt_second(seq_of({1, 0, 0, 0})) == seq_of({1, 1, 1, 1}));
    CHECK(bt_second(seq_of({1, 1, 1, 1})) == seq_of({1, 2, 4, 8}));
    Seq b({Rat(1), Rat(-1, 2), Rat(1, 6), Rat(0)});
    CHECK(bt_second(b) == Seq({Rat(1), Rat(1, 2), Rat(1, 6), Rat(0)}));
}

TEST_CASE("transforms are inverse to each other")
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        Seq s(oracle::random_rats(rng, 12));
        CHECK(involution_check(s));
        CHECK(bt_first(bt_first(s)) == s);
        CHECK(bt_second_inverse(bt_second(s)) == s);
        CHECK(bt_second(bt_second_inverse(s)) == s);
        for (long n = 0; n <= s.last(); ++n) {
            REQUIRE(bt_first(s)[n] == oracle::first_at([&](long k) { return s[k]; }, n));
        }
    }
    CHECK(involution_check(Seq::generate(5, harmonic)));
    CHECK(involution_check(Seq::generate(8, catalan)));
}

TEST_CASE("classification")
{
    CHECK(classify(Seq::generate(15, [](long k) { return lucas(k); })) == Symmetry::Invariant);
    CHECK(classify(Seq::generate(15, [](long k) { return fibonacci(k); })) == Symmetry::InverseInvariant);
    CHECK(classify(Seq::generate(15, [](long k) { return Rat(k) * fibonacci(k - 1); })) == Symmetry::Invariant);
    CHECK(classify(Seq::generate(15, harmonic)) == Symmetry::Neither);
    CHECK(classify(Seq::generate(15, [](long k) { return harmonic(k) / Rat(k + 1); })) == Symmetry::InverseInvariant);
    CHECK_THROWS_AS(classify(seq_of({1})), DomainError);
}

TEST_CASE("every catalog entry matches a direct transform")
{
    const std::vector<Rat> grid = {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2), Rat(3), Rat(-5, 7)};
    for (const std::string& name : catalog_names()) {
        std::vector<Params> sweep{{}};
        if (name == "binom_upper") {
            sweep.clear();
            for (long x = 0; x <= 3; ++x) {
                for (const Rat& y : grid) {
                    sweep.push_back({{"x", Rat(x)}, {"y", y}});
                }
            }
        } else if (name == "harmonic_shift_frac") {
            sweep = {{{"m", Rat(1)}}, {{"m", Rat(3)}}};
        } else if (name == "gibonacci_ratio") {
            sweep = {{{"g0", Rat(2)}, {"g1", Rat(1)}, {"t", Rat(2)}, {"r", Rat(1)}},
                     {{"g0", Rat(1, 2)}, {"g1", Rat(-3)}, {"t", Rat(-1)}, {"r", Rat(-1)}}};
        } else if (name == "binom_ratio") {
            sweep = {{{"x", Rat(1, 2)}, {"y", Rat(-5, 7)}}, {{"x", Rat(3)}, {"y", Rat(-1)}}, {{"x", Rat(-1)}, {"y", Rat(4)}}};
        } else if (name == "harmonic_plus_m" || name == "harmonic_binom_m") {
            sweep = {{{"m", Rat(0)}}, {{"m", Rat(2)}}};
        } else if (name == "delta_binom" || name == "binom_2k_j" || name == "binom_2k_j_up") {
            sweep = {{{"j", Rat(0)}}, {{"j", Rat(2)}}};
        } else if (name == "power" || name == "power2" || name == "binom_x") {
            sweep.clear();
            for (const Rat& x : grid) {
                sweep.push_back({{"x", x}});
            }
        } else if (name == "bernoulli_poly_shift") {
            sweep = {{{"x", Rat(1, 2)}, {"y", Rat(3)}}, {{"x", Rat(0)}, {"y", Rat(-5, 7)}}};
        } else if (name == "binom_xz") {
            sweep = {{{"x", Rat(7, 2)}, {"z", Rat(-2)}}, {{"x", Rat(-1)}, {"z", Rat(1)}}};
        } else if (name == "inv_binom_trif") {
            sweep = {{{"m", Rat(6)}, {"p", Rat(2)}}, {{"m", Rat(-1, 2)}, {"p", Rat(1)}}};
        }
        for (const Params& params : sweep) {
            const Pair p = catalog_pair(name, params, -1);
            CHECK(p.kind == catalog_kind(name));
            require_pair(p, 9);
        }
    }
}

TEST_CASE("catalog examples")
{
    const Pair odd = catalog_pair("odd_harmonic");
    CHECK(odd.left_seq(3) == Seq({Rat(0), Rat(1), Rat(4, 3), Rat(23, 15)}));
    CHECK(odd.sigma(3) == Rat(-8, 15));
    CHECK(catalog_pair("power", {{"x", Rat(2)}}).sigma(4) == Rat(1));
    CHECK(catalog_pair("binom_x", {{"x", Rat(7, 2)}}).sigma(2) == Rat(99, 8));
}

TEST_CASE("catalog argument checking")
{
    CHECK_THROWS_AS(catalog_pair("no_such_pair"), UnknownNameError);
    CHECK_THROWS_AS(catalog_pair("power"), DomainError);
    CHECK_THROWS_AS(catalog_pair("power", {{"x", Rat(1)}, {"y", Rat(2)}}), DomainError);
    CHECK_THROWS_AS(catalog_pair("harmonic_shift_frac", {{"m", Rat(0)}}), DomainError);
    CHECK_THROWS_AS(catalog_pair("bernoulli_poly_shift", {{"x", Rat(1)}, {"y", Rat(0)}}), DomainError);
    CHECK_THROWS_AS(catalog_kind("nothing"), UnknownNameError);
}

TEST_CASE("limits are enforced")
{
    const Pair p = catalog_pair("inv_binom_trif", {{"m", Rat(5)}, {"p", Rat(2)}});
    REQUIRE(p.limit.has_value());
    CHECK(*p.limit == 3);
    CHECK(p.covers(3));
    CHECK_FALSE(p.covers(4));
    CHECK_THROWS_AS(p.sigma(4), RangeError);
    CHECK_THROWS_AS(p.s(-1), RangeError);
}

TEST_CASE("validation rejects a mismatched pair")
{
    Pair bad = catalog_pair("lucas");
    bad.right = [](long k) { return fibonacci(k); };
    CHECK_FALSE(holds(bad));
    CHECK_THROWS_AS(validate(bad), ValidationError);
    CHECK(holds(catalog_pair("fibonacci")));
}

TEST_CASE("kind conversion")
{
    const Pair fib2 = convert_kind(catalog_pair("fibonacci"));
    CHECK(fib2.kind == Kind::Second);
    CHECK(fib2.s(3) == Rat(-2));
    CHECK(fib2.sigma(3) == Rat(-2));
    require_pair(fib2, 10);

    const Pair b1 = convert_kind(catalog_pair("bernoulli"));
    CHECK(b1.kind == Kind::First);
    require_pair(b1, 10);
    CHECK(b1.s(1) == b1.sigma(1));

    const Pair ones = pair_from_seq(Kind::First, seq_of({1, 1, 1, 1, 1}));
    CHECK(ones.right_seq(4) == seq_of({1, 0, 0, 0, 0}));
    const Pair alt = convert_kind(ones);
    CHECK(alt.left_seq(4) == seq_of({1, -1, 1, -1, 1}));
    require_pair(alt, 4);

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const Pair p = pair_from_seq(Kind::Second, Seq(oracle::random_rats(rng, 10)));
        REQUIRE(holds(convert_kind(p), 9));
        REQUIRE(holds(convert_kind(convert_kind(p)), 9));
    }
}

TEST_CASE("pair_from_seq caps the range")
{
    const Pair p = pair_from_seq(Kind::First, seq_of({1, 2, 3}));
    CHECK(p.limit == 2);
    CHECK_THROWS_AS(p.s(3), RangeError);
}

TEST_CASE("constructors on random pairs")
{
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const Pair p = random_first_pair(seed, 20);
        CHECK(p.kind == Kind::First);
        require_pair(p, 12);
        require_pair(shift_pair(p, 0), 12);
        for (long m = 1; m <= 3; ++m) {
            require_pair(shift_pair(p, m), 12);
            require_pair(s_m_pair(p, m), 12);
        }
        require_pair(times_k_pair(p), 12);
        for (const char* which : {"a", "b", "c", "d", "e", "f"}) {
            require_pair(partial_sum_pair(p, parse_partial_sum(which)), 12);
        }
        const Pair q = random_second_pair(seed, 20);
        CHECK(q.kind == Kind::Second);
        require_pair(q, 12);
    }
    CHECK(parse_partial_sum("lagged_sums") == PartialSum::LaggedSums);
    CHECK_THROWS_AS(parse_partial_sum("g"), UnknownNameError);
    CHECK_THROWS_AS(times_k_pair(catalog_pair("bernoulli")), KindMismatchError);
}

TEST_CASE("shift by zero is the identity")
{
    const Pair p = random_first_pair(5);
    const Pair q = shift_pair(p, 0);
    CHECK(p.left_seq(10) == q.left_seq(10));
    CHECK(p.right_seq(10) == q.right_seq(10));
}

TEST_CASE("times k on Bernoulli numbers")
{
    // sum binom(n,k) k B_k = (-1)^n n (B_n + B_{n-1})
    const Pair p = times_k_pair(convert_kind(catalog_pair("bernoulli")));
    CHECK(p.sigma(1) == Rat(-1, 2));
    CHECK(p.sigma(3) == Rat(-1, 2));
    CHECK(p.sigma(4) == Rat(-2, 15));
    for (long n = 1; n <= 14; ++n) {
        Rat direct;
        for (long k = 0; k <= n; ++k) {
            direct += oracle::pascal(n, k) * Rat(k) * oracle::bernoulli(k);
        }
        REQUIRE(p.sigma(n) == direct);
        REQUIRE(direct == sign_power(n) * Rat(n) * (oracle::bernoulli(n) + oracle::bernoulli(n - 1)));
    }
}

TEST_CASE("random sequences are reproducible and prefix-stable")
{
    const Seq a = random_seq(42, 10);
    const Seq b = random_seq(42, 25);
    for (long k = 0; k <= a.last(); ++k) {
        REQUIRE(a[k] == b[k]);
    }
    CHECK(random_seq(42, 10) == a);
    CHECK_FALSE(random_seq(43, 10) == a);
    for (const Rat& v : b.values()) {
        REQUIRE(v.denominator() <= 12);
        REQUIRE(abs(v.numerator()) <= 20);
    }
    CHECK(splitmix64(0) != splitmix64(1));
}
