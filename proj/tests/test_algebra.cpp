#include <doctest.h>

#include <random>

#include "midy/element.hpp"
#include "oracles.hpp"

using namespace midy;

namespace {

AlgebraicElement tau_el(long a0, long a1, long den = 1) {
    return AlgebraicElement(bases::golden(), {BigInt(a0), BigInt(a1)}, den);
}

oracle::QSqrt5 as_qsqrt5(const AlgebraicElement& e) {
    // a0 + a1 tau = (a0 + a1/2) + (a1/2) sqrt5
    Rational a0(e.coeffs()[0], e.denom()), a1(e.coeffs()[1], e.denom());
    return {a0 + a1 / 2, a1 / 2};
}

}  // namespace

TEST_CASE("golden powers follow the Fibonacci recurrence") {
    auto fib = oracle::fibonacci(45);
    const BetaBase tau = bases::golden();
    CHECK(reduce_power(tau, 0) == std::vector<BigInt>{1, 0});
    for (unsigned long k = 1; k <= 40; ++k) {
        CHECK(reduce_power(tau, k) == std::vector<BigInt>{fib[k - 1], fib[k]});
    }
    CHECK(reduce_power(tau, 7) == std::vector<BigInt>{8, 13});
}

TEST_CASE("reduce_power steps by the companion map") {
    for (const BetaBase& b : {bases::golden(), bases::tribonacci(), bases::tetranacci(), BetaBase::make(std::vector<long>{2, 2}),
                              BetaBase::make(std::vector<long>{-1, 3})}) {
        for (unsigned long k = 0; k < 30; ++k) CHECK(reduce_power(b, k + 1) == companion_apply(b, reduce_power(b, k)));
    }
}

TEST_CASE("Binet identity cleared of denominators") {
    // tau^k - (tau + 1/tau) F_k - (-1/tau)^k = 0; multiply by tau^{k+1}.
    auto fib = oracle::fibonacci(45);
    const BetaBase tau = bases::golden();
    const auto one = AlgebraicElement::integer(tau, 1);
    for (unsigned long k = 0; k <= 40; ++k) {
        auto lhs = AlgebraicElement::power(tau, 2 * k + 1) -
                   (AlgebraicElement::power(tau, k + 2) + AlgebraicElement::power(tau, k)) * fib[k] -
                   AlgebraicElement::power(tau, 1) * BigInt(k % 2 ? -1 : 1);
        CHECK(lhs.is_zero());
    }
    CHECK(!(one - AlgebraicElement::power(tau, 1)).is_zero());
}

TEST_CASE("field operations") {
    const BetaBase tau = bases::golden();
    auto x = tau_el(3, -2, 7), y = tau_el(1, 5, 4);
    CHECK((x + y) - y == x);
    CHECK(x * y == y * x);
    CHECK(x * (y + x) == x * y + x * x);
    CHECK(x.times_beta() == x * AlgebraicElement::power(tau, 1));
    CHECK(tau_el(2, 4, 6).normalized().denom() == 3);
    CHECK(AlgebraicElement(tau, {BigInt(1), BigInt(1)}, -2) == tau_el(-1, -1, 2));
    CHECK(AlgebraicElement::rational(tau, 3, 6).is_rational());
    CHECK(!x.is_rational());
    CHECK_THROWS_AS(AlgebraicElement(tau, {BigInt(1)}, 1), Error);
    CHECK_THROWS_AS(AlgebraicElement(tau, {BigInt(1), BigInt(0)}, 0), Error);
    CHECK_THROWS_AS(x + AlgebraicElement::integer(bases::tribonacci(), 1), Error);
}

TEST_CASE("enclosures") {
    auto t = enclose(tau_el(0, 1), 10);
    CHECK(t.lo > Rational(1617, 1000));
    CHECK(t.hi < Rational(1619, 1000));
    auto s = enclose(tau_el(2, -1), 10);
    CHECK(s.lo > Rational(381, 1000));
    CHECK(s.hi < Rational(383, 1000));
    for (unsigned long bits : {8ul, 64ul, 300ul}) {
        auto e = enclose(tau_el(-7, 11, 3), bits);
        CHECK(e.lo <= e.hi);
        CHECK(e.hi - e.lo <= Rational(1, 1) / Rational(pow2(bits - 4)));
    }
}

TEST_CASE("floor and compare agree with an exact sqrt5 oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-500, 500), den(1, 60);
    for (int i = 0; i < 400; ++i) {
        auto e = tau_el(coef(rng), coef(rng), den(rng));
        auto f = tau_el(coef(rng), coef(rng), den(rng));
        CHECK(floor_of(e) == oracle::floor(as_qsqrt5(e)));
        int expect = oracle::QSqrt5::sign(as_qsqrt5(e) - as_qsqrt5(f));
        auto got = compare(e, f);
        CHECK((got < 0 ? -1 : got > 0 ? 1 : 0) == expect);
    }
    CHECK(floor_of(tau_el(2, -1)) == 0);
    CHECK(floor_of(tau_el(1, 1, 2)) == 1);
    CHECK(floor_of(tau_el(-6, 0, 4)) == -2);
    CHECK(compare(tau_el(2, -1), tau_el(1, 0)) < 0);
    CHECK(compare(tau_el(0, 1), tau_el(0, 1)) == 0);
}

TEST_CASE("floor at degree four against high-precision enclosure") {
    const BetaBase b = bases::tetranacci();
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-50, 50);
    for (int i = 0; i < 100; ++i) {
        AlgebraicElement e(b, {BigInt(coef(rng)), BigInt(coef(rng)), BigInt(coef(rng)), BigInt(coef(rng))}, 1 + i % 9);
        BigInt f = floor_of(e);
        auto enc = enclose(e, 400);
        CHECK(Rational(f) <= enc.hi);
        CHECK(enc.lo < Rational(f + 1));
    }
}

TEST_CASE("base validation and metadata") {
    const BetaBase tau = bases::golden();
    CHECK(tau.digit_max() == 1);
    CHECK(tau.is_unit());
    CHECK(tau.pisot() == Pisot::yes);
    CHECK(tau.purity() == Purity::all_rationals_pure);
    CHECK(tau.polynomial_string() == "X^2 - X - 1");

    const BetaBase silver = BetaBase::make(std::vector<long>{-1, 3});
    CHECK(silver.digit_max() == 2);
    CHECK(silver.purity() == Purity::none_pure);

    const BetaBase root3 = parse_base("2,2");  // 1 + sqrt3
    CHECK(root3.digit_max() == 2);
    CHECK(!root3.is_unit());
    CHECK(root3.purity() == Purity::coprime_to_norm_pure);
    CHECK(root3.pisot() == Pisot::yes);

    CHECK(bases::tribonacci().digit_max() == 1);
    CHECK(bases::tribonacci().pisot() == Pisot::yes);
    CHECK(bases::tetranacci().pisot() == Pisot::yes);
    CHECK(bases::integer(10).integer_value() == BigInt(10));
    CHECK(bases::integer(10).digit_max() == 9);

    // plastic number X^3 - X - 1
    CHECK(BetaBase::make(std::vector<long>{1, 1, 0}).pisot() == Pisot::yes);
    // X^3 - 4: all three roots have modulus 4^(1/3)
    CHECK(BetaBase::make(std::vector<long>{4, 0, 0}).pisot() == Pisot::no);

    CHECK_THROWS_AS(parse_base(""), Error);
    CHECK_THROWS_AS(parse_base("1,,1"), Error);
    CHECK_THROWS_AS(parse_base("x"), Error);
    CHECK_THROWS_AS(parse_base("1"), Error);          // integer base 1
    CHECK_THROWS_AS(parse_base("0,1"), Error);        // c0 = 0
    CHECK_THROWS_AS(parse_base("2,1"), Error);        // X^2 - X - 2 = (X-2)(X+1)
    CHECK_THROWS_AS(parse_base("-1,-2"), Error);      // (X+1)^2
    CHECK_THROWS_AS(parse_base("-1,0"), Error);       // X^2 + 1, no real root
}

TEST_CASE("digit strings round-trip") {
    for (const Digits& d : {Digits{}, Digits{0}, Digits{1, 0, 1}, Digits{10}, Digits{3, 12, 0}}) {
        CHECK(parse_digits(format_digits(d)) == d);
    }
    CHECK(format_digits({1, 0, 1}) == "101");
    CHECK(format_digits({10}) == "10,");
    CHECK(format_digits({3, 12}) == "3,12");
    CHECK_THROWS_AS(parse_digits("1a"), Error);
}
