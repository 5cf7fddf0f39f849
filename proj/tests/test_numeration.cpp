#include <doctest.h>

#include <numeric>
#include <random>

#include "midy/numeration.hpp"
#include "oracles.hpp"

using namespace midy;

namespace {

std::string period_of(long p, long q, const BetaBase& b) { return format_digits(orbit_expansion(p, q, b).period); }

}  // namespace

TEST_CASE("golden expansions from the worked examples") {
    const BetaBase tau = bases::golden();
    CHECK(period_of(3, 7, tau) == "0100001001010010");
    CHECK(period_of(1, 2, tau) == "010");
    CHECK(period_of(1, 3, tau) == "00101000");
    CHECK(period_of(1, 5, tau) == "00010010101001001000");
    CHECK(greedy_expand(Rational(2), tau).to_string() == "10.01");
    CHECK(greedy_expand(Rational(1, 2), tau).to_string() == "0.(010)^w");
    CHECK(greedy_expand(Rational(1), tau).to_string() == "1");
}

TEST_CASE("integer bases reproduce long division") {
    const BetaBase ten = bases::integer(10);
    CHECK(period_of(3, 7, ten) == "428571");
    CHECK(period_of(18, 19, ten) == "947368421052631578");
    for (long q = 2; q <= 60; ++q) {
        for (long p = 1; p < q; p += 3) {
            auto want = oracle::decimal_expansion(p, q);
            auto got = orbit_expansion(p, q, ten);
            CHECK(format_digits(got.preperiod) == want.preperiod);
            CHECK(format_digits(got.period) == want.period);
        }
    }
    // base 3 too
    CHECK(format_digits(orbit_expansion(1, 4, bases::integer(3)).period) == oracle::decimal_expansion(1, 4, 3).period);
}

TEST_CASE("golden expansions match the sqrt5 oracle") {
    const BetaBase tau = bases::golden();
    for (long q = 2; q <= 45; ++q) {
        for (long p = 1; p < q; ++p) {
            auto want = oracle::tau_expansion(p, q);
            auto got = orbit_expansion(p, q, tau);
            CHECK(format_digits(got.preperiod) == want.preperiod);
            CHECK(format_digits(got.period) == want.period);
        }
    }
}

TEST_CASE("base 1 + sqrt3") {
    const BetaBase b = parse_base("2,2");
    CHECK(period_of(4, 5, b) == "201100100121011021112000");
}

TEST_CASE("state recurrence a(T(x)) = C a(x) - q d e1") {
    const BetaBase b = bases::tetranacci();
    OrbitState s{AlgebraicElement::rational(b, 3, 17), 0};
    for (int i = 0; i < 50; ++i) {
        StepResult r = t_step(s);
        auto expect = companion_apply(b, s.element.coeffs());
        expect[0] -= s.element.denom() * r.digit;
        CHECK(r.next.element.coeffs() == expect);
        CHECK(r.next.element.denom() == s.element.denom());
        CHECK(floor_of(r.next.element) == 0);
        CHECK(r.next.step == s.step + 1);
        s = r.next;
    }
    const BetaBase tau = bases::golden();
    StepResult half = t_step({AlgebraicElement::rational(tau, 1, 2), 0});
    CHECK(half.digit == 0);
    CHECK(half.next.element == AlgebraicElement(tau, {BigInt(0), BigInt(1)}, 2));
}

TEST_CASE("quasigreedy expansion of one") {
    CHECK(format_digits(quasigreedy_one(bases::golden(), 6)) == "101010");
    CHECK(format_digits(quasigreedy_one(bases::tribonacci(), 8)) == "11011011");
    CHECK(format_digits(quasigreedy_one(bases::integer(10), 4)) == "9999");
    CHECK(format_digits(quasigreedy_one(parse_base("2,2"), 6)) == "212121");  // d(1) = 22
    auto shape = quasigreedy_shape(bases::golden());
    REQUIRE(shape);
    CHECK(shape->preperiod.empty());
    CHECK(format_digits(shape->period) == "10");
}

TEST_CASE("admissibility") {
    const BetaBase tau = bases::golden();
    CHECK(!is_admissible(parse_digits("11"), tau));
    CHECK(!is_admissible(parse_digits("0110"), tau));
    CHECK(is_admissible(parse_digits("101001"), tau));
    CHECK(is_admissible(parse_digits("0100001001010010"), tau));
    Expansion bad;
    bad.period = parse_digits("10");  // (10)^w equals d*(1) as a suffix: not admissible
    CHECK(!is_admissible(bad, tau));
    const BetaBase tri = bases::tribonacci();
    CHECK(is_admissible(parse_digits("110110"), tri));
    CHECK(!is_admissible(parse_digits("111"), tri));
}

TEST_CASE("beta-integers") {
    const BetaBase tau = bases::golden();
    CHECK(beta_integer_from_digits(parse_digits("1000"), tau) == AlgebraicElement::power(tau, 3));
    CHECK(beta_integer_from_digits(parse_digits("01000010"), tau) ==
          AlgebraicElement::power(tau, 6) + AlgebraicElement::power(tau, 1));
    CHECK_THROWS_AS(beta_integer_from_digits(parse_digits("0110"), tau), Error);
}

TEST_CASE("reconstruction rejects corrupted digits") {
    const BetaBase tau = bases::golden();
    Expansion e = orbit_expansion(3, 7, tau);
    CHECK(verify_reconstruction(3, 7, e, tau));
    for (std::size_t i = 0; i < e.period.size(); ++i) {
        Expansion bad = e;
        bad.period[i] ^= 1;
        CHECK(!verify_reconstruction(3, 7, bad, tau));
    }
    CHECK(!verify_reconstruction(2, 7, e, tau));
}

TEST_CASE("random rationals: admissible, reconstructible, purity as predicted") {
    std::mt19937 rng(2024);
    const BetaBase tau = bases::golden();
    const BetaBase silver = parse_base("-1,3");
    const BetaBase root3 = parse_base("2,2");
    const BetaBase tri = bases::tribonacci();
    std::uniform_int_distribution<long> qd(2, 200);
    for (int i = 0; i < 150; ++i) {
        long q = qd(rng);
        long p = std::uniform_int_distribution<long>(1, q - 1)(rng);
        for (const BetaBase& b : {tau, silver, root3, tri}) {
            if (b == tri && q > 40) continue;  // long periods; keep the suite quick
            Expansion e = orbit_expansion(p, q, b);
            CHECK(is_admissible(e, b));
            CHECK(verify_reconstruction(p, q, e, b));
            if (b == tau) CHECK(e.preperiod.empty());
            if (b == silver) CHECK(!e.preperiod.empty());
            if (b == root3 && q % 2 != 0) CHECK(e.preperiod.empty());
        }
    }
}

TEST_CASE("greedy expansions of values above one") {
    const BetaBase tau = bases::golden();
    for (long n = 1; n <= 30; ++n) {
        for (long q : {1L, 2L, 3L, 7L}) {
            Rational x(n, q);
            x.canonicalize();
            Expansion e = greedy_expand(x, tau);
            CHECK(!e.truncated);
            CHECK(is_admissible(e, tau));
            CHECK(verify_reconstruction(x.get_num(), x.get_den(), e, tau));
        }
    }
    Expansion t = greedy_expand(Rational(1, 7), bases::tetranacci(), 5);
    CHECK(t.truncated);
    CHECK_THROWS_AS(orbit_expansion(1, 7, bases::tetranacci(), 5), Error);
}

TEST_CASE("period minimality by re-simulation") {
    const BetaBase tau = bases::golden();
    for (long q : {7L, 11L, 13L, 29L}) {
        Expansion e = orbit_expansion(1, q, tau);
        OrbitState s{AlgebraicElement::rational(tau, 1, q), 0};
        auto start = s.element;
        for (std::size_t k = 1; k <= e.period.size(); ++k) {
            s = t_step(s).next;
            CHECK((s.element == start) == (k == e.period.size()));
        }
    }
}
