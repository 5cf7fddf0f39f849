#include <doctest.h>

#include <numeric>

#include "midy/midy.hpp"
#include "midy/modular.hpp"
#include "oracles.hpp"

using namespace midy;

namespace {

std::string halves(long p, long q, const BetaBase& b) {
    MidyVerdict v = midy_by_definition(p, q, b);
    return v.decision == Decision::yes ? format_digits(*v.certificate.halves_sum_digits) : "-";
}

}  // namespace

TEST_CASE("halves-sum certificates") {
    const BetaBase tau = bases::golden();
    CHECK(halves(3, 7, tau) == "10101010");
    CHECK(halves(1, 3, tau) == "1010");
    CHECK(halves(1, 5, tau) == "1010101010");
    CHECK(halves(18, 19, bases::integer(10)) == "999999999");
    CHECK(halves(3, 7, bases::integer(10)) == "999");

    MidyVerdict v = midy_by_definition(3, 7, tau);
    CHECK(v.rule == Rule::halves_sum);
    CHECK(v.certificate.exponent == 8u);
    CHECK(v.certificate.period_length == 16u);
    // x + y = tau^8 - 1 with x = 01000010, y = 01010010
    auto x = beta_integer_from_digits(parse_digits("01000010"), tau);
    auto y = beta_integer_from_digits(parse_digits("01010010"), tau);
    CHECK((x + y - AlgebraicElement::power(tau, 8) + AlgebraicElement::integer(tau, 1)).is_zero());
}

TEST_CASE("q = 2 and odd periods") {
    const BetaBase tau = bases::golden();
    MidyVerdict v = midy_by_definition(1, 2, tau);
    CHECK(v.decision == Decision::no);
    CHECK(v.certificate.period_length == 3u);
    CHECK(midy_by_definition(1, 11, tau).decision == Decision::no);
    CHECK_THROWS_AS(midy_by_definition(2, 4, tau), Error);
    CHECK_THROWS_AS(midy_by_definition(5, 4, tau), Error);
    CHECK_THROWS_AS(midy_by_complement(1, 2, tau), Error);
}

TEST_CASE("three deciders agree for the golden base") {
    const BetaBase tau = bases::golden();
    for (long q = 3; q <= 80; ++q) {
        auto matrix = necessary_condition(q, tau);
        CHECK(matrix.value_or(0) == static_cast<std::uint64_t>(oracle::golden_minus_identity(q, 6 * q + 10)));
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            MidyVerdict def = midy_by_definition(p, q, tau);
            ComplementResult comp = midy_by_complement(p, q, tau);
            CHECK((def.decision == Decision::yes) == matrix.has_value());
            CHECK((comp.status == ComplementStatus::found) == matrix.has_value());
            if (matrix) {
                CHECK(comp.exponent == matrix);
                CHECK(def.certificate.exponent == matrix);
                // the minimal period is divisible by 4 and the halves sum is (10)^{d/4}
                CHECK(*def.certificate.period_length % 4 == 0);
                std::string want;
                for (std::size_t i = 0; i < *def.certificate.period_length / 4; ++i) want += "10";
                CHECK(format_digits(*def.certificate.halves_sum_digits) == want);
            } else {
                CHECK(comp.status == ComplementStatus::absent);
            }
        }
    }
}

TEST_CASE("midy_tau certifies against every decider") {
    for (long q = 3; q <= 200; ++q) {
        MidyVerdict v = midy_tau(q);
        CHECK((v.decision == Decision::yes) == necessary_condition(q, bases::golden()).has_value());
    }
    CHECK(midy_tau(7).certificate.exponent == 8u);
    CHECK(midy_tau(21).decision == Decision::no);
    CHECK_THROWS_AS(midy_tau(2), Error);
}

TEST_CASE("general bases never claim matrix sufficiency") {
    const BetaBase silver = parse_base("-1,3");
    CHECK(necessary_condition(5, silver) == 5u);
    CHECK(!orbit_expansion(1, 5, silver).purely_periodic());
    CHECK(midy_try_all_p(5, silver).decision == Decision::no);
    CHECK(midy_try_all_p(5, silver).rule == Rule::all_p_fail);

    const BetaBase root3 = parse_base("2,2");
    CHECK(halves(4, 5, root3) == format_digits(midy_by_definition(4, 5, root3).certificate.halves_sum_digits.value()));
    // complement lemma is an equivalence per p
    for (long q : {5L, 7L, 9L, 11L}) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            bool def = midy_by_definition(p, q, root3).decision == Decision::yes;
            bool comp = midy_by_complement(p, q, root3).status == ComplementStatus::found;
            CHECK(def == comp);
        }
    }
}

TEST_CASE("tribonacci exclusion") {
    const BetaBase tri = bases::tribonacci();
    for (long q = 3; q <= 60; ++q) CHECK(!necessary_condition(q, tri));
    CHECK(midy_try_all_p(7, tri).decision == Decision::no);
}

TEST_CASE("quartic base complement exponents") {
    const BetaBase b = bases::tetranacci();
    CHECK(midy_by_complement(1, 5, b).exponent == 156u);
    CHECK(midy_by_complement(1, 10, b).exponent == 780u);
    CHECK(midy_by_complement(1, 25, b).exponent == 780u);
    CHECK(midy_by_complement(1, 17, b).exponent == 2456u);
    ComplementResult capped = midy_by_complement(1, 17, b, 100);
    CHECK(capped.status == ComplementStatus::cap_exhausted);
}

TEST_CASE("Fibonacci corollaries") {
    auto fib = oracle::fibonacci(30);
    for (unsigned n = 5; n <= 29; n += 2) {
        for (long q = 3; q <= 5000 && BigInt(q) <= fib[n]; ++q) {
            if (mod_floor(fib[n], BigInt(q)) != 0) continue;
            auto r = fibonacci_rule(q);
            REQUIRE(r);
            CHECK(r->decision == Decision::yes);
            CHECK(midy_tau(q, 0).decision == Decision::yes);
        }
    }
    for (long f : {21L, 55L, 144L}) {
        for (long q = f; q <= 2000; q += f) {
            auto r = fibonacci_rule(q);
            REQUIRE(r);
            CHECK(r->decision == Decision::no);
            CHECK(midy_tau(q, 0).decision == Decision::no);
        }
    }
    CHECK(fibonacci_rule(10)->rule == Rule::entry_point_odd);
    CHECK(!fibonacci_rule(4));  // a(4) = 6 even, 4 not a multiple of F_6 = 8
}

TEST_CASE("divisor closure") {
    for (long q = 3; q <= 500; ++q) {
        if (!necessary_condition(q, bases::golden())) continue;
        DivisorReport r = divisor_closure_check(q);
        CHECK(r.pass);
        for (const auto& [d, dec] : r.divisors) CHECK(dec == Decision::yes);
    }
    CHECK_THROWS_AS(divisor_closure_check(55), Error);  // precondition: 55 = F_10 is not Midy
}
