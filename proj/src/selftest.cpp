#include "midy/selftest.hpp"

#include <sstream>

#include "midy/primes.hpp"

namespace midy {

namespace {

std::string period_of(long p, long q, const BetaBase& base) {
    return format_digits(orbit_expansion(p, q, base).period);
}

std::string halves(long p, long q, const BetaBase& base) {
    MidyVerdict v = midy_by_definition(p, q, base);
    return v.decision == Decision::yes ? format_digits(*v.certificate.halves_sum_digits) : "-";
}

}  // namespace

SelftestReport run_selftest(const SelftestTargets& targets) {
    SelftestReport report;
    auto check = [&](const std::string& name, const std::function<bool()>& body) {
        ++report.run;
        bool ok = false;
        std::string why;
        try {
            ok = body();
        } catch (const std::exception& e) {
            why = std::string(": ") + e.what();
        }
        (ok ? report.passed : report.failures).push_back(name + why);
    };

    const BetaBase tau = bases::golden();
    const BetaBase ten = bases::integer(10);
    const BetaBase sqrt3 = BetaBase::make(std::vector<long>{2, 2});
    const BetaBase silver = BetaBase::make(std::vector<long>{-1, 3});
    const BetaBase trib = bases::tribonacci();
    const BetaBase quartic = bases::tetranacci();
    auto el = [&](std::vector<long> c, long q = 1) {
        std::vector<BigInt> b(c.begin(), c.end());
        return AlgebraicElement(tau, b, q);
    };

    // Fibonacci machinery first: everything golden-base rests on it.
    check("fibonacci seed F_0 = 0, F_1 = 1", [&] {
        FibPair f = targets.fib_pair(0, BigInt("1000000007"));
        return f.value == 0 && f.next == 1;
    });
    check("fibonacci F_10 = 55, F_11 = 89", [&] {
        FibPair f = targets.fib_pair(10, BigInt("1000000007"));
        return f.value == 55 && f.next == 89;
    });
    check("fibonacci F_8 = 0, F_9 = 6 mod 7", [&] {
        FibPair f = targets.fib_pair(8, 7);
        return f.value == 0 && f.next == 6;
    });
    check("fibonacci matches the recurrence up to n = 200", [&] {
        BigInt a = 0, b = 1;
        for (int n = 0; n <= 200; ++n) {
            FibPair f = targets.fib_pair(n, BigInt("1000000007"));
            if (f.value != a % BigInt("1000000007")) return false;
            BigInt t = a + b;
            a = b;
            b = t;
        }
        return true;
    });

    check("tau^2 = 1 + tau", [&] { return reduce_power(tau, 2) == std::vector<BigInt>{1, 1}; });
    check("tau^7 = 8 + 13 tau", [&] { return reduce_power(tau, 7) == std::vector<BigInt>{8, 13}; });
    check("(tau^6 + tau) + (tau^6 + tau^4 + tau) = tau^8 - 1", [&] {
        auto x1 = AlgebraicElement::power(tau, 6) + AlgebraicElement::power(tau, 1);
        auto x2 = AlgebraicElement::power(tau, 6) + AlgebraicElement::power(tau, 4) + AlgebraicElement::power(tau, 1);
        return x1 + x2 == AlgebraicElement::power(tau, 8) - AlgebraicElement::integer(tau, 1);
    });
    check("2 - tau - tau^-2 = 0", [&] {
        // tau^2 (2 - tau - tau^-2) = 2 tau^2 - tau^3 - 1
        auto v = AlgebraicElement::power(tau, 2) * BigInt(2) - AlgebraicElement::power(tau, 3) -
                 AlgebraicElement::integer(tau, 1);
        return v.is_zero();
    });
    check("floor(2 - tau) = 0", [&] { return floor_of(el({2, -1})) == 0; });
    check("floor(tau^2 / 2) = 1", [&] { return floor_of(el({1, 1}, 2)) == 1; });

    check("golden base metadata", [&] {
        return tau.digit_max() == 1 && tau.is_unit() && tau.pisot() == Pisot::yes &&
               tau.purity() == Purity::all_rationals_pure;
    });
    check("X^2 - 3X + 1 metadata", [&] {
        return silver.digit_max() == 2 && silver.is_unit() && silver.pisot() == Pisot::yes &&
               silver.purity() == Purity::none_pure;
    });
    check("tribonacci metadata", [&] { return trib.is_unit() && trib.pisot() == Pisot::yes; });

    check("T(1/2) = tau/2 with digit 0", [&] {
        StepResult r = t_step({AlgebraicElement::rational(tau, 1, 2), 0});
        return r.digit == 0 && r.next.element == el({0, 1}, 2);
    });
    check("T(tau/2) = (tau - 1)/2 with digit 1", [&] {
        StepResult r = t_step({el({0, 1}, 2), 0});
        return r.digit == 1 && r.next.element == el({-1, 1}, 2);
    });

    check("(1/2)_tau = 0.(010)^w", [&] { return period_of(1, 2, tau) == "010"; });
    check("(3/7)_tau period", [&] { return period_of(3, 7, tau) == "0100001001010010"; });
    check("(1/3)_tau period", [&] { return period_of(1, 3, tau) == "00101000"; });
    check("(1/5)_tau period", [&] { return period_of(1, 5, tau) == "00010010101001001000"; });
    check("(3/7) base 10 = 0.(428571)^w", [&] { return period_of(3, 7, ten) == "428571"; });
    check("(18/19) base 10 period", [&] { return period_of(18, 19, ten) == "947368421052631578"; });
    check("(4/5) base 1 + sqrt 3 period", [&] { return period_of(4, 5, sqrt3) == "201100100121011021112000"; });
    check("(1/5) in X^2 - 3X + 1 is not purely periodic",
          [&] { return !orbit_expansion(1, 5, silver).purely_periodic(); });
    check("(2)_tau = 10.01", [&] { return greedy_expand(Rational(2), tau).to_string() == "10.01"; });

    check("d*_tau(1) = (10)^w", [&] { return format_digits(quasigreedy_one(tau, 6)) == "101010"; });
    check("d*_10(1) = 9^w", [&] { return format_digits(quasigreedy_one(ten, 3)) == "999"; });
    check("d*(1) = (21)^w for 1 + sqrt 3", [&] { return format_digits(quasigreedy_one(sqrt3, 6)) == "212121"; });
    check("11 is not tau-admissible", [&] { return !is_admissible(parse_digits("11"), tau); });
    check("(3/7)_tau period is admissible", [&] { return is_admissible(parse_digits("0100001001010010"), tau); });
    check("01000010 = tau^6 + tau", [&] {
        return beta_integer_from_digits(parse_digits("01000010"), tau) ==
               AlgebraicElement::power(tau, 6) + AlgebraicElement::power(tau, 1);
    });
    check("1000 = tau^3", [&] {
        return beta_integer_from_digits(parse_digits("1000"), tau) == AlgebraicElement::power(tau, 3);
    });
    check("reconstruction of 3/7 and 1/2", [&] {
        return verify_reconstruction(3, 7, orbit_expansion(3, 7, tau), tau) &&
               verify_reconstruction(1, 2, orbit_expansion(1, 2, tau), tau);
    });

    check("entry points a(5)=5, a(10)=15, a(13)=7, a(7)=8",
          [&] { return entry_point(5) == 5 && entry_point(10) == 15 && entry_point(13) == 7 && entry_point(7) == 8; });
    check("odd entry points below 70", [&] {
        std::ostringstream out;
        write_entry_point_csv(out, 1, 70, true);
        return out.str() ==
               "m,a\n5,5\n10,15\n13,7\n17,9\n25,25\n26,21\n34,9\n37,19\n50,75\n53,27\n61,15\n65,35\n";
    });
    check("C^4 = -I mod 3", [&] { return companion_pow_mod(tau, 4, 3).is_minus_identity(); });
    check("C^10 = -I mod 5", [&] { return companion_pow_mod(tau, 10, 5).is_minus_identity(); });
    check("C^5 = -I mod 5 for X^2 - 3X + 1", [&] { return companion_pow_mod(silver, 5, 5).is_minus_identity(); });

    check("3/7 halves sum to 10101010", [&] { return halves(3, 7, tau) == "10101010"; });
    check("1/3 halves sum to 1010", [&] { return halves(1, 3, tau) == "1010"; });
    check("1/5 halves sum to 1010101010", [&] { return halves(1, 5, tau) == "1010101010"; });
    check("q = 2 has no Midy property", [&] { return midy_by_definition(1, 2, tau).decision == Decision::no; });
    check("necessary condition: 3 -> 4, 5 -> 10",
          [&] { return necessary_condition(3, tau) == 4u && necessary_condition(5, tau) == 10u; });
    check("X^2 - 3X + 1: matrix condition without Midy", [&] {
        return necessary_condition(5, silver) == 5u && midy_try_all_p(5, silver).decision == Decision::no;
    });
    check("tribonacci: no -I for q = 3..20", [&] {
        for (long q = 3; q <= 20; ++q)
            if (necessary_condition(q, trib)) return false;
        return true;
    });
    check("golden: 3, 5, 7 yes; 21 no", [&] {
        return midy_tau(3).decision == Decision::yes && midy_tau(5).decision == Decision::yes &&
               midy_tau(7).decision == Decision::yes && midy_tau(21).decision == Decision::no;
    });
    check("quartic base: 1/5 returns to 4/5 after 156 steps",
          [&] { return midy_by_complement(1, 5, quartic).exponent == 156u; });
    check("quartic base: 1/10 and 1/25 after 780 steps", [&] {
        return midy_by_complement(1, 10, quartic).exponent == 780u && midy_by_complement(1, 25, quartic).exponent == 780u;
    });
    check("quartic base: 1/17 after 2456 steps", [&] { return midy_by_complement(1, 17, quartic).exponent == 2456u; });

    auto classify = [](long q) { return classify_prime(q).verdict.decision; };
    check("primes 41 yes, 101 no", [&] { return classify(41) == Decision::yes && classify(101) == Decision::no; });
    check("primes 109 yes, 29 no", [&] { return classify(109) == Decision::yes && classify(29) == Decision::no; });
    check("primes 11 no, 13 yes", [&] { return classify(11) == Decision::no && classify(13) == Decision::yes; });
    check("Mersenne s = 3 yes, 13 no, 2 yes", [&] {
        return mersenne_midy(3).decision == Decision::yes && mersenne_midy(13).decision == Decision::no &&
               mersenne_midy(2).decision == Decision::yes;
    });
    check("19 Mersenne exponents are 3 mod 4", [&] { return mersenne_count(mersenne_exponents()).by_rule == 19; });
    check("Fermat primes f_0..f_4 are Midy", [&] {
        for (unsigned n = 0; n <= 4; ++n)
            if (fermat_midy(n).decision != Decision::yes) return false;
        return true;
    });
    check("prime cross-check up to 200", [&] { return crosscheck(200, 200, 1).disagreements.empty(); });
    return report;
}

}  // namespace midy
