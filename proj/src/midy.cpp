#include "midy/midy.hpp"

#include <algorithm>
#include <unordered_map>

#include "midy/modular.hpp"

namespace midy {

namespace {

void require_fraction(const BigInt& p, const BigInt& q, const BigInt& min_q = 3) {
    if (q < min_q) fail(ErrorKind::invalid_input, "denominator must be at least " + min_q.get_str());
    if (p <= 0 || p >= q) fail(ErrorKind::invalid_input, "need 0 < p < q");
    if (gcd(p, q) != 1) fail(ErrorKind::invalid_input, "p and q must be coprime");
}

}  // namespace

std::string to_string(Decision d) {
    switch (d) {
        case Decision::yes: return "yes";
        case Decision::no: return "no";
        case Decision::unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(Rule r) {
    switch (r) {
        case Rule::halves_sum: return "halves-sum";
        case Rule::halves_fail: return "halves-fail";
        case Rule::all_p_fail: return "all-p-fail";
        case Rule::complement_orbit: return "complement-orbit";
        case Rule::minus_identity_absent: return "minus-identity-absent";
        case Rule::minus_identity_tau: return "minus-identity-golden";
        case Rule::entry_point_odd: return "entry-point-odd";
        case Rule::even_fibonacci_multiple: return "even-fibonacci-multiple";
        case Rule::q_is_two: return "q-is-two";
        case Rule::q_is_five: return "q-is-five";
        case Rule::prime_pm2_mod5: return "prime-pm2-mod5";
        case Rule::prime_pm1_mod5_list: return "prime-pm1-mod5-list";
        case Rule::prime_empty_list: return "prime-empty-list";
        case Rule::mersenne_s3_mod4: return "mersenne-s3-mod4";
        case Rule::mersenne_s1_mod4: return "mersenne-s1-mod4";
        case Rule::mersenne_s2: return "mersenne-s2";
        case Rule::fermat_small: return "fermat-small";
        case Rule::fermat_mod5: return "fermat-mod5";
        case Rule::undecided: return "undecided";
    }
    return "undecided";
}

MidyVerdict midy_by_definition(const BigInt& p, const BigInt& q, const BetaBase& base, std::size_t cap) {
    // The definition itself makes sense for q = 2 (1/2 has an odd period).
    require_fraction(p, q, 2);
    Expansion exp = orbit_expansion(p, q, base, cap);
    MidyVerdict v;
    v.certificate.testifying_p = p;
    v.certificate.period_length = exp.period.size();
    v.certificate.period = exp.period;
    v.decision = Decision::no;
    v.rule = Rule::halves_fail;
    if (!exp.purely_periodic()) {
        v.note = "expansion of " + p.get_str() + "/" + q.get_str() + " is not purely periodic: " + exp.to_string();
        return v;
    }
    const std::size_t len = exp.period.size();
    if (len % 2 != 0) {
        v.note = "minimal period has odd length " + std::to_string(len);
        return v;
    }
    const std::size_t n = len / 2;
    const Digits first(exp.period.begin(), exp.period.begin() + static_cast<std::ptrdiff_t>(n));
    const Digits second(exp.period.begin() + static_cast<std::ptrdiff_t>(n), exp.period.end());
    const AlgebraicElement sum = beta_integer_from_digits(first, base) + beta_integer_from_digits(second, base);
    const AlgebraicElement target = AlgebraicElement::power(base, n) - AlgebraicElement::integer(base, 1);
    if (!(sum - target).is_zero()) {
        v.note = "period halves do not sum to beta^" + std::to_string(n) + " - 1";
        return v;
    }
    GreedySplit split = greedy_integer_part(sum);
    Digits digits = split.integer_part;
    if (digits.size() < n) digits.insert(digits.begin(), n - digits.size(), 0);
    v.decision = Decision::yes;
    v.rule = Rule::halves_sum;
    v.certificate.exponent = n;
    v.certificate.halves_sum_digits = std::move(digits);
    return v;
}

MidyVerdict midy_try_all_p(const BigInt& q, const BetaBase& base, std::size_t cap) {
    if (q <= 2) fail(ErrorKind::invalid_input, "the Midy property is defined for q > 2");
    for (BigInt p = 1; p < q; ++p) {
        if (gcd(p, q) != 1) continue;
        MidyVerdict v = midy_by_definition(p, q, base, cap);
        if (v.decision == Decision::yes) return v;
    }
    MidyVerdict v;
    v.decision = Decision::no;
    v.rule = Rule::all_p_fail;
    v.note = "no coprime p < " + q.get_str() + " testifies";
    return v;
}

ComplementResult midy_by_complement(const BigInt& p, const BigInt& q, const BetaBase& base, std::size_t cap) {
    require_fraction(p, q);
    const AlgebraicElement start = AlgebraicElement::rational(base, p, q);
    const std::vector<BigInt> origin = start.coeffs();
    std::vector<BigInt> mirror(base.degree(), 0);
    mirror[0] = q - p;

    std::vector<std::vector<BigInt>> seen_list;
    std::unordered_map<std::string, std::size_t> seen;
    auto key = [](const std::vector<BigInt>& v) {
        std::string k;
        for (const auto& c : v) k += c.get_str() + "|";
        return k;
    };
    OrbitState state{start, 0};
    seen.emplace(key(origin), 0);
    std::optional<std::uint64_t> hit;
    for (std::size_t k = 1; k <= cap; ++k) {
        state = t_step(state).next;
        const auto& a = state.element.coeffs();
        if (hit) {
            if (k == 2 * *hit) {
                if (a == origin) return {ComplementStatus::found, hit, k};
                return {ComplementStatus::absent, std::nullopt, k};
            }
            continue;
        }
        if (a == mirror) {
            hit = k;
            continue;
        }
        if (!seen.emplace(key(a), k).second) return {ComplementStatus::absent, std::nullopt, k};
    }
    return {ComplementStatus::cap_exhausted, std::nullopt, cap};
}

std::optional<std::uint64_t> necessary_condition(const BigInt& q, const BetaBase& base) {
    if (q <= 2) fail(ErrorKind::invalid_input, "the Midy property is defined for q > 2");
    return order_and_minus_i(base, q).minus_i_exponent;
}

MidyVerdict midy_tau(const BigInt& q, unsigned long verify_bound) {
    const BetaBase tau = bases::golden();
    std::optional<std::uint64_t> n = necessary_condition(q, tau);
    MidyVerdict v;
    if (n) {
        v.decision = Decision::yes;
        v.rule = Rule::minus_identity_tau;
        v.certificate.exponent = *n;
    } else {
        v.decision = Decision::no;
        v.rule = Rule::minus_identity_absent;
    }
    if (q <= verify_bound) {
        MidyVerdict def = midy_by_definition(1, q, tau);
        if (def.decision != v.decision || (n && def.certificate.exponent != n))
            fail(ErrorKind::cross_check, "golden base q=" + q.get_str() + ": matrix criterion says " +
                                             to_string(v.decision) + ", expansion of 1/q says " + to_string(def.decision));
        v.certificate.testifying_p = def.certificate.testifying_p;
        v.certificate.period_length = def.certificate.period_length;
        v.certificate.period = def.certificate.period;
        v.certificate.halves_sum_digits = def.certificate.halves_sum_digits;
    }
    return v;
}

std::optional<MidyVerdict> fibonacci_rule(const BigInt& q) {
    if (q <= 2) fail(ErrorKind::invalid_input, "the Midy property is defined for q > 2");
    if (!q.fits_ulong_p()) return std::nullopt;
    const std::uint64_t a = entry_point(q.get_ui());
    if (a % 2 == 1) {
        MidyVerdict v;
        v.decision = Decision::yes;
        v.rule = Rule::entry_point_odd;
        v.note = "a(" + q.get_str() + ") = " + std::to_string(a);
        return v;
    }
    // F_6, F_8, F_10, ...
    BigInt f_prev = 5, f = 8;  // F_5, F_6
    while (f <= q) {
        if (q % f == 0) {
            MidyVerdict v;
            v.decision = Decision::no;
            v.rule = Rule::even_fibonacci_multiple;
            v.note = q.get_str() + " is a multiple of " + f.get_str();
            return v;
        }
        BigInt f_next = f + f_prev;  // odd index
        f_prev = f_next;
        f = f_next + f;  // next even index
    }
    return std::nullopt;
}

DivisorReport divisor_closure_check(const BigInt& q) {
    if (midy_tau(q).decision != Decision::yes)
        fail(ErrorKind::invalid_input, q.get_str() + " does not have the Midy property in the golden base");
    std::vector<BigInt> divisors;
    for (BigInt d = 1; d * d <= q; ++d) {
        if (q % d != 0) continue;
        divisors.push_back(d);
        if (d * d != q) divisors.push_back(q / d);
    }
    std::sort(divisors.begin(), divisors.end());
    DivisorReport report;
    for (const auto& d : divisors) {
        if (d <= 2) continue;
        Decision dec = midy_tau(d).decision;
        report.divisors.emplace_back(d, dec);
        if (dec != Decision::yes) report.pass = false;
    }
    return report;
}

}  // namespace midy
