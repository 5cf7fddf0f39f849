#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "midy/numeration.hpp"

namespace midy {

enum class Decision { yes, no, unknown };

/// Deciding rules. Each identifier corresponds to one established criterion.
enum class Rule {
    halves_sum,            ///< period halves of p/q sum to β^n - 1
    halves_fail,           ///< expansion of p/q exists but does not split as required
    all_p_fail,            ///< every coprime p < q checked, none testifies
    complement_orbit,      ///< T^N(p/q) = (q-p)/q and back
    minus_identity_absent, ///< no N with C^N = -I (mod q): Midy impossible
    minus_identity_tau,    ///< C^N = -I (mod q) in the golden base: sufficient
    entry_point_odd,       ///< a(q) odd
    even_fibonacci_multiple, ///< q is a multiple of F_{2n}, n >= 3
    q_is_two,
    q_is_five,
    prime_pm2_mod5,        ///< prime q = ±2 mod 5
    prime_pm1_mod5_list,   ///< prime q = ±1 mod 5, scan C^{2l}, ..., C^{2^{k-1} l}
    prime_empty_list,      ///< prime q = ±1 mod 5 with (q-1)/2 odd (q = 19, 11 mod 20)
    mersenne_s3_mod4,
    mersenne_s1_mod4,
    mersenne_s2,
    fermat_small,          ///< f_0 = 3, f_1 = 5
    fermat_mod5,           ///< f_n = 2 mod 5 for n >= 2
    undecided,
};

std::string to_string(Decision d);
std::string to_string(Rule r);

struct Certificate {
    std::optional<BigInt> testifying_p;
    std::optional<std::uint64_t> exponent;
    std::optional<std::size_t> period_length;
    std::optional<Digits> period;
    std::optional<Digits> halves_sum_digits;
};

struct MidyVerdict {
    Decision decision = Decision::unknown;
    Rule rule = Rule::undecided;
    Certificate certificate;
    std::string note;
};

/// Decides whether this particular p testifies for q. Accepts q = 2.
MidyVerdict midy_by_definition(const BigInt& p, const BigInt& q, const BetaBase& base,
                               std::size_t cap = kDefaultOrbitCap);

/// Runs midy_by_definition for every coprime p < q. Decision yes with the
/// first testifying p, or no when none testifies.
MidyVerdict midy_try_all_p(const BigInt& q, const BetaBase& base, std::size_t cap = kDefaultOrbitCap);

enum class ComplementStatus { found, absent, cap_exhausted };

struct ComplementResult {
    ComplementStatus status;
    std::optional<std::uint64_t> exponent;
    std::size_t steps = 0;
};

/// Least N with T^N(p/q) = (q-p)/q and T^N((q-p)/q) = p/q. Absence is
/// definite once the orbit of p/q closes.
ComplementResult midy_by_complement(const BigInt& p, const BigInt& q, const BetaBase& base,
                                    std::size_t cap = kDefaultOrbitCap);

/// Least N with C^N = -I (mod q), or nothing when -I is not a power of C.
std::optional<std::uint64_t> necessary_condition(const BigInt& q, const BetaBase& base);

inline constexpr unsigned long kVerificationBound = 500;

/// Exact decision for the golden base. For q up to `verify_bound` the matrix
/// answer is double-checked against the expansion of 1/q; a mismatch throws
/// ErrorKind::cross_check.
MidyVerdict midy_tau(const BigInt& q, unsigned long verify_bound = kVerificationBound);

/// Fibonacci fast path for the golden base; empty when neither rule applies.
std::optional<MidyVerdict> fibonacci_rule(const BigInt& q);

struct DivisorReport {
    std::vector<std::pair<BigInt, Decision>> divisors;
    bool pass = true;
};

/// Every divisor d > 2 of a golden-base Midy denominator must be Midy too.
DivisorReport divisor_closure_check(const BigInt& q);

}  // namespace midy
