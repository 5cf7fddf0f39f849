#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "midy/midy.hpp"

namespace midy {

struct Primality {
    bool prime;
    bool probabilistic;  ///< true above 2^64, where a Miller-Rabin test with 40 rounds is used
};

/// Deterministic Miller-Rabin below 2^64, GMP's probabilistic test above.
Primality test_primality(const BigInt& n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

struct TraceStep {
    Rule rule;
    std::string inputs;
    std::string outcome;
};

struct RuleTrace {
    std::vector<TraceStep> steps;
    MidyVerdict verdict;
};

/// Golden-base decision for a prime q with the full rule trace.
/// Throws ErrorKind::invalid_input if q is not prime (unless `force`).
RuleTrace classify_prime(const BigInt& q, bool force = false);

/// The 51 Mersenne prime exponents known as of April 2024.
const std::vector<unsigned long>& mersenne_exponents();
/// Loads a one-exponent-per-line list (blank lines and '#' comments ignored).
std::vector<unsigned long> load_exponent_list(const std::string& text);

/// Golden-base verdict for the Mersenne prime 2^s - 1. Primality of 2^s - 1 is
/// checked for exponents outside the embedded list when `verify` is set.
MidyVerdict mersenne_midy(unsigned long s, bool verify = true);

struct MersenneCount {
    std::size_t total = 0;
    std::size_t by_rule = 0;       ///< s = 3 mod 4
    std::size_t including_s2 = 0;  ///< s = 3 mod 4 plus s = 2
    std::string discrepancy;
};
MersenneCount mersenne_count(const std::vector<unsigned long>& exponents);

/// Golden-base verdict for the Fermat prime 2^{2^n} + 1. Only n <= 4 are
/// known primes; larger n need `assume_prime`.
MidyVerdict fermat_midy(unsigned n, bool assume_prime = false);

struct CrosscheckRow {
    std::uint64_t q;
    Decision classified;
    Decision matrix;
    std::optional<Decision> expansion;
};

struct CrosscheckReport {
    std::vector<CrosscheckRow> rows;      ///< sorted by q
    std::vector<std::uint64_t> disagreements;
};

/// Compares classify_prime, midy_tau and (for q <= expansion_bound) the
/// expansion of 1/q on every prime up to q_max.
CrosscheckReport crosscheck(std::uint64_t q_max, std::uint64_t expansion_bound = kVerificationBound,
                            unsigned workers = 0);

}  // namespace midy
