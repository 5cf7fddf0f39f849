#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace midy {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Digits of a numeration system. Alphabets beyond 255 are not needed for any
/// base this library accepts with a sane coefficient range.
using Digit = std::uint32_t;
using Digits = std::vector<Digit>;

enum class ErrorKind {
    invalid_input,
    cap_exhausted,
    singular_modulus,
    cross_check,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline BigInt pow2(unsigned long k) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

inline BigInt floor_of(const Rational& x) {
    return floor_div(x.get_num(), x.get_den());
}

// Digit strings: plain ASCII when every digit is at most 9, otherwise
// comma-separated decimal integers.
std::string format_digits(const Digits& digits);
Digits parse_digits(const std::string& text);

}  // namespace midy
