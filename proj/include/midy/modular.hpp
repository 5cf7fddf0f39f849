#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "midy/base.hpp"

namespace midy {

/// (F_n mod m, F_{n+1} mod m).
struct FibPair {
    BigInt n;
    BigInt value;
    BigInt next;
};

/// Fast doubling, O(log n) multiplications.
FibPair fib_pair_mod(const BigInt& n, const BigInt& m);

/// Entry point a(m): least k >= 1 with m | F_k (OEIS A001177).
/// Plain iteration of the recurrence mod m; bounded by the Pisano period <= 6m.
std::uint64_t entry_point(std::uint64_t m);

/// Writes "m,a" rows for lo <= m <= hi with a header line.
void write_entry_point_csv(std::ostream& out, std::uint64_t lo, std::uint64_t hi, bool odd_only);

/// Legendre symbol (a/q) by Euler's criterion. `q` must be an odd prime;
/// only oddness is checked here.
int legendre(const BigInt& a, const BigInt& q);

/// Square matrix over Z_q, entries kept in [0, q).
class ModMatrix {
public:
    ModMatrix(std::size_t dim, BigInt modulus);
    static ModMatrix identity(std::size_t dim, const BigInt& modulus);
    static ModMatrix companion(const BetaBase& base, const BigInt& modulus);

    std::size_t dim() const { return dim_; }
    const BigInt& modulus() const { return modulus_; }
    const BigInt& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    void set(std::size_t row, std::size_t col, const BigInt& value);

    bool is_scalar(const BigInt& lambda) const;
    bool is_identity() const { return is_scalar(1); }
    bool is_minus_identity() const { return is_scalar(-1); }
    BigInt determinant() const;

    friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
    friend bool operator==(const ModMatrix& a, const ModMatrix& b) = default;

private:
    std::size_t dim_;
    BigInt modulus_;
    std::vector<BigInt> entries_;
};

ModMatrix pow(const ModMatrix& m, BigInt exponent);

/// C^N mod q by binary exponentiation.
ModMatrix companion_pow_mod(const BetaBase& base, const BigInt& exponent, const BigInt& q);

struct OrderInfo {
    std::uint64_t order;
    /// First N < order with C^N = -I; never reported for q = 2 where -I = I.
    std::optional<std::uint64_t> minus_i_exponent;
};

/// Multiplicative order of C mod q and the first exponent giving -I.
/// Throws ErrorKind::singular_modulus when C is not invertible mod q, and
/// ErrorKind::cap_exhausted past the iteration cap.
OrderInfo order_and_minus_i(const BetaBase& base, const BigInt& q);

/// Iteration cap used by order_and_minus_i: 6 q^2 for quadratic bases,
/// 6 q^d in general (saturating).
std::uint64_t order_search_cap(std::size_t degree, std::uint64_t q);

}  // namespace midy
