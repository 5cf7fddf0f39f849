#pragma once

#include <compare>
#include <vector>

#include "midy/base.hpp"

namespace midy {

/// Exact element (1/q) * sum a_i β^i of (1/q) Z[β], stored in the power basis.
/// Coefficients are not reduced against the denominator.
class AlgebraicElement {
public:
    AlgebraicElement(BetaBase base, std::vector<BigInt> coeffs, BigInt denom = 1);

    static AlgebraicElement zero(const BetaBase& base);
    static AlgebraicElement integer(const BetaBase& base, const BigInt& n);
    static AlgebraicElement rational(const BetaBase& base, const BigInt& p, const BigInt& q);
    /// β^k for k >= 0.
    static AlgebraicElement power(const BetaBase& base, unsigned long k);

    const BetaBase& base() const { return base_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& denom() const { return denom_; }

    bool is_zero() const;
    /// True when the value is a rational number (every a_i with i >= 1 vanishes).
    bool is_rational() const;

    /// β times this element.
    AlgebraicElement times_beta() const;
    /// The same value written over denominator `q`; `q` must be a multiple of
    /// the reduced denominator.
    AlgebraicElement over(const BigInt& q) const;
    /// Divides out common factors of the coefficients and the denominator.
    AlgebraicElement normalized() const;

    friend AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b);
    friend AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b);
    friend AlgebraicElement operator-(const AlgebraicElement& a);
    friend AlgebraicElement operator*(const AlgebraicElement& a, const BigInt& k);
    friend AlgebraicElement operator*(const BigInt& k, const AlgebraicElement& a) { return a * k; }
    /// Exact product in Z[β] (denominators multiply).
    friend AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b);

    /// Value equality (exact; independent of the chosen denominator).
    friend bool operator==(const AlgebraicElement& a, const AlgebraicElement& b);

private:
    BetaBase base_;
    std::vector<BigInt> coeffs_;
    BigInt denom_;
};

/// Power-basis coefficients of β^k, via the recurrence β^d = sum c_i β^i.
std::vector<BigInt> reduce_power(const BetaBase& base, unsigned long k);

/// Companion-matrix image of a coefficient vector (multiplication by β).
std::vector<BigInt> companion_apply(const BetaBase& base, const std::vector<BigInt>& a);

/// Encloses the real value with width at most 2^-precision.
RationalInterval enclose(const AlgebraicElement& e, unsigned long precision);

/// Exact floor of the real value.
BigInt floor_of(const AlgebraicElement& e);

/// Exact comparison of real values.
std::strong_ordering compare(const AlgebraicElement& a, const AlgebraicElement& b);

/// Exact floors start at kStartPrecision bits and double up to kMaxPrecision.
inline constexpr unsigned long kStartPrecision = 64;
inline constexpr unsigned long kMaxPrecision = 1UL << 16;

}  // namespace midy
