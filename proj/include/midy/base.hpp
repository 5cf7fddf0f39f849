#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "midy/common.hpp"

namespace midy {

enum class Pisot { yes, no, unknown };

/// Which rationals are known to have purely periodic expansions. Metadata
/// only: nothing in the library consults it when computing.
enum class Purity { all_rationals_pure, coprime_to_norm_pure, none_pure, unknown };

std::string to_string(Pisot p);
std::string to_string(Purity p);

struct RationalInterval {
    Rational lo;
    Rational hi;
};

/// Fixed-point enclosure of the powers 1, β, ..., β^{d-1}: lo[i] / 2^bits <= β^i <= hi[i] / 2^bits.
struct PowerTable {
    unsigned long bits = 0;
    std::vector<BigInt> lo;
    std::vector<BigInt> hi;
};

class QuasigreedyMemo;

/// Numeration base: the dominant real root β > 1 of the monic polynomial
/// X^d - c_{d-1} X^{d-1} - ... - c_1 X - c_0.
///
/// A BetaBase is a cheap handle onto immutable shared data. The only mutable
/// parts are internal caches (refined root enclosures, quasigreedy digits),
/// which are guarded and idempotent.
class BetaBase {
public:
    /// Validates the polynomial and isolates its dominant root. `coeffs` are
    /// c_0, ..., c_{d-1} (low to high); a single value c_0 is the integer base c_0.
    static BetaBase make(std::vector<BigInt> coeffs);
    static BetaBase make(const std::vector<long>& coeffs);

    std::size_t degree() const;
    const std::vector<BigInt>& coeffs() const;
    const RationalInterval& isolating_interval() const;
    Digit digit_max() const;
    bool is_unit() const;
    Pisot pisot() const;
    Purity purity() const;
    /// Exact rational value of β when it is an integer (degree-1 bases).
    std::optional<BigInt> integer_value() const;

    /// "c0,c1,...", the canonical identifier used to match elements to bases.
    const std::string& id() const;
    /// Human readable polynomial, e.g. "X^2 - X - 1".
    std::string polynomial_string() const;

    /// Enclosure of β^0..β^{d-1} on a 2^-bits grid. Cached per precision.
    const PowerTable& powers(unsigned long bits) const;
    /// Rational enclosure of β of width at most 2^-bits.
    RationalInterval beta_enclosure(unsigned long bits) const;

    QuasigreedyMemo& quasigreedy_memo() const;

    bool operator==(const BetaBase& other) const { return id() == other.id(); }

private:
    struct Impl;
    explicit BetaBase(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<Impl> impl_;
};

namespace bases {
BetaBase golden();       ///< X^2 - X - 1
BetaBase tribonacci();   ///< X^3 - X^2 - X - 1
BetaBase tetranacci();   ///< X^4 - X^3 - X^2 - X - 1
BetaBase integer(long b);
}  // namespace bases

/// Parses the comma-separated low-to-high coefficient list used on the command line.
BetaBase parse_base(const std::string& text);

}  // namespace midy
