#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "midy/element.hpp"

namespace midy {

inline constexpr std::size_t kDefaultOrbitCap = 10'000'000;

/// A point of the β-transformation orbit: an element of (1/q) Z[β] in [0, 1).
struct OrbitState {
    AlgebraicElement element;
    std::size_t step = 0;
};

struct StepResult {
    Digit digit;
    OrbitState next;
};

/// One application of T(x) = βx - floor(βx).
StepResult t_step(const OrbitState& state);

/// Integer part, preperiod and (minimal) period of a β-expansion.
/// An empty period means the expansion is finite.
struct Expansion {
    Digits integer_part;
    Digits preperiod;
    Digits period;
    /// True when the digit budget ran out before the orbit repeated.
    bool truncated = false;
    /// Source fraction, when the expansion came from p/q.
    BigInt p = 0;
    BigInt q = 1;

    bool purely_periodic() const { return !truncated && preperiod.empty() && !period.empty(); }
    /// Renders "int.pre(period)^w"; finite expansions omit the period part.
    std::string to_string() const;
};

/// Orbit of an element in [0, 1) until the first repeated state.
/// Throws ErrorKind::cap_exhausted if no state repeats within `cap` steps.
Expansion orbit_expansion(const AlgebraicElement& start, std::size_t cap = kDefaultOrbitCap);
Expansion orbit_expansion(const BigInt& p, const BigInt& q, const BetaBase& base,
                          std::size_t cap = kDefaultOrbitCap);

/// Greedy digits of a non-negative element: integer part plus remainder in [0, 1).
struct GreedySplit {
    Digits integer_part;  // most significant first, "0" for values below 1
    AlgebraicElement remainder;
};
GreedySplit greedy_integer_part(const AlgebraicElement& x);

/// β-expansion of a non-negative rational. Fractional digits are produced
/// by the orbit of the remainder; when it does not close within
/// `frac_digits` steps the result is truncated.
Expansion greedy_expand(const Rational& x, const BetaBase& base, std::size_t frac_digits = kDefaultOrbitCap);

/// First n digits of d*_β(1), the quasigreedy expansion of 1.
Digits quasigreedy_one(const BetaBase& base, std::size_t n);

/// Eventually periodic shape of d*_β(1) when it is known.
struct QuasigreedyShape {
    Digits preperiod;
    Digits period;
};
std::optional<QuasigreedyShape> quasigreedy_shape(const BetaBase& base);

/// Parry condition for a finite word followed by zeros.
bool is_admissible(const Digits& digits, const BetaBase& base);
/// Parry condition for the infinite word preperiod · period^ω of an expansion.
bool is_admissible(const Expansion& expansion, const BetaBase& base);

/// Value sum c_i β^{n-i} of the digit block c_1 ... c_n.
/// Throws ErrorKind::invalid_input for inadmissible blocks.
AlgebraicElement beta_integer_from_digits(const Digits& digits, const BetaBase& base);

/// Checks the exact identity relating p/q to its expansion, e.g.
/// p (β^m - 1) = q · value(period) for purely periodic expansions.
bool verify_reconstruction(const BigInt& p, const BigInt& q, const Expansion& exp, const BetaBase& base);

/// Lazily extended greedy digits of 1 for one base. Shared by all copies of
/// a BetaBase; safe for concurrent use.
class QuasigreedyMemo {
public:
    Digits prefix(const BetaBase& base, std::size_t n);
    std::optional<QuasigreedyShape> shape(const BetaBase& base, std::size_t search_cap);

private:
    void extend_to(const BetaBase& base, std::size_t n);  // requires lock

    std::mutex mu_;
    Digits greedy_;                       // digits t_1 t_2 ... of d_β(1)
    std::optional<AlgebraicElement> state_;  // T^k(1) after greedy_.size() digits
    bool finished_ = false;               // orbit reached 0 (finite d_β(1))
    std::optional<QuasigreedyShape> shape_;
    std::unordered_map<std::string, std::size_t> seen_;
};

}  // namespace midy
