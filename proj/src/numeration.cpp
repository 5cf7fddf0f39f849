#include "midy/numeration.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace midy {

namespace {

struct CoeffHash {
    std::size_t operator()(const std::vector<BigInt>& v) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (const auto& c : v) {
            h ^= static_cast<std::size_t>(mpz_get_ui(c.get_mpz_t())) + 0x9e3779b97f4a7c15ULL * (sgn(c) + 2);
            h *= 1099511628211ULL;
        }
        return h;
    }
};

using StateIndex = std::unordered_map<std::vector<BigInt>, std::size_t, CoeffHash>;

std::string state_key(const AlgebraicElement& e) {
    std::string key = e.denom().get_str();
    for (const auto& c : e.coeffs()) {
        key.push_back('|');
        key += c.get_str();
    }
    return key;
}

AlgebraicElement horner(const Digits& digits, const BetaBase& base) {
    std::vector<BigInt> acc(base.degree(), 0);
    for (Digit d : digits) {
        acc = companion_apply(base, acc);
        acc[0] += d;
    }
    return AlgebraicElement(base, std::move(acc), 1);
}

Expansion run_orbit(const AlgebraicElement& start, std::size_t cap, bool throw_on_cap) {
    if (floor_of(start) != 0) fail(ErrorKind::invalid_input, "orbit start must lie in [0, 1)");
    if (cap == 0) fail(ErrorKind::invalid_input, "orbit cap must be at least 1");

    Expansion exp;
    exp.integer_part = {0};
    StateIndex seen;
    Digits digits;
    OrbitState state{start, 0};
    seen.emplace(start.coeffs(), 0);
    while (true) {
        StepResult r = t_step(state);
        digits.push_back(r.digit);
        state = std::move(r.next);
        auto [it, inserted] = seen.emplace(state.element.coeffs(), digits.size());
        if (!inserted) {
            const std::size_t first = it->second;
            exp.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(first));
            exp.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(first), digits.end());
            if (exp.period == Digits{0}) exp.period.clear();  // orbit reached 0: finite expansion
            return exp;
        }
        if (digits.size() >= cap) {
            if (throw_on_cap)
                fail(ErrorKind::cap_exhausted,
                     "no repeated state within " + std::to_string(cap) + " steps (" + std::to_string(seen.size()) +
                         " distinct states)");
            exp.preperiod = std::move(digits);
            exp.truncated = true;
            return exp;
        }
    }
}

// Lexicographic comparison of word[from..] (followed by zeros) with d*.
// Returns true when the suffix is strictly smaller.
bool suffix_below(const Digits& word, std::size_t from, const Digits& dstar) {
    for (std::size_t i = from; i < word.size(); ++i) {
        Digit t = dstar[i - from];
        if (word[i] < t) return true;
        if (word[i] > t) return false;
    }
    // Equal on the whole finite word; the zeros that follow lose against the
    // infinitely many non-zero digits of d*.
    return true;
}

Digits strip_leading_zeros(Digits d) {
    auto it = std::find_if(d.begin(), d.end(), [](Digit x) { return x != 0; });
    d.erase(d.begin(), it);
    return d;
}

}  // namespace

std::string Expansion::to_string() const {
    std::string out = format_digits(integer_part.empty() ? Digits{0} : integer_part);
    if (truncated) return out + "." + format_digits(preperiod) + "...";
    if (preperiod.empty() && period.empty()) return out;
    out += "." + format_digits(preperiod);
    if (!period.empty()) out += "(" + format_digits(period) + ")^w";
    return out;
}

StepResult t_step(const OrbitState& state) {
    const AlgebraicElement& x = state.element;
    std::vector<BigInt> next = companion_apply(x.base(), x.coeffs());
    AlgebraicElement scaled(x.base(), next, x.denom());
    BigInt digit = floor_of(scaled);
    if (digit < 0 || digit > x.base().digit_max())
        fail(ErrorKind::invalid_input, "t_step called on a state outside [0, 1)");
    next[0] -= x.denom() * digit;
    return {static_cast<Digit>(digit.get_ui()), OrbitState{AlgebraicElement(x.base(), std::move(next), x.denom()), state.step + 1}};
}

Expansion orbit_expansion(const AlgebraicElement& start, std::size_t cap) { return run_orbit(start, cap, true); }

Expansion orbit_expansion(const BigInt& p, const BigInt& q, const BetaBase& base, std::size_t cap) {
    if (q <= 0 || p < 0 || p >= q) fail(ErrorKind::invalid_input, "orbit_expansion needs 0 <= p < q");
    Expansion e = orbit_expansion(AlgebraicElement::rational(base, p, q), cap);
    e.p = p;
    e.q = q;
    return e;
}

GreedySplit greedy_integer_part(const AlgebraicElement& x) {
    const BetaBase& base = x.base();
    const AlgebraicElement one = AlgebraicElement::integer(base, 1);
    if (compare(x, AlgebraicElement::zero(base)) < 0) fail(ErrorKind::invalid_input, "greedy expansion needs x >= 0");
    if (compare(x, one) < 0) return {Digits{0}, x};
    // beta^k <= x < beta^{k+1}
    std::vector<AlgebraicElement> powers{one};
    while (compare(powers.back().times_beta(), x) <= 0) powers.push_back(powers.back().times_beta());
    Digits digits;
    AlgebraicElement r = x;
    for (std::size_t i = powers.size(); i-- > 0;) {
        Digit lo = 0, hi = base.digit_max();
        while (lo < hi) {
            Digit mid = lo + (hi - lo + 1) / 2;
            if (compare(powers[i] * BigInt(mid), r) <= 0) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        digits.push_back(lo);
        r = r - powers[i] * BigInt(lo);
    }
    return {std::move(digits), r.over(x.denom())};
}

Expansion greedy_expand(const Rational& x, const BetaBase& base, std::size_t frac_digits) {
    if (x < 0) fail(ErrorKind::invalid_input, "greedy expansion needs x >= 0");
    AlgebraicElement e = AlgebraicElement::rational(base, x.get_num(), x.get_den());
    GreedySplit split = greedy_integer_part(e);
    Expansion exp;
    if (frac_digits == 0) {
        exp.truncated = !split.remainder.is_zero();
    } else {
        exp = run_orbit(split.remainder, frac_digits, false);
    }
    exp.integer_part = std::move(split.integer_part);
    exp.p = x.get_num();
    exp.q = x.get_den();
    return exp;
}

void QuasigreedyMemo::extend_to(const BetaBase& base, std::size_t n) {
    if (!state_) {
        // First digit is floor(β), possibly equal to β for integer bases.
        AlgebraicElement beta = AlgebraicElement::power(base, 1);
        BigInt t1 = floor_of(beta);
        greedy_.push_back(static_cast<Digit>(t1.get_ui()));
        state_ = beta - AlgebraicElement::integer(base, t1);
        if (state_->is_zero()) finished_ = true;
        else seen_.emplace(state_key(*state_), 1);
    }
    while (greedy_.size() < n && !finished_ && !shape_) {
        StepResult r = t_step(OrbitState{*state_, greedy_.size()});
        greedy_.push_back(r.digit);
        state_ = std::move(r.next.element);
        if (state_->is_zero()) {
            finished_ = true;
            break;
        }
        auto [it, inserted] = seen_.emplace(state_key(*state_), greedy_.size());
        if (!inserted) {
            // d_β(1) = t_1..t_j (t_{j+1}..t_k)^ω is already infinite, so d* = d.
            QuasigreedyShape s;
            s.preperiod.assign(greedy_.begin(), greedy_.begin() + static_cast<std::ptrdiff_t>(it->second));
            s.period.assign(greedy_.begin() + static_cast<std::ptrdiff_t>(it->second), greedy_.end());
            shape_ = std::move(s);
        }
    }
    if (finished_ && !shape_) {
        QuasigreedyShape s;
        s.period = greedy_;
        s.period.back() -= 1;
        shape_ = std::move(s);
    }
}

namespace {
Digits expand_shape(const QuasigreedyShape& s, std::size_t n) {
    Digits out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < s.preperiod.size()) {
            out.push_back(s.preperiod[i]);
        } else {
            out.push_back(s.period[(i - s.preperiod.size()) % s.period.size()]);
        }
    }
    return out;
}
}  // namespace

Digits QuasigreedyMemo::prefix(const BetaBase& base, std::size_t n) {
    std::lock_guard lock(mu_);
    extend_to(base, n);
    if (shape_) return expand_shape(*shape_, n);
    return Digits(greedy_.begin(), greedy_.begin() + static_cast<std::ptrdiff_t>(n));
}

std::optional<QuasigreedyShape> QuasigreedyMemo::shape(const BetaBase& base, std::size_t search_cap) {
    std::lock_guard lock(mu_);
    extend_to(base, search_cap);
    return shape_;
}

Digits quasigreedy_one(const BetaBase& base, std::size_t n) { return base.quasigreedy_memo().prefix(base, n); }

std::optional<QuasigreedyShape> quasigreedy_shape(const BetaBase& base) {
    return base.quasigreedy_memo().shape(base, 4096);
}

bool is_admissible(const Digits& digits, const BetaBase& base) {
    if (digits.empty()) return true;
    for (Digit d : digits)
        if (d > base.digit_max()) return false;
    Digits dstar = quasigreedy_one(base, digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i)
        if (!suffix_below(digits, i, dstar)) return false;
    return true;
}

bool is_admissible(const Expansion& expansion, const BetaBase& base) {
    if (expansion.truncated) {
        Digits word = strip_leading_zeros(expansion.integer_part);
        word.insert(word.end(), expansion.preperiod.begin(), expansion.preperiod.end());
        // A truncated word only certifies its finite prefix.
        return is_admissible(word, base);
    }
    Digits head = strip_leading_zeros(expansion.integer_part);
    head.insert(head.end(), expansion.preperiod.begin(), expansion.preperiod.end());
    const Digits& period = expansion.period;
    if (period.empty()) return is_admissible(head, base);
    for (Digit d : head)
        if (d > base.digit_max()) return false;
    for (Digit d : period)
        if (d > base.digit_max()) return false;

    auto word_at = [&](std::size_t i) { return i < head.size() ? head[i] : period[(i - head.size()) % period.size()]; };
    // Two eventually periodic words that agree on pre + lcm(periods) digits agree forever.
    std::optional<QuasigreedyShape> shape = quasigreedy_shape(base);
    std::size_t horizon;
    if (shape) {
        horizon = shape->preperiod.size() + std::lcm(period.size(), shape->period.size()) + head.size() + period.size();
    } else {
        horizon = head.size() + 2 * period.size() + 64;
    }
    const std::size_t starts = head.size() + period.size();
    while (true) {
        Digits dstar = quasigreedy_one(base, horizon);
        bool undecided = false;
        for (std::size_t s = 0; s < starts; ++s) {
            bool decided = false;
            for (std::size_t k = 0; k < horizon; ++k) {
                Digit w = word_at(s + k), t = dstar[k];
                if (w < t) {
                    decided = true;
                    break;
                }
                if (w > t) return false;
            }
            if (!decided) {
                if (shape) return false;  // equal to d* forever: not strictly smaller
                undecided = true;
            }
        }
        if (!undecided) return true;
        // A periodic word never equals an aperiodic d*, so a longer look settles it.
        horizon *= 2;
        if (horizon > (1u << 22)) fail(ErrorKind::internal, "admissibility comparison did not settle");
    }
}

AlgebraicElement beta_integer_from_digits(const Digits& digits, const BetaBase& base) {
    if (!is_admissible(digits, base))
        fail(ErrorKind::invalid_input, "digit block " + format_digits(digits) + " is not admissible");
    return horner(digits, base);
}

bool verify_reconstruction(const BigInt& p, const BigInt& q, const Expansion& exp, const BetaBase& base) {
    if (exp.truncated || q == 0) return false;
    const AlgebraicElement integer = horner(exp.integer_part, base);
    const AlgebraicElement pre = horner(exp.preperiod, base);
    const AlgebraicElement shift = AlgebraicElement::power(base, exp.preperiod.size());
    AlgebraicElement lhs = AlgebraicElement::zero(base);
    AlgebraicElement rhs = shift * p;
    if (exp.period.empty()) {
        lhs = (integer * shift + pre) * q;
    } else {
        const AlgebraicElement cycle = AlgebraicElement::power(base, exp.period.size()) - AlgebraicElement::integer(base, 1);
        lhs = (integer * shift * cycle + pre * cycle + horner(exp.period, base)) * q;
        rhs = rhs * cycle;
    }
    return (lhs - rhs).is_zero();
}

}  // namespace midy
