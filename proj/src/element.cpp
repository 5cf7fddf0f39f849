#include "midy/element.hpp"

#include <algorithm>
#include <numeric>

namespace midy {

namespace {

void require_same_base(const AlgebraicElement& a, const AlgebraicElement& b) {
    if (!(a.base() == b.base()))
        fail(ErrorKind::invalid_input, "elements belong to different bases (" + a.base().id() + " vs " + b.base().id() + ")");
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Numerator enclosure [lo, hi] of sum a_i β^i on the 2^-bits grid.
std::pair<BigInt, BigInt> numerator_bounds(const AlgebraicElement& e, unsigned long bits) {
    const PowerTable& t = e.base().powers(bits);
    BigInt lo = 0, hi = 0;
    const auto& a = e.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= 0) {
            lo += a[i] * t.lo[i];
            hi += a[i] * t.hi[i];
        } else {
            lo += a[i] * t.hi[i];
            hi += a[i] * t.lo[i];
        }
    }
    return {lo, hi};
}

unsigned long schedule_start(unsigned long precision) {
    unsigned long bits = kStartPrecision;
    while (bits < precision + 8) bits *= 2;
    return bits;
}

}  // namespace

AlgebraicElement::AlgebraicElement(BetaBase base, std::vector<BigInt> coeffs, BigInt denom)
    : base_(std::move(base)), coeffs_(std::move(coeffs)), denom_(std::move(denom)) {
    if (coeffs_.size() != base_.degree())
        fail(ErrorKind::invalid_input, "coefficient vector length does not match the base degree");
    if (denom_ == 0) fail(ErrorKind::invalid_input, "zero denominator");
    if (denom_ < 0) {
        denom_ = -denom_;
        for (auto& c : coeffs_) c = -c;
    }
}

AlgebraicElement AlgebraicElement::zero(const BetaBase& base) {
    return AlgebraicElement(base, std::vector<BigInt>(base.degree(), 0), 1);
}

AlgebraicElement AlgebraicElement::integer(const BetaBase& base, const BigInt& n) {
    return rational(base, n, 1);
}

AlgebraicElement AlgebraicElement::rational(const BetaBase& base, const BigInt& p, const BigInt& q) {
    std::vector<BigInt> c(base.degree(), 0);
    c[0] = p;
    return AlgebraicElement(base, std::move(c), q);
}

AlgebraicElement AlgebraicElement::power(const BetaBase& base, unsigned long k) {
    return AlgebraicElement(base, reduce_power(base, k), 1);
}

bool AlgebraicElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

bool AlgebraicElement::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

AlgebraicElement AlgebraicElement::times_beta() const {
    return AlgebraicElement(base_, companion_apply(base_, coeffs_), denom_);
}

AlgebraicElement AlgebraicElement::over(const BigInt& q) const {
    if (q % denom_ != 0) {
        AlgebraicElement n = normalized();
        if (q % n.denom_ != 0) fail(ErrorKind::invalid_input, "target denominator is not a multiple of the element's");
        return n.over(q);
    }
    BigInt k = q / denom_;
    std::vector<BigInt> c = coeffs_;
    for (auto& x : c) x *= k;
    return AlgebraicElement(base_, std::move(c), q);
}

AlgebraicElement AlgebraicElement::normalized() const {
    BigInt g = denom_;
    for (const auto& c : coeffs_) g = gcd(g, c);
    if (g == 1) return *this;
    std::vector<BigInt> c = coeffs_;
    for (auto& x : c) x /= g;
    return AlgebraicElement(base_, std::move(c), denom_ / g);
}

AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b) {
    require_same_base(a, b);
    BigInt q = lcm(a.denom_, b.denom_);
    BigInt ka = q / a.denom_, kb = q / b.denom_;
    std::vector<BigInt> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] * ka + b.coeffs_[i] * kb;
    return AlgebraicElement(a.base_, std::move(c), q);
}

AlgebraicElement operator-(const AlgebraicElement& a) {
    std::vector<BigInt> c = a.coeffs_;
    for (auto& x : c) x = -x;
    return AlgebraicElement(a.base_, std::move(c), a.denom_);
}

AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b) { return a + (-b); }

AlgebraicElement operator*(const AlgebraicElement& a, const BigInt& k) {
    std::vector<BigInt> c = a.coeffs_;
    for (auto& x : c) x *= k;
    return AlgebraicElement(a.base_, std::move(c), a.denom_);
}

AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b) {
    require_same_base(a, b);
    AlgebraicElement acc = AlgebraicElement::zero(a.base_);
    AlgebraicElement shifted(a.base_, a.coeffs_, 1);
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        acc = acc + shifted * b.coeffs_[j];
        shifted = shifted.times_beta();
    }
    return AlgebraicElement(a.base_, acc.coeffs_, a.denom_ * b.denom_);
}

bool operator==(const AlgebraicElement& a, const AlgebraicElement& b) { return (a - b).is_zero(); }

std::vector<BigInt> companion_apply(const BetaBase& base, const std::vector<BigInt>& a) {
    const auto& c = base.coeffs();
    const std::size_t d = c.size();
    std::vector<BigInt> out(d);
    const BigInt& top = a[d - 1];
    out[0] = c[0] * top;
    for (std::size_t i = 1; i < d; ++i) out[i] = a[i - 1] + c[i] * top;
    return out;
}

std::vector<BigInt> reduce_power(const BetaBase& base, unsigned long k) {
    std::vector<BigInt> v(base.degree(), 0);
    v[0] = 1;
    for (unsigned long i = 0; i < k; ++i) v = companion_apply(base, v);
    return v;
}

RationalInterval enclose(const AlgebraicElement& e, unsigned long precision) {
    const BigInt& q = e.denom();
    for (unsigned long bits = schedule_start(precision);; bits *= 2) {
        if (bits > kMaxPrecision)
            fail(ErrorKind::internal, "enclosure precision exceeded the hard cap");
        auto [lo, hi] = numerator_bounds(e, bits);
        BigInt scale = pow2(bits);
        // width (hi - lo) / (q 2^bits) <= 2^-precision
        if ((hi - lo) * pow2(precision) <= q * scale) {
            Rational rlo(lo, q * scale), rhi(hi, q * scale);
            rlo.canonicalize();
            rhi.canonicalize();
            return {rlo, rhi};
        }
    }
}

BigInt floor_of(const AlgebraicElement& e) {
    if (e.is_rational()) return floor_div(e.coeffs()[0], e.denom());
    const BigInt& q = e.denom();
    for (unsigned long bits = kStartPrecision; bits <= kMaxPrecision; bits *= 2) {
        auto [lo, hi] = numerator_bounds(e, bits);
        BigInt den = q * pow2(bits);
        BigInt fl = floor_div(lo, den);
        if (hi < (fl + 1) * den) return fl;
    }
    fail(ErrorKind::internal, "exact floor did not separate from an integer within the precision cap");
}

std::strong_ordering compare(const AlgebraicElement& a, const AlgebraicElement& b) {
    AlgebraicElement diff = a - b;
    if (diff.is_zero()) return std::strong_ordering::equal;
    for (unsigned long bits = kStartPrecision; bits <= kMaxPrecision; bits *= 2) {
        auto [lo, hi] = numerator_bounds(diff, bits);
        if (lo > 0) return std::strong_ordering::greater;
        if (hi < 0) return std::strong_ordering::less;
    }
    fail(ErrorKind::internal, "comparison did not separate within the precision cap");
}

}  // namespace midy
