#include "midy/base.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>

#include "midy/numeration.hpp"

namespace midy {

namespace {

using Poly = std::vector<Rational>;  // low to high

Poly trim(Poly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

Rational eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sign(const Rational& x) { return sgn(x); }

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return trim(d);
}

Poly remainder(Poly a, const Poly& b) {
    a = trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        a = trim(a);
    }
    return a;
}

std::vector<Poly> sturm_chain(const Poly& f) {
    std::vector<Poly> chain{f, derivative(f)};
    while (chain.back().size() > 1) {
        Poly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(r);
    }
    return chain;
}

int sign_changes(const std::vector<Poly>& chain, const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s = sign(eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// Distinct real roots in (a, b].
int count_roots(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
    return sign_changes(chain, a) - sign_changes(chain, b);
}

// Certified root-inclusion test for the Pisot property. Approximations from
// Durand-Kerner are turned into exact rationals; the Weierstrass inclusion
// disks |z - z_i| <= d |f(z_i) / prod_{j != i} (z_i - z_j)| then cover every
// root, and each connected component holds as many roots as disks.
struct CRat {
    Rational re, im;
};
CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rational norm2(const CRat& a) { return a.re * a.re + a.im * a.im; }

Rational to_rational(long double x) {
    // 2^-48 grid is plenty for the inclusion test.
    long double scaled = std::round(x * 281474976710656.0L);
    BigInt num(std::to_string(static_cast<long long>(scaled)));
    return Rational(num, pow2(48));
}

// Rational r with r^2 >= s (upper) or r^2 <= s (lower), r >= 0.
Rational sqrt_bound(const Rational& s, bool upper) {
    long double approx = std::sqrt(static_cast<long double>(s.get_d()));
    Rational r = to_rational(approx);
    if (r < 0) r = 0;
    Rational step(1, 1UL << 40);
    if (upper) {
        while (r * r < s) r += step;
    } else {
        while (r > 0 && r * r > s) {
            r -= step;
            if (r < 0) r = 0;
        }
    }
    return r;
}

Pisot certify_pisot(const std::vector<BigInt>& c) {
    const std::size_t d = c.size();
    if (d == 1) return Pisot::yes;  // integers > 1 are Pisot (no conjugates)
    // f(X) = X^d - sum c_i X^i as monic coefficients low to high.
    std::vector<long double> f(d + 1);
    for (std::size_t i = 0; i < d; ++i) f[i] = -c[i].get_d();
    f[d] = 1;
    auto evalc = [&](std::complex<long double> z) {
        std::complex<long double> acc = 0;
        for (std::size_t i = d + 1; i-- > 0;) acc = acc * z + f[i];
        return acc;
    };
    std::vector<std::complex<long double>> z(d);
    const std::complex<long double> seed(0.4L, 0.9L);
    for (std::size_t i = 0; i < d; ++i) z[i] = std::pow(seed, static_cast<int>(i));
    for (int iter = 0; iter < 500; ++iter) {
        for (std::size_t i = 0; i < d; ++i) {
            std::complex<long double> den = 1;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) den *= z[i] - z[j];
            if (std::abs(den) == 0) den = 1e-18L;
            z[i] -= evalc(z[i]) / den;
        }
    }
    std::vector<Rational> fx(d + 1);
    for (std::size_t i = 0; i < d; ++i) fx[i] = -Rational(c[i]);
    fx[d] = 1;
    std::vector<CRat> zr(d);
    for (std::size_t i = 0; i < d; ++i) zr[i] = {to_rational(z[i].real()), to_rational(z[i].imag())};
    std::size_t inside = 0, outside = 0;
    for (std::size_t i = 0; i < d; ++i) {
        CRat val{0, 0};
        for (std::size_t k = d + 1; k-- > 0;) val = val * zr[i] + CRat{fx[k], 0};
        Rational den2 = 1;
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) den2 *= norm2(zr[i] - zr[j]);
        if (den2 == 0) return Pisot::unknown;
        Rational r2 = Rational(static_cast<long>(d * d)) * norm2(val) / den2;
        Rational m2 = norm2(zr[i]);
        Rational hi = sqrt_bound(m2, true);
        Rational lo = sqrt_bound(m2, false);
        Rational r_hi = sqrt_bound(r2, true);
        if (hi + r_hi < 1) {
            ++inside;
        } else if (lo - r_hi > 1) {
            ++outside;
        } else {
            return Pisot::unknown;
        }
    }
    if (outside == 1) return Pisot::yes;
    return Pisot::no;
}

Purity purity_from_table(const std::vector<BigInt>& c) {
    if (c.size() == 1) return Purity::coprime_to_norm_pure;
    if (c.size() != 2) return Purity::unknown;
    const BigInt& c0 = c[0];
    const BigInt& m = c[1];
    if (c0 == 1 && m >= 1) return Purity::all_rationals_pure;      // X^2 - mX - 1
    if (c0 == -1 && m >= 3) return Purity::none_pure;              // X^2 - mX + 1
    if (c0 >= 2 && m >= c0) return Purity::coprime_to_norm_pure;   // X^2 - mX - n, m >= n
    return Purity::unknown;
}

}  // namespace

struct BetaBase::Impl {
    std::vector<BigInt> coeffs;
    std::string id;
    RationalInterval interval;
    std::optional<BigInt> integer_value;
    Digit digit_max = 0;
    Pisot pisot = Pisot::unknown;
    Purity purity = Purity::unknown;
    Poly poly;  // f as rationals, low to high

    std::mutex cache_mu;
    RationalInterval refined;  // narrowest enclosure computed so far
    std::map<unsigned long, std::unique_ptr<PowerTable>> tables;
    QuasigreedyMemo quasigreedy;

    // Bisection on the isolating interval until its width is <= 2^-bits.
    RationalInterval refine(unsigned long bits) {
        Rational target(1, pow2(bits));
        if (integer_value) return {Rational(*integer_value), Rational(*integer_value)};
        int lo_sign = sgn(eval(poly, refined.lo));
        while (refined.hi - refined.lo > target) {
            Rational mid = (refined.lo + refined.hi) / 2;
            int s = sgn(eval(poly, mid));
            if (s == 0) {
                refined = {mid, mid};
                break;
            }
            if (s == lo_sign) {
                refined.lo = mid;
            } else {
                refined.hi = mid;
            }
        }
        return refined;
    }
};

BetaBase BetaBase::make(const std::vector<long>& coeffs) {
    std::vector<BigInt> big;
    for (long c : coeffs) big.emplace_back(c);
    return make(std::move(big));
}

BetaBase BetaBase::make(std::vector<BigInt> coeffs) {
    if (coeffs.empty()) fail(ErrorKind::invalid_input, "base needs at least one coefficient");
    if (coeffs[0] == 0) fail(ErrorKind::invalid_input, "constant coefficient c0 must be non-zero");
    auto impl = std::make_shared<Impl>();
    const std::size_t d = coeffs.size();
    {
        std::ostringstream id;
        for (std::size_t i = 0; i < d; ++i) id << (i ? "," : "") << coeffs[i].get_str();
        impl->id = id.str();
    }
    impl->poly.resize(d + 1);
    for (std::size_t i = 0; i < d; ++i) impl->poly[i] = -Rational(coeffs[i]);
    impl->poly[d] = 1;

    if (d == 1) {
        if (coeffs[0] < 2) fail(ErrorKind::invalid_input, "integer base must be at least 2");
        impl->integer_value = coeffs[0];
        impl->interval = {Rational(coeffs[0]), Rational(coeffs[0])};
        impl->digit_max = static_cast<Digit>(coeffs[0].get_ui() - 1);
    } else {
        BigInt bound = 1;
        for (const auto& c : coeffs) bound = std::max(bound, BigInt(abs(c)));
        Rational lo = 1, hi = Rational(bound + 1);
        auto chain = sturm_chain(impl->poly);
        // Repeated factors make the power basis ambiguous.
        if (chain.back().size() > 1)
            fail(ErrorKind::invalid_input, "polynomial has a repeated root");
        // Rational roots of a monic integer polynomial are integers dividing c0;
        // any of them means a linear factor and an ambiguous power basis.
        for (BigInt k = 1; k <= bound + 1 && k <= 1000000; ++k) {
            if (coeffs[0] % k != 0) continue;
            for (const BigInt& r : {BigInt(k), BigInt(-k)})
                if (sgn(eval(impl->poly, Rational(r))) == 0)
                    fail(ErrorKind::invalid_input, "polynomial has the integer root " + r.get_str() + " and is reducible");
        }
        if (count_roots(chain, lo, hi) == 0) fail(ErrorKind::invalid_input, "polynomial has no real root > 1");
        // Keep the topmost root isolated in (lo, hi].
        while (count_roots(chain, lo, hi) > 1) {
            Rational mid = (lo + hi) / 2;
            if (count_roots(chain, mid, hi) >= 1) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        if (sgn(eval(impl->poly, hi)) == 0) {
            // Cannot happen after the integer-root check unless the root is a
            // non-integer rational, which a monic integer polynomial excludes.
            fail(ErrorKind::internal, "rational dominant root in a monic polynomial");
        }
        impl->interval = {lo, hi};
        impl->refined = impl->interval;
        // digit_max = ceil(β) - 1 = floor(β) since β is irrational here.
        while (floor_of(impl->refined.lo) != floor_of(impl->refined.hi)) {
            Rational mid = (impl->refined.lo + impl->refined.hi) / 2;
            int s = sgn(eval(impl->poly, mid));
            if (s == sgn(eval(impl->poly, impl->refined.lo))) {
                impl->refined.lo = mid;
            } else {
                impl->refined.hi = mid;
            }
        }
        impl->digit_max = static_cast<Digit>(floor_of(impl->refined.lo).get_ui());
        impl->interval = impl->refined;
    }
    impl->refined = impl->interval;
    impl->pisot = d <= 4 ? certify_pisot(coeffs) : Pisot::unknown;
    impl->purity = purity_from_table(coeffs);
    impl->coeffs = std::move(coeffs);
    return BetaBase(std::move(impl));
}

std::size_t BetaBase::degree() const { return impl_->coeffs.size(); }
const std::vector<BigInt>& BetaBase::coeffs() const { return impl_->coeffs; }
const RationalInterval& BetaBase::isolating_interval() const { return impl_->interval; }
Digit BetaBase::digit_max() const { return impl_->digit_max; }
bool BetaBase::is_unit() const { return abs(impl_->coeffs[0]) == 1; }
Pisot BetaBase::pisot() const { return impl_->pisot; }
Purity BetaBase::purity() const { return impl_->purity; }
std::optional<BigInt> BetaBase::integer_value() const { return impl_->integer_value; }
const std::string& BetaBase::id() const { return impl_->id; }
QuasigreedyMemo& BetaBase::quasigreedy_memo() const { return impl_->quasigreedy; }

std::string BetaBase::polynomial_string() const {
    const auto& c = impl_->coeffs;
    const std::size_t d = c.size();
    std::ostringstream out;
    out << "X";
    if (d > 1) out << "^" << d;
    for (std::size_t i = d; i-- > 0;) {
        BigInt k = -c[i];
        if (k == 0) continue;
        out << (k < 0 ? " - " : " + ");
        BigInt a = abs(k);
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str();
            out << "X";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

RationalInterval BetaBase::beta_enclosure(unsigned long bits) const {
    std::lock_guard lock(impl_->cache_mu);
    return impl_->refine(bits);
}

const PowerTable& BetaBase::powers(unsigned long bits) const {
    std::lock_guard lock(impl_->cache_mu);
    auto it = impl_->tables.find(bits);
    if (it != impl_->tables.end()) return *it->second;
    const std::size_t d = degree();
    // β^i has relative sensitivity i β^{i-1}; 2d + 8 guard bits absorb it.
    const unsigned long guard = 16 + d * mpz_sizeinbase(BigInt(impl_->digit_max + 2).get_mpz_t(), 2);
    RationalInterval beta = impl_->refine(bits + guard);
    auto table = std::make_unique<PowerTable>();
    table->bits = bits;
    const BigInt scale = pow2(bits);
    Rational plo = 1, phi = 1;
    for (std::size_t i = 0; i < d; ++i) {
        table->lo.push_back(floor_of(plo * scale));
        const Rational hs = phi * scale;
        BigInt up = -floor_div(-hs.get_num(), hs.get_den());
        table->hi.push_back(up);
        plo *= beta.lo;
        phi *= beta.hi;
        plo.canonicalize();
        phi.canonicalize();
    }
    auto& ref = *table;
    impl_->tables.emplace(bits, std::move(table));
    return ref;
}

std::string to_string(Pisot p) {
    switch (p) {
        case Pisot::yes: return "yes";
        case Pisot::no: return "no";
        case Pisot::unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(Purity p) {
    switch (p) {
        case Purity::all_rationals_pure: return "all-rationals-pure";
        case Purity::coprime_to_norm_pure: return "coprime-to-norm-pure";
        case Purity::none_pure: return "none-pure";
        case Purity::unknown: return "unknown";
    }
    return "unknown";
}

namespace bases {
BetaBase golden() {
    static const BetaBase b = BetaBase::make(std::vector<long>{1, 1});
    return b;
}
BetaBase tribonacci() {
    static const BetaBase b = BetaBase::make(std::vector<long>{1, 1, 1});
    return b;
}
BetaBase tetranacci() {
    static const BetaBase b = BetaBase::make(std::vector<long>{1, 1, 1, 1});
    return b;
}
BetaBase integer(long b) { return BetaBase::make(std::vector<long>{b}); }
}  // namespace bases

BetaBase parse_base(const std::string& text) {
    std::vector<BigInt> coeffs;
    if (!text.empty() && text.back() == ',') fail(ErrorKind::invalid_input, "trailing comma in base '" + text + "'");
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) fail(ErrorKind::invalid_input, "empty coefficient in base '" + text + "'");
        item = item.substr(first, last - first + 1);
        BigInt c;
        if (c.set_str(item, 10) != 0) fail(ErrorKind::invalid_input, "bad coefficient '" + item + "'");
        coeffs.push_back(c);
    }
    return BetaBase::make(std::move(coeffs));
}

}  // namespace midy
