#include "midy/modular.hpp"

#include <limits>
#include <mutex>
#include <unordered_map>

namespace midy {

FibPair fib_pair_mod(const BigInt& n, const BigInt& m) {
    if (m < 1) fail(ErrorKind::invalid_input, "modulus must be at least 1");
    if (n < 0) fail(ErrorKind::invalid_input, "Fibonacci index must be non-negative");
    BigInt a = 0, b = 1;  // F_k, F_{k+1}
    for (std::size_t bit = mpz_sizeinbase(n.get_mpz_t(), 2); bit-- > 0;) {
        // doubling: F_{2k} = F_k (2F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
        BigInt c = mod_floor(a * (2 * b - a), m);
        BigInt d = mod_floor(a * a + b * b, m);
        if (mpz_tstbit(n.get_mpz_t(), bit)) {
            a = d;
            b = mod_floor(c + d, m);
        } else {
            a = c;
            b = d;
        }
    }
    return {n, mod_floor(a, m), mod_floor(b, m)};
}

std::uint64_t entry_point(std::uint64_t m) {
    if (m == 0) fail(ErrorKind::invalid_input, "entry point needs m >= 1");
    if (m == 1) return 1;
    static std::mutex mu;
    static std::unordered_map<std::uint64_t, std::uint64_t> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(m); it != memo.end()) return it->second;
    }
    if (m > std::numeric_limits<std::uint64_t>::max() / 8) fail(ErrorKind::invalid_input, "modulus too large");
    std::uint64_t prev = 0, cur = 1;  // F_{k-1}, F_k with k = 1
    std::uint64_t result = 0;
    for (std::uint64_t k = 1; k <= 6 * m; ++k) {
        if (cur == 0) {
            result = k;
            break;
        }
        std::uint64_t next = prev + cur;
        if (next >= m) next -= m;
        prev = cur;
        cur = next;
    }
    if (result == 0) fail(ErrorKind::internal, "entry point exceeded the Pisano bound");
    std::lock_guard lock(mu);
    memo.emplace(m, result);
    return result;
}

void write_entry_point_csv(std::ostream& out, std::uint64_t lo, std::uint64_t hi, bool odd_only) {
    out << "m,a\n";
    for (std::uint64_t m = std::max<std::uint64_t>(lo, 1); m <= hi; ++m) {
        std::uint64_t a = entry_point(m);
        if (odd_only && (m <= 2 || a % 2 == 0)) continue;
        out << m << ',' << a << '\n';
    }
}

int legendre(const BigInt& a, const BigInt& q) {
    if (q < 3 || q % 2 == 0) fail(ErrorKind::invalid_input, "Legendre symbol needs an odd prime modulus");
    BigInt r;
    BigInt base = mod_floor(a, q);
    BigInt e = (q - 1) / 2;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), q.get_mpz_t());
    if (r == 0) return 0;
    if (r == 1) return 1;
    if (r == q - 1) return -1;
    fail(ErrorKind::invalid_input, "Euler criterion failed: " + q.get_str() + " is not prime");
}

ModMatrix::ModMatrix(std::size_t dim, BigInt modulus)
    : dim_(dim), modulus_(std::move(modulus)), entries_(dim * dim, BigInt(0)) {
    if (modulus_ < 1) fail(ErrorKind::invalid_input, "matrix modulus must be positive");
}

ModMatrix ModMatrix::identity(std::size_t dim, const BigInt& modulus) {
    ModMatrix m(dim, modulus);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
}

ModMatrix ModMatrix::companion(const BetaBase& base, const BigInt& modulus) {
    const auto& c = base.coeffs();
    const std::size_t d = c.size();
    ModMatrix m(d, modulus);
    for (std::size_t i = 1; i < d; ++i) m.set(i, i - 1, 1);
    for (std::size_t i = 0; i < d; ++i) m.set(i, d - 1, c[i]);
    return m;
}

void ModMatrix::set(std::size_t row, std::size_t col, const BigInt& value) {
    entries_[row * dim_ + col] = mod_floor(value, modulus_);
}

bool ModMatrix::is_scalar(const BigInt& lambda) const {
    const BigInt diag = mod_floor(lambda, modulus_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (at(i, j) != (i == j ? diag : BigInt(0))) return false;
    return true;
}

BigInt ModMatrix::determinant() const {
    // Fraction-free Bareiss elimination over Z, reduced at the end.
    std::vector<BigInt> a = entries_;
    const std::size_t n = dim_;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap * n + k] == 0) ++swap;
            if (swap == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
        prev = a[k * n + k];
    }
    return mod_floor(sign * a[n * n - 1], modulus_);
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
    if (a.dim_ != b.dim_ || a.modulus_ != b.modulus_) fail(ErrorKind::invalid_input, "matrix shape or modulus mismatch");
    const std::size_t n = a.dim_;
    ModMatrix out(n, a.modulus_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            BigInt s = 0;
            for (std::size_t k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
            out.set(i, j, s);
        }
    return out;
}

ModMatrix pow(const ModMatrix& m, BigInt exponent) {
    if (exponent < 0) fail(ErrorKind::invalid_input, "negative matrix exponent");
    ModMatrix result = ModMatrix::identity(m.dim(), m.modulus());
    ModMatrix square = m;
    while (exponent > 0) {
        if (mpz_odd_p(exponent.get_mpz_t())) result = result * square;
        exponent >>= 1;
        if (exponent > 0) square = square * square;
    }
    return result;
}

ModMatrix companion_pow_mod(const BetaBase& base, const BigInt& exponent, const BigInt& q) {
    if (q < 2) fail(ErrorKind::invalid_input, "modulus must be at least 2");
    return pow(ModMatrix::companion(base, q), exponent);
}

std::uint64_t order_search_cap(std::size_t degree, std::uint64_t q) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t cap = 6;
    for (std::size_t i = 0; i < degree; ++i) {
        if (cap > kMax / q) return kMax;
        cap *= q;
    }
    return cap;
}

OrderInfo order_and_minus_i(const BetaBase& base, const BigInt& q_big) {
    if (q_big < 2) fail(ErrorKind::invalid_input, "modulus must be at least 2");
    if (gcd(base.coeffs()[0], q_big) != 1)
        fail(ErrorKind::singular_modulus, "companion matrix is singular modulo " + q_big.get_str());
    if (q_big > BigInt(1) << 62) fail(ErrorKind::invalid_input, "modulus too large for an order search");
    const std::uint64_t q = q_big.get_ui();
    const std::size_t d = base.degree();
    std::vector<std::uint64_t> c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = mod_floor(base.coeffs()[i], q_big).get_ui();

    // C^k = ±I exactly when C^k e_1 = ±e_1, since C^k e_i = C^{i-1} C^k e_1.
    std::vector<std::uint64_t> v(d, 0), next(d);
    v[0] = 1 % q;
    const std::uint64_t cap = order_search_cap(d, q);
    std::optional<std::uint64_t> minus;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        const unsigned __int128 top = v[d - 1];
        next[0] = static_cast<std::uint64_t>(c[0] * top % q);
        for (std::size_t i = 1; i < d; ++i)
            next[i] = static_cast<std::uint64_t>((v[i - 1] + c[i] * top) % q);
        v.swap(next);
        bool rest_zero = true;
        for (std::size_t i = 1; i < d; ++i)
            if (v[i] != 0) {
                rest_zero = false;
                break;
            }
        if (!rest_zero) continue;
        if (v[0] == 1 % q) return {k, minus};
        if (q > 2 && !minus && v[0] == q - 1) minus = k;
    }
    fail(ErrorKind::cap_exhausted, "order of the companion matrix modulo " + q_big.get_str() + " exceeds the search cap");
}

}  // namespace midy
