#ifndef CSSPROP_GF_HPP
#define CSSPROP_GF_HPP

// Exact arithmetic in GF(p^m) for q = p^m <= 2^16.
//
// Elements are encoded as integers in [0, q): the coefficient vector
// (c_0, ..., c_{m-1}) of c_0 + c_1 x + ... + c_{m-1} x^{m-1} maps to
// sum c_i p^i. For prime fields this is the usual residue.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cssprop {

using elem_t = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

// Dense polynomials over GF(p), lowest degree first, no trailing zeros.
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline PrimePoly prime_poly_mod(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = static_cast<std::uint32_t>(powmod(b.back(), p - 2, p));
    while (a.size() >= b.size()) {
        const std::uint32_t factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
        trim(a);
    }
    return a;
}

inline PrimePoly prime_poly_from_index(std::uint64_t index, std::uint32_t degree, std::uint32_t p) {
    PrimePoly f(degree + 1, 0);
    for (std::uint32_t i = 0; i < degree; ++i) {
        f[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    f[degree] = 1;
    return f;
}

// Trial division by every monic polynomial of degree <= m/2.
inline bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
    const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
    if (m == 0) return false;
    for (std::uint32_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (prime_poly_mod(f, prime_poly_from_index(idx, d, p), p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// A finite field GF(p^m). Immutable once built; share it through `Field`.
class FieldSpec {
public:
    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    /// Monic modulus, lowest degree first; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    /// The multiplicative generator used for the log tables.
    elem_t generator() const { return exp_[1 % (q_ - 1)]; }

    bool operator==(const FieldSpec& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    elem_t add(elem_t a, elem_t b) const {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) return (a + b) % p_;
        elem_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            out += ((a % p_ + b % p_) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return out;
    }
    elem_t neg(elem_t a) const {
        if (p_ == 2) return a;
        if (m_ == 1) return (p_ - a) % p_;
        elem_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            out += ((p_ - a % p_) % p_) * scale;
            a /= p_;
            scale *= p_;
        }
        return out;
    }
    elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }
    elem_t mul(elem_t a, elem_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    elem_t inv(elem_t a) const {
        if (a == 0) throw std::domain_error("GF: inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    elem_t div(elem_t a, elem_t b) const {
        if (b == 0) throw std::domain_error("GF: division by zero");
        return mul(a, inv(b));
    }
    elem_t pow(elem_t a, std::int64_t e) const {
        if (e == 0) return 1;
        if (a == 0) {
            if (e < 0) throw std::domain_error("GF: negative power of zero");
            return 0;
        }
        const std::int64_t order = q_ - 1;
        std::int64_t l = (static_cast<std::int64_t>(log_[a]) * (e % order)) % order;
        if (l < 0) l += order;
        return exp_[static_cast<std::size_t>(l)];
    }
    std::uint32_t log(elem_t a) const {
        if (a == 0) throw std::domain_error("GF: log of zero");
        return log_[a];
    }
    elem_t exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

    /// Coefficients (c_0, ..., c_{m-1}) of an element.
    std::vector<std::uint32_t> coefficients(elem_t a) const {
        std::vector<std::uint32_t> c(m_);
        for (auto& ci : c) {
            ci = a % p_;
            a /= p_;
        }
        return c;
    }
    elem_t from_coefficients(const std::vector<std::uint32_t>& c) const {
        if (c.size() != m_) throw std::invalid_argument("GF: wrong coefficient count");
        elem_t out = 0, scale = 1;
        for (auto ci : c) {
            if (ci >= p_) throw std::invalid_argument("GF: coefficient out of range");
            out += ci * scale;
            scale *= p_;
        }
        return out;
    }

    std::string name() const {
        std::string s = "GF(" + std::to_string(p_);
        if (m_ > 1) s += "^" + std::to_string(m_);
        return s + ")";
    }

    static std::shared_ptr<const FieldSpec> make(std::uint32_t p, std::uint32_t m,
                                                 std::optional<std::vector<std::uint32_t>> modulus);

private:
    FieldSpec() = default;

    elem_t mul_slow(elem_t a, elem_t b) const;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<elem_t> exp_;
    std::vector<std::uint32_t> log_;
};

using Field = std::shared_ptr<const FieldSpec>;

inline elem_t FieldSpec::mul_slow(elem_t a, elem_t b) const {
    if (m_ == 1) return static_cast<elem_t>(static_cast<std::uint64_t>(a) * b % p_);
    const auto ca = coefficients(a), cb = coefficients(b);
    detail::PrimePoly prod(2 * m_ - 1, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    auto r = detail::prime_poly_mod(prod, modulus_, p_);
    r.resize(m_, 0);
    return from_coefficients(r);
}

inline std::shared_ptr<const FieldSpec> FieldSpec::make(std::uint32_t p, std::uint32_t m,
                                                        std::optional<std::vector<std::uint32_t>> modulus) {
    if (!detail::is_prime(p)) throw std::invalid_argument("field_make: p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("field_make: extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldOrder) throw std::invalid_argument("field_make: field order exceeds 2^16");
    }

    std::shared_ptr<FieldSpec> f(new FieldSpec());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<std::uint32_t>(q);

    if (m > 1) {
        if (modulus) {
            detail::PrimePoly g = *modulus;
            if (g.size() != m + 1 || g.back() != 1)
                throw std::invalid_argument("field_make: modulus must be monic of degree m");
            for (auto c : g)
                if (c >= p) throw std::invalid_argument("field_make: modulus coefficient out of range");
            if (!detail::is_irreducible(g, p)) throw std::invalid_argument("field_make: modulus is reducible");
            f->modulus_ = std::move(g);
        } else {
            // Lexicographically smallest monic irreducible, comparing the
            // lower coefficients read as a base-p integer.
            const std::uint64_t count = q;
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                auto g = detail::prime_poly_from_index(idx, m, p);
                if (detail::is_irreducible(g, p)) {
                    f->modulus_ = std::move(g);
                    break;
                }
            }
        }
    } else if (modulus && !modulus->empty()) {
        throw std::invalid_argument("field_make: prime fields take no modulus");
    }

    // Smallest element of multiplicative order q-1 drives the log tables.
    const std::uint32_t order = f->q_ - 1;
    f->exp_.assign(order == 0 ? 1 : order, 1);
    f->log_.assign(f->q_, 0);
    if (order == 1) return f;
    for (elem_t g = 2; g < f->q_; ++g) {
        elem_t x = 1;
        std::uint32_t k = 0;
        do {
            f->exp_[k++] = x;
            x = f->mul_slow(x, g);
        } while (x != 1 && k < order);
        if (x == 1 && k == order) break;
    }
    for (std::uint32_t k = 0; k < order; ++k) f->log_[f->exp_[k]] = k;
    return f;
}

/// Builds GF(p^m); when no modulus is given the canonical one is chosen.
inline Field field_make(std::uint32_t p, std::uint32_t m = 1,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
    return FieldSpec::make(p, m, std::move(modulus));
}

/// Field order q -> GF(q) with canonical modulus; throws if q is not a prime power.
inline Field field_of_order(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("field order must be a prime power >= 2");
    std::uint32_t p = 2;
    while (q % p) ++p;
    std::uint32_t m = 0, r = q;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
    return field_make(p, m);
}

inline bool same_field(const Field& a, const Field& b) { return a == b || (a && b && *a == *b); }

/// A value tagged with its field. Mixing fields throws.
class FieldElement {
public:
    FieldElement(Field field, elem_t value) : field_(std::move(field)), value_(value) {
        if (value_ >= field_->q()) throw std::invalid_argument("FieldElement: value out of range");
    }

    const Field& field() const { return field_; }
    elem_t value() const { return value_; }

    FieldElement operator+(const FieldElement& o) const { return {field_, field_->add(value_, check(o))}; }
    FieldElement operator-(const FieldElement& o) const { return {field_, field_->sub(value_, check(o))}; }
    FieldElement operator*(const FieldElement& o) const { return {field_, field_->mul(value_, check(o))}; }
    FieldElement operator/(const FieldElement& o) const { return {field_, field_->div(value_, check(o))}; }
    FieldElement operator-() const { return {field_, field_->neg(value_)}; }
    FieldElement inv() const { return {field_, field_->inv(value_)}; }
    FieldElement pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }

    bool operator==(const FieldElement& o) const { return value_ == check(o); }

private:
    elem_t check(const FieldElement& o) const {
        if (!same_field(field_, o.field_)) throw std::invalid_argument("FieldElement: mixed fields");
        return o.value_;
    }

    Field field_;
    elem_t value_;
};

/// Euler's criterion; n must be an odd prime and a a unit mod n.
inline bool is_quadratic_residue(std::int64_t a, std::int64_t n) {
    if (n < 3 || !detail::is_prime(static_cast<std::uint64_t>(n)))
        throw std::invalid_argument("is_quadratic_residue: modulus must be an odd prime");
    std::int64_t r = a % n;
    if (r < 0) r += n;
    if (r == 0) throw std::invalid_argument("is_quadratic_residue: a is divisible by n");
    return detail::powmod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>((n - 1) / 2),
                          static_cast<std::uint64_t>(n)) == 1;
}

/// Multiplicative order of a modulo n (gcd(a, n) = 1).
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    a %= n;
    std::uint64_t x = a, k = 1;
    while (x != 1) {
        x = x * a % n;
        if (++k > n) throw std::invalid_argument("multiplicative_order: not a unit");
    }
    return k;
}

}  // namespace cssprop

#endif
