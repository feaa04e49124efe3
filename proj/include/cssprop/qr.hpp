#ifndef CSSPROP_QR_HPP
#define CSSPROP_QR_HPP

// Quadratic-residue codes of odd prime length n over GF(q), their
// extensions, and the involution x -> -1/x on the projective line.
//
// Cyclic codes use the usual identification of position i (0-based) with
// x^i. Extended codes carry the extra coordinate last; as a point of the
// projective line it is infinity, labelled n.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"
#include "linear_code.hpp"

namespace cssprop {

/// Polynomial over a field, lowest degree first, no trailing zeros.
using Poly = std::vector<elem_t>;

namespace poly {

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mul(const FieldSpec& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

/// Quotient and remainder of a by non-zero b.
inline std::pair<Poly, Poly> divmod(const FieldSpec& f, Poly a, const Poly& b) {
    if (b.empty()) throw std::domain_error("poly::divmod: division by zero polynomial");
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    Poly q(a.size() - b.size() + 1, 0);
    const elem_t lead_inv = f.inv(b.back());
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const elem_t c = f.mul(a.back(), lead_inv);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline Poly monic(const FieldSpec& f, Poly a) {
    trim(a);
    if (a.empty()) return a;
    const elem_t s = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, s);
    return a;
}

inline Poly gcd(const FieldSpec& f, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(f, a);
}

inline elem_t eval(const FieldSpec& f, const Poly& a, elem_t x) {
    elem_t acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

/// x^n - 1.
inline Poly x_pow_minus_one(const FieldSpec& f, std::size_t n) {
    Poly p(n + 1, 0);
    p[0] = f.neg(1);
    p[n] = 1;
    return p;
}

}  // namespace poly

/// Quadratic residues modulo the odd prime n, ascending.
inline std::vector<std::size_t> quadratic_residues(std::size_t n) {
    std::vector<bool> is_r(n, false);
    for (std::size_t x = 1; x < n; ++x) is_r[x * x % n] = true;
    std::vector<std::size_t> out;
    for (std::size_t r = 1; r < n; ++r)
        if (is_r[r]) out.push_back(r);
    return out;
}

inline std::vector<std::size_t> quadratic_nonresidues(std::size_t n) {
    const auto qr = quadratic_residues(n);
    std::vector<std::size_t> out;
    for (std::size_t r = 1; r < n; ++r)
        if (!std::binary_search(qr.begin(), qr.end(), r)) out.push_back(r);
    return out;
}

/// Cyclic code of length n generated by g (a divisor of x^n - 1).
inline LinearCode cyclic_code(const Field& field, std::size_t n, const Poly& g) {
    if (g.empty() || g.size() > n + 1) throw std::invalid_argument("cyclic_code: bad generator polynomial");
    const std::size_t k = n + 1 - g.size();
    if (k == 0) return LinearCode::zero(field, n);
    Matrix m(field, k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < g.size(); ++j) m.set(r, r + j, g[j]);
    return LinearCode(std::move(m));
}

namespace detail {

inline void check_qr_pair(std::size_t n, const FieldSpec& f) {
    if (n < 3 || !is_prime(n)) throw std::invalid_argument("QR codes need an odd prime length, got " + std::to_string(n));
    if (f.p() == n || !is_quadratic_residue(static_cast<std::int64_t>(f.q() % n), static_cast<std::int64_t>(n)))
        throw std::invalid_argument(std::to_string(f.q()) + " is not a quadratic residue modulo " + std::to_string(n));
}

}  // namespace detail

/// Generator polynomials (g_Q, g_N) of the two QR codes of dimension (n+1)/2.
///
/// Works inside GF(q): on a root beta of g_Q the polynomial
/// P(x) = sum_{r in QR} x^r takes the constant value theta (a Gaussian
/// period), and on roots of g_N the other period. So each generator is
/// gcd(x^n - 1, P(x) - t) for one of the two periods t, with the factor
/// x - 1 removed when P(1) happens to equal t. The code built from the
/// smaller period (in element order) is called Q.
inline std::pair<Poly, Poly> qr_generator_polynomials(std::size_t n, const Field& field) {
    const auto& f = *field;
    detail::check_qr_pair(n, f);
    const auto residues = quadratic_residues(n);
    const Poly xn1 = poly::x_pow_minus_one(f, n);
    const Poly x_minus_1{f.neg(1), 1};
    std::vector<Poly> found;
    for (elem_t t = 0; t < f.q() && found.size() < 2; ++t) {
        Poly p(n, 0);
        for (auto r : residues) p[r] = 1;
        p[0] = f.neg(t);
        Poly g = poly::gcd(f, xn1, p);
        if (poly::eval(f, g, 1) == 0) g = poly::divmod(f, g, x_minus_1).first;
        if (g.size() == (n - 1) / 2 + 1) found.push_back(std::move(g));
    }
    if (found.size() != 2) throw std::logic_error("qr_generator_polynomials: Gaussian periods not found");
    return {found[0], found[1]};
}

/// The same generator polynomials by the textbook route: products of
/// x - alpha^r over GF(q^ord) with alpha = gamma^((Q-1)/n) for the canonical
/// generator gamma. Only for prime q with q^ord <= 2^16.
inline std::pair<Poly, Poly> qr_generator_polynomials_via_roots(std::size_t n, const Field& field) {
    const auto& f = *field;
    detail::check_qr_pair(n, f);
    if (f.m() != 1) throw std::invalid_argument("root construction implemented for prime fields only");
    const auto ord = multiplicative_order(f.p(), n);
    std::uint64_t big = 1;
    for (std::uint64_t i = 0; i < ord; ++i) {
        big *= f.p();
        if (big > kMaxFieldOrder)
            throw std::invalid_argument("splitting field GF(" + std::to_string(f.p()) + "^" + std::to_string(ord) +
                                        ") exceeds the supported field size");
    }
    auto ext = field_make(f.p(), static_cast<std::uint32_t>(ord));
    const auto& e = *ext;
    const elem_t alpha = e.pow(e.generator(), static_cast<std::int64_t>((e.q() - 1) / n));
    auto product = [&](const std::vector<std::size_t>& exps) {
        Poly g{1};
        for (auto r : exps) g = poly::mul(e, g, Poly{e.neg(e.pow(alpha, static_cast<std::int64_t>(r))), 1});
        // Coefficients lie in the prime subfield, whose elements are 0..p-1.
        for (auto c : g)
            if (c >= f.p()) throw std::logic_error("root construction: coefficient outside the base field");
        return g;
    };
    return {product(quadratic_residues(n)), product(quadratic_nonresidues(n))};
}

struct QrFamily {
    std::size_t n = 0;
    Field field;
    Poly g_q, g_n;
    LinearCode Q, Qbar, N, Nbar;
    std::optional<LinearCode> Qext, Next;
    /// Extension scalars: the appended coordinate is -s * sum(c_i).
    elem_t s_q = 0, s_n = 0;
};

/// Q, Qbar, N, Nbar for length n over `field`. Extended codes are left empty.
inline QrFamily qr_family(std::size_t n, const Field& field) {
    auto [gq, gn] = qr_generator_polynomials(n, field);
    const auto& f = *field;
    const Poly x_minus_1{f.neg(1), 1};
    return QrFamily{
        n,
        field,
        gq,
        gn,
        cyclic_code(field, n, gq),
        cyclic_code(field, n, poly::mul(f, gq, x_minus_1)),
        cyclic_code(field, n, gn),
        cyclic_code(field, n, poly::mul(f, gn, x_minus_1)),
        std::nullopt,
        std::nullopt,
        0,
        0,
    };
}

/// Appends c_{n+1} = -s * sum(c_i) to every codeword.
inline LinearCode extend_with_scalar(const LinearCode& c, elem_t s) {
    const auto& f = *c.field();
    return append_coordinate(c, std::vector<elem_t>(c.n(), f.neg(s)));
}

/// Fills in Qext and Next. For n = 3 mod 4 each is the self-dual extension
/// with the smallest scalar; for n = 1 mod 4 the pair (s_q, s_n) is the
/// lexicographically smallest with dual(Qext) = Next.
inline QrFamily extend_qr(QrFamily fam) {
    const auto& f = *fam.field;
    auto self_dual = [&](const LinearCode& c) -> std::optional<std::pair<elem_t, LinearCode>> {
        for (elem_t s = 1; s < f.q(); ++s) {
            auto e = extend_with_scalar(c, s);
            if (dual(e) == e) return std::pair{s, std::move(e)};
        }
        return std::nullopt;
    };
    if (fam.n % 4 == 3) {
        auto a = self_dual(fam.Q), b = self_dual(fam.N);
        if (!a || !b) throw std::logic_error("extend_qr: no self-dual extension found");
        fam.s_q = a->first;
        fam.Qext = std::move(a->second);
        fam.s_n = b->first;
        fam.Next = std::move(b->second);
        return fam;
    }
    for (elem_t s = 1; s < f.q(); ++s) {
        const auto dq = dual(extend_with_scalar(fam.Q, s));
        for (elem_t t = 1; t < f.q(); ++t) {
            auto en = extend_with_scalar(fam.N, t);
            if (dq == en) {
                fam.s_q = s;
                fam.s_n = t;
                fam.Qext = extend_with_scalar(fam.Q, s);
                fam.Next = std::move(en);
                return fam;
            }
        }
    }
    throw std::logic_error("extend_qr: no dual pair of extensions found");
}

inline QrFamily extended_qr_family(std::size_t n, const Field& field) { return extend_qr(qr_family(n, field)); }

/// The involution tau(x) = -1/x on the projective line over GF(n), with
/// tau(0) = infinity. Labels 0..n-1 are field points, n is infinity; label
/// j sits at coordinate j + 1 of an extended QR code.
struct InvolutionPlan {
    std::size_t n = 0;
    std::vector<std::size_t> tau;
    std::vector<std::size_t> fixed_points;
    std::vector<std::size_t> shorten_labels;   // I_s
    std::vector<std::size_t> puncture_labels;  // I_p = tau(I_s)

    std::size_t infinity() const { return n; }
    static std::size_t coordinate(std::size_t label) { return label + 1; }
};

inline std::vector<std::size_t> involution_labels(std::size_t n) {
    if (n < 3 || !detail::is_prime(n)) throw std::invalid_argument("involution needs an odd prime, got " + std::to_string(n));
    std::vector<std::size_t> tau(n + 1);
    tau[0] = n;
    tau[n] = 0;
    for (std::size_t x = 1; x < n; ++x) {
        const auto inv = static_cast<std::size_t>(detail::powmod(x, n - 2, n));
        tau[x] = (n - inv) % n;
    }
    return tau;
}

/// Plan with `pairs` orbit representatives, smallest first.
inline InvolutionPlan involution_plan(std::size_t n, std::size_t pairs) {
    InvolutionPlan plan;
    plan.n = n;
    plan.tau = involution_labels(n);
    for (std::size_t x = 0; x <= n; ++x)
        if (plan.tau[x] == x) plan.fixed_points.push_back(x);
    const std::size_t available = (n + 1 - plan.fixed_points.size()) / 2;
    if (pairs > available)
        throw std::invalid_argument("involution_plan: only " + std::to_string(available) + " swapped pairs for n = " +
                                    std::to_string(n));
    for (std::size_t x = 0; x <= n && plan.shorten_labels.size() < pairs; ++x) {
        const auto y = plan.tau[x];
        if (y > x) {
            plan.shorten_labels.push_back(x);
            plan.puncture_labels.push_back(y);
        }
    }
    return plan;
}

}  // namespace cssprop

#endif
