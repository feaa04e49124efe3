#ifndef CSSPROP_LINEAR_CODE_HPP
#define CSSPROP_LINEAR_CODE_HPP

// Linear [n,k]_q codes held as canonical reduced row-echelon generators.
// Coordinates are 1-based in every public operation.

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf.hpp"
#include "matrix.hpp"

namespace cssprop {

class LinearCode {
public:
    /// Row space of `m` in canonical RREF; dependent rows are dropped.
    explicit LinearCode(Matrix m) : gen_(std::move(m)) {
        if (gen_.cols() == 0) throw std::invalid_argument("LinearCode: length must be at least 1");
        pivots_ = gen_.rref();
    }

    static LinearCode zero(Field field, std::size_t n) { return LinearCode(Matrix(std::move(field), 0, n)); }
    static LinearCode full(Field field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return LinearCode(std::move(m));
    }

    const Field& field() const { return gen_.field(); }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }
    /// Pivot column (0-based) of each generator row.
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v minus its projection onto the pivot coordinates; zero iff v is a codeword.
    std::vector<elem_t> residual(std::span<const elem_t> v) const {
        if (v.size() != n()) throw std::invalid_argument("LinearCode: vector length mismatch");
        const auto& f = *field();
        std::vector<elem_t> r(v.begin(), v.end());
        for (std::size_t row = 0; row < k(); ++row) {
            const elem_t coeff = r[pivots_[row]];
            if (!coeff) continue;
            const elem_t factor = f.neg(coeff);
            const auto g = gen_.row(row);
            for (std::size_t j = 0; j < n(); ++j)
                if (g[j]) r[j] = f.add(r[j], f.mul(factor, g[j]));
        }
        return r;
    }

    bool contains(std::span<const elem_t> v) const {
        const auto r = residual(v);
        for (auto x : r)
            if (x) return false;
        return true;
    }

    /// True when every codeword vanishes at coordinate i (1-based).
    bool coordinate_is_zero(std::size_t i) const {
        check_index(i);
        for (std::size_t r = 0; r < k(); ++r)
            if (gen_(r, i - 1)) return false;
        return true;
    }

    /// True when the unit vector e_i (1-based) is a codeword.
    bool has_unit_word(std::size_t i) const {
        check_index(i);
        std::vector<elem_t> e(n(), 0);
        e[i - 1] = 1;
        return contains(e);
    }

    /// Codeword for message `msg` (length k) under the canonical generator.
    std::vector<elem_t> encode(std::span<const elem_t> msg) const {
        if (msg.size() != k()) throw std::invalid_argument("LinearCode: message length mismatch");
        const auto& f = *field();
        std::vector<elem_t> c(n(), 0);
        for (std::size_t r = 0; r < k(); ++r) {
            if (!msg[r]) continue;
            const auto g = gen_.row(r);
            for (std::size_t j = 0; j < n(); ++j)
                if (g[j]) c[j] = f.add(c[j], f.mul(msg[r], g[j]));
        }
        return c;
    }

    bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }

    std::string describe() const {
        return "[" + std::to_string(n()) + "," + std::to_string(k()) + "]_" + std::to_string(field()->q());
    }

    void check_index(std::size_t i) const {
        if (i < 1 || i > n())
            throw std::out_of_range("coordinate " + std::to_string(i) + " outside 1.." + std::to_string(n()));
    }

private:
    Matrix gen_;
    std::vector<std::size_t> pivots_;
};

inline LinearCode code_from_matrix(const Matrix& m) { return LinearCode(m); }

/// C^perp = [n, n-k], the null space of the generator.
inline LinearCode dual(const LinearCode& c) {
    const std::size_t n = c.n(), k = c.k();
    const auto& f = *c.field();
    std::vector<bool> is_pivot(n, false);
    for (auto p : c.pivots()) is_pivot[p] = true;
    Matrix h(c.field(), n - k, n);
    std::size_t row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        h.set(row, free, 1);
        for (std::size_t r = 0; r < k; ++r) {
            const elem_t v = c.generator()(r, free);
            if (v) h.set(row, c.pivots()[r], f.neg(v));
        }
        ++row;
    }
    return LinearCode(std::move(h));
}

/// sigma_i(C): codewords vanishing at coordinate i, with i deleted.
inline LinearCode shorten(const LinearCode& c, std::size_t i) {
    if (c.n() < 2) throw std::invalid_argument("shorten: length must be at least 2");
    c.check_index(i);
    const std::size_t col = i - 1;
    Matrix g = c.generator();
    const auto& f = *c.field();
    std::size_t pivot_row = g.rows();
    for (std::size_t r = 0; r < g.rows(); ++r)
        if (g(r, col)) {
            pivot_row = r;
            break;
        }
    Matrix kept(c.field(), 0, c.n());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        if (r == pivot_row) continue;
        if (pivot_row < g.rows()) {
            const elem_t v = g(r, col);
            if (v) g.add_scaled_row(r, pivot_row, f.neg(f.div(v, g(pivot_row, col))));
        }
        kept.append_row(g.row(r));
    }
    return LinearCode(kept.without_column(col));
}

/// pi_i(C): coordinate i deleted from every codeword.
inline LinearCode puncture(const LinearCode& c, std::size_t i) {
    if (c.n() < 2) throw std::invalid_argument("puncture: length must be at least 2");
    c.check_index(i);
    return LinearCode(c.generator().without_column(i - 1));
}

/// a <= b.
inline bool is_subcode(const LinearCode& a, const LinearCode& b) {
    if (a.n() != b.n() || !same_field(a.field(), b.field()))
        throw std::invalid_argument("is_subcode: codes differ in length or field");
    if (a.k() > b.k()) return false;
    for (std::size_t r = 0; r < a.k(); ++r)
        if (!b.contains(a.generator().row(r))) return false;
    return true;
}

/// Coordinate permutation: position j of the result carries coordinate source_of[j] (0-based).
inline LinearCode permute_coordinates(const LinearCode& c, std::span<const std::size_t> source_of) {
    return LinearCode(c.generator().with_columns_permuted(source_of));
}

/// Appends one coordinate whose value is the given linear functional of each codeword.
inline LinearCode append_coordinate(const LinearCode& c, std::span<const elem_t> functional) {
    if (functional.size() != c.n()) throw std::invalid_argument("append_coordinate: functional length mismatch");
    const auto& f = *c.field();
    Matrix m(c.field(), c.k(), c.n() + 1);
    for (std::size_t r = 0; r < c.k(); ++r) {
        const auto g = c.generator().row(r);
        for (std::size_t j = 0; j < c.n(); ++j) m.set(r, j, g[j]);
        m.set(r, c.n(), dot(f, g, functional));
    }
    return LinearCode(std::move(m));
}

/// Uniformly random k-dimensional subspace of GF(q)^n, deterministic in `seed`.
inline LinearCode random_code(std::size_t n, std::size_t k, const Field& field, std::uint64_t seed) {
    if (k > n) throw std::invalid_argument("random_code: k exceeds n");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<elem_t> pick(0, field->q() - 1);
    for (;;) {
        Matrix m(field, k, n);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t j = 0; j < n; ++j) m.set(r, j, pick(rng));
        LinearCode c(std::move(m));
        if (c.k() == k) return c;
    }
}

}  // namespace cssprop

#endif
