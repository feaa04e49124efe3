#ifndef CSSPROP_TESTS_FIXTURES_HPP
#define CSSPROP_TESTS_FIXTURES_HPP

// Classical codes from their textbook generators.

#include <string>
#include <vector>

#include "cssprop/linear_code.hpp"

namespace fixtures {

using cssprop::elem_t;
using cssprop::Field;
using cssprop::LinearCode;
using cssprop::Matrix;

inline LinearCode from_rows(const Field& f, const std::vector<std::string>& rows) {
    Matrix m(f, 0, rows.front().size());
    for (const auto& r : rows) {
        std::vector<elem_t> v;
        for (char ch : r) v.push_back(static_cast<elem_t>(ch - '0'));
        m.append_row(v);
    }
    return LinearCode(m);
}

/// Cyclic code generated by g (coefficients low degree first).
inline LinearCode cyclic(const Field& f, std::size_t n, const std::vector<elem_t>& g) {
    const std::size_t k = n - (g.size() - 1);
    Matrix m(f, k, n);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < g.size(); ++j) m.set(r, r + j, g[j]);
    return LinearCode(m);
}

inline LinearCode with_parity(const LinearCode& c) {
    const auto& f = *c.field();
    std::vector<elem_t> minus_ones(c.n(), f.neg(1));
    return cssprop::append_coordinate(c, minus_ones);
}

inline LinearCode hamming7(const Field& gf2) {
    return from_rows(gf2, {"1000110", "0100011", "0010111", "0001101"});
}

inline LinearCode ext_hamming8(const Field& gf2) { return with_parity(hamming7(gf2)); }

/// Binary Golay [23,12,7], g = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1.
inline LinearCode golay23(const Field& gf2) {
    return cyclic(gf2, 23, {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1});
}

inline LinearCode golay24(const Field& gf2) { return with_parity(golay23(gf2)); }

/// Ternary Golay [11,6,5], g = x^5 + x^4 - x^3 + x^2 - 1.
inline LinearCode ternary_golay11(const Field& gf3) { return cyclic(gf3, 11, {2, 0, 1, 2, 1, 1}); }

}  // namespace fixtures

#endif
