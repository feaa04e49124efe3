#ifndef CSSPROP_GEN_FORMAT_HPP
#define CSSPROP_GEN_FORMAT_HPP

// Generator-matrix text format.
//
//   file   := line*
//   line   := comment | blank | header | row
//   comment:= '#' anything          (ignored; blank lines ignored too)
//   header := q n k                 (first non-comment line)
//   row    := exactly k rows follow the header, each holding n symbols
//
// Symbol encoding depends on q:
//   q prime, q <= 10  : one decimal digit per symbol; whitespace inside the
//                       row is ignored, so "0110" and "0 1 1 0" are equal
//   q prime, q > 10   : whitespace-separated decimal integers in [0, q)
//   q = p^m, m > 1    : whitespace-separated tuples "c0,c1,...,c{m-1}", the
//                       coefficients of 1, x, ..., x^{m-1} modulo the
//                       canonical (smallest monic irreducible) modulus
//
// The writer emits the canonical RREF generator, so write -> read is the
// identity on codes.

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "linear_code.hpp"

namespace cssprop {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

inline std::vector<elem_t> parse_row(const std::string& line, const FieldSpec& f, std::size_t n,
                                     std::size_t lineno) {
    auto fail = [&](const std::string& what) {
        throw FormatError("generator file line " + std::to_string(lineno) + ": " + what);
    };
    std::vector<elem_t> row;
    row.reserve(n);
    if (f.m() == 1 && f.q() <= 10) {
        for (char ch : line) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (ch < '0' || ch > '9') fail(std::string("unexpected character '") + ch + "'");
            const elem_t v = static_cast<elem_t>(ch - '0');
            if (v >= f.q()) fail("symbol " + std::to_string(v) + " outside GF(" + std::to_string(f.q()) + ")");
            row.push_back(v);
        }
    } else {
        std::istringstream in(line);
        std::string tok;
        while (in >> tok) {
            if (f.m() == 1) {
                std::size_t used = 0;
                unsigned long v = 0;
                try {
                    v = std::stoul(tok, &used);
                } catch (const std::exception&) {
                    fail("bad symbol '" + tok + "'");
                }
                if (used != tok.size() || v >= f.q()) fail("bad symbol '" + tok + "'");
                row.push_back(static_cast<elem_t>(v));
            } else {
                std::vector<std::uint32_t> coeffs;
                std::istringstream parts(tok);
                std::string part;
                while (std::getline(parts, part, ',')) {
                    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                        fail("bad coefficient tuple '" + tok + "'");
                    coeffs.push_back(static_cast<std::uint32_t>(std::stoul(part)));
                }
                try {
                    row.push_back(f.from_coefficients(coeffs));
                } catch (const std::invalid_argument&) {
                    fail("bad coefficient tuple '" + tok + "'");
                }
            }
        }
    }
    if (row.size() != n) fail("expected " + std::to_string(n) + " symbols, found " + std::to_string(row.size()));
    return row;
}

}  // namespace detail

inline LinearCode read_generator(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::uint64_t q = 0, n = 0, k = 0;
    Field field;
    std::vector<std::vector<elem_t>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::is_blank_or_comment(line)) continue;
        if (!have_header) {
            std::istringstream hs(line);
            std::string extra;
            if (!(hs >> q >> n >> k) || (hs >> extra))
                throw FormatError("generator file line " + std::to_string(lineno) + ": header must be 'q n k'");
            if (n == 0) throw FormatError("generator file: length n must be at least 1");
            if (k > n) throw FormatError("generator file: k exceeds n");
            try {
                field = field_of_order(static_cast<std::uint32_t>(q));
            } catch (const std::invalid_argument& e) {
                throw FormatError(std::string("generator file: ") + e.what());
            }
            have_header = true;
            continue;
        }
        if (rows.size() == k) throw FormatError("generator file line " + std::to_string(lineno) + ": extra row");
        rows.push_back(detail::parse_row(line, *field, n, lineno));
    }
    if (!have_header) throw FormatError("generator file: missing header");
    if (rows.size() != k)
        throw FormatError("generator file: expected " + std::to_string(k) + " rows, found " +
                          std::to_string(rows.size()));
    return LinearCode(Matrix(field, n, rows));
}

inline LinearCode read_generator_string(const std::string& text) {
    std::istringstream in(text);
    return read_generator(in);
}

inline void write_generator(std::ostream& out, const LinearCode& c) {
    const auto& f = *c.field();
    out << f.q() << ' ' << c.n() << ' ' << c.k() << '\n';
    for (std::size_t r = 0; r < c.k(); ++r) {
        const auto row = c.generator().row(r);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (f.m() == 1 && f.q() <= 10) {
                out << static_cast<char>('0' + row[j]);
                continue;
            }
            if (j) out << ' ';
            if (f.m() == 1) {
                out << row[j];
            } else {
                const auto coeffs = f.coefficients(row[j]);
                for (std::size_t t = 0; t < coeffs.size(); ++t) out << (t ? "," : "") << coeffs[t];
            }
        }
        out << '\n';
    }
}

inline std::string write_generator_string(const LinearCode& c) {
    std::ostringstream out;
    write_generator(out, c);
    return out.str();
}

}  // namespace cssprop

#endif
