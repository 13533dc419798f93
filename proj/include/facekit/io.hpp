#pragma once

// Text formats. Everything is line-oriented, whitespace-tokenized, and '#'
// starts a comment that runs to end of line.
//
//   H-form system          V-form point list        matrix
//   ------------------     -----------------        -----------------
//   dim 2                  dim 3                    2 3
//   ineq 2 1 >= 5          point 3 1 1              1 0 0
//   eq 1 1/2 = 3           point 0 0 0              0 1 0
//
// An `eq` row is sugar for the two opposing `ineq` rows and is expanded at
// parse time, so serialize(parse(text)) round-trips through `ineq` rows
// only. Scalars are "p" or "p/q" with q > 0. Parse failures carry 1-based
// line and column.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hrep.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace facekit {

struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t col;
    ParseError(std::size_t line_no, std::size_t col_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ", column " +
                             std::to_string(col_no) + ": " + what),
          line(line_no),
          col(col_no) {}
};

namespace detail {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t col;
};

inline std::vector<std::vector<Token>> tokenize_lines(std::istream& in) {
    std::vector<std::vector<Token>> lines;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::vector<Token> tokens;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == '#') break;
            if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') { ++i; continue; }
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r' && raw[i] != '#') ++i;
            tokens.push_back(Token{raw.substr(start, i - start), line_no, start + 1});
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

inline Rational token_rational(const Token& token) {
    const auto value = parse_rational(token.text);
    if (!value) throw ParseError(token.line, token.col, "expected a rational, got '" + token.text + "'");
    return *value;
}

inline std::size_t token_count(const Token& token) {
    for (char c : token.text)
        if (c < '0' || c > '9') throw ParseError(token.line, token.col, "expected a nonnegative integer, got '" + token.text + "'");
    return static_cast<std::size_t>(std::stoull(token.text));
}

// `dim n` must open the file; returns n and the remaining statement lines.
inline std::pair<std::size_t, std::vector<std::vector<Token>>> parse_dim_header(
    std::istream& in, const char* format_name) {
    auto lines = tokenize_lines(in);
    if (lines.empty()) throw ParseError(1, 1, std::string(format_name) + ": empty input");
    const auto& head = lines.front();
    if (head[0].text != "dim")
        throw ParseError(head[0].line, head[0].col, "expected 'dim', got '" + head[0].text + "'");
    if (head.size() != 2)
        throw ParseError(head[0].line, head[0].col, "'dim' takes exactly one argument");
    const std::size_t dim = token_count(head[1]);
    lines.erase(lines.begin());
    return {dim, std::move(lines)};
}

}  // namespace detail

inline HPoly parse_hpoly(std::istream& in) {
    auto [dim, lines] = detail::parse_dim_header(in, "H-form");
    HPoly p{dim, {}};
    for (const auto& tokens : lines) {
        const auto& head = tokens[0];
        const bool is_eq = head.text == "eq";
        if (head.text != "ineq" && !is_eq)
            throw ParseError(head.line, head.col, "expected 'ineq' or 'eq', got '" + head.text + "'");
        if (tokens.size() != dim + 3)
            throw ParseError(head.line, head.col,
                             (is_eq ? std::string("'eq'") : std::string("'ineq'")) + " needs " +
                                 std::to_string(dim) + " coefficients, a separator and an offset");
        Vector normal(dim);
        for (std::size_t j = 0; j < dim; ++j) normal[j] = detail::token_rational(tokens[1 + j]);
        const auto& sep = tokens[dim + 1];
        const char* wanted = is_eq ? "=" : ">=";
        if (sep.text != wanted)
            throw ParseError(sep.line, sep.col, "expected '" + std::string(wanted) + "', got '" + sep.text + "'");
        const Rational offset = detail::token_rational(tokens[dim + 2]);
        p.rows.push_back(LinRel{normal, offset});
        if (is_eq) p.rows.push_back(LinRel{negate(normal), -offset});
    }
    return p;
}

inline HPoly parse_hpoly(const std::string& text) {
    std::istringstream in(text);
    return parse_hpoly(in);
}

inline void write_hpoly(std::ostream& out, const HPoly& p) {
    out << "dim " << p.dim << "\n";
    for (const LinRel& row : p.rows) {
        out << "ineq";
        for (const Rational& e : row.normal) out << ' ' << to_string(e);
        out << " >= " << to_string(row.offset) << "\n";
    }
}

inline std::string hpoly_text(const HPoly& p) {
    std::ostringstream out;
    write_hpoly(out, p);
    return out.str();
}

struct PointList {
    std::size_t dim = 0;
    std::vector<Vector> points;
};

inline PointList parse_vset(std::istream& in) {
    auto [dim, lines] = detail::parse_dim_header(in, "V-form");
    PointList out{dim, {}};
    for (const auto& tokens : lines) {
        const auto& head = tokens[0];
        if (head.text != "point")
            throw ParseError(head.line, head.col, "expected 'point', got '" + head.text + "'");
        if (tokens.size() != dim + 1)
            throw ParseError(head.line, head.col, "'point' needs exactly " + std::to_string(dim) + " coordinates");
        Vector x(dim);
        for (std::size_t j = 0; j < dim; ++j) x[j] = detail::token_rational(tokens[1 + j]);
        out.points.push_back(std::move(x));
    }
    return out;
}

inline PointList parse_vset(const std::string& text) {
    std::istringstream in(text);
    return parse_vset(in);
}

inline void write_vset(std::ostream& out, const PointList& v) {
    out << "dim " << v.dim << "\n";
    for (const Vector& x : v.points) {
        out << "point";
        for (const Rational& e : x) out << ' ' << to_string(e);
        out << "\n";
    }
}

/// Matrix file: "rows cols" first, then rows*cols rationals in row-major
/// order; entries may wrap lines freely.
inline Matrix parse_matrix(std::istream& in) {
    const auto lines = detail::tokenize_lines(in);
    std::vector<detail::Token> flat;
    for (const auto& tokens : lines) flat.insert(flat.end(), tokens.begin(), tokens.end());
    if (flat.size() < 2) throw ParseError(1, 1, "matrix: expected 'rows cols' header");
    const std::size_t rows = detail::token_count(flat[0]);
    const std::size_t cols = detail::token_count(flat[1]);
    if (flat.size() != 2 + rows * cols) {
        const auto& at = flat.size() > 2 ? flat[std::min(flat.size() - 1, std::size_t{2})] : flat[1];
        throw ParseError(at.line, at.col,
                         "matrix: expected " + std::to_string(rows * cols) + " entries, got " +
                             std::to_string(flat.size() - 2));
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = detail::token_rational(flat[2 + i * cols + j]);
    return m;
}

inline Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

}  // namespace facekit
