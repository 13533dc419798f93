#pragma once

// Exact linear algebra over the rationals: vectors, dense matrices, reduced
// row echelon form, kernels and affine solution sets. Pivoting picks the
// first nonzero entry in column order — with exact arithmetic there is no
// stability concern, and the deterministic choice makes every derived basis
// canonical (two equal subspaces produce identical bases).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace facekit {

using Vector = std::vector<Rational>;

/// One linear relation  normal · x >= offset  (or, where stated, = offset).
struct LinRel {
    Vector normal;
    Rational offset;

    friend bool operator==(const LinRel&, const LinRel&) = default;
};

inline void require_same_dim(const Vector& u, const Vector& v, const char* who) {
    if (u.size() != v.size()) throw UsageError(std::string(who) + ": dimension mismatch");
}

inline Rational dot(const Vector& u, const Vector& v) {
    require_same_dim(u, v, "dot");
    Rational acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

inline Vector add(const Vector& u, const Vector& v) {
    require_same_dim(u, v, "add");
    Vector out(u);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += v[i];
    return out;
}

inline Vector sub(const Vector& u, const Vector& v) {
    require_same_dim(u, v, "sub");
    Vector out(u);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] -= v[i];
    return out;
}

inline Vector scale(const Rational& factor, const Vector& v) {
    Vector out(v);
    for (auto& entry : out) entry *= factor;
    return out;
}

inline Vector negate(const Vector& v) { return scale(Rational(-1), v); }

inline bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& e) { return e == 0; });
}

inline Vector zero_vector(std::size_t dim) { return Vector(dim, Rational(0)); }

inline Vector unit_vector(std::size_t dim, std::size_t index) {
    Vector out = zero_vector(dim);
    out.at(index) = 1;
    return out;
}

/// Strict lexicographic order; the tie-breaker used wherever a deterministic
/// choice among vectors is required.
inline bool lex_less(const Vector& u, const Vector& v) {
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

/// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix from_rows(const std::vector<Vector>& rows) {
        const std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix out(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw UsageError("Matrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
        }
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const {
        Vector out(cols_);
        for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
        return out;
    }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline Vector mat_vec(const Matrix& m, const Vector& x) {
    if (m.cols() != x.size()) throw UsageError("mat_vec: dimension mismatch");
    Vector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * x[j];
    return out;
}

/// In-place reduction to *reduced* row echelon form. Returns the pivot
/// columns in increasing order; the rank is their count.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
        std::size_t pivot_row = lead;
        while (pivot_row < m.rows() && m(pivot_row, col) == 0) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        if (pivot_row != lead)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot_row, j), m(lead, j));
        const Rational inv = Rational(1) / m(lead, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead || m(i, col) == 0) continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(lead, j);
        }
        pivot_cols.push_back(col);
        ++lead;
    }
    return pivot_cols;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

/// Basis of { x : Mx = 0 }, one vector per free column, listed by increasing
/// free-column index. Deterministic, hence canonical for equal row spaces.
inline std::vector<Vector> kernel_basis(Matrix m) {
    const std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t col : pivots) is_pivot[col] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solution set of Mx = rhs, described as particular point + kernel basis.
struct AffineSolution {
    Vector particular;
    std::vector<Vector> kernel;
};

/// std::nullopt iff the system is inconsistent. The particular solution sets
/// every free variable to zero, so equal systems yield identical results.
inline std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& rhs) {
    if (m.rows() != rhs.size()) throw UsageError("solve_affine: dimension mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = rhs[i];
    }
    const std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // row 0 = 1

    Vector particular = zero_vector(m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k) particular[pivots[k]] = aug(k, m.cols());
    return AffineSolution{std::move(particular), kernel_basis(m)};
}

/// Rank of the stacked (normal | offset) rows — the dimension of the space
/// the relations span when read as vectors in R^{n+1}.
inline std::size_t span_dim(const std::vector<LinRel>& rels) {
    if (rels.empty()) return 0;
    std::vector<Vector> rows;
    rows.reserve(rels.size());
    for (const LinRel& rel : rels) {
        Vector row = rel.normal;
        row.push_back(rel.offset);
        rows.push_back(std::move(row));
    }
    return rank(Matrix::from_rows(rows));
}

}  // namespace facekit
