#pragma once

// Affine subspaces, used as the hulls of polyhedra. A space is either empty
// or a flat (origin + direction span). Direction bases are kept in reduced
// row echelon form and the origin is reduced against them, so two equal
// flats are structurally identical and operator== decides set equality.
//
// Dimension bookkeeping is shifted by one: the empty space has adim 0, a
// flat has adim = (number of directions) + 1. A point is adim 1, a line 2,
// and so on — the geometric dimension is always adim - 1.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rational.hpp"

namespace facekit {

class AffineSpace {
public:
    static AffineSpace empty(std::size_t ambient) {
        AffineSpace s;
        s.ambient_ = ambient;
        s.empty_ = true;
        return s;
    }

    static AffineSpace flat(Vector origin, std::vector<Vector> directions) {
        AffineSpace s;
        s.ambient_ = origin.size();
        s.empty_ = false;
        s.origin_ = std::move(origin);
        s.directions_ = std::move(directions);
        for (const Vector& d : s.directions_)
            if (d.size() != s.ambient_) throw UsageError("AffineSpace: direction dimension mismatch");
        s.canonicalize();
        return s;
    }

    static AffineSpace point(Vector at) { return flat(std::move(at), {}); }

    static AffineSpace whole(std::size_t ambient) {
        std::vector<Vector> dirs;
        for (std::size_t i = 0; i < ambient; ++i) dirs.push_back(unit_vector(ambient, i));
        return flat(zero_vector(ambient), std::move(dirs));
    }

    bool is_empty() const { return empty_; }
    std::size_t ambient() const { return ambient_; }
    const Vector& origin() const {
        if (empty_) throw UsageError("AffineSpace::origin: empty space");
        return origin_;
    }
    const std::vector<Vector>& directions() const {
        if (empty_) throw UsageError("AffineSpace::directions: empty space");
        return directions_;
    }

    /// Shifted dimension: 0 for empty, geometric dimension + 1 otherwise.
    std::size_t adim() const { return empty_ ? 0 : directions_.size() + 1; }

    friend bool operator==(const AffineSpace&, const AffineSpace&) = default;

private:
    AffineSpace() = default;

    // Reduced echelon on the direction rows; then strip the origin's
    // components along every pivot column. Both steps preserve the set.
    void canonicalize() {
        if (directions_.empty()) return;
        Matrix m = Matrix::from_rows(directions_);
        const auto pivots = rref(m);
        directions_.clear();
        for (std::size_t k = 0; k < pivots.size(); ++k) directions_.push_back(m.row(k));
        for (std::size_t k = 0; k < pivots.size(); ++k)
            origin_ = sub(origin_, scale(origin_[pivots[k]], directions_[k]));
    }

    std::size_t ambient_ = 0;
    bool empty_ = true;
    Vector origin_;
    std::vector<Vector> directions_;
};

namespace detail {

// Reduce v against echelon rows; the residual is zero iff v is in their
// span (each echelon row is the unique one with a nonzero pivot entry).
inline Vector reduce_against(const std::vector<Vector>& echelon_rows, Vector v) {
    for (const Vector& row : echelon_rows) {
        std::size_t pivot = 0;
        while (pivot < row.size() && row[pivot] == 0) ++pivot;
        if (pivot == row.size()) continue;
        if (v[pivot] != 0) v = sub(v, scale(v[pivot], row));
    }
    return v;
}

}  // namespace detail

/// Solution set of the relations read as equations  normal·x = offset.
inline AffineSpace affine_of_rels(std::size_t dim, const std::vector<LinRel>& rels) {
    std::vector<Vector> lhs;
    Vector rhs;
    for (const LinRel& rel : rels) {
        if (rel.normal.size() != dim) throw UsageError("affine_of_rels: relation dimension mismatch");
        lhs.push_back(rel.normal);
        rhs.push_back(rel.offset);
    }
    const Matrix m = lhs.empty() ? Matrix(0, dim) : Matrix::from_rows(lhs);
    const auto sol = solve_affine(m, rhs);
    if (!sol) return AffineSpace::empty(dim);
    return AffineSpace::flat(sol->particular, sol->kernel);
}

inline bool member(const AffineSpace& s, const Vector& x) {
    if (x.size() != s.ambient()) throw UsageError("member: point dimension mismatch");
    if (s.is_empty()) return false;
    return is_zero(detail::reduce_against(s.directions(), sub(x, s.origin())));
}

/// Inclusion of affine spaces; empty is contained in everything.
inline bool subset(const AffineSpace& inner, const AffineSpace& outer) {
    if (inner.ambient() != outer.ambient()) throw UsageError("subset: ambient dimension mismatch");
    if (inner.is_empty()) return true;
    if (outer.is_empty()) return false;
    if (!member(outer, inner.origin())) return false;
    for (const Vector& d : inner.directions())
        if (!is_zero(detail::reduce_against(outer.directions(), d))) return false;
    return true;
}

/// Intersection with one hyperplane  normal·x = offset.
inline AffineSpace slice_with_hyperplane(const AffineSpace& s, const LinRel& h) {
    if (h.normal.size() != s.ambient()) throw UsageError("slice_with_hyperplane: dimension mismatch");
    if (s.is_empty()) return s;

    // In flat coordinates x = origin + t·D the constraint reads
    // gap = sum(t_i * g_i) with g_i = normal·d_i.
    const Rational gap = h.offset - dot(h.normal, s.origin());
    Vector g;
    for (const Vector& d : s.directions()) g.push_back(dot(h.normal, d));

    std::size_t anchor = g.size();
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] != 0) { anchor = i; break; }
    if (anchor == g.size())
        return gap == 0 ? s : AffineSpace::empty(s.ambient());

    const Vector& pivot_dir = s.directions()[anchor];
    Vector origin = add(s.origin(), scale(gap / g[anchor], pivot_dir));
    std::vector<Vector> directions;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i == anchor) continue;
        directions.push_back(sub(s.directions()[i], scale(g[i] / g[anchor], pivot_dir)));
    }
    return AffineSpace::flat(std::move(origin), std::move(directions));
}

}  // namespace facekit
