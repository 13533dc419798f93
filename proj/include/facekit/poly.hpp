#pragma once

// Set-semantic polyhedra. A Poly wraps one H-form representative together
// with a memo of facts about the *set* it describes (emptiness, hull,
// dimension, …) that are computed lazily and shared across copies. Every
// operation in this header is a congruence for set equality: feeding
// equivalent representatives produces equivalent results. Nothing here
// compares representations — use set_equal / subset for semantics.

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "affine.hpp"
#include "hrep.hpp"
#include "linalg.hpp"
#include "lp.hpp"
#include "rational.hpp"

namespace facekit {

struct FaceCache;    // defined with the face machinery
struct VertexGraph;  // defined with the graph walks

/// An indexed, deduplicated bundle of normalized relations. Faces are named
/// by subsets of these indices, so index stability matters: items keep the
/// order of first appearance.
class Base {
public:
    Base() = default;

    static Base of_rows(std::size_t ambient, const std::vector<LinRel>& rows) {
        Base b;
        b.ambient_ = ambient;
        std::set<std::pair<Vector, Rational>> seen;
        for (const LinRel& row : rows) {
            if (row.normal.size() != ambient) throw UsageError("Base: row dimension mismatch");
            LinRel n = normalize_row(row);
            if (seen.emplace(n.normal, n.offset).second) b.items_.push_back(std::move(n));
        }
        return b;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t size() const { return items_.size(); }
    const LinRel& operator[](std::size_t i) const { return items_.at(i); }
    const std::vector<LinRel>& items() const { return items_; }

    friend bool operator==(const Base&, const Base&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<LinRel> items_;
};

class Poly {
public:
    Poly() : Poly(HPoly{}) {}
    explicit Poly(HPoly rep) : rep_(std::move(rep)), memo_(std::make_shared<Memo>()) {
        validate(rep_, "Poly");
    }

    const HPoly& rep() const { return rep_; }
    std::size_t ambient() const { return rep_.dim; }

    struct Memo {
        std::optional<bool> empty;
        std::optional<bool> compact;
        std::optional<AffineSpace> hull;
        std::optional<HPoly> reduced;   // irredundant representative
        std::optional<std::vector<Vector>> vertices;
        std::shared_ptr<const FaceCache> faces;
        std::shared_ptr<const VertexGraph> graph;
    };
    Memo& memo() const { return *memo_; }

private:
    HPoly rep_;
    std::shared_ptr<Memo> memo_;
};

// --- constructors -----------------------------------------------------------

inline Poly hs(const LinRel& rel) { return Poly(HPoly{rel.normal.size(), {rel}}); }

/// The hyperplane normal·x = offset, as the opposing halfspace pair.
inline Poly hp(const LinRel& rel) {
    return Poly(HPoly{rel.normal.size(), {rel, LinRel{negate(rel.normal), -rel.offset}}});
}

inline Poly poly0(std::size_t ambient) { return Poly(hpoly_empty(ambient)); }
inline Poly polyT(std::size_t ambient) { return Poly(hpoly_whole(ambient)); }

inline Poly poly_of_base(const Base& base) {
    return Poly(HPoly{base.ambient(), base.items()});
}

/// All base rows as inequalities, plus the rows named by eqs tightened to
/// equations (each contributes its reversed copy).
inline Poly poly_eq(const Base& base, const std::set<std::size_t>& eqs) {
    HPoly rep{base.ambient(), base.items()};
    for (std::size_t i : eqs) {
        if (i >= base.size()) throw UsageError("poly_eq: index out of range");
        rep.rows.push_back(LinRel{negate(base[i].normal), -base[i].offset});
    }
    return Poly(rep);
}

/// A single point, written directly as the 2n tight rows.
inline Poly pt(const Vector& x) {
    HPoly rep{x.size(), {}};
    for (std::size_t i = 0; i < x.size(); ++i) {
        rep.rows.push_back(LinRel{unit_vector(x.size(), i), x[i]});
        rep.rows.push_back(LinRel{negate(unit_vector(x.size(), i)), -x[i]});
    }
    return Poly(rep);
}

// --- set-semantic queries ----------------------------------------------------

inline bool is_empty(const Poly& p) {
    auto& memo = p.memo();
    if (!memo.empty) memo.empty = hpoly_is_empty(p.rep());
    return *memo.empty;
}

inline bool member(const Poly& p, const Vector& x) { return member(p.rep(), x); }
inline bool subset(const Poly& p, const Poly& q) { return subset(p.rep(), q.rep()); }
inline bool set_equal(const Poly& p, const Poly& q) { return equiv(p.rep(), q.rep()); }

/// Is objective·x bounded below on p? (Empty counts as bounded.)
inline bool bounded_below(const Poly& p, const Vector& objective) {
    return !std::holds_alternative<LpUnbounded>(minimize(p.rep(), objective));
}

/// Bounded in every direction: all 2n coordinate extremes finite.
inline bool compact(const Poly& p) {
    auto& memo = p.memo();
    if (memo.compact) return *memo.compact;
    bool result = true;
    if (!is_empty(p)) {
        for (std::size_t i = 0; i < p.ambient() && result; ++i) {
            const Vector e = unit_vector(p.ambient(), i);
            result = bounded_below(p, e) && bounded_below(p, negate(e));
        }
    }
    memo.compact = result;
    return result;
}

// --- combining operations ----------------------------------------------------

inline Poly intersect(const Poly& p, const Poly& q) {
    if (p.ambient() != q.ambient()) throw UsageError("intersect: ambient dimension mismatch");
    HPoly rep = p.rep();
    rep.rows.insert(rep.rows.end(), q.rep().rows.begin(), q.rep().rows.end());
    return Poly(rep);
}

/// Image { Ax : x in p } for a k×n matrix A, built by adjoining image
/// coordinates y = Ax and projecting the originals away.
inline Poly map_poly(const Matrix& a, const Poly& p) {
    const std::size_t n = p.ambient();
    const std::size_t k = a.rows();
    if (a.cols() != n) throw UsageError("map_poly: matrix does not match the ambient dimension");

    HPoly embedded{n + k, {}};
    for (const LinRel& row : p.rep().rows) {
        Vector normal = row.normal;
        normal.resize(n + k, Rational(0));
        embedded.rows.push_back(LinRel{std::move(normal), row.offset});
    }
    for (std::size_t i = 0; i < k; ++i) {
        Vector normal = zero_vector(n + k);
        for (std::size_t j = 0; j < n; ++j) normal[j] = -a(i, j);
        normal[n + i] = 1;
        embedded.rows.push_back(LinRel{normal, Rational(0)});            // y_i - (Ax)_i >= 0
        embedded.rows.push_back(LinRel{negate(normal), Rational(0)});    // and <= 0
    }

    std::set<std::size_t> originals;
    for (std::size_t j = 0; j < n; ++j) originals.insert(j);
    return Poly(project_out(embedded, originals));
}

/// Convex hull of finitely many points, as an H-form: describe the weight
/// simplex { w >= 0, sum w = 1 } together with x = sum w_i v_i and project
/// the weights away.
inline Poly conv(std::size_t ambient, const std::vector<Vector>& points) {
    for (const Vector& v : points)
        if (v.size() != ambient) throw UsageError("conv: point dimension mismatch");
    if (points.empty()) return poly0(ambient);
    if (points.size() == 1) return pt(points.front());

    const std::size_t k = points.size();
    HPoly weights{k, {}};
    for (std::size_t i = 0; i < k; ++i)
        weights.rows.push_back(LinRel{unit_vector(k, i), Rational(0)});
    weights.rows.push_back(LinRel{Vector(k, Rational(1)), Rational(1)});
    weights.rows.push_back(LinRel{Vector(k, Rational(-1)), Rational(-1)});

    Matrix spread(ambient, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < ambient; ++i) spread(i, j) = points[j][i];
    return map_poly(spread, Poly(weights));
}

inline Poly segm(const Vector& x, const Vector& y) {
    require_same_dim(x, y, "segm");
    return conv(x.size(), {x, y});
}

// --- hull membership with certificates ----------------------------------------

struct ConvexWitness {
    std::vector<std::size_t> support;   // indices of points with positive weight
    std::vector<Rational> weights;      // matching positive weights, sum 1
};

namespace detail {

// x in conv(points) as a feasibility program over the weights.
inline LinProgram hull_membership_program(std::size_t ambient,
                                          const std::vector<Vector>& points,
                                          const Vector& x) {
    const std::size_t k = points.size();
    LinProgram lp;
    lp.objective = zero_vector(k);
    for (std::size_t i = 0; i < k; ++i)
        lp.constraints.push_back({unit_vector(k, i), Rational(0)});
    lp.constraints.push_back({Vector(k, Rational(1)), Rational(1)});
    lp.constraints.push_back({Vector(k, Rational(-1)), Rational(-1)});
    for (std::size_t coord = 0; coord < ambient; ++coord) {
        Vector row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = points[j][coord];
        lp.constraints.push_back({row, x[coord]});
        lp.constraints.push_back({negate(row), -x[coord]});
    }
    return lp;
}

}  // namespace detail

/// Convex weights proving x in conv(points); absent iff x is outside.
inline std::optional<ConvexWitness> conv_witness(std::size_t ambient,
                                                 const std::vector<Vector>& points,
                                                 const Vector& x) {
    if (x.size() != ambient) throw UsageError("conv_witness: point dimension mismatch");
    for (const Vector& v : points)
        if (v.size() != ambient) throw UsageError("conv_witness: point dimension mismatch");
    if (points.empty()) return std::nullopt;

    const auto outcome = solve(detail::hull_membership_program(ambient, points, x));
    const auto* opt = std::get_if<LpOptimal>(&outcome);
    if (!opt) return std::nullopt;
    ConvexWitness w;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (opt->point[i] == 0) continue;
        w.support.push_back(i);
        w.weights.push_back(opt->point[i]);
    }
    return w;
}

/// A relation e with  e·x < offset <= e·v  for every v among the points:
/// a halfspace containing the hull but not x. Absent iff x is in the hull.
/// Extracted from the infeasibility certificate of the weight program.
inline std::optional<LinRel> separation(std::size_t ambient,
                                        const std::vector<Vector>& points,
                                        const Vector& x) {
    if (x.size() != ambient) throw UsageError("separation: point dimension mismatch");
    if (points.empty()) return LinRel{zero_vector(ambient), Rational(1)};

    const LinProgram lp = detail::hull_membership_program(ambient, points, x);
    const auto outcome = solve(lp);
    const auto* inf = std::get_if<LpInfeasible>(&outcome);
    if (!inf) return std::nullopt;

    // Farkas rows: k weight positivities, the two sum rows, then for each
    // coordinate the pair (row, x_c) / (-row, -x_c). Writing y_c for the
    // paired difference and g for the sum-row difference, the certificate
    // collapses to  y·v_j <= -g for every j  while  y·x > -g, so the normal
    // -y with offset g separates.
    const std::size_t k = points.size();
    const Rational g = inf->farkas[k] - inf->farkas[k + 1];
    Vector y(ambient);
    for (std::size_t coord = 0; coord < ambient; ++coord)
        y[coord] = inf->farkas[k + 2 + 2 * coord] - inf->farkas[k + 2 + 2 * coord + 1];
    return LinRel{negate(y), g};
}

}  // namespace facekit
