#pragma once

// Faces of a polyhedron. A face is the minimizer set of some linear
// objective; equivalently — and this is the form everything here computes
// with — a face is what you get by turning a subset of an irredundant row
// system into equations. Each nonempty face is identified by its *maximal*
// active set: the set of all base rows tight on it. The empty face belongs
// to every polyhedron, carries every index as active, and is tracked
// separately (a one-point polyhedron also has every row tight, so maximal
// active sets only separate nonempty faces from each other).
//
// Enumeration works downward from the polyhedron: intersecting a known face
// with one more base hyperplane either kills it or exposes a smaller face,
// and every face is reachable this way. The exponential subset scan this
// replaces lives on in the test oracles.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "affine.hpp"
#include "hrep.hpp"
#include "linalg.hpp"
#include "lp.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace facekit {

/// The irredundant representative, memoized.
inline const HPoly& reduced_rep(const Poly& p) {
    auto& memo = p.memo();
    if (!memo.reduced) memo.reduced = remove_redundancy(p.rep());
    return *memo.reduced;
}

/// Largest value of objective·x over a nonempty f, if bounded.
inline std::optional<Rational> max_value(const Poly& f, const Vector& objective) {
    const LpOutcome outcome = minimize(f.rep(), negate(objective));
    if (const auto* opt = std::get_if<LpOptimal>(&outcome)) return -opt->value;
    if (std::holds_alternative<LpUnbounded>(outcome)) return std::nullopt;
    throw UsageError("max_value: empty polyhedron");
}

/// Maximal active set: the base rows satisfied with equality everywhere on
/// f. pre: f ⊆ poly_of_base(base). The empty face activates every index.
inline std::set<std::size_t> active_set(const Base& base, const Poly& f) {
    std::set<std::size_t> active;
    if (is_empty(f)) {
        for (std::size_t i = 0; i < base.size(); ++i) active.insert(i);
        return active;
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
        const auto top = max_value(f, base[i].normal);
        if (top && *top == base[i].offset) active.insert(i);
    }
    return active;
}

/// Affine hull: the solution set of the rows active on p, memoized.
/// Representation-independent — equivalent representatives agree.
inline const AffineSpace& hull(const Poly& p) {
    auto& memo = p.memo();
    if (memo.hull) return *memo.hull;
    if (is_empty(p)) {
        memo.hull = AffineSpace::empty(p.ambient());
        return *memo.hull;
    }
    const Base base = Base::of_rows(p.ambient(), p.rep().rows);
    std::vector<LinRel> equations;
    for (std::size_t i : active_set(base, p)) equations.push_back(base[i]);
    memo.hull = affine_of_rels(p.ambient(), equations);
    return *memo.hull;
}

/// Shifted dimension: 0 for empty, geometric dimension + 1 otherwise.
inline std::size_t pdim(const Poly& p) { return hull(p).adim(); }

/// A point in the relative interior: tight exactly on the active rows.
/// pre: p nonempty and p ⊆ poly_of_base(base).
inline Vector relint_pt(const Base& base, const Poly& p) {
    if (is_empty(p)) throw UsageError("relint_pt: empty polyhedron");
    const std::set<std::size_t> active = active_set(base, p);

    std::vector<Vector> strict_points;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (active.count(i)) continue;
        const LinRel& row = base[i];
        const LpOutcome outcome = minimize(p.rep(), negate(row.normal));
        if (const auto* opt = std::get_if<LpOptimal>(&outcome)) {
            strict_points.push_back(opt->point);  // max > offset since row is inactive
        } else {
            const auto& unb = std::get<LpUnbounded>(outcome);
            const Rational climb = dot(row.normal, unb.ray);  // > 0
            Rational t = 1;
            if (dot(row.normal, unb.feasible) <= row.offset)
                t += (row.offset - dot(row.normal, unb.feasible)) / climb;
            strict_points.push_back(add(unb.feasible, scale(t, unb.ray)));
        }
    }
    if (strict_points.empty()) {
        // Every row is tight: p is its own affine hull.
        std::vector<LinRel> equations;
        for (std::size_t i : active) equations.push_back(base[i]);
        return affine_of_rels(p.ambient(), equations).origin();
    }
    Vector sum = zero_vector(p.ambient());
    for (const Vector& x : strict_points) sum = add(sum, x);
    return scale(Rational(1, static_cast<long>(strict_points.size())), sum);
}

/// The face of p minimizing c: everything in p attaining min c·x, the empty
/// polyhedron when p is empty or the objective is unbounded below.
inline Poly argmin(const Poly& p, const Vector& c) {
    const LpOutcome outcome = minimize(p.rep(), c);
    if (const auto* opt = std::get_if<LpOptimal>(&outcome))
        return intersect(p, hp(LinRel{c, opt->value}));
    return poly0(p.ambient());
}

/// Is f a face of p? pre: p = poly_of_base(base). The empty set always is;
/// a nonempty candidate must sit inside p and equal the face its own active
/// set generates.
inline bool is_face(const Poly& f, const Poly& p, const Base& base) {
    if (is_empty(f)) return true;
    if (!subset(f, p)) return false;
    return set_equal(f, poly_eq(base, active_set(base, f)));
}

struct Face {
    Poly as_poly;
    std::set<std::size_t> active;  // maximal active set over the cache base
    std::size_t rank;              // shifted dimension (pdim)
};

/// The complete face set of one polyhedron over its irredundant base.
/// faces[bottom] is the empty face, faces[top] the polyhedron itself; the
/// order is (rank, active set), which is total here.
struct FaceCache {
    Base base;
    std::vector<Face> faces;
    std::size_t bottom = 0;
    std::size_t top = 0;
    bool compact_p = false;
};

namespace detail {

// Rank without LPs: a nonempty face's hull is the solution set of its
// (maximal) active rows.
inline std::size_t rank_of_active(const Base& base, const std::set<std::size_t>& active) {
    std::vector<LinRel> equations;
    for (std::size_t i : active) equations.push_back(base[i]);
    const AffineSpace flat = affine_of_rels(base.ambient(), equations);
    if (flat.is_empty()) throw InternalError("rank_of_active: nonempty face with empty hull");
    return flat.adim();
}

inline std::shared_ptr<const FaceCache> build_face_cache(const Poly& p) {
    auto cache = std::make_shared<FaceCache>();
    const HPoly& reduced = reduced_rep(p);
    cache->base = Base::of_rows(p.ambient(), reduced.rows);
    cache->compact_p = compact(p);
    const std::size_t count = cache->base.size();

    std::set<std::size_t> all;
    for (std::size_t i = 0; i < count; ++i) all.insert(i);

    if (is_empty(p)) {
        cache->faces.push_back(Face{poly0(p.ambient()), all, 0});
        cache->bottom = cache->top = 0;
        return cache;
    }

    // Downward closure from the polyhedron itself.
    std::map<std::set<std::size_t>, Face> found;
    std::vector<std::set<std::size_t>> pending;

    const Poly whole = poly_of_base(cache->base);
    const std::set<std::size_t> top_active = active_set(cache->base, whole);
    found.emplace(top_active,
                  Face{poly_eq(cache->base, top_active), top_active,
                       detail::rank_of_active(cache->base, top_active)});
    pending.push_back(top_active);

    while (!pending.empty()) {
        const std::set<std::size_t> current = std::move(pending.back());
        pending.pop_back();
        for (std::size_t extra = 0; extra < count; ++extra) {
            if (current.count(extra)) continue;
            std::set<std::size_t> seed = current;
            seed.insert(extra);
            const Poly child = poly_eq(cache->base, seed);
            if (is_empty(child)) continue;
            // Saturate to the maximal active set: rows already in the seed
            // are tight by construction, the rest need a look.
            std::set<std::size_t> saturated = seed;
            for (std::size_t i = 0; i < count; ++i) {
                if (saturated.count(i)) continue;
                const auto top_val = max_value(child, cache->base[i].normal);
                if (top_val && *top_val == cache->base[i].offset) saturated.insert(i);
            }
            if (found.count(saturated)) continue;
            found.emplace(saturated,
                          Face{poly_eq(cache->base, saturated), saturated,
                               detail::rank_of_active(cache->base, saturated)});
            pending.push_back(saturated);
        }
    }

    cache->faces.push_back(Face{poly0(p.ambient()), all, 0});  // the empty face
    for (auto& [key, face] : found) cache->faces.push_back(std::move(face));
    std::sort(cache->faces.begin(), cache->faces.end(), [](const Face& a, const Face& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        return a.active < b.active;
    });
    cache->bottom = 0;
    cache->top = cache->faces.size() - 1;
    return cache;
}

}  // namespace detail

/// All faces of p (the empty face and p itself included), memoized.
inline const FaceCache& face_set(const Poly& p) {
    auto& memo = p.memo();
    if (!memo.faces) memo.faces = detail::build_face_cache(p);
    return *memo.faces;
}

/// The faces one dimension below p: turn each inactive row of the
/// irredundant base into an equation. pre: p nonempty.
inline std::vector<Face> facets(const Poly& p) {
    if (is_empty(p)) throw UsageError("facets: empty polyhedron");
    const HPoly& reduced = reduced_rep(p);
    const Base base = Base::of_rows(p.ambient(), reduced.rows);
    const std::set<std::size_t> top_active = active_set(base, p);

    std::vector<Face> out;
    for (std::size_t e = 0; e < base.size(); ++e) {
        if (top_active.count(e)) continue;
        std::set<std::size_t> seed = top_active;
        seed.insert(e);
        const Poly facet = poly_eq(base, seed);
        if (is_empty(facet)) throw InternalError("facets: irredundant row with empty facet");
        const std::set<std::size_t> saturated = active_set(base, facet);
        out.push_back(Face{poly_eq(base, saturated), saturated,
                           detail::rank_of_active(base, saturated)});
    }
    return out;
}

/// The points that are themselves faces (the rank-1 faces), found as the
/// basic solutions of the irredundant system: full-rank tight subsets with
/// a feasible unique solution. Sorted lexicographically.
inline const std::vector<Vector>& vertex_set(const Poly& p) {
    auto& memo = p.memo();
    if (memo.vertices) return *memo.vertices;

    std::vector<Vector> out;
    if (!is_empty(p)) {
        const HPoly& reduced = reduced_rep(p);
        const std::size_t n = p.ambient();
        const std::size_t m = reduced.rows.size();
        if (n == 0) {
            out.push_back(Vector{});  // the single point of a nonempty 0-dim set
        } else if (m >= n) {
            std::set<Vector> seen;
            std::vector<std::size_t> pick(n);
            for (std::size_t i = 0; i < n; ++i) pick[i] = i;
            for (;;) {
                std::vector<Vector> lhs;
                Vector rhs;
                for (std::size_t i : pick) {
                    lhs.push_back(reduced.rows[i].normal);
                    rhs.push_back(reduced.rows[i].offset);
                }
                const auto sol = solve_affine(Matrix::from_rows(lhs), rhs);
                if (sol && sol->kernel.empty() && member(reduced, sol->particular))
                    seen.insert(sol->particular);
                // next n-combination of {0..m-1}
                std::size_t slot = n;
                while (slot > 0 && pick[slot - 1] == m - n + slot - 1) --slot;
                if (slot == 0) break;
                ++pick[slot - 1];
                for (std::size_t j = slot; j < n; ++j) pick[j] = pick[j - 1] + 1;
            }
            out.assign(seen.begin(), seen.end());
        }
    }
    memo.vertices = std::move(out);
    return *memo.vertices;
}

/// A compact polyhedron is the hull of its vertices; checked by mutual
/// inclusion against a freshly built hull. pre: p compact.
inline bool minkowski_check(const Poly& p) {
    if (!compact(p)) throw UsageError("minkowski_check: unbounded polyhedron");
    return set_equal(p, conv(p.ambient(), vertex_set(p)));
}

/// The two endpoints of a compact rank-2 polyhedron (a segment):
/// the extremes along its one hull direction. pre: compact, pdim == 2.
inline std::pair<Vector, Vector> dim2_segment(const Poly& p) {
    if (!compact(p)) throw UsageError("dim2_segment: unbounded polyhedron");
    if (pdim(p) != 2) throw UsageError("dim2_segment: rank is not 2");
    const Vector& direction = hull(p).directions().front();
    const auto lo = std::get<LpOptimal>(minimize(p.rep(), direction));
    const auto hi = std::get<LpOptimal>(minimize(p.rep(), negate(direction)));
    return {lo.point, hi.point};
}

}  // namespace facekit
