#pragma once

// The face set of one polyhedron as an explicit finite ordered structure:
// an indexed face list, the order relation as a matrix, and the covering
// pairs. On top of that: meets and joins, gradedness / atomisticity /
// coatomisticity / diamond checkers, interval sublattices, and the vertex
// figure (slicing off one vertex) with its face correspondence.
//
// Order rule: the bottom (empty) face sits below everything; between
// nonempty faces, F ≤ G exactly when F's maximal active set contains G's.
// The bottom needs the special case because a one-point polyhedron also
// activates every row.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "faces.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace facekit {

struct FaceLattice {
    Base base;                // the shared irredundant rows the active sets index
    std::vector<Face> faces;  // faces[0] = bottom, faces.back() = top
    std::vector<std::vector<bool>> leq;                       // leq[a][b]: faces[a] ≤ faces[b]
    std::vector<std::pair<std::size_t, std::size_t>> hasse;   // covering pairs (lower, upper)
    bool compact_p = false;

    std::size_t size() const { return faces.size(); }
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return faces.size() - 1; }
    // The lattice-local rank: the shifted dimension in a full lattice,
    // shifted down to start at 0 in an interval.
    std::size_t rank_of(std::size_t i) const { return faces.at(i).rank; }
};

namespace detail {

// Covering pairs from the order matrix. Anything strictly between a and b
// has rank strictly between theirs (rank is strictly monotone along < on
// every lattice built here), so only those candidates are scanned.
inline std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(
    const std::vector<Face>& faces, const std::vector<std::vector<bool>>& leq) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = faces.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !leq[a][b]) continue;
            bool covered = true;
            if (faces[b].rank > faces[a].rank + 1) {
                for (std::size_t c = 0; c < n && covered; ++c) {
                    if (c == a || c == b) continue;
                    if (faces[c].rank <= faces[a].rank || faces[c].rank >= faces[b].rank) continue;
                    if (leq[a][c] && leq[c][b]) covered = false;
                }
            }
            if (covered) out.emplace_back(a, b);
        }
    }
    return out;
}

}  // namespace detail

/// The face lattice of p. Faces and their order come straight from the face
/// set; an empty p yields the one-element lattice.
inline FaceLattice build_lattice(const Poly& p) {
    const FaceCache& cache = face_set(p);
    FaceLattice lat;
    lat.base = cache.base;
    lat.faces = cache.faces;
    lat.compact_p = cache.compact_p;

    const std::size_t n = lat.faces.size();
    lat.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
        lat.leq[cache.bottom][a] = true;
        if (a == cache.bottom) continue;
        for (std::size_t b = 0; b < n; ++b) {
            if (b == cache.bottom) continue;
            lat.leq[a][b] = std::includes(lat.faces[a].active.begin(), lat.faces[a].active.end(),
                                          lat.faces[b].active.begin(), lat.faces[b].active.end());
        }
    }
    lat.hasse = detail::covering_pairs(lat.faces, lat.leq);
    return lat;
}

/// Least face above every element of xs: the unique minimum of the common
/// upper bounds, if one exists. No elements means the bottom face.
inline std::optional<std::size_t> join_all(const FaceLattice& lat,
                                           const std::vector<std::size_t>& xs) {
    std::vector<std::size_t> bounds;
    for (std::size_t u = 0; u < lat.size(); ++u) {
        const bool above = std::all_of(xs.begin(), xs.end(),
                                       [&](std::size_t x) { return lat.leq.at(x)[u]; });
        if (above) bounds.push_back(u);
    }
    for (std::size_t low : bounds) {
        const bool least = std::all_of(bounds.begin(), bounds.end(),
                                       [&](std::size_t u) { return lat.leq[low][u]; });
        if (least) return low;
    }
    return std::nullopt;
}

/// Greatest face below every element of xs; no elements means the top face.
inline std::optional<std::size_t> meet_all(const FaceLattice& lat,
                                           const std::vector<std::size_t>& xs) {
    std::vector<std::size_t> bounds;
    for (std::size_t u = 0; u < lat.size(); ++u) {
        const bool below = std::all_of(xs.begin(), xs.end(),
                                       [&](std::size_t x) { return lat.leq.at(u)[x]; });
        if (below) bounds.push_back(u);
    }
    for (std::size_t high : bounds) {
        const bool greatest = std::all_of(bounds.begin(), bounds.end(),
                                          [&](std::size_t u) { return lat.leq[u][high]; });
        if (greatest) return high;
    }
    return std::nullopt;
}

inline std::optional<std::size_t> join(const FaceLattice& lat, std::size_t a, std::size_t b) {
    return join_all(lat, {a, b});
}

inline std::optional<std::size_t> meet(const FaceLattice& lat, std::size_t a, std::size_t b) {
    return meet_all(lat, {a, b});
}

/// Graded: rank strictly increases along the order and every covering step
/// raises it by exactly one — so all maximal chains share one length.
/// Legitimately false for some unbounded polyhedra (a line jumps from the
/// empty face straight to rank 2).
inline bool check_graded(const FaceLattice& lat) {
    for (std::size_t a = 0; a < lat.size(); ++a)
        for (std::size_t b = 0; b < lat.size(); ++b)
            if (a != b && lat.leq[a][b] && lat.faces[a].rank >= lat.faces[b].rank) return false;
    for (const auto& [lo, hi] : lat.hasse)
        if (lat.faces[hi].rank != lat.faces[lo].rank + 1) return false;
    return true;
}

/// Atomistic: every face is the join of the rank-1 faces (vertices) below
/// it. Only claimed — and only checkable — for compact polyhedra.
inline bool check_atomistic(const FaceLattice& lat) {
    if (!lat.compact_p) throw UsageError("check_atomistic: lattice of an unbounded polyhedron");
    for (std::size_t f = 0; f < lat.size(); ++f) {
        std::vector<std::size_t> atoms;
        for (std::size_t a = 0; a < lat.size(); ++a)
            if (lat.faces[a].rank == 1 && lat.leq[a][f]) atoms.push_back(a);
        if (join_all(lat, atoms) != std::optional<std::size_t>(f)) return false;
    }
    return true;
}

/// Coatomistic: every face is the meet of the facets (rank top−1) above it.
inline bool check_coatomistic(const FaceLattice& lat) {
    const std::size_t top_rank = lat.faces[lat.top()].rank;
    for (std::size_t f = 0; f < lat.size(); ++f) {
        std::vector<std::size_t> coatoms;
        for (std::size_t c = 0; c < lat.size(); ++c)
            if (top_rank > 0 && lat.faces[c].rank == top_rank - 1 && lat.leq[f][c])
                coatoms.push_back(c);
        if (meet_all(lat, coatoms) != std::optional<std::size_t>(f)) return false;
    }
    return true;
}

/// The induced sublattice on {F : faces[lo] ≤ F ≤ faces[hi]}, re-ranked so
/// its bottom has rank 0. Intervals are cover-closed, so the covering pairs
/// are the originals restricted to the selection.
inline FaceLattice interval(const FaceLattice& lat, std::size_t lo, std::size_t hi) {
    if (lo >= lat.size() || hi >= lat.size()) throw UsageError("interval: index out of range");
    if (!lat.leq[lo][hi]) throw UsageError("interval: endpoints are not ordered");

    std::vector<std::size_t> keep;
    std::vector<std::size_t> position(lat.size(), lat.size());
    for (std::size_t f = 0; f < lat.size(); ++f) {
        if (lat.leq[lo][f] && lat.leq[f][hi]) {
            position[f] = keep.size();
            keep.push_back(f);
        }
    }

    FaceLattice out;
    out.base = lat.base;
    out.compact_p = lat.compact_p;
    const std::size_t shift = lat.faces[lo].rank;
    for (std::size_t f : keep) {
        Face copy = lat.faces[f];
        copy.rank -= shift;
        out.faces.push_back(std::move(copy));
    }
    const std::size_t n = keep.size();
    out.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) out.leq[a][b] = lat.leq[keep[a]][keep[b]];
    for (const auto& [a, b] : lat.hasse)
        if (position[a] < n && position[b] < n) out.hasse.emplace_back(position[a], position[b]);
    return out;
}

/// Diamond property: every interval between faces two ranks apart contains
/// exactly four faces (the endpoints and two in the middle).
inline bool check_diamond(const FaceLattice& lat) {
    for (std::size_t a = 0; a < lat.size(); ++a) {
        for (std::size_t b = 0; b < lat.size(); ++b) {
            if (!lat.leq[a][b] || lat.faces[b].rank != lat.faces[a].rank + 2) continue;
            std::size_t inside = 0;
            for (std::size_t c = 0; c < lat.size(); ++c)
                if (lat.leq[a][c] && lat.leq[c][b]) ++inside;
            if (inside != 4) return false;
        }
    }
    return true;
}

/// A vertex figure: the polyhedron sliced by a hyperplane that strictly
/// separates one vertex from all the others, together with the face
/// correspondence it induces.
struct VertexFigure {
    LinRel plane;            // the slicing hyperplane normal·x = offset
    Poly sliced;             // the figure: p ∩ hp(plane)
    FaceLattice at_vertex;   // the interval [pt v, p], re-ranked from 0
    FaceLattice figure;      // the face lattice of the figure
    std::vector<std::size_t> image;  // at_vertex.faces[i] ↦ figure.faces[image[i]]
};

/// Slice off the vertex v. The faces of p through v (the interval from
/// pt v to p) map to the faces of the slice by intersection with the
/// hyperplane — pt v itself to the empty face — and this map is a
/// rank-preserving order isomorphism.
/// pre: p compact, v a vertex of p, pdim(p) ≥ 2.
inline VertexFigure vertex_figure(const Poly& p, const Vector& v) {
    if (!compact(p)) throw UsageError("vertex_figure: unbounded polyhedron");
    if (pdim(p) < 2) throw UsageError("vertex_figure: rank below 2");
    const std::vector<Vector>& verts = vertex_set(p);
    if (std::find(verts.begin(), verts.end(), v) == verts.end())
        throw UsageError("vertex_figure: not a vertex");

    std::vector<Vector> others;
    for (const Vector& w : verts)
        if (w != v) others.push_back(w);

    // A vertex lies outside the hull of the other vertices, so a separating
    // halfspace exists: normal·v < offset ≤ normal·w. Moving the offset to
    // the midpoint of the gap makes both sides strict.
    const auto sep = separation(p.ambient(), others, v);
    if (!sep) throw InternalError("vertex_figure: vertex inside the hull of the rest");
    const Rational at_v = dot(sep->normal, v);
    Rational nearest = dot(sep->normal, others.front());
    for (const Vector& w : others) nearest = std::min(nearest, dot(sep->normal, w));

    VertexFigure out;
    out.plane = LinRel{sep->normal, (at_v + nearest) / 2};
    out.sliced = intersect(p, hp(out.plane));

    const FaceLattice whole = build_lattice(p);
    const std::set<std::size_t> key = active_set(whole.base, pt(v));
    std::size_t at = whole.size();
    for (std::size_t f = 1; f < whole.size(); ++f)
        if (whole.faces[f].rank == 1 && whole.faces[f].active == key) at = f;
    if (at == whole.size()) throw InternalError("vertex_figure: vertex face not in the lattice");

    out.at_vertex = interval(whole, at, whole.top());
    out.figure = build_lattice(out.sliced);

    std::map<std::set<std::size_t>, std::size_t> lookup;
    for (std::size_t g = 1; g < out.figure.size(); ++g)
        lookup.emplace(out.figure.faces[g].active, g);

    for (const Face& face : out.at_vertex.faces) {
        const Poly cut = intersect(face.as_poly, hp(out.plane));
        if (is_empty(cut)) {
            out.image.push_back(out.figure.bottom());
            continue;
        }
        const auto hit = lookup.find(active_set(out.figure.base, cut));
        if (hit == lookup.end())
            throw InternalError("vertex_figure: sliced face missing from the figure");
        out.image.push_back(hit->second);
    }
    return out;
}

/// True iff the recorded correspondence is a bijection that preserves rank
/// and order in both directions.
inline bool order_isomorphic(const VertexFigure& vf) {
    const std::size_t n = vf.at_vertex.size();
    if (vf.figure.size() != n || vf.image.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t g = vf.image[i];
        if (g >= n || hit[g]) return false;
        hit[g] = true;
        if (vf.at_vertex.faces[i].rank != vf.figure.faces[g].rank) return false;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (vf.at_vertex.leq[a][b] != vf.figure.leq[vf.image[a]][vf.image[b]]) return false;
    return true;
}

}  // namespace facekit
