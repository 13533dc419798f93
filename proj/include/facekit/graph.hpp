#pragma once

// The vertex-edge graph of a polytope and walks on it. Adjacency comes from
// the rank-2 faces (each one is a segment between two vertices); on top of
// that sit an abstract simplex that pivots along objective-improving edges,
// connecting paths routed through an optimal face, the constructive
// connectivity argument (deleting any ambient-1 vertices leaves the graph
// connected), and its exhaustive brute-force validation.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "faces.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "rational.hpp"

namespace facekit {

/// The adjacency graph: the vertices in lexicographic order, plus one index
/// pair (smaller first) per edge of the polytope.
struct VertexGraph {
    std::vector<Vector> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted

    std::optional<std::size_t> find(const Vector& v) const {
        const auto at = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (at == vertices.end() || *at != v) return std::nullopt;
        return static_cast<std::size_t>(at - vertices.begin());
    }

    std::size_t index_of(const Vector& v) const {
        const auto at = find(v);
        if (!at) throw UsageError("vertex graph: not a vertex");
        return *at;
    }

    bool adjacent(std::size_t a, std::size_t b) const {
        if (a == b) return false;
        const std::pair<std::size_t, std::size_t> key{std::min(a, b), std::max(a, b)};
        return std::binary_search(edges.begin(), edges.end(), key);
    }

    // Ascending index order, which is ascending lexicographic order.
    std::vector<std::size_t> neighbors(std::size_t at) const {
        std::vector<std::size_t> out;
        for (const auto& [a, b] : edges) {
            if (a == at) out.push_back(b);
            if (b == at) out.push_back(a);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

inline std::shared_ptr<const VertexGraph> build_vertex_graph(const Poly& p) {
    auto g = std::make_shared<VertexGraph>();
    g->vertices = vertex_set(p);
    for (const Face& face : face_set(p).faces) {
        if (face.rank != 2) continue;
        const auto [x, y] = dim2_segment(face.as_poly);
        const auto a = g->find(x);
        const auto b = g->find(y);
        if (!a || !b) throw InternalError("vertex graph: edge endpoint is not a vertex");
        g->edges.emplace_back(std::min(*a, *b), std::max(*a, *b));
    }
    std::sort(g->edges.begin(), g->edges.end());
    return g;
}

}  // namespace detail

/// The graph of p, memoized. pre: p compact.
inline const VertexGraph& adjacency_graph(const Poly& p) {
    if (!compact(p)) throw UsageError("adjacency_graph: unbounded polyhedron");
    auto& memo = p.memo();
    if (!memo.graph) memo.graph = detail::build_vertex_graph(p);
    return *memo.graph;
}

/// A walk: the starting vertex plus the successive steps. Valid when every
/// consecutive pair is an edge of the governing graph.
struct Path {
    Vector start;
    std::vector<Vector> steps;

    const Vector& last() const { return steps.empty() ? start : steps.back(); }
};

inline bool valid_path(const VertexGraph& g, const Path& path) {
    const Vector* prev = &path.start;
    for (const Vector& next : path.steps) {
        const auto a = g.find(*prev);
        const auto b = g.find(next);
        if (!a || !b || !g.adjacent(*a, *b)) return false;
        prev = &next;
    }
    return true;
}

/// One abstract-simplex pivot from the vertex v: the lexicographically
/// smallest neighbor with strictly smaller objective c, or nothing when no
/// neighbor improves — and then v minimizes c over all of p, not just its
/// neighborhood. pre: p compact, v a vertex.
inline std::optional<Vector> improve_step(const Poly& p, const Vector& c, const Vector& v) {
    const VertexGraph& g = adjacency_graph(p);
    const Rational here = dot(c, v);
    for (std::size_t w : g.neighbors(g.index_of(v)))
        if (dot(c, g.vertices[w]) < here) return g.vertices[w];
    return std::nullopt;
}

/// Pivot until no edge improves: a strictly c-decreasing walk from v to a
/// vertex of the optimal face. Strict decrease over finitely many vertices
/// forces termination in fewer steps than there are vertices.
inline Path improve_path(const Poly& p, const Vector& c, const Vector& v) {
    const VertexGraph& g = adjacency_graph(p);
    Path out{v, {}};
    std::optional<Vector> next = improve_step(p, c, v);
    while (next) {
        out.steps.push_back(*next);
        if (out.steps.size() >= g.vertices.size())
            throw InternalError("improve_path: walk longer than the vertex count");
        next = improve_step(p, c, out.steps.back());
    }
    return out;
}

/// A path between two vertices of a polytope: walk v down the objective
/// that w alone minimizes — the sum of the normals of w's tight rows, whose
/// optimal face is exactly pt(w). pre: p compact, v and w vertices.
inline Path connected_path(const Poly& p, const Vector& v, const Vector& w) {
    const VertexGraph& g = adjacency_graph(p);
    g.index_of(v);
    g.index_of(w);
    const FaceCache& cache = face_set(p);
    Vector c = zero_vector(p.ambient());
    for (std::size_t e : active_set(cache.base, pt(w))) c = add(c, cache.base[e].normal);
    Path out = improve_path(p, c, v);
    if (out.last() != w) throw InternalError("connected_path: walk missed its target");
    return out;
}

/// A hyperplane through every point of W: w·c = α for each w is a single
/// homogeneous system in (c, α), and any nonzero kernel vector works since
/// c = 0 forces α = 0. Taken as the first reduced-echelon kernel basis
/// vector for determinism. pre: 0 < |W| ≤ dim as a set.
inline LinRel subset_hp(std::size_t dim, const std::vector<Vector>& points) {
    const std::set<Vector> distinct(points.begin(), points.end());
    if (distinct.empty() || distinct.size() > dim)
        throw UsageError("subset_hp: need between 1 and dim points");
    Matrix m(distinct.size(), dim + 1);
    std::size_t row = 0;
    for (const Vector& w : distinct) {
        if (w.size() != dim) throw UsageError("subset_hp: dimension mismatch");
        for (std::size_t j = 0; j < dim; ++j) m(row, j) = w[j];
        m(row, dim) = -1;
        ++row;
    }
    for (const Vector& k : kernel_basis(std::move(m))) {
        const Vector normal(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(dim));
        if (!is_zero(normal)) return LinRel{normal, k[dim]};
    }
    throw InternalError("subset_hp: no proper hyperplane in the kernel");
}

/// A path from v to w through the graph minus the removed vertices. Put a
/// hyperplane through v and everything removed, orient it so part of p lies
/// strictly under it, slide v and w down to the optimal face of its normal
/// (the first pivot already leaves the hyperplane, and the face misses it
/// entirely), connect the two landing points inside that face, and splice
/// the three walks.
/// pre: p compact and full-dimensional; removed is a set of exactly
/// ambient-1 vertices; v and w are vertices outside it.
inline Path balinski_path(const Poly& p, const std::vector<Vector>& removed,
                          const Vector& v, const Vector& w) {
    if (!compact(p)) throw UsageError("balinski_path: unbounded polyhedron");
    const std::size_t n = p.ambient();
    if (pdim(p) != n + 1) throw UsageError("balinski_path: not full-dimensional");
    const VertexGraph& g = adjacency_graph(p);
    g.index_of(v);
    g.index_of(w);
    const std::set<Vector> gone(removed.begin(), removed.end());
    for (const Vector& u : gone)
        if (!g.find(u)) throw UsageError("balinski_path: removed point is not a vertex");
    if (gone.count(v) || gone.count(w)) throw UsageError("balinski_path: endpoint removed");
    if (n == 0 || gone.size() != n - 1)
        throw UsageError("balinski_path: removed count is not ambient-1");
    if (gone.empty()) return connected_path(p, v, w);  // dimension 1: nothing to avoid

    std::vector<Vector> carrier(gone.begin(), gone.end());
    carrier.push_back(v);
    LinRel e = subset_hp(n, carrier);

    // Orientation: w's side decides; when w lies on the hyperplane too, any
    // vertex off it decides — one exists, since a full-dimensional polytope
    // cannot fit inside a hyperplane.
    const Rational at_w = dot(e.normal, w);
    if (at_w > e.offset) {
        e = LinRel{negate(e.normal), -e.offset};
    } else if (at_w == e.offset) {
        const Vector* z = nullptr;
        for (const Vector& u : g.vertices)
            if (dot(e.normal, u) != e.offset) {
                z = &u;
                break;
            }
        if (!z) throw InternalError("balinski_path: polytope inside the cutting hyperplane");
        if (dot(e.normal, *z) > e.offset) e = LinRel{negate(e.normal), -e.offset};
    }

    const Path p1 = improve_path(p, e.normal, v);
    const Path p2 = improve_path(p, e.normal, w);
    const Poly landing = argmin(p, e.normal);
    const Path p3 = connected_path(landing, p1.last(), p2.last());

    // v-walk down, across the optimal face, then the w-walk backwards.
    Path out{v, p1.steps};
    out.steps.insert(out.steps.end(), p3.steps.begin(), p3.steps.end());
    if (!p2.steps.empty()) {
        std::vector<Vector> back(p2.steps.begin(), p2.steps.end() - 1);
        std::reverse(back.begin(), back.end());
        back.push_back(w);
        out.steps.insert(out.steps.end(), back.begin(), back.end());
    }
    return out;
}

/// Exhaustive connectivity validation: after deleting any ambient-1 of the
/// vertices, everything left is still mutually reachable. pre: p compact
/// and full-dimensional.
inline bool n_connectivity_check(const Poly& p) {
    if (!compact(p)) throw UsageError("n_connectivity_check: unbounded polyhedron");
    const std::size_t n = p.ambient();
    if (pdim(p) != n + 1) throw UsageError("n_connectivity_check: not full-dimensional");
    if (n == 0) return true;  // a single vertex, nothing to remove
    const VertexGraph& g = adjacency_graph(p);
    const std::size_t count = g.vertices.size();
    const std::size_t k = n - 1;  // count ≥ n+1 vertices, so k + 2 ≤ count

    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
        std::vector<bool> dropped(count, false);
        for (std::size_t i : pick) dropped[i] = true;

        // Flood fill over the survivors from the first one.
        std::size_t source = 0;
        while (dropped[source]) ++source;
        std::vector<bool> seen(count, false);
        std::vector<std::size_t> frontier{source};
        seen[source] = true;
        std::size_t reached = 1;
        while (!frontier.empty()) {
            const std::size_t at = frontier.back();
            frontier.pop_back();
            for (std::size_t next : g.neighbors(at)) {
                if (dropped[next] || seen[next]) continue;
                seen[next] = true;
                ++reached;
                frontier.push_back(next);
            }
        }
        if (reached + k != count) return false;

        // Next k-combination of {0, ..., count-1}.
        std::size_t slot = k;
        while (slot > 0 && pick[slot - 1] == count - k + slot - 1) --slot;
        if (slot == 0) break;
        ++pick[slot - 1];
        for (std::size_t j = slot; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return true;
}

}  // namespace facekit
