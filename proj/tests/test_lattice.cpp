#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include <facekit/faces.hpp>
#include <facekit/lattice.hpp>
#include <facekit/poly.hpp>

#include "support/face_oracle.hpp"
#include "support/fixtures.hpp"

using namespace facekit;
using namespace facekit::testing;

namespace {

std::map<std::size_t, std::size_t> rank_profile(const FaceLattice& lat) {
    std::map<std::size_t, std::size_t> profile;
    for (const Face& f : lat.faces) ++profile[f.rank];
    return profile;
}

std::size_t find_by_active(const FaceLattice& lat, const std::set<std::size_t>& key) {
    for (std::size_t f = 1; f < lat.size(); ++f)
        if (lat.faces[f].active == key) return f;
    throw std::runtime_error("no face with that active set");
}

/// Square pyramid: four base corners and an apex over the center.
Poly pyramid() {
    return conv(3, {vec3(0, 0, 0), vec3(2, 0, 0), vec3(0, 2, 0), vec3(2, 2, 0),
                    Vector{Rational(1), Rational(1), Rational(2)}});
}

using Profile = std::map<std::size_t, std::size_t>;

}  // namespace

TEST_CASE("pentagon lattice: order, covers, and all four checkers") {
    const FaceLattice lat = build_lattice(Poly(pentagon()));
    REQUIRE(lat.size() == 12);
    CHECK(rank_profile(lat) == Profile{{0, 1}, {1, 5}, {2, 5}, {3, 1}});
    CHECK(lat.faces[lat.bottom()].rank == 0);
    CHECK(lat.faces[lat.top()].rank == 3);

    // bottom below everything, everything below top, order antisymmetric
    for (std::size_t f = 0; f < lat.size(); ++f) {
        CHECK(lat.leq[lat.bottom()][f]);
        CHECK(lat.leq[f][lat.top()]);
        CHECK(lat.leq[f][f]);
        for (std::size_t g = 0; g < lat.size(); ++g)
            if (f != g) CHECK_FALSE((lat.leq[f][g] && lat.leq[g][f]));
    }

    // covers: 5 vertices over bottom, 2 edges over each vertex, top over 5 edges
    CHECK(lat.hasse.size() == 20);
    for (const auto& [lo, hi] : lat.hasse) {
        CHECK(lat.leq[lo][hi]);
        CHECK(lat.faces[hi].rank == lat.faces[lo].rank + 1);
    }

    CHECK(check_graded(lat));
    CHECK(check_atomistic(lat));
    CHECK(check_coatomistic(lat));
    CHECK(check_diamond(lat));
}

TEST_CASE("segment lattice is the four-element double chain") {
    const FaceLattice lat = build_lattice(segm(vec2(0, 0), vec2(2, 2)));
    REQUIRE(lat.size() == 4);
    CHECK(rank_profile(lat) == Profile{{0, 1}, {1, 2}, {2, 1}});
    CHECK(lat.hasse.size() == 4);

    const std::size_t a = 1, b = 2;  // the two endpoint faces, order irrelevant
    CHECK(meet(lat, a, b) == lat.bottom());
    CHECK(join(lat, a, b) == lat.top());
    CHECK(check_graded(lat));
    CHECK(check_atomistic(lat));
    CHECK(check_coatomistic(lat));
    CHECK(check_diamond(lat));
}

TEST_CASE("degenerate and unbounded lattices") {
    const FaceLattice dot_lat = build_lattice(pt(vec2(3, -1)));
    CHECK(dot_lat.size() == 2);
    CHECK(check_graded(dot_lat));
    CHECK(check_atomistic(dot_lat));

    const FaceLattice nothing = build_lattice(poly0(2));
    CHECK(nothing.size() == 1);
    CHECK(nothing.bottom() == nothing.top());
    CHECK(check_graded(nothing));
    CHECK(check_coatomistic(nothing));

    // The whole plane: empty face straight to rank 3 — not graded.
    const FaceLattice plane_lat = build_lattice(polyT(2));
    CHECK(plane_lat.size() == 2);
    CHECK_FALSE(check_graded(plane_lat));
    CHECK_THROWS_AS(check_atomistic(plane_lat), UsageError);

    // A line: same jump, two elements.
    CHECK_FALSE(check_graded(build_lattice(hp(LinRel{vec2(1, 1), Rational(2)}))));

    // A halfplane: graded fails (bottom to boundary line skips rank 1) and
    // the empty face is not a meet of facets.
    const FaceLattice half = build_lattice(hs(LinRel{vec2(1, 0), Rational(0)}));
    CHECK(half.size() == 3);
    CHECK_FALSE(check_graded(half));
    CHECK_FALSE(check_coatomistic(half));
    CHECK_THROWS_AS(check_atomistic(half), UsageError);
}

TEST_CASE("cube lattice: meets are intersections, joins reach up") {
    const Poly box = Poly(cube3());
    const FaceLattice lat = build_lattice(box);
    REQUIRE(lat.size() == 28);

    // Rows of cube3 in base order: x>=0, -x>=-1, y>=0, -y>=-1, z>=0, -z>=-1.
    const std::size_t facet_x0 = find_by_active(lat, {0});
    const std::size_t facet_y0 = find_by_active(lat, {2});
    const auto shared = meet(lat, facet_x0, facet_y0);
    REQUIRE(shared);
    CHECK(lat.faces[*shared].active == std::set<std::size_t>{0, 2});
    CHECK(lat.faces[*shared].rank == 2);  // the edge x = y = 0
    CHECK(set_equal(lat.faces[*shared].as_poly,
                    segm(vec3(0, 0, 0), vec3(0, 0, 1))));

    const std::size_t origin = find_by_active(lat, {0, 2, 4});
    const std::size_t opposite = find_by_active(lat, {1, 3, 5});
    CHECK(join(lat, origin, opposite) == lat.top());

    CHECK(check_graded(lat));
    CHECK(check_atomistic(lat));
    CHECK(check_coatomistic(lat));
    CHECK(check_diamond(lat));
}

TEST_CASE("lattice axioms hold exhaustively on the pentagon") {
    const FaceLattice lat = build_lattice(Poly(pentagon()));
    const std::size_t n = lat.size();
    for (std::size_t a = 0; a < n; ++a) {
        CHECK(meet(lat, a, a) == a);
        CHECK(join(lat, a, a) == a);
        CHECK(meet(lat, a, lat.top()) == a);
        CHECK(join(lat, a, lat.bottom()) == a);
        for (std::size_t b = 0; b < n; ++b) {
            const auto low = meet(lat, a, b);
            const auto high = join(lat, a, b);
            REQUIRE(low);
            REQUIRE(high);
            CHECK(meet(lat, b, a) == low);
            CHECK(join(lat, b, a) == high);
            // absorption
            CHECK(meet(lat, a, *high) == a);
            CHECK(join(lat, a, *low) == a);
            // the meet is the set intersection of the faces
            CHECK(set_equal(lat.faces[*low].as_poly,
                            intersect(lat.faces[a].as_poly, lat.faces[b].as_poly)));
        }
    }
    // associativity on a sample of triples (full n^3 adds nothing here)
    for (std::size_t a = 0; a < n; a += 2)
        for (std::size_t b = 1; b < n; b += 3)
            for (std::size_t c = 0; c < n; c += 3) {
                CHECK(join(lat, *join(lat, a, b), c) == join(lat, a, *join(lat, b, c)));
                CHECK(meet(lat, *meet(lat, a, b), c) == meet(lat, a, *meet(lat, b, c)));
            }
}

TEST_CASE("intervals are induced sublattices re-ranked from zero") {
    const FaceLattice lat = build_lattice(Poly(pentagon()));

    const FaceLattice all = interval(lat, lat.bottom(), lat.top());
    CHECK(all.size() == lat.size());
    CHECK(all.hasse.size() == lat.hasse.size());
    CHECK(rank_profile(all) == rank_profile(lat));

    const std::size_t vertex = find_by_active(lat, {0, 4});  // the point (2,1)
    const FaceLattice single = interval(lat, vertex, vertex);
    CHECK(single.size() == 1);
    CHECK(single.faces[0].rank == 0);
    CHECK(single.hasse.empty());

    // Above one vertex: the vertex, its two edges, the pentagon — a diamond.
    const FaceLattice upper = interval(lat, vertex, lat.top());
    CHECK(upper.size() == 4);
    CHECK(rank_profile(upper) == Profile{{0, 1}, {1, 2}, {2, 1}});
    CHECK(check_graded(upper));
    CHECK(check_diamond(upper));

    const std::size_t other = find_by_active(lat, {1, 2});
    CHECK_THROWS_AS(interval(lat, vertex, other), UsageError);
    CHECK_THROWS_AS(interval(lat, vertex, lat.size() + 3), UsageError);
}

TEST_CASE("diamond property on the classic solids") {
    CHECK(check_diamond(build_lattice(Poly(cube3()))));
    CHECK(check_diamond(build_lattice(Poly(octahedron()))));
    CHECK(check_diamond(build_lattice(pyramid())));

    const FaceLattice pyr = build_lattice(pyramid());
    CHECK(rank_profile(pyr) == Profile{{0, 1}, {1, 5}, {2, 8}, {3, 5}, {4, 1}});
    CHECK(check_graded(pyr));
    CHECK(check_atomistic(pyr));
    CHECK(check_coatomistic(pyr));
}

TEST_CASE("hand-built broken lattices fail the graded check") {
    FaceLattice chain;
    chain.base = Base::of_rows(1, {});
    chain.compact_p = false;
    chain.faces = {Face{poly0(1), {}, 0}, Face{polyT(1), {}, 1}, Face{polyT(1), {}, 3}};
    chain.leq = {{true, true, true}, {false, true, true}, {false, false, true}};
    chain.hasse = {{0, 1}, {1, 2}};
    CHECK_FALSE(check_graded(chain));  // the upper cover jumps two ranks
    CHECK_THROWS_AS(check_atomistic(chain), UsageError);

    FaceLattice tangled = chain;
    tangled.faces[1].rank = 2;
    tangled.faces[2].rank = 1;  // order and rank now disagree
    CHECK_FALSE(check_graded(tangled));
}

TEST_CASE("seven-point solid: face census confirmed against the oracle") {
    const Poly solid = conv(3, seven_point_solid());
    const FaceCache& cache = face_set(solid);
    CHECK(closure_face_keys(solid) == oracle_face_keys(cache.base));

    const FaceLattice lat = build_lattice(solid);
    REQUIRE(lat.size() == 30);
    CHECK(rank_profile(lat) == Profile{{0, 1}, {1, 7}, {2, 13}, {3, 8}, {4, 1}});

    CHECK(check_graded(lat));
    CHECK(check_atomistic(lat));
    CHECK(check_coatomistic(lat));
    CHECK(check_diamond(lat));

    // Euler relation, geometric dimension 3: v - e + f = 2.
    const auto profile = rank_profile(lat);
    CHECK(profile.at(1) - profile.at(2) + profile.at(3) == 2);

    // Every (vertex, facet) interval with two ranks between is a diamond;
    // rebuilt through interval() rather than the checker.
    for (std::size_t a = 0; a < lat.size(); ++a)
        for (std::size_t b = 0; b < lat.size(); ++b) {
            if (!lat.leq[a][b] || lat.faces[b].rank != lat.faces[a].rank + 2) continue;
            const FaceLattice mid = interval(lat, a, b);
            CHECK(mid.size() == 4);
            CHECK(rank_profile(mid) == Profile{{0, 1}, {1, 2}, {2, 1}});
        }
}

TEST_CASE("euler relation for the cube") {
    const auto profile = rank_profile(build_lattice(Poly(cube3())));
    CHECK(profile.at(1) == 8);
    CHECK(profile.at(2) == 12);
    CHECK(profile.at(3) == 6);
    CHECK(profile.at(1) - profile.at(2) + profile.at(3) == 2);
}

TEST_CASE("vertex figures slice one vertex into a lower-dimensional face") {
    // Cube at the origin: three incident edges and facets -> a triangle.
    const Poly box = Poly(cube3());
    const VertexFigure fig = vertex_figure(box, vec3(0, 0, 0));
    CHECK(dot(fig.plane.normal, vec3(0, 0, 0)) < fig.plane.offset);
    for (const Vector& w : vertex_set(box))
        if (w != vec3(0, 0, 0)) CHECK(dot(fig.plane.normal, w) > fig.plane.offset);

    CHECK(pdim(fig.sliced) == pdim(box) - 1);
    CHECK(rank_profile(fig.figure) == Profile{{0, 1}, {1, 3}, {2, 3}, {3, 1}});
    CHECK(rank_profile(fig.at_vertex) == rank_profile(fig.figure));
    CHECK(order_isomorphic(fig));

    // Pentagon at a vertex: two incident edges -> a segment.
    const VertexFigure flat = vertex_figure(Poly(pentagon()), vec2(2, 1));
    CHECK(rank_profile(flat.figure) == Profile{{0, 1}, {1, 2}, {2, 1}});
    CHECK(order_isomorphic(flat));

    // Segment at an endpoint -> a single point.
    const VertexFigure end = vertex_figure(segm(vec2(0, 0), vec2(2, 2)), vec2(0, 0));
    CHECK(rank_profile(end.figure) == Profile{{0, 1}, {1, 1}});
    CHECK(order_isomorphic(end));
    CHECK(pdim(end.sliced) == 1);

    CHECK_THROWS_AS(vertex_figure(box, vec3(2, 0, 0)), UsageError);       // not a vertex
    CHECK_THROWS_AS(vertex_figure(polyT(2), vec2(0, 0)), UsageError);     // unbounded
    CHECK_THROWS_AS(vertex_figure(pt(vec2(1, 1)), vec2(1, 1)), UsageError);  // rank 1
}

TEST_CASE("vertex figure of the seven-point solid at its apex") {
    const Poly solid = conv(3, seven_point_solid());
    const VertexFigure fig = vertex_figure(solid, vec3(3, 1, 1));
    CHECK(rank_profile(fig.figure) == Profile{{0, 1}, {1, 4}, {2, 4}, {3, 1}});
    CHECK(rank_profile(fig.at_vertex) == rank_profile(fig.figure));
    CHECK(order_isomorphic(fig));
    CHECK(check_diamond(fig.figure));
}
