#include <catch2/catch_amalgamated.hpp>

#include <facekit/poly.hpp>

#include "support/fixtures.hpp"
#include "support/random_gen.hpp"

using namespace facekit;
using namespace facekit::testing;

TEST_CASE("constructors: halfspace, hyperplane, empty, whole, point") {
    const Poly h = hs(LinRel{vec2(1, 0), Rational(2)});
    CHECK(member(h, vec2(3, 7)));
    CHECK_FALSE(member(h, vec2(1, 7)));

    const Poly plane = hp(LinRel{vec2(1, 1), Rational(2)});
    CHECK(member(plane, vec2(1, 1)));
    CHECK_FALSE(member(plane, vec2(1, 2)));

    CHECK(is_empty(poly0(2)));
    CHECK_FALSE(is_empty(polyT(2)));
    CHECK_FALSE(is_empty(polyT(0)));  // the one-point space of empty tuples
    CHECK(member(polyT(0), Vector{}));

    const Poly dot_poly = pt(vec2(3, -1));
    REQUIRE(dot_poly.rep().rows.size() == 4);
    CHECK(member(dot_poly, vec2(3, -1)));
    CHECK_FALSE(member(dot_poly, vec2(3, 0)));
    CHECK(set_equal(dot_poly, pt(vec2(3, -1))));
}

TEST_CASE("bases normalize, deduplicate and keep first-appearance order") {
    const std::vector<LinRel> rows = {
        LinRel{vec2(2, 4), Rational(6)},    // -> (1,2) >= 3
        LinRel{vec2(1, 2), Rational(3)},    // duplicate after normalization
        LinRel{vec2(-1, -2), Rational(-3)}, // *not* a duplicate: opposite side
        LinRel{Vector{Rational(1, 2), Rational(0)}, Rational(5, 2)},  // -> (1,0) >= 5
    };
    const Base base = Base::of_rows(2, rows);
    REQUIRE(base.size() == 3);
    CHECK(base[0] == LinRel{vec2(1, 2), Rational(3)});
    CHECK(base[1] == LinRel{vec2(-1, -2), Rational(-3)});
    CHECK(base[2] == LinRel{vec2(1, 0), Rational(5)});
}

TEST_CASE("poly_eq tightens the named rows") {
    const Base base = Base::of_rows(2, pentagon().rows);
    const Poly edge = poly_eq(base, {0});
    CHECK(member(edge, vec2(2, 1)));   // both endpoints of the row-0 edge
    CHECK(member(edge, vec2(1, 3)));
    CHECK_FALSE(member(edge, vec2(4, 4)));
    CHECK(subset(edge, poly_of_base(base)));

    const Poly vertex = poly_eq(base, {0, 4});
    CHECK(set_equal(vertex, pt(vec2(2, 1))));
    CHECK_THROWS_AS(poly_eq(base, {17}), UsageError);
}

TEST_CASE("set semantics ignore representation differences") {
    const Poly p = Poly(pentagon());
    HPoly padded = pentagon();
    padded.rows.push_back(LinRel{vec2(1, 0), Rational(0)});  // implied
    const Poly q = Poly(padded);
    CHECK(set_equal(p, q));
    CHECK(subset(p, q));
    CHECK(subset(q, p));
    CHECK_FALSE(set_equal(p, Poly(square())));

    CHECK(set_equal(poly0(2), Poly(HPoly{2, {LinRel{vec2(1, 0), Rational(1)},
                                             LinRel{vec2(-1, 0), Rational(0)}}})));
}

TEST_CASE("intersection is exact set intersection") {
    const Poly p = Poly(pentagon());
    const Poly box = Poly(square());
    CHECK(is_empty(intersect(p, box)));  // the pentagon floats above the unit square

    const Poly halves = intersect(hs(LinRel{vec2(1, 0), Rational(0)}),
                                  hs(LinRel{vec2(-1, 0), Rational(0)}));
    CHECK(set_equal(halves, hp(LinRel{vec2(1, 0), Rational(0)})));
    CHECK_THROWS_AS(intersect(p, polyT(3)), UsageError);
}

TEST_CASE("linear images: shadows of the pentagon and the cube") {
    // First coordinate of the pentagon ranges over [1,8].
    Matrix first(1, 2);
    first(0, 0) = 1;
    const Poly range = map_poly(first, Poly(pentagon()));
    const Poly interval(HPoly{1, {LinRel{Vector{Rational(1)}, Rational(1)},
                                  LinRel{Vector{Rational(-1)}, Rational(-8)}}});
    CHECK(set_equal(range, interval));

    // Sum of cube coordinates ranges over [0,3].
    Matrix total(1, 3);
    total(0, 0) = total(0, 1) = total(0, 2) = 1;
    const Poly sums = map_poly(total, Poly(cube3()));
    CHECK(member(sums, Vector{Rational(3)}));
    CHECK(member(sums, Vector{Rational(0)}));
    CHECK_FALSE(member(sums, Vector{Rational(7, 2)}));

    // The identity map is a set-level no-op.
    Matrix eye(2, 2);
    eye(0, 0) = eye(1, 1) = 1;
    CHECK(set_equal(map_poly(eye, Poly(pentagon())), Poly(pentagon())));

    // Mapping the empty set gives the empty set.
    CHECK(is_empty(map_poly(eye, poly0(2))));
}

TEST_CASE("hulls of point sets: squares, segments, degenerate inputs") {
    const Poly unit = conv(2, {vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1)});
    CHECK(set_equal(unit, Poly(square())));

    // A redundant interior generator changes nothing.
    const Poly padded = conv(2, {vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1),
                                 Vector{Rational(1, 2), Rational(1, 2)}});
    CHECK(set_equal(padded, unit));

    CHECK(is_empty(conv(2, {})));
    CHECK(set_equal(conv(2, {vec2(4, 5)}), pt(vec2(4, 5))));

    // Collinear points collapse to the extreme segment.
    const Poly seg = conv(2, {vec2(0, 0), vec2(2, 2), vec2(1, 1)});
    CHECK(set_equal(seg, segm(vec2(0, 0), vec2(2, 2))));
    CHECK(member(seg, Vector{Rational(1, 3), Rational(1, 3)}));
    CHECK_FALSE(member(seg, vec2(3, 3)));
    CHECK_FALSE(member(seg, vec2(1, 0)));

    CHECK(set_equal(segm(vec2(1, 1), vec2(1, 1)), pt(vec2(1, 1))));
}

TEST_CASE("hull membership produces convex weights, outside points none") {
    const std::vector<Vector> corners = {vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1)};
    const Vector inner{Rational(1, 3), Rational(2, 3)};
    const auto witness = conv_witness(2, corners, inner);
    REQUIRE(witness);
    Rational total = 0;
    Vector rebuilt = zero_vector(2);
    for (std::size_t k = 0; k < witness->support.size(); ++k) {
        CHECK(witness->weights[k] > 0);
        total += witness->weights[k];
        rebuilt = add(rebuilt, scale(witness->weights[k], corners[witness->support[k]]));
    }
    CHECK(total == 1);
    CHECK(rebuilt == inner);

    CHECK_FALSE(conv_witness(2, corners, vec2(2, 0)));
    CHECK_FALSE(conv_witness(2, {}, vec2(0, 0)));
    CHECK(conv_witness(2, {vec2(5, 5)}, vec2(5, 5)));
}

TEST_CASE("separation certificates strictly cut the point off the hull") {
    const std::vector<Vector> corners = {vec2(0, 0), vec2(1, 0), vec2(1, 1), vec2(0, 1)};
    const auto e = separation(2, corners, vec2(3, 0));
    REQUIRE(e);
    CHECK(dot(e->normal, vec2(3, 0)) < e->offset);
    for (const Vector& v : corners) CHECK(dot(e->normal, v) >= e->offset);

    CHECK_FALSE(separation(2, corners, Vector{Rational(1, 2), Rational(1, 2)}));
    CHECK_FALSE(separation(2, corners, vec2(0, 0)));  // boundary is inside

    const auto empty_case = separation(2, {}, vec2(0, 0));
    REQUIRE(empty_case);  // everything is separated from the hull of nothing
    CHECK(dot(empty_case->normal, vec2(0, 0)) < empty_case->offset);
}

TEST_CASE("random hulls: membership agrees with the weight program") {
    testing::Rng rng(161803);
    for (int round = 0; round < 15; ++round) {
        const std::size_t dim = static_cast<std::size_t>(rng.integer(1, 3));
        const auto points = rng.point_cloud(static_cast<std::size_t>(rng.integer(1, 5)), dim, 3);
        const Poly hull_poly = conv(dim, points);
        for (int probe = 0; probe < 8; ++probe) {
            const Vector x = rng.vector(dim, -4, 4);
            const bool inside = member(hull_poly, x);
            CHECK(inside == bool(conv_witness(dim, points, x)));
            CHECK(inside == !separation(dim, points, x));
        }
        for (const Vector& v : points) CHECK(member(hull_poly, v));
    }
}

TEST_CASE("boundedness and compactness") {
    CHECK(compact(Poly(pentagon())));
    CHECK(compact(Poly(square())));
    CHECK(compact(poly0(3)));
    CHECK(compact(polyT(0)));
    CHECK_FALSE(compact(polyT(2)));
    CHECK_FALSE(compact(hs(LinRel{vec2(1, 0), Rational(0)})));

    const Poly quadrant = intersect(hs(LinRel{vec2(1, 0), Rational(0)}),
                                    hs(LinRel{vec2(0, 1), Rational(0)}));
    CHECK_FALSE(compact(quadrant));
    CHECK(bounded_below(quadrant, vec2(1, 1)));
    CHECK_FALSE(bounded_below(quadrant, vec2(-1, 0)));
    CHECK(bounded_below(poly0(2), vec2(-1, 0)));  // empty is bounded every way
}

TEST_CASE("hull round-trips: conv of a compact polyhedron's sample points") {
    // conv is monotone and stays inside the source region.
    testing::Rng rng(271828);
    const Poly p = Poly(pentagon());
    std::vector<Vector> inside;
    for (const Vector& v : pentagon_vertices()) inside.push_back(v);
    inside.push_back(vec2(4, 4));
    const Poly back = conv(2, inside);
    CHECK(set_equal(back, p));  // all five vertices present -> full pentagon

    std::vector<Vector> some = {pentagon_vertices()[0], pentagon_vertices()[2], vec2(4, 4)};
    CHECK(subset(conv(2, some), p));
    (void)rng;
}
