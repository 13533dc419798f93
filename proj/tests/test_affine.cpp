#include <catch2/catch_amalgamated.hpp>

#include <facekit/affine.hpp>

#include "support/fixtures.hpp"
#include "support/random_gen.hpp"

using namespace facekit;
using namespace facekit::testing;

TEST_CASE("shifted dimension: empty 0, point 1, line 2, plane 3") {
    CHECK(AffineSpace::empty(3).adim() == 0);
    CHECK(AffineSpace::point(vec3(1, 2, 3)).adim() == 1);
    CHECK(AffineSpace::flat(vec3(0, 0, 0), {vec3(1, 1, 0)}).adim() == 2);
    CHECK(AffineSpace::flat(vec3(0, 0, 1), {vec3(1, 0, 0), vec3(0, 1, 0)}).adim() == 3);
    CHECK(AffineSpace::whole(3).adim() == 4);
    CHECK(AffineSpace::whole(0).adim() == 1);  // a single point: the empty tuple
}

TEST_CASE("equal flats written differently are structurally identical") {
    // Same line through (1,1) and (3,2), described three ways.
    const auto a = AffineSpace::flat(vec2(1, 1), {vec2(2, 1)});
    const auto b = AffineSpace::flat(vec2(3, 2), {vec2(-4, -2)});
    const auto c = AffineSpace::flat(vec2(5, 3), {vec2(6, 3)});
    CHECK(a == b);
    CHECK(b == c);

    const auto plane1 = AffineSpace::flat(vec3(0, 0, 5), {vec3(1, 0, 0), vec3(1, 1, 0)});
    const auto plane2 = AffineSpace::flat(vec3(2, 3, 5), {vec3(0, 1, 0), vec3(1, 0, 0)});
    CHECK(plane1 == plane2);
    CHECK(plane1 != AffineSpace::flat(vec3(0, 0, 4), {vec3(1, 0, 0), vec3(0, 1, 0)}));
}

TEST_CASE("dependent direction lists collapse to a basis") {
    const auto s = AffineSpace::flat(vec3(1, 1, 1), {vec3(1, 0, 0), vec3(2, 0, 0), vec3(1, 1, 0)});
    CHECK(s.adim() == 3);
    CHECK(s.directions().size() == 2);
}

TEST_CASE("affine_of_rels solves equation systems") {
    // x + y = 4, x - y = 2 -> the point (3,1)
    const auto point = affine_of_rels(2, {LinRel{vec2(1, 1), Rational(4)}, LinRel{vec2(1, -1), Rational(2)}});
    CHECK(point == AffineSpace::point(vec2(3, 1)));

    // one equation in the plane -> a line
    const auto line = affine_of_rels(2, {LinRel{vec2(1, 1), Rational(2)}});
    CHECK(line.adim() == 2);
    CHECK(member(line, vec2(2, 0)));
    CHECK(member(line, vec2(0, 2)));
    CHECK_FALSE(member(line, vec2(0, 0)));

    // clashing equations -> empty
    const auto none = affine_of_rels(2, {LinRel{vec2(1, 0), Rational(0)}, LinRel{vec2(1, 0), Rational(1)}});
    CHECK(none.is_empty());
    CHECK(none.adim() == 0);

    // no equations -> the whole space
    CHECK(affine_of_rels(2, {}) == AffineSpace::whole(2));
}

TEST_CASE("membership and inclusion") {
    const auto line = AffineSpace::flat(vec3(0, 0, 1), {vec3(1, 1, 0)});
    const auto plane = AffineSpace::flat(vec3(0, 0, 1), {vec3(1, 0, 0), vec3(0, 1, 0)});
    CHECK(member(line, vec3(2, 2, 1)));
    CHECK_FALSE(member(line, vec3(2, 2, 0)));
    CHECK(subset(line, plane));
    CHECK_FALSE(subset(plane, line));
    CHECK(subset(AffineSpace::empty(3), line));
    CHECK_FALSE(subset(line, AffineSpace::empty(3)));
    CHECK(subset(line, line));
    CHECK(subset(plane, AffineSpace::whole(3)));
}

TEST_CASE("slicing a flat with a hyperplane") {
    const auto plane = AffineSpace::whole(2);

    // whole plane cut by x + y = 2
    const auto line = slice_with_hyperplane(plane, LinRel{vec2(1, 1), Rational(2)});
    CHECK(line == affine_of_rels(2, {LinRel{vec2(1, 1), Rational(2)}}));

    // cutting a line with a parallel hyperplane: unchanged or empty
    CHECK(slice_with_hyperplane(line, LinRel{vec2(1, 1), Rational(2)}) == line);
    CHECK(slice_with_hyperplane(line, LinRel{vec2(1, 1), Rational(3)}).is_empty());

    // transversal cut gives a point
    const auto pt = slice_with_hyperplane(line, LinRel{vec2(1, -1), Rational(0)});
    CHECK(pt == AffineSpace::point(vec2(1, 1)));

    // empty stays empty
    CHECK(slice_with_hyperplane(AffineSpace::empty(2), LinRel{vec2(1, 0), Rational(0)}).is_empty());
}

TEST_CASE("slicing agrees with re-solving the enlarged system") {
    testing::Rng rng(311216);
    for (int round = 0; round < 40; ++round) {
        const std::size_t dim = static_cast<std::size_t>(rng.integer(1, 4));
        std::vector<LinRel> rels;
        const long count = rng.integer(0, 3);
        for (long i = 0; i < count; ++i) rels.push_back({rng.vector(dim, -3, 3), rng.entry(-3, 3)});
        const LinRel cut{rng.vector(dim, -3, 3), rng.entry(-3, 3)};

        const AffineSpace direct = slice_with_hyperplane(affine_of_rels(dim, rels), cut);
        std::vector<LinRel> enlarged = rels;
        enlarged.push_back(cut);
        CHECK(direct == affine_of_rels(dim, enlarged));
    }
}

TEST_CASE("canonical origin makes equality a pure structural check") {
    testing::Rng rng(90125);
    for (int round = 0; round < 30; ++round) {
        const std::size_t dim = static_cast<std::size_t>(rng.integer(1, 4));
        std::vector<Vector> dirs;
        const long count = rng.integer(0, 3);
        for (long i = 0; i < count; ++i) dirs.push_back(rng.vector(dim, -3, 3));
        const Vector origin = rng.vector(dim, -3, 3);
        const AffineSpace s = AffineSpace::flat(origin, dirs);

        // shift the origin by any combination of directions: same space
        Vector shifted = origin;
        for (const Vector& d : dirs) shifted = add(shifted, scale(rng.entry(-3, 3), d));
        CHECK(AffineSpace::flat(shifted, dirs) == s);
        CHECK(member(s, origin));
        CHECK(member(s, shifted));
    }
}
