#pragma once

// Shared geometric fixtures. Expected values hard-coded next to them were
// derived by hand (vertex coordinates from pairwise row intersections,
// projections by eliminating a variable on paper) or frozen from the
// brute-force oracles in this tree — never from the algorithms under test.

#include <cstddef>
#include <vector>

#include <facekit/hrep.hpp>
#include <facekit/linalg.hpp>

namespace facekit::testing {

inline Vector vec2(long a, long b) { return Vector{Rational(a), Rational(b)}; }
inline Vector vec3(long a, long b, long c) { return Vector{Rational(a), Rational(b), Rational(c)}; }

/// Pentagon in the plane, five irredundant rows.
///   rows: 2x+y>=5, 5x-2y>=-1, -2x-5y>=-46, -2x+y>=-10, -x+4y>=2
///   vertices (tight row pairs): (2,1):{0,4} (6,2):{3,4} (8,6):{2,3}
///                               (3,8):{1,2} (1,3):{0,1}
inline HPoly pentagon() {
    return HPoly{2,
                 {LinRel{vec2(2, 1), Rational(5)},
                  LinRel{vec2(5, -2), Rational(-1)},
                  LinRel{vec2(-2, -5), Rational(-46)},
                  LinRel{vec2(-2, 1), Rational(-10)},
                  LinRel{vec2(-1, 4), Rational(2)}}};
}

inline std::vector<Vector> pentagon_vertices() {
    return {vec2(2, 1), vec2(6, 2), vec2(8, 6), vec2(3, 8), vec2(1, 3)};
}

/// Unit cube [0,1]^3 as six rows: x_i >= 0 and -x_i >= -1.
inline HPoly cube3() {
    HPoly p{3, {}};
    for (std::size_t i = 0; i < 3; ++i) {
        p.rows.push_back(LinRel{unit_vector(3, i), Rational(0)});
        p.rows.push_back(LinRel{negate(unit_vector(3, i)), Rational(-1)});
    }
    return p;
}

/// Unit square [0,1]^2, same row pattern.
inline HPoly square() {
    HPoly p{2, {}};
    for (std::size_t i = 0; i < 2; ++i) {
        p.rows.push_back(LinRel{unit_vector(2, i), Rational(0)});
        p.rows.push_back(LinRel{negate(unit_vector(2, i)), Rational(-1)});
    }
    return p;
}

/// Seven points in 3-space whose hull has 7 vertices, 13 edges, 8 facets
/// (one facet is the quadrilateral on the plane x - 2y = -4).
inline std::vector<Vector> seven_point_solid() {
    return {vec3(3, 1, 1), vec3(0, 0, 0),  vec3(0, 2, 0), vec3(0, 2, 2),
            vec3(0, 0, 2), vec3(-2, 1, 0), vec3(-2, 1, 1)};
}

/// Cross-polytope: conv(±e_i) in 3-space — 6 vertices, 12 edges, 8 facets.
inline std::vector<Vector> octahedron_points() {
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < 3; ++i) {
        pts.push_back(unit_vector(3, i));
        pts.push_back(negate(unit_vector(3, i)));
    }
    return pts;
}

inline HPoly octahedron() {
    HPoly p{3, {}};
    for (long sx : {1, -1})
        for (long sy : {1, -1})
            for (long sz : {1, -1})
                p.rows.push_back(LinRel{vec3(sx, sy, sz), Rational(-1)});
    return p;
}

}  // namespace facekit::testing
