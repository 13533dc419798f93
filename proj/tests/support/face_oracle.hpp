#pragma once

// Brute-force face enumeration used as the test oracle: every subset of
// base rows is turned into equations and the nonempty results are collected
// by their maximal active sets. Maximality is established with the subset
// primitive (one LP per row pair), not with the closure algorithm under
// test. Exponential in the base size; test inputs stay small.

#include <cstddef>
#include <set>
#include <vector>

#include <facekit/faces.hpp>
#include <facekit/poly.hpp>

namespace facekit::testing {

inline std::set<std::size_t> oracle_maximal_active(const Base& base, const Poly& f) {
    std::set<std::size_t> active;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (subset(f.rep(), hp(base[i]).rep())) active.insert(i);
    return active;
}

/// Maximal active sets of all *nonempty* faces of poly_of_base(base).
inline std::set<std::set<std::size_t>> oracle_face_keys(const Base& base) {
    const std::size_t m = base.size();
    std::set<std::set<std::size_t>> keys;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        std::set<std::size_t> eqs;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1ul << i)) eqs.insert(i);
        const Poly f = poly_eq(base, eqs);
        if (is_empty(f)) continue;
        keys.insert(oracle_maximal_active(base, f));
    }
    return keys;
}

/// The nonempty-face keys the closure algorithm found.
inline std::set<std::set<std::size_t>> closure_face_keys(const Poly& p) {
    const FaceCache& cache = face_set(p);
    std::set<std::set<std::size_t>> keys;
    for (std::size_t i = 0; i < cache.faces.size(); ++i)
        if (i != cache.bottom || cache.faces.size() == 1)  // skip the empty face
            keys.insert(cache.faces[i].active);
    if (cache.faces.size() == 1) keys.clear();  // empty polyhedron: no nonempty faces
    return keys;
}

}  // namespace facekit::testing
