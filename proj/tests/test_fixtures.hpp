// Shared hand-built complexes used across test suites.
#pragma once

#include <vector>

#include "hamsphere/complex2.hpp"

namespace hamsphere::fixtures {

inline std::vector<Triangle> tetrahedron() {
    return {make_triangle(0, 1, 2), make_triangle(0, 1, 3), make_triangle(0, 2, 3),
            make_triangle(1, 2, 3)};
}

// apexes {3,4} over the 3-cycle {0,1,2}
inline std::vector<Triangle> bipyramid5() {
    return {make_triangle(3, 0, 1), make_triangle(3, 1, 2), make_triangle(3, 0, 2),
            make_triangle(4, 0, 1), make_triangle(4, 1, 2), make_triangle(4, 0, 2)};
}

// apexes {4,5} over the 4-cycle 0-1-2-3
inline std::vector<Triangle> octahedron() {
    std::vector<Triangle> t;
    for (int apex : {4, 5})
        for (int i = 0; i < 4; ++i) t.push_back(make_triangle(apex, i, (i + 1) % 4));
    return t;
}

// 12 vertices: apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11
inline std::vector<Triangle> icosahedron() {
    std::vector<Triangle> t;
    auto up = [](int i) { return 1 + (i % 5); };
    auto lo = [](int i) { return 6 + (i % 5); };
    for (int i = 0; i < 5; ++i) {
        t.push_back(make_triangle(0, up(i), up(i + 1)));
        t.push_back(make_triangle(11, lo(i), lo(i + 1)));
        t.push_back(make_triangle(up(i), up(i + 1), lo(i + 1)));
        t.push_back(make_triangle(up(i + 1), lo(i + 1), lo(i + 2)));
    }
    return t;
}

// 7-vertex torus on Z_7: orbits {i,i+1,i+3} and {i,i+2,i+3}
inline std::vector<Triangle> csaszar_torus() {
    std::vector<Triangle> t;
    for (int i = 0; i < 7; ++i) {
        t.push_back(make_triangle(i, (i + 1) % 7, (i + 3) % 7));
        t.push_back(make_triangle(i, (i + 2) % 7, (i + 3) % 7));
    }
    return t;
}

// minimal 6-vertex projective plane (antipodal icosahedron quotient)
inline std::vector<Triangle> projective_plane6() {
    return {make_triangle(0, 1, 2), make_triangle(0, 2, 3), make_triangle(0, 3, 4),
            make_triangle(0, 4, 5), make_triangle(0, 5, 1), make_triangle(1, 2, 4),
            make_triangle(2, 4, 5), make_triangle(2, 3, 5), make_triangle(3, 5, 1),
            make_triangle(3, 4, 1)};
}

// two tetrahedron boundaries sharing only vertex 0
inline std::vector<Triangle> pinched_spheres() {
    std::vector<Triangle> t = {make_triangle(0, 1, 2), make_triangle(0, 1, 3),
                               make_triangle(0, 2, 3), make_triangle(1, 2, 3)};
    t.push_back(make_triangle(0, 4, 5));
    t.push_back(make_triangle(0, 4, 6));
    t.push_back(make_triangle(0, 5, 6));
    t.push_back(make_triangle(4, 5, 6));
    return t;
}

}  // namespace hamsphere::fixtures
