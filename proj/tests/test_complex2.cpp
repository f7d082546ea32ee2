#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "hamsphere/complex2.hpp"
#include "test_fixtures.hpp"

using namespace hamsphere;
namespace fx = hamsphere::fixtures;

TEST_CASE("euler characteristic on reference complexes") {
    CHECK(euler_characteristic(fx::tetrahedron()) == 2);
    std::vector<Triangle> single{make_triangle(0, 1, 2)};
    CHECK(euler_characteristic(single) == 1);
    auto torus = fx::csaszar_torus();
    CHECK(torus.size() == 14);
    CHECK(euler_characteristic(torus) == 0);
    CHECK(euler_characteristic(std::vector<Triangle>{}) == 0);
}

TEST_CASE("euler characteristic is additive over disjoint unions") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Triangle> a, b;
        for (int t = 0; t < 5; ++t) {
            int i = rng() % 6, j = rng() % 6, k = rng() % 6;
            if (i == j || j == k || i == k) continue;
            a.push_back(make_triangle(i, j, k));
            b.push_back(make_triangle(i + 6, j + 6, k + 6));
        }
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        std::vector<Triangle> both = a;
        both.insert(both.end(), b.begin(), b.end());
        CHECK(euler_characteristic(both) ==
              euler_characteristic(a) + euler_characteristic(b));
    }
}

TEST_CASE("vertex links") {
    Complex2 tet = make_complex(4, fx::tetrahedron());
    auto link = vertex_link(tet, 0);
    CHECK(link.size() == 3);  // 3-cycle on {1,2,3}

    Complex2 single = make_complex(3, {make_triangle(0, 1, 2)});
    auto l0 = vertex_link(single, 0);
    REQUIRE(l0.size() == 1);
    CHECK(l0[0] == std::array<int, 2>{1, 2});

    Complex2 oct = make_complex(6, fx::octahedron());
    for (int v = 0; v < 6; ++v) CHECK(vertex_link(oct, v).size() == 4);

    CHECK_THROWS(vertex_link(single, 3));
}

TEST_CASE("closed surface recognizer") {
    auto tet = check_closed_surface(make_complex(4, fx::tetrahedron()));
    CHECK(tet.is_sphere);
    CHECK(tet.euler_characteristic == 2);
    CHECK(tet.faces == 2 * tet.vertices_used - 4);

    auto torus = check_closed_surface(make_complex(7, fx::csaszar_torus()));
    CHECK_FALSE(torus.is_sphere);
    CHECK(torus.failure_reason == SurfaceFailure::WrongEuler);
    CHECK(torus.failure_detail == 0);

    auto pinched = check_closed_surface(make_complex(7, fx::pinched_spheres()));
    CHECK_FALSE(pinched.is_sphere);
    CHECK(pinched.failure_reason == SurfaceFailure::LinkNotCycle);
    CHECK(pinched.failure_detail == 0);

    auto proj = check_closed_surface(make_complex(6, fx::projective_plane6()));
    CHECK_FALSE(proj.is_sphere);
    CHECK(proj.failure_reason == SurfaceFailure::WrongEuler);
    CHECK(proj.failure_detail == 1);

    auto ico = check_closed_surface(make_complex(12, fx::icosahedron()));
    CHECK(ico.is_sphere);
    CHECK(ico.faces == 20);
}

TEST_CASE("empty complex is reported as disconnected") {
    auto r = check_closed_surface(Complex2{5, {}});
    CHECK_FALSE(r.is_sphere);
    CHECK(r.failure_reason == SurfaceFailure::Disconnected);
}

TEST_CASE("spanning test") {
    CHECK(is_spanning_sphere(4, fx::tetrahedron()));
    CHECK_FALSE(is_spanning_sphere(5, fx::tetrahedron()));
    CHECK(check_spanning_sphere(5, fx::tetrahedron()).failure_reason ==
          SurfaceFailure::NotSpanning);
    CHECK(is_spanning_sphere(5, fx::bipyramid5()));
}

TEST_CASE("recognizer is invariant under relabeling") {
    std::mt19937_64 rng(11);
    auto base = fx::octahedron();
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    for (int rep = 0; rep < 20; ++rep) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Triangle> relabeled;
        for (const Triangle& t : base)
            relabeled.push_back(make_triangle(perm[t.v[0]], perm[t.v[1]], perm[t.v[2]]));
        auto r = check_closed_surface(make_complex(6, relabeled));
        CHECK(r.is_sphere);
    }
}

TEST_CASE("removing any triangle from a sphere breaks the edge-degree condition") {
    auto oct = fx::octahedron();
    for (size_t i = 0; i < oct.size(); ++i) {
        auto rest = oct;
        rest.erase(rest.begin() + i);
        auto r = check_closed_surface(make_complex(6, rest));
        CHECK_FALSE(r.is_sphere);
        CHECK(r.failure_reason == SurfaceFailure::NotPureDegree);
    }
}

TEST_CASE("text format round trip and rejection") {
    Complex2 c = make_complex(5, fx::bipyramid5());
    std::stringstream ss;
    write_complex(ss, c);
    Complex2 back = read_complex(ss);
    CHECK(back.n == c.n);
    CHECK(back.triangles == c.triangles);

    auto fails = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(read_complex(in), std::runtime_error);
    };
    fails("n 4\nt 0 1 5\n");          // out of range
    fails("n 4\nt 0 1 2\nt 0 1 2\n"); // duplicate
    fails("n 4\nt 2 1 0\n");          // not sorted
    fails("t 0 1 2\n");               // triangle before n
    fails("n 4\nx 0 1 2\n");          // unknown tag

    std::istringstream ok("# comment\nn 4 # trailing comment\nt 0 1 2\n\n");
    Complex2 c2 = read_complex(ok);
    CHECK(c2.n == 4);
    CHECK(c2.triangles.size() == 1);
}
