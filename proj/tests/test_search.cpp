#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "hamsphere/enumerate.hpp"
#include "hamsphere/moments.hpp"
#include "hamsphere/search.hpp"
#include "test_fixtures.hpp"

using namespace hamsphere;
namespace fx = hamsphere::fixtures;

namespace {

Complex2 complete_complex(int n) {
    std::vector<Triangle> tris;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) tris.push_back(Triangle{{i, j, k}});
    return Complex2{n, std::move(tris)};
}

bool oracle_contains(const Complex2& c, const std::vector<Complex2>& spheres) {
    auto has = [&](const Triangle& t) {
        return std::binary_search(c.triangles.begin(), c.triangles.end(), t);
    };
    for (const auto& s : spheres) {
        bool all = true;
        for (const Triangle& t : s.triangles)
            if (!has(t)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("quick reject certificates") {
    // 7 triangles on 6 vertices: needs 8
    Complex2 few = make_complex(6, {make_triangle(0, 1, 2), make_triangle(0, 1, 3),
                                    make_triangle(0, 2, 3), make_triangle(1, 2, 3),
                                    make_triangle(1, 2, 4), make_triangle(2, 4, 5),
                                    make_triangle(1, 4, 5)});
    CHECK(quick_reject(few).has_value());

    CHECK_FALSE(quick_reject(complete_complex(5)).has_value());

    // a vertex in only 2 triangles
    auto tris = complete_complex(5).triangles;
    std::erase_if(tris, [](const Triangle& t) {
        return t.v[0] == 0 && !(t.v[1] == 1 && t.v[2] == 2) && !(t.v[1] == 1 && t.v[2] == 3);
    });
    Complex2 weak = make_complex(5, tris);
    auto r = quick_reject(weak);
    REQUIRE(r.has_value());
    CHECK(r->find("VERTEX") != std::string::npos);
}

TEST_CASE("search on reference inputs") {
    auto full5 = find_spanning_sphere(complete_complex(5));
    REQUIRE(full5.outcome == SearchOutcome::Found);
    REQUIRE(full5.witness.has_value());
    CHECK(full5.witness->size() == 6);
    CHECK(is_spanning_sphere(5, *full5.witness));

    Complex2 bip = make_complex(5, fx::bipyramid5());
    auto just = find_spanning_sphere(bip);
    REQUIRE(just.outcome == SearchOutcome::Found);
    auto w = *just.witness;
    CHECK(w == bip.triangles);  // the witness must be the entire set

    // tetrahedron plus an isolated vertex: not spanning
    Complex2 iso = make_complex(5, fx::tetrahedron());
    CHECK(find_spanning_sphere(iso).outcome == SearchOutcome::NotFound);
}

TEST_CASE("determinism") {
    Complex2 c = sample_complex(9, 0.45, 1234567);
    auto a = find_spanning_sphere(c);
    auto b = find_spanning_sphere(c);
    CHECK(a.outcome == b.outcome);
    CHECK(a.witness == b.witness);
}

TEST_CASE("agreement with the enumeration oracle on random complexes") {
    for (int n : {4, 5}) {
        auto spheres = enumerate_labeled_spheres(n);
        for (double p : {0.2, 0.5, 0.8}) {
            int found = 0;
            for (int trial = 0; trial < 200; ++trial) {
                Complex2 c =
                    sample_complex(n, p, trial_seed(Seed{555}, trial + int(1000 * p)));
                bool expect = oracle_contains(c, spheres);
                auto r = find_spanning_sphere(c);
                REQUIRE(r.outcome != SearchOutcome::Timeout);
                bool got = r.outcome == SearchOutcome::Found;
                CAPTURE(n);
                CAPTURE(p);
                CAPTURE(trial);
                CHECK(got == expect);
                if (got) {
                    CHECK(is_spanning_sphere(n, *r.witness));
                    ++found;
                    // witness triangles all belong to the input
                    for (const Triangle& t : *r.witness)
                        CHECK(std::binary_search(c.triangles.begin(), c.triangles.end(), t));
                }
                if (expect) CHECK_FALSE(quick_reject(c).has_value());
            }
            if (p == 0.8 && n == 4) CHECK(found > 0);
        }
    }
}

TEST_CASE("agreement with the oracle at n = 6") {
    auto spheres = enumerate_labeled_spheres(6);
    for (double p : {0.4, 0.6}) {
        for (int trial = 0; trial < 100; ++trial) {
            Complex2 c = sample_complex(6, p, trial_seed(Seed{777}, trial + int(10 * p)));
            auto r = find_spanning_sphere(c);
            REQUIRE(r.outcome != SearchOutcome::Timeout);
            CHECK((r.outcome == SearchOutcome::Found) == oracle_contains(c, spheres));
        }
    }
}

TEST_CASE("agreement with the oracle at n = 7") {
    auto spheres = enumerate_labeled_spheres(7);
    int found = 0;
    for (int trial = 0; trial < 150; ++trial) {
        Complex2 c = sample_complex(7, 0.35, trial_seed(Seed{4242}, trial));
        auto r = find_spanning_sphere(c);
        REQUIRE(r.outcome != SearchOutcome::Timeout);
        bool got = r.outcome == SearchOutcome::Found;
        CHECK(got == oracle_contains(c, spheres));
        found += got;
    }
    CHECK(found > 0);  // p = 0.35 sits above the finite-size transition here
}

TEST_CASE("budget produces explicit timeouts") {
    Complex2 c = complete_complex(9);
    SearchBudget tiny;
    tiny.node_limit = 3;
    auto r = find_spanning_sphere(c, tiny);
    CHECK(r.outcome == SearchOutcome::Timeout);
    CHECK_FALSE(r.witness.has_value());

    auto ok = find_spanning_sphere(c);
    CHECK(ok.outcome == SearchOutcome::Found);
    CHECK(is_spanning_sphere(9, *ok.witness));
}

TEST_CASE("larger spanning instance at n = 12") {
    Complex2 c = sample_complex(12, 0.32, trial_seed(Seed{42}, 3));
    auto r = find_spanning_sphere(c);
    CHECK(r.outcome != SearchOutcome::Timeout);
    if (r.outcome == SearchOutcome::Found) CHECK(is_spanning_sphere(12, *r.witness));
    CHECK(r.stats.nodes > 0);
}
