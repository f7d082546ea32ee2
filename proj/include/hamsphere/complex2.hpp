// Labeled 2-dimensional simplicial complexes and the combinatorial
// sphere recognizer (closed surface + connected + Euler characteristic 2).
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hamsphere {

// A 2-simplex on labeled vertices, stored as the sorted triple.
struct Triangle {
    std::array<int, 3> v;

    friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

// Canonicalizes and validates a vertex triple. Throws std::invalid_argument
// if the indices are not pairwise distinct or any is negative.
Triangle make_triangle(int a, int b, int c);

// A pure 2-complex on n labeled vertices, encoded by its triangle set.
// Triangles are kept sorted and duplicate-free.
struct Complex2 {
    int n = 0;
    std::vector<Triangle> triangles;
};

// Builds a Complex2, canonicalizing triangle order and rejecting duplicates
// and out-of-range vertex indices.
Complex2 make_complex(int n, std::vector<Triangle> triangles);

enum class SurfaceFailure {
    None,
    NotPureDegree,  // some edge lies in != 2 triangles
    LinkNotCycle,   // some used vertex's link is not a single cycle
    Disconnected,   // supported subcomplex empty or not connected
    WrongEuler,     // chi != 2
    NotSpanning,    // surface ok but some ambient vertex unused
};

std::string to_string(SurfaceFailure f);

struct SurfaceReport {
    bool is_sphere = false;
    int vertices_used = 0;
    int edges = 0;
    int faces = 0;
    int euler_characteristic = 0;
    SurfaceFailure failure_reason = SurfaceFailure::None;
    // LinkNotCycle: offending vertex; WrongEuler: the chi value. Else -1.
    int failure_detail = -1;
};

// chi = |used vertices| - |distinct edges| + |triangles| of the supported
// subcomplex. The empty set gives 0.
int euler_characteristic(std::span<const Triangle> triangles);

// Edges {a,b} (a<b) such that {v,a,b} is a triangle of c. Requires v < c.n.
std::vector<std::array<int, 2>> vertex_link(const Complex2& c, int v);

// Closed-surface-and-sphere test, ignoring the spanning condition.
// failure_reason reports the first violated condition in the fixed order
// edge degree, links, connectivity, Euler.
SurfaceReport check_closed_surface(const Complex2& c);

// As check_closed_surface, then additionally requires every vertex
// 0..n-1 to appear in some triangle (NotSpanning reported last).
SurfaceReport check_spanning_sphere(int n, std::span<const Triangle> s);

bool is_spanning_sphere(int n, std::span<const Triangle> s);

// Text format:
//   n <N>
//   t <i> <j> <k>     (0 <= i < j < k < N)
// '#' starts a comment. Duplicate triangles and bad indices are rejected
// with std::runtime_error.
Complex2 read_complex(std::istream& in);
void write_complex(std::ostream& out, const Complex2& c);

}  // namespace hamsphere
