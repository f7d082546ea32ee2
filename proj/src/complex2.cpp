#include "hamsphere/complex2.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hamsphere {

Triangle make_triangle(int a, int b, int c) {
    std::array<int, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    if (v[0] < 0 || v[0] == v[1] || v[1] == v[2])
        throw std::invalid_argument("triangle needs three distinct nonnegative vertices");
    return Triangle{v};
}

Complex2 make_complex(int n, std::vector<Triangle> triangles) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::sort(triangles.begin(), triangles.end());
    if (std::adjacent_find(triangles.begin(), triangles.end()) != triangles.end())
        throw std::invalid_argument("duplicate triangle");
    for (const Triangle& t : triangles)
        if (t.v[2] >= n) throw std::invalid_argument("triangle vertex out of range");
    return Complex2{n, std::move(triangles)};
}

std::string to_string(SurfaceFailure f) {
    switch (f) {
        case SurfaceFailure::None: return "NONE";
        case SurfaceFailure::NotPureDegree: return "NOT_PURE_DEGREE";
        case SurfaceFailure::LinkNotCycle: return "LINK_NOT_CYCLE";
        case SurfaceFailure::Disconnected: return "DISCONNECTED";
        case SurfaceFailure::WrongEuler: return "WRONG_EULER";
        case SurfaceFailure::NotSpanning: return "NOT_SPANNING";
    }
    return "?";
}

namespace {

using Edge = std::array<int, 2>;

std::map<Edge, int> edge_degrees(std::span<const Triangle> tris) {
    std::map<Edge, int> deg;
    for (const Triangle& t : tris) {
        ++deg[{t.v[0], t.v[1]}];
        ++deg[{t.v[0], t.v[2]}];
        ++deg[{t.v[1], t.v[2]}];
    }
    return deg;
}

std::set<int> used_vertices(std::span<const Triangle> tris) {
    std::set<int> used;
    for (const Triangle& t : tris) used.insert(t.v.begin(), t.v.end());
    return used;
}

// The link of v as an edge list is a single cycle iff every link vertex has
// degree 2 and the link is connected and nonempty.
bool is_single_cycle(const std::vector<Edge>& edges) {
    if (edges.empty()) return false;
    std::map<int, std::vector<int>> adj;
    for (const Edge& e : edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (const auto& [u, nb] : adj)
        if (nb.size() != 2) return false;
    // walk from an arbitrary start; a 2-regular graph is a disjoint cycle union
    int start = adj.begin()->first;
    int prev = -1, cur = start;
    size_t seen = 0;
    do {
        const auto& nb = adj[cur];
        int next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++seen;
        if (seen > adj.size()) return false;
    } while (cur != start);
    return seen == adj.size();
}

}  // namespace

int euler_characteristic(std::span<const Triangle> triangles) {
    auto deg = edge_degrees(triangles);
    auto used = used_vertices(triangles);
    return static_cast<int>(used.size()) - static_cast<int>(deg.size()) +
           static_cast<int>(triangles.size());
}

std::vector<std::array<int, 2>> vertex_link(const Complex2& c, int v) {
    if (v < 0 || v >= c.n) throw std::invalid_argument("vertex out of range");
    std::vector<Edge> link;
    for (const Triangle& t : c.triangles) {
        if (t.v[0] == v) link.push_back({t.v[1], t.v[2]});
        else if (t.v[1] == v) link.push_back({t.v[0], t.v[2]});
        else if (t.v[2] == v) link.push_back({t.v[0], t.v[1]});
    }
    return link;
}

SurfaceReport check_closed_surface(const Complex2& c) {
    SurfaceReport r;
    auto deg = edge_degrees(c.triangles);
    auto used = used_vertices(c.triangles);
    r.vertices_used = static_cast<int>(used.size());
    r.edges = static_cast<int>(deg.size());
    r.faces = static_cast<int>(c.triangles.size());
    r.euler_characteristic = r.vertices_used - r.edges + r.faces;

    for (const auto& [e, d] : deg) {
        if (d != 2) {
            r.failure_reason = SurfaceFailure::NotPureDegree;
            return r;
        }
    }
    for (int v : used) {
        if (!is_single_cycle(vertex_link(c, v))) {
            r.failure_reason = SurfaceFailure::LinkNotCycle;
            r.failure_detail = v;
            return r;
        }
    }
    // connectivity of the supported subcomplex (via the edge graph)
    if (used.empty()) {
        r.failure_reason = SurfaceFailure::Disconnected;
        return r;
    }
    std::map<int, std::vector<int>> adj;
    for (const auto& [e, d] : deg) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<int> stack{*used.begin()};
    std::set<int> reached{*used.begin()};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (reached.insert(w).second) stack.push_back(w);
    }
    if (reached.size() != used.size()) {
        r.failure_reason = SurfaceFailure::Disconnected;
        return r;
    }
    if (r.euler_characteristic != 2) {
        r.failure_reason = SurfaceFailure::WrongEuler;
        r.failure_detail = r.euler_characteristic;
        return r;
    }
    r.is_sphere = true;
    return r;
}

SurfaceReport check_spanning_sphere(int n, std::span<const Triangle> s) {
    Complex2 c = make_complex(n, std::vector<Triangle>(s.begin(), s.end()));
    SurfaceReport r = check_closed_surface(c);
    if (!r.is_sphere) return r;
    if (r.vertices_used != n) {
        r.is_sphere = false;
        r.failure_reason = SurfaceFailure::NotSpanning;
    }
    return r;
}

bool is_spanning_sphere(int n, std::span<const Triangle> s) {
    return check_spanning_sphere(n, s).is_sphere;
}

Complex2 read_complex(std::istream& in) {
    int n = -1;
    std::vector<Triangle> tris;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "n") {
            if (n >= 0 || !(ls >> n) || n < 0)
                throw std::runtime_error("line " + std::to_string(lineno) + ": bad n line");
        } else if (tag == "t") {
            if (n < 0) throw std::runtime_error("triangle before n line");
            int i, j, k;
            if (!(ls >> i >> j >> k) || !(i < j && j < k))
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": expected t <i> <j> <k> with i<j<k");
            if (i < 0 || k >= n)
                throw std::runtime_error("line " + std::to_string(lineno) +
                                         ": vertex index out of range");
            tris.push_back(Triangle{{i, j, k}});
        } else {
            throw std::runtime_error("line " + std::to_string(lineno) + ": unknown tag '" +
                                     tag + "'");
        }
        std::string extra;
        if (ls >> extra)
            throw std::runtime_error("line " + std::to_string(lineno) + ": trailing tokens");
    }
    if (n < 0) throw std::runtime_error("missing n line");
    std::sort(tris.begin(), tris.end());
    if (std::adjacent_find(tris.begin(), tris.end()) != tris.end())
        throw std::runtime_error("duplicate triangle");
    return Complex2{n, std::move(tris)};
}

void write_complex(std::ostream& out, const Complex2& c) {
    out << "n " << c.n << "\n";
    for (const Triangle& t : c.triangles)
        out << "t " << t.v[0] << " " << t.v[1] << " " << t.v[2] << "\n";
}

}  // namespace hamsphere
