#include "hamsphere/planar_map.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hamsphere {

int MapComponent::edge_count() const {
    int darts = 0;
    for (const auto& [v, nb] : rot) darts += static_cast<int>(nb.size());
    return darts / 2;
}

int EmbeddedColoredGraph::edge_count() const {
    int e = 0;
    for (const auto& c : comps) e += c.edge_count();
    return e;
}

std::vector<LocalFace> trace_component_faces(const MapComponent& comp, int comp_index) {
    // position of each neighbor in each rotation, for the successor rule
    std::map<int, std::map<int, int>> pos;
    for (const auto& [v, nb] : comp.rot) {
        for (size_t i = 0; i < nb.size(); ++i) {
            if (pos[v].count(nb[i]))
                throw std::runtime_error("repeated neighbor in rotation at vertex " +
                                         std::to_string(v));
            pos[v][nb[i]] = static_cast<int>(i);
        }
    }
    std::set<std::array<int, 2>> visited;
    std::vector<LocalFace> faces;
    for (const auto& [v, nb] : comp.rot) {
        for (int u : nb) {
            std::array<int, 2> start{v, u};
            if (visited.count(start)) continue;
            LocalFace f;
            f.comp = comp_index;
            f.index = static_cast<int>(faces.size());
            std::array<int, 2> dart = start;
            do {
                visited.insert(dart);
                f.walk.push_back(dart);
                auto [a, b] = dart;
                const auto& rb = comp.rot.at(b);
                int i = pos.at(b).at(a);
                int next = rb[(i + 1) % rb.size()];
                dart = {b, next};
            } while (dart != start);
            faces.push_back(std::move(f));
        }
    }
    return faces;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

FaceStructure build_face_structure(const EmbeddedColoredGraph& g) {
    FaceStructure fs;
    const int nc = g.component_count();
    fs.comp_face_offset.assign(nc, 0);
    for (int c = 0; c < nc; ++c) {
        fs.comp_face_offset[c] = static_cast<int>(fs.faces.size());
        auto faces = trace_component_faces(g.comps[c], c);
        // per-component Euler check: genus 0
        int v = static_cast<int>(g.comps[c].rot.size());
        int e = g.comps[c].edge_count();
        if (static_cast<int>(faces.size()) - e + v != 2)
            throw std::runtime_error("component " + std::to_string(c) +
                                     " is not embedded in the sphere");
        for (auto& f : faces) fs.faces.push_back(std::move(f));
    }

    UnionFind uf(static_cast<int>(fs.faces.size()));
    for (const Nesting& nst : g.nesting) {
        if (nst.child <= 0 || nst.child >= nc || nst.parent < 0 || nst.parent >= nc)
            throw std::runtime_error("nesting references unknown component");
        uf.unite(fs.comp_face_offset[nst.child] + nst.child_face,
                 fs.comp_face_offset[nst.parent] + nst.parent_face);
    }

    std::map<int, int> region_of_root;
    fs.face_region.assign(fs.faces.size(), -1);
    for (size_t i = 0; i < fs.faces.size(); ++i) {
        int r = uf.find(static_cast<int>(i));
        auto [it, fresh] = region_of_root.try_emplace(r, static_cast<int>(region_of_root.size()));
        fs.face_region[i] = it->second;
        if (fresh) fs.regions.emplace_back();
        fs.regions[it->second].local_faces.push_back(static_cast<int>(i));
    }

    // Euler identity over the merged structure: |F| - |E| + |V| = r + 1
    int F = static_cast<int>(fs.regions.size());
    if (F - g.edge_count() + g.m != nc + 1)
        throw std::runtime_error("face merge violates Euler's identity");

    if (!g.region_colors.empty()) {
        if (static_cast<int>(g.region_colors.size()) != F)
            throw std::runtime_error("region color list has the wrong length");
        for (int i = 0; i < F; ++i) fs.regions[i].color = g.region_colors[i];
    }
    return fs;
}

std::optional<std::vector<FaceColor>> two_color_regions(const EmbeddedColoredGraph& g,
                                                        const FaceStructure& fs,
                                                        FaceColor region0) {
    // each dart (u,v) lies on exactly one local face; an edge's two sides are
    // the faces of (u,v) and (v,u)
    std::map<std::array<int, 2>, int> dart_region;
    for (size_t i = 0; i < fs.faces.size(); ++i)
        for (const auto& d : fs.faces[i].walk) dart_region[d] = fs.face_region[i];

    const int R = static_cast<int>(fs.regions.size());
    std::vector<int> color(R, -1);
    color[0] = (region0 == FaceColor::White) ? 1 : 0;
    // constraint graph: the two sides of every edge get opposite colors
    std::vector<std::vector<int>> adj(R);
    for (const auto& [d, r] : dart_region) {
        if (d[0] > d[1]) continue;
        int r2 = dart_region.at({d[1], d[0]});
        adj[r].push_back(r2);
        adj[r2].push_back(r);
    }
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (int q : adj[r]) {
            if (color[q] == -1) {
                color[q] = 1 - color[r];
                stack.push_back(q);
            } else if (color[q] == color[r]) {
                return std::nullopt;
            }
        }
    }
    // disconnected region graphs cannot occur on the sphere, but guard anyway
    for (int r = 0; r < R; ++r)
        if (color[r] == -1) return std::nullopt;
    std::vector<FaceColor> out(R);
    for (int r = 0; r < R; ++r)
        out[r] = color[r] ? FaceColor::White : FaceColor::Black;
    (void)g;
    return out;
}

std::optional<std::string> validate_colored_graph(const EmbeddedColoredGraph& g) {
    try {
        if (g.m <= 0) return "no vertices";
        std::vector<int> owner(g.m, -1);
        for (int c = 0; c < g.component_count(); ++c) {
            const auto& comp = g.comps[c];
            if (comp.rot.empty()) return "empty component";
            for (const auto& [v, nb] : comp.rot) {
                if (v < 0 || v >= g.m) return "vertex id out of range";
                if (owner[v] != -1) return "vertex in two components";
                owner[v] = c;
                if (nb.size() < 2 || nb.size() % 2 != 0)
                    return "vertex degree must be even and >= 2";
                std::set<int> distinct(nb.begin(), nb.end());
                if (distinct.size() != nb.size()) return "double edge in rotation";
                if (distinct.count(v)) return "self loop";
                for (int u : nb) {
                    auto it = comp.rot.find(u);
                    if (it == comp.rot.end()) return "edge leaves the component";
                    if (std::find(it->second.begin(), it->second.end(), v) ==
                        it->second.end())
                        return "asymmetric adjacency";
                }
            }
            // connectivity of the component
            std::set<int> seen;
            std::vector<int> stack{comp.rot.begin()->first};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                if (!seen.insert(v).second) continue;
                for (int u : comp.rot.at(v)) stack.push_back(u);
            }
            if (seen.size() != comp.rot.size()) return "component not connected";
        }
        for (int v = 0; v < g.m; ++v)
            if (owner[v] == -1) return "vertex " + std::to_string(v) + " unused";

        // nesting must form a tree rooted at component 0
        if (static_cast<int>(g.nesting.size()) != g.component_count() - 1)
            return "nesting is not a spanning tree of the components";
        std::vector<int> parent(g.component_count(), -1);
        for (const auto& nst : g.nesting) {
            if (nst.child == 0) return "component 0 cannot be nested";
            if (parent[nst.child] != -1) return "component nested twice";
            parent[nst.child] = nst.parent;
        }
        for (int c = 1; c < g.component_count(); ++c) {
            int hops = 0, x = c;
            while (x != 0) {
                if (x < 0 || ++hops > g.component_count()) return "nesting cycle";
                x = parent[x];
            }
        }

        FaceStructure fs = build_face_structure(g);  // throws on genus/Euler problems
        for (const auto& nst : g.nesting) {
            int cf = fs.comp_face_offset[nst.child] + nst.child_face;
            int pf = fs.comp_face_offset[nst.parent] + nst.parent_face;
            if (cf >= static_cast<int>(fs.faces.size()) ||
                pf >= static_cast<int>(fs.faces.size()))
                return "nesting face index out of range";
        }

        // stored colors must be one of the two proper colorings
        if (g.region_colors.empty()) return "missing region colors";
        auto proper = two_color_regions(g, fs, g.region_colors[0]);
        if (!proper) return "faces admit no proper 2-coloring";
        for (size_t r = 0; r < proper->size(); ++r)
            if ((*proper)[r] != g.region_colors[r]) return "stored coloring not proper";
        return std::nullopt;
    } catch (const std::exception& e) {
        return std::string(e.what());
    }
}

int surrounded_component_count(const FaceStructure& fs, FaceColor color) {
    int sum = 0;
    for (const auto& reg : fs.regions)
        if (reg.color == color) sum += reg.boundary_components() - 1;
    return sum + 1;
}

int surrounded_component_count_rooted(const EmbeddedColoredGraph& g,
                                      const FaceStructure& fs, int outer_region,
                                      FaceColor color) {
    // The face-component incidence graph is a tree on the sphere. Rooting it
    // at the outer region orients it; a component is surrounded by its parent
    // region.
    const int R = static_cast<int>(fs.regions.size());
    const int C = g.component_count();
    std::vector<std::vector<int>> reg_comps(R);
    for (size_t i = 0; i < fs.faces.size(); ++i)
        reg_comps[fs.face_region[i]].push_back(fs.faces[i].comp);

    std::vector<std::vector<int>> comp_regs(C);
    for (int r = 0; r < R; ++r)
        for (int c : reg_comps[r]) comp_regs[c].push_back(r);

    std::vector<int> comp_parent_region(C, -1), region_seen(R, 0);
    std::vector<int> stack{outer_region};
    region_seen[outer_region] = 1;
    std::vector<int> comp_seen(C, 0);
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (int c : reg_comps[r]) {
            if (comp_seen[c]) continue;
            comp_seen[c] = 1;
            comp_parent_region[c] = r;
            for (int r2 : comp_regs[c])
                if (!region_seen[r2]) {
                    region_seen[r2] = 1;
                    stack.push_back(r2);
                }
        }
    }
    int count = 0;
    for (int c = 0; c < C; ++c)
        if (comp_parent_region[c] >= 0 && fs.regions[comp_parent_region[c]].color == color)
            ++count;
    return count;
}

void write_colored_graph(std::ostream& out, const EmbeddedColoredGraph& g) {
    out << "m " << g.m << "\n";
    for (int c = 0; c < g.component_count(); ++c) {
        out << "comp " << c << "\n";
        for (const auto& [v, nb] : g.comps[c].rot) {
            out << "v " << v << ":";
            for (int u : nb) out << " " << u;
            out << "\n";
        }
    }
    for (const auto& nst : g.nesting)
        out << "nest " << nst.child << " " << nst.child_face << " in " << nst.parent << " "
            << nst.parent_face << "\n";
    FaceStructure fs = build_face_structure(g);
    for (size_t r = 0; r < fs.regions.size(); ++r) {
        int lf = fs.regions[r].local_faces.front();
        out << "color " << fs.faces[lf].comp << " "
            << lf - fs.comp_face_offset[fs.faces[lf].comp] << " "
            << (g.region_colors[r] == FaceColor::Black ? "black" : "white") << "\n";
    }
}

EmbeddedColoredGraph read_colored_graph(std::istream& in) {
    EmbeddedColoredGraph g;
    std::string line;
    int cur_comp = -1;
    std::vector<std::tuple<int, int, FaceColor>> color_lines;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "m") {
            if (!(ls >> g.m)) throw std::runtime_error("bad m line");
        } else if (tag == "comp") {
            int idx;
            if (!(ls >> idx) || idx != static_cast<int>(g.comps.size()))
                throw std::runtime_error("components must appear in order");
            g.comps.emplace_back();
            ++cur_comp;
        } else if (tag == "v") {
            if (cur_comp < 0) throw std::runtime_error("vertex line before comp");
            std::string head;
            if (!(ls >> head) || head.back() != ':')
                throw std::runtime_error("bad vertex line");
            int v = std::stoi(head.substr(0, head.size() - 1));
            std::vector<int> nb;
            int u;
            while (ls >> u) nb.push_back(u);
            auto& comp = g.comps[cur_comp];
            if (comp.rot.count(v)) throw std::runtime_error("repeated vertex line");
            comp.verts.push_back(v);
            comp.rot[v] = std::move(nb);
        } else if (tag == "nest") {
            Nesting nst;
            std::string kw;
            if (!(ls >> nst.child >> nst.child_face >> kw >> nst.parent >>
                  nst.parent_face) ||
                kw != "in")
                throw std::runtime_error("bad nest line");
            g.nesting.push_back(nst);
        } else if (tag == "color") {
            int comp, face;
            std::string col;
            if (!(ls >> comp >> face >> col) || (col != "black" && col != "white"))
                throw std::runtime_error("bad color line");
            color_lines.emplace_back(comp, face,
                                     col == "black" ? FaceColor::Black : FaceColor::White);
        } else {
            throw std::runtime_error("unknown tag '" + tag + "'");
        }
    }
    FaceStructure fs = build_face_structure(g);
    g.region_colors.assign(fs.regions.size(), FaceColor::White);
    std::vector<bool> seen(fs.regions.size(), false);
    for (auto [comp, face, col] : color_lines) {
        int r = fs.region_of(comp, face);
        if (seen[r] && g.region_colors[r] != col)
            throw std::runtime_error("conflicting colors for one region");
        seen[r] = true;
        g.region_colors[r] = col;
    }
    for (bool s : seen)
        if (!s) throw std::runtime_error("region left uncolored");
    return g;
}

}  // namespace hamsphere
