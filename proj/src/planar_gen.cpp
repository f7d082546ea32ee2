#include "hamsphere/planar_gen.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <atomic>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace hamsphere {

namespace {

bool component_is_sphere(const MapComponent& comp) {
    try {
        auto faces = trace_component_faces(comp, 0);
        int v = static_cast<int>(comp.rot.size());
        return static_cast<int>(faces.size()) - comp.edge_count() + v == 2;
    } catch (const std::exception&) {
        return false;
    }
}

// Threads a new closed cycle through chosen corners of one face, inserting
// the two fresh darts at each corner either before or after one another
// (`flip`); exactly one orientation keeps the component on the sphere.
bool add_cycle(MapComponent& comp, const LocalFace& face, const std::vector<int>& corner_pos,
               const std::vector<int>& gap_sizes, int& next_vertex, bool flip) {
    const int j = static_cast<int>(corner_pos.size());
    const auto& walk = face.walk;
    std::vector<int> corner_v(j);
    for (int i = 0; i < j; ++i) corner_v[i] = walk[corner_pos[i]][0];

    // fresh path contents per gap
    std::vector<std::vector<int>> paths(j);
    for (int i = 0; i < j; ++i)
        for (int s = 0; s < gap_sizes[i]; ++s) paths[i].push_back(next_vertex++);

    // cycle: c_0 P_0 c_1 P_1 ... c_{j-1} P_{j-1} back to c_0
    for (int i = 0; i < j; ++i) {
        int from = corner_v[i];
        const auto& path = paths[i];
        int to = corner_v[(i + 1) % j];
        std::vector<int> chain{from};
        chain.insert(chain.end(), path.begin(), path.end());
        chain.push_back(to);
        for (size_t s = 1; s + 1 < chain.size(); ++s)
            comp.rot[chain[s]] = {chain[s - 1], chain[s + 1]};
        for (size_t s = 1; s + 1 < chain.size(); ++s) comp.verts.push_back(chain[s]);
    }
    for (int i = 0; i < j; ++i) {
        int v = corner_v[i];
        int out_nb = paths[i].empty() ? corner_v[(i + 1) % j] : paths[i].front();
        const auto& prev_path = paths[(i + j - 1) % j];
        int in_nb = prev_path.empty() ? corner_v[(i + j - 1) % j] : prev_path.back();
        // the corner at walk position t sits between the darts (a_{t-1} -> v)
        // and (v -> a_{t+1}); insert right after a_{t-1} in rot[v]
        int t = corner_pos[i];
        int u_prev = walk[(t + walk.size() - 1) % walk.size()][0];
        auto& rv = comp.rot[v];
        auto it = std::find(rv.begin(), rv.end(), u_prev);
        assert(it != rv.end());
        std::vector<int> two = flip ? std::vector<int>{in_nb, out_nb}
                                    : std::vector<int>{out_nb, in_nb};
        rv.insert(it + 1, two.begin(), two.end());
    }
    return component_is_sphere(comp);
}

MapComponent build_random_component(int budget, std::mt19937_64& rng, int base_id) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        MapComponent comp;
        int next_vertex = base_id;
        int start_len = 3 + static_cast<int>(rng() % std::max(1, std::min(budget, 6) - 2));
        start_len = std::min(start_len, budget);
        for (int i = 0; i < start_len; ++i) {
            int v = next_vertex + i;
            comp.verts.push_back(v);
            comp.rot[v] = {next_vertex + (i + start_len - 1) % start_len,
                           next_vertex + (i + 1) % start_len};
        }
        next_vertex += start_len;
        bool ok = true;
        while (next_vertex - base_id < budget) {
            int remaining = budget - (next_vertex - base_id);
            auto faces = trace_component_faces(comp, 0);
            const LocalFace& face = faces[rng() % faces.size()];
            // choose 1 or 2 corners with distinct vertices, in walk order
            int j = (face.walk.size() >= 2 && rng() % 2 == 0) ? 2 : 1;
            std::vector<int> pos;
            for (int attempt = 0; attempt < 16 && static_cast<int>(pos.size()) < j;
                 ++attempt) {
                int p = static_cast<int>(rng() % face.walk.size());
                bool clash = false;
                for (int q : pos)
                    if (q == p || face.walk[q][0] == face.walk[p][0]) clash = true;
                if (!clash) pos.push_back(p);
            }
            j = static_cast<int>(pos.size());
            if (j == 0) {
                ok = false;
                break;
            }
            std::sort(pos.begin(), pos.end());
            int min_total = (j == 1) ? 2 : j;
            if (remaining < min_total) {
                // spend the rest as one petal if possible
                if (remaining >= 2 && j >= 1) {
                    pos.resize(1);
                    j = 1;
                    min_total = 2;
                } else {
                    ok = false;
                    break;
                }
            }
            int total = min_total +
                        (remaining > min_total
                             ? static_cast<int>(rng() % (remaining - min_total + 1))
                             : 0);
            std::vector<int> gaps(j, 1);
            if (j == 1) gaps[0] = 2;
            int extra = total - min_total;
            for (int e = 0; e < extra; ++e) ++gaps[rng() % j];

            MapComponent backup = comp;
            int nv_backup = next_vertex;
            if (!add_cycle(comp, face, pos, gaps, next_vertex, false)) {
                comp = backup;
                next_vertex = nv_backup;
                if (!add_cycle(comp, face, pos, gaps, next_vertex, true)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok && next_vertex - base_id == budget && component_is_sphere(comp)) return comp;
    }
    throw std::runtime_error("component growth exceeded the retry cap");
}

}  // namespace

void color_graph(EmbeddedColoredGraph& g, FaceColor region0) {
    g.region_colors.clear();
    FaceStructure fs = build_face_structure(g);
    auto colors = two_color_regions(g, fs, region0);
    if (!colors) throw std::runtime_error("graph admits no proper 2-coloring");
    g.region_colors = *colors;
}

EmbeddedColoredGraph generate_random_colored_map(int m, std::uint64_t seed,
                                                 bool allow_nesting, int retry_cap) {
    if (m < 3) throw std::invalid_argument("m >= 3 required");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < retry_cap; ++attempt) {
        // split the vertex budget into component sizes (each >= 3)
        std::vector<int> sizes;
        int left = m;
        while (allow_nesting && left >= 6 && rng() % 3 == 0) {
            int s = 3 + static_cast<int>(rng() % std::min(3, left - 3 - 2));
            sizes.push_back(s);
            left -= s;
        }
        sizes.insert(sizes.begin(), left);

        EmbeddedColoredGraph g;
        g.m = m;
        int base = 0;
        for (int s : sizes) {
            g.comps.push_back(build_random_component(s, rng, base));
            base += s;
        }
        for (int c = 1; c < g.component_count(); ++c) {
            Nesting nst;
            nst.child = c;
            nst.parent = static_cast<int>(rng() % c);
            auto pf = trace_component_faces(g.comps[nst.parent], nst.parent);
            auto cf = trace_component_faces(g.comps[c], c);
            nst.parent_face = static_cast<int>(rng() % pf.size());
            nst.child_face = static_cast<int>(rng() % cf.size());
            g.nesting.push_back(nst);
        }
        try {
            color_graph(g, rng() % 2 ? FaceColor::White : FaceColor::Black);
        } catch (const std::exception&) {
            continue;
        }
        if (!validate_colored_graph(g)) return g;
    }
    throw std::runtime_error("random map generation exceeded the retry cap");
}

// ---------------------------------------------------------------------
// exhaustive enumeration for m <= 8
// ---------------------------------------------------------------------

namespace {

struct LabeledGraph {
    int m = 0;
    std::uint32_t mask = 0;  // edge bitmask over pairs (i<j), lex order
};

int pair_index(int m, int i, int j) {
    // lex rank of (i<j)
    return i * m - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<std::array<int, 2>> mask_edges(int m, std::uint32_t mask) {
    std::vector<std::array<int, 2>> out;
    int idx = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++idx)
            if ((mask >> idx) & 1u) out.push_back({i, j});
    return out;
}

bool connected_spanning(int m, std::uint32_t mask) {
    std::vector<std::uint32_t> adj(m, 0);
    int idx = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++idx)
            if ((mask >> idx) & 1u) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    for (int v = 0; v < m; ++v)
        if (!adj[v]) return false;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < m; ++v)
            if ((frontier >> v) & 1u) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << m) - 1;
}

bool is_planar_graph(int m, std::uint32_t mask) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph g(m);
    for (auto [i, j] : mask_edges(m, mask)) boost::add_edge(i, j, g);
    return boost::boyer_myrvold_planarity_test(g);
}

std::vector<std::uint32_t> adjacency_rows(int m, std::uint32_t mask) {
    std::vector<std::uint32_t> adj(m, 0);
    for (auto [i, j] : mask_edges(m, mask)) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
    }
    return adj;
}

// flat-array working set for the labeled-graph dedupe (m <= 8)
struct SmallGraph {
    std::uint32_t mask = 0;
    std::uint32_t adj[8] = {0};
    std::uint64_t codes[8] = {0};  // iso-invariant vertex codes
};

void fill_small_graph(int m, std::uint32_t mask, SmallGraph& g) {
    g.mask = mask;
    std::fill(g.adj, g.adj + 8, 0u);
    int idx = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++idx)
            if ((mask >> idx) & 1u) {
                g.adj[i] |= 1u << j;
                g.adj[j] |= 1u << i;
            }
    int deg[8];
    for (int v = 0; v < m; ++v) deg[v] = __builtin_popcount(g.adj[v]);
    for (int v = 0; v < m; ++v) {
        int tri = 0, nd[8], c = 0;
        for (int u = 0; u < m; ++u)
            if ((g.adj[v] >> u) & 1u) {
                tri += __builtin_popcount(g.adj[v] & g.adj[u]);
                nd[c++] = deg[u];
            }
        std::sort(nd, nd + c);
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&](std::uint64_t x) { h = (h ^ x) * 1099511628211ull; };
        mix(deg[v]);
        mix(tri);
        for (int i = 0; i < c; ++i) mix(nd[i]);
        g.codes[v] = h;
    }
}

std::uint64_t graph_signature(int m, const SmallGraph& g) {
    std::uint64_t sorted[8];
    std::copy(g.codes, g.codes + m, sorted);
    std::sort(sorted, sorted + m);
    std::uint64_t h = 1469598103934665603ull ^ static_cast<unsigned>(m);
    for (int i = 0; i < m; ++i) h = (h ^ sorted[i]) * 1099511628211ull;
    return h;
}

// backtracking isomorphism test with invariant-code candidate filtering
bool graphs_isomorphic(int m, const SmallGraph& a, const SmallGraph& b) {
    int map_ab[8], map_ba[8];
    std::fill(map_ab, map_ab + 8, -1);
    std::fill(map_ba, map_ba + 8, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == m) return true;
        for (int u = 0; u < m; ++u) {
            if (map_ba[u] != -1 || a.codes[v] != b.codes[u]) continue;
            bool ok = true;
            for (int q = 0; q < v && ok; ++q)
                if (((a.adj[v] >> q) & 1u) != ((b.adj[u] >> map_ab[q]) & 1u)) ok = false;
            if (!ok) continue;
            map_ab[v] = u;
            map_ba[u] = v;
            if (self(self, v + 1)) return true;
            map_ab[v] = -1;
            map_ba[u] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

bool is_three_connected(int m, const std::vector<std::uint32_t>& adj) {
    if (m < 4) return false;
    auto connected_without = [&](std::uint32_t removed) {
        std::uint32_t all = ((1u << m) - 1) & ~removed;
        if (!all) return true;
        std::uint32_t start = all & (~all + 1);
        std::uint32_t seen = start, frontier = start;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < m; ++v)
                if ((frontier >> v) & 1u) next |= adj[v] & all;
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == all;
    };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if (!connected_without((1u << a) | (1u << b))) return false;
    return true;
}

MapComponent component_from_rotations(const std::vector<std::vector<int>>& rot) {
    MapComponent comp;
    for (size_t v = 0; v < rot.size(); ++v)
        if (!rot[v].empty()) {
            comp.verts.push_back(static_cast<int>(v));
            comp.rot[static_cast<int>(v)] = rot[v];
        }
    return comp;
}

// all genus-zero rotation systems of one labeled graph, mirror-deduplicated
std::vector<MapComponent> planar_embeddings(int m, std::uint32_t mask) {
    auto adj = adjacency_rows(m, mask);
    std::vector<std::vector<int>> nbrs(m);
    for (int v = 0; v < m; ++v)
        for (int u = 0; u < m; ++u)
            if ((adj[v] >> u) & 1u) nbrs[v].push_back(u);

    std::vector<MapComponent> out;
    if (is_three_connected(m, adj)) {
        // unique embedding up to reflection: take the one Boyer-Myrvold finds
        using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                            boost::no_property,
                                            boost::property<boost::edge_index_t, int>>;
        Graph g(m);
        int ei = 0;
        for (auto [i, j] : mask_edges(m, mask)) {
            auto e = boost::add_edge(i, j, g).first;
            boost::put(boost::edge_index, g, e, ei++);
        }
        std::vector<std::vector<boost::graph_traits<Graph>::edge_descriptor>> emb(m);
        bool planar = boost::boyer_myrvold_planarity_test(
            boost::boyer_myrvold_params::graph = g,
            boost::boyer_myrvold_params::embedding = emb.data());
        if (!planar) return out;
        std::vector<std::vector<int>> rot(m);
        for (int v = 0; v < m; ++v)
            for (const auto& e : emb[v])
                rot[v].push_back(static_cast<int>(boost::target(e, g)) == v
                                     ? static_cast<int>(boost::source(e, g))
                                     : static_cast<int>(boost::target(e, g)));
        MapComponent comp = component_from_rotations(rot);
        assert(component_is_sphere(comp));
        out.push_back(std::move(comp));
        return out;
    }

    // Brute force over rotation systems with flat arrays: first neighbor
    // anchored, tails permuted, genus checked by a bitmask face trace.
    std::uint64_t product = 1;
    for (int v = 0; v < m; ++v) {
        std::uint64_t f = 1;
        for (size_t i = 2; i < nbrs[v].size(); ++i) f *= i;
        product *= f;
        if (product > 200'000'000ull)
            throw std::runtime_error("rotation enumeration unexpectedly large");
    }

    int deg[8] = {0};
    int rot[8][8];
    int pos[8][8];  // pos[v][u] = index of u in rot[v]
    int edges = 0;
    for (int v = 0; v < m; ++v) {
        deg[v] = static_cast<int>(nbrs[v].size());
        edges += deg[v];
    }
    edges /= 2;
    const int faces_needed = edges - m + 2;

    auto set_rot_row = [&](int v, const std::vector<int>& order) {
        for (int i = 0; i < deg[v]; ++i) {
            rot[v][i] = order[i];
            pos[v][order[i]] = i;
        }
    };

    auto genus_zero = [&]() {
        // orbits of darts under (u -> v) => (v -> successor of u at v)
        std::uint64_t visited = 0;
        int faces = 0;
        const int darts = 2 * edges;
        int seen = 0;
        for (int v = 0; v < m && seen < darts; ++v) {
            for (int i = 0; i < deg[v]; ++i) {
                int id = v * 8 + i;
                if ((visited >> id) & 1ull) continue;
                ++faces;
                if (faces > faces_needed) return false;
                int cv = v, ci = i;
                do {
                    visited |= 1ull << (cv * 8 + ci);
                    ++seen;
                    int w = rot[cv][ci];
                    int j = pos[w][cv];
                    cv = w;
                    ci = (j + 1) % deg[w];
                } while (!((visited >> (cv * 8 + ci)) & 1ull));
            }
        }
        return faces == faces_needed;
    };

    auto mirror_canonical = [&]() {
        // lexicographic comparison of the tail tuple against its reversal
        for (int v = 0; v < m; ++v)
            for (int i = 1; i < deg[v]; ++i) {
                int fwd = rot[v][i], rev = rot[v][deg[v] - i];
                if (rev != fwd) return rev > fwd;
            }
        return true;  // self-mirror
    };

    std::vector<std::vector<int>> tails(m);
    auto assign = [&](auto&& self, int v) -> void {
        if (v == m) {
            if (!mirror_canonical() || !genus_zero()) return;
            std::vector<std::vector<int>> full(m);
            for (int u = 0; u < m; ++u)
                full[u].assign(rot[u], rot[u] + deg[u]);
            out.push_back(component_from_rotations(full));
            return;
        }
        std::vector<int>& tail = tails[v];
        tail.assign(nbrs[v].begin() + 1, nbrs[v].end());
        std::sort(tail.begin(), tail.end());
        std::vector<int> order(deg[v]);
        order[0] = nbrs[v][0];
        do {
            for (int i = 1; i < deg[v]; ++i) order[i] = tail[i - 1];
            set_rot_row(v, order);
            self(self, v + 1);
        } while (std::next_permutation(tail.begin(), tail.end()));
    };
    assign(assign, 0);
    return out;
}

std::vector<std::uint32_t> connected_even_planar_class_reps(int m) {
    const int dim = (m - 1) * (m - 2) / 2;  // cycle space dimension of K_m
    // fundamental cycles of the star spanning tree: {i,j} + {0,i} + {0,j}
    std::vector<std::uint32_t> basis;
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::uint32_t c = 0;
            c |= 1u << pair_index(m, i, j);
            c |= 1u << pair_index(m, 0, i);
            c |= 1u << pair_index(m, 0, j);
            basis.push_back(c);
        }
    assert(static_cast<int>(basis.size()) == dim);

    // signature-bucketed isomorphism dedupe: cheap per labeled copy, exact
    std::map<std::uint64_t, std::vector<SmallGraph>> buckets;
    std::vector<std::uint32_t> reps;
    const int max_edges = 3 * m - 6;
    SmallGraph g;
    std::uint32_t cur = 0;  // Gray-code walk over the cycle space
    for (std::uint64_t sel = 1; sel < (1ull << dim); ++sel) {
        cur ^= basis[__builtin_ctzll(sel)];
        if (!cur) continue;
        if (__builtin_popcount(cur) > max_edges) continue;  // cannot be planar
        if (!connected_spanning(m, cur)) continue;
        fill_small_graph(m, cur, g);
        auto& bucket = buckets[graph_signature(m, g)];
        bool fresh = true;
        for (const SmallGraph& r : bucket)
            if (graphs_isomorphic(m, g, r)) {
                fresh = false;
                break;
            }
        if (fresh) {
            bucket.push_back(g);
            if (is_planar_graph(m, cur)) reps.push_back(cur);
        }
    }
    return reps;
}

}  // namespace

std::vector<EmbeddedColoredGraph> exhaustive_connected_maps(int m) {
    if (m < 3 || m > 8) throw std::invalid_argument("exhaustive range is 3 <= m <= 8");
    const auto reps = connected_even_planar_class_reps(m);
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(reps.size())));
    std::vector<std::vector<MapComponent>> per_rep(reps.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (size_t i; (i = next.fetch_add(1)) < reps.size();)
            per_rep[i] = planar_embeddings(m, reps[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    std::vector<EmbeddedColoredGraph> out;
    for (auto& embs : per_rep)
        for (MapComponent& comp : embs) {
            EmbeddedColoredGraph g;
            g.m = m;
            g.comps.push_back(std::move(comp));
            out.push_back(std::move(g));
        }
    return out;
}

std::vector<EmbeddedColoredGraph> exhaustive_two_component_maps(int m) {
    if (m < 6 || m > 8) throw std::invalid_argument("two-component range is 6 <= m <= 8");
    std::vector<EmbeddedColoredGraph> out;
    for (int s1 = 3; s1 <= m - 3; ++s1) {
        int s2 = m - s1;
        if (s2 < s1) break;  // unordered pair of sizes
        auto as = exhaustive_connected_maps(s1);
        auto bs = exhaustive_connected_maps(s2);
        for (size_t ia = 0; ia < as.size(); ++ia) {
            for (size_t ib = (s1 == s2 ? ia : 0); ib < bs.size(); ++ib) {
                const auto& A = as[ia].comps[0];
                const auto& B = bs[ib].comps[0];
                // shift B's vertex ids past A's
                MapComponent Bsh;
                for (int v : B.verts) Bsh.verts.push_back(v + s1);
                for (const auto& [v, nb] : B.rot) {
                    std::vector<int> nn;
                    for (int u : nb) nn.push_back(u + s1);
                    Bsh.rot[v + s1] = std::move(nn);
                }
                int fa = static_cast<int>(trace_component_faces(A, 0).size());
                int fb = static_cast<int>(trace_component_faces(Bsh, 1).size());
                for (int pf = 0; pf < fa; ++pf)
                    for (int cf = 0; cf < fb; ++cf) {
                        EmbeddedColoredGraph g;
                        g.m = m;
                        g.comps = {A, Bsh};
                        g.nesting = {Nesting{1, cf, 0, pf}};
                        out.push_back(std::move(g));
                    }
            }
        }
    }
    return out;
}

}  // namespace hamsphere
