#include "hamsphere/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace hamsphere {

std::optional<std::string> quick_reject(const Complex2& c) {
    const int n = c.n;
    if (static_cast<int>(c.triangles.size()) < 2 * n - 4)
        return "TOO_FEW_TRIANGLES(" + std::to_string(c.triangles.size()) + "<" +
               std::to_string(2 * n - 4) + ")";
    std::vector<int> tri_count(n, 0);
    std::vector<std::set<int>> nbrs(n);
    for (const Triangle& t : c.triangles)
        for (int i = 0; i < 3; ++i) {
            int v = t.v[i];
            ++tri_count[v];
            nbrs[v].insert(t.v[(i + 1) % 3]);
            nbrs[v].insert(t.v[(i + 2) % 3]);
        }
    for (int v = 0; v < n; ++v) {
        if (tri_count[v] < 3) return "VERTEX_IN_FEW_TRIANGLES(" + std::to_string(v) + ")";
        if (static_cast<int>(nbrs[v].size()) < 3)
            return "VERTEX_FEW_NEIGHBORS(" + std::to_string(v) + ")";
    }
    return std::nullopt;
}

namespace {

struct Searcher {
    int n;
    int want;  // 2n - 4
    std::vector<Triangle> cands;             // candidate triangles, lex sorted
    std::vector<std::vector<int>> by_edge;   // edge id -> candidate indices
    std::vector<bool> banned;                // excluded earlier roots
    std::vector<int> edge_deg;               // current degree per edge id
    std::vector<bool> in_set;                // candidate index -> chosen
    std::vector<int> chosen;                 // chosen candidate indices
    std::vector<bool> vertex_used;
    int used_count = 0;
    std::vector<int> open_edges;             // edge ids with degree 1

    std::uint64_t node_limit = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    SearchStats* stats = nullptr;
    bool timed_out = false;
    std::optional<std::vector<Triangle>> witness;

    int eid(int a, int b) const { return a < b ? a * n + b : b * n + a; }

    bool over_budget() {
        if (stats->nodes >= node_limit) return true;
        if (has_deadline && (stats->nodes & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            return true;
        return false;
    }

    void place(int ci) {
        const Triangle& t = cands[ci];
        in_set[ci] = true;
        chosen.push_back(ci);
        for (int i = 0; i < 3; ++i) {
            int v = t.v[i];
            if (!vertex_used[v]) {
                vertex_used[v] = true;
                ++used_count;
            }
            int e = eid(t.v[i], t.v[(i + 1) % 3]);
            (void)v;
            if (++edge_deg[e] == 1)
                open_edges.push_back(e);
            else
                open_edges.erase(std::find(open_edges.begin(), open_edges.end(), e));
        }
    }

    void unplace(int ci, const std::vector<bool>& was_used) {
        const Triangle& t = cands[ci];
        in_set[ci] = false;
        chosen.pop_back();
        for (int i = 0; i < 3; ++i) {
            int e = eid(t.v[i], t.v[(i + 1) % 3]);
            if (--edge_deg[e] == 1)
                open_edges.push_back(e);
            else
                open_edges.erase(std::find(open_edges.begin(), open_edges.end(), e));
            int v = t.v[i];
            if (vertex_used[v] && !was_used[i]) {
                vertex_used[v] = false;
                --used_count;
            }
        }
    }

    bool addable(int ci) const {
        if (in_set[ci] || banned[ci]) return false;
        const Triangle& t = cands[ci];
        for (int i = 0; i < 3; ++i)
            if (edge_deg[eid(t.v[i], t.v[(i + 1) % 3])] >= 2) return false;
        return true;
    }

    // true once a witness is found or the budget is exhausted
    bool expand() {
        ++stats->nodes;
        stats->max_depth = std::max(stats->max_depth, static_cast<int>(chosen.size()));
        if (over_budget()) {
            timed_out = true;
            return true;
        }
        if (open_edges.empty()) {
            std::vector<Triangle> tris;
            for (int ci : chosen) tris.push_back(cands[ci]);
            if (is_spanning_sphere(n, tris)) {
                std::sort(tris.begin(), tris.end());
                witness = std::move(tris);
                return true;
            }
            return false;
        }
        const int remaining = want - static_cast<int>(chosen.size());
        if (remaining <= 0) return false;
        if (static_cast<int>(open_edges.size()) > 3 * remaining) return false;
        if (n - used_count > remaining) return false;

        // fail-first: open edge with the fewest addable extensions
        int best_edge = -1, best_count = 1 << 30;
        for (int e : open_edges) {
            int cnt = 0;
            for (int ci : by_edge[e])
                if (addable(ci)) ++cnt;
            if (cnt < best_count || (cnt == best_count && e < best_edge)) {
                best_count = cnt;
                best_edge = e;
            }
            if (cnt == 0) break;
        }
        if (best_count == 0) return false;
        for (int ci : by_edge[best_edge]) {
            if (!addable(ci)) continue;
            const Triangle& t = cands[ci];
            std::vector<bool> was{vertex_used[t.v[0]], vertex_used[t.v[1]],
                                  vertex_used[t.v[2]]};
            place(ci);
            bool done = expand();
            unplace(ci, was);
            if (done) return true;
        }
        return false;
    }
};

}  // namespace

SearchResult find_spanning_sphere(const Complex2& c, const SearchBudget& budget) {
    SearchResult res;
    auto t0 = std::chrono::steady_clock::now();
    auto finish = [&](SearchOutcome o) {
        res.outcome = o;
        res.stats.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    };

    if (c.n < 4 || quick_reject(c)) return finish(SearchOutcome::NotFound);

    Searcher s;
    s.n = c.n;
    s.want = 2 * c.n - 4;
    s.cands = c.triangles;  // already lex sorted
    s.by_edge.assign(c.n * c.n, {});
    for (size_t i = 0; i < s.cands.size(); ++i) {
        const Triangle& t = s.cands[i];
        for (int j = 0; j < 3; ++j)
            s.by_edge[s.eid(t.v[j], t.v[(j + 1) % 3])].push_back(static_cast<int>(i));
    }
    s.banned.assign(s.cands.size(), false);
    s.edge_deg.assign(c.n * c.n, 0);
    s.in_set.assign(s.cands.size(), false);
    s.vertex_used.assign(c.n, false);
    s.node_limit = budget.node_limit;
    if (budget.time_limit_seconds > 0) {
        s.has_deadline = true;
        s.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(budget.time_limit_seconds));
    }
    s.stats = &res.stats;

    // root vertex: lexicographically smallest vertex of minimum degree
    std::vector<int> deg(c.n, 0);
    for (const Triangle& t : c.triangles)
        for (int v : t.v) ++deg[v];
    int root_v = 0;
    for (int v = 1; v < c.n; ++v)
        if (deg[v] < deg[root_v]) root_v = v;

    // iterate root triangles at that vertex; exclude earlier roots so each
    // sphere is searched exactly once over the whole loop
    for (size_t i = 0; i < s.cands.size(); ++i) {
        const Triangle& t = s.cands[i];
        if (t.v[0] != root_v && t.v[1] != root_v && t.v[2] != root_v) continue;
        std::vector<bool> was{false, false, false};
        s.place(static_cast<int>(i));
        bool done = s.expand();
        s.unplace(static_cast<int>(i), was);
        if (done) {
            if (s.timed_out) return finish(SearchOutcome::Timeout);
            res.witness = s.witness;
            return finish(SearchOutcome::Found);
        }
        s.banned[i] = true;
    }
    return finish(SearchOutcome::NotFound);
}

}  // namespace hamsphere
