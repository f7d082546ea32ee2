// Complete backtracking search for a spanning sphere inside a 2-complex,
// with certificate-producing quick rejection and explicit budgets.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamsphere/complex2.hpp"

namespace hamsphere {

struct SearchBudget {
    std::uint64_t node_limit = 10'000'000;
    double time_limit_seconds = 0;  // 0 = unlimited
};

enum class SearchOutcome { Found, NotFound, Timeout };

struct SearchStats {
    std::uint64_t nodes = 0;
    int max_depth = 0;
    double wall_seconds = 0;
};

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::NotFound;
    std::optional<std::vector<Triangle>> witness;
    SearchStats stats;
};

// Sound necessary-condition screen. Returns a reason when no spanning sphere
// can exist: fewer than 2n-4 triangles, a vertex in fewer than 3 triangles,
// or a vertex whose incident triangles span fewer than 3 neighbors.
std::optional<std::string> quick_reject(const Complex2& c);

// Sound and complete: Found implies the witness validates under
// is_spanning_sphere and is a subset of c; NotFound is returned only after
// exhausting the search space; an exceeded budget yields Timeout, never a
// false negative. Deterministic for fixed input and budget.
SearchResult find_spanning_sphere(const Complex2& c, const SearchBudget& budget = {});

}  // namespace hamsphere
