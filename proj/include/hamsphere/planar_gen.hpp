// Instance generators for the planar-lemma checks: a randomized builder of
// properly 2-colorable sphere embeddings (closed-cycle growth plus nesting)
// and an exhaustive enumerator of all connected even planar embeddings on
// up to 8 vertices (up to relabeling and reflection).
#pragma once

#include <cstdint>
#include <vector>

#include "hamsphere/planar_map.hpp"

namespace hamsphere {

// Random member with exactly m vertices; throws after retry_cap failed
// attempts (validation is re-run on every output). allow_nesting controls
// whether extra nested components may be spawned.
EmbeddedColoredGraph generate_random_colored_map(int m, std::uint64_t seed,
                                                 bool allow_nesting = true,
                                                 int retry_cap = 64);

// All connected even simple planar embedded graphs on exactly m labeled
// vertices, one representative per (graph isomorphism x reflection) class,
// without face colors (callers pick colorings). 3 <= m <= 8.
std::vector<EmbeddedColoredGraph> exhaustive_connected_maps(int m);

// All two-component sphere configurations with component sizes s1 + s2 = m
// (each >= 3), enumerated over embedded classes, nesting faces, and the
// child's outward face. Colors unset.
std::vector<EmbeddedColoredGraph> exhaustive_two_component_maps(int m);

// Attaches one of the two proper colorings (chosen by region0).
void color_graph(EmbeddedColoredGraph& g, FaceColor region0);

}  // namespace hamsphere
