// Sphere-embedded graphs as rotation systems per connected component, glued
// by a containment forest, with a proper black/white face 2-coloring. Used
// to machine-check the planar estimates, the refined minimum-weight edge
// bound, the black-white face deficit, and the white-triangle Euler identity.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamsphere/interval.hpp"

namespace hamsphere {

enum class FaceColor { Black, White };

inline FaceColor other(FaceColor c) {
    return c == FaceColor::Black ? FaceColor::White : FaceColor::Black;
}

// One connected component: vertices carry global ids, each with its cyclic
// neighbor order. Faces are traced with the successor rule: after entering
// v from u, leave along the neighbor following u in rot[v].
struct MapComponent {
    std::vector<int> verts;                  // global vertex ids
    std::map<int, std::vector<int>> rot;     // vertex -> cyclic neighbor list

    int edge_count() const;
};

struct LocalFace {
    int comp = 0;
    int index = 0;                             // index within component's face list
    std::vector<std::array<int, 2>> walk;      // darts (u -> v) in trace order
    int edge_incidences() const { return static_cast<int>(walk.size()); }
};

// Faces of one component under the successor rule; deterministic order.
std::vector<LocalFace> trace_component_faces(const MapComponent& comp, int comp_index);

struct Nesting {
    int child = 0;        // component index >= 1
    int child_face = 0;   // local face of the child facing outward
    int parent = 0;       // component index
    int parent_face = 0;  // local face of the parent the child sits in
};

struct EmbeddedColoredGraph {
    int m = 0;  // total number of vertices (ids 0..m-1)
    std::vector<MapComponent> comps;
    std::vector<Nesting> nesting;           // tree rooted at component 0
    std::vector<FaceColor> region_colors;   // indexed by region id

    int component_count() const { return static_cast<int>(comps.size()); }
    int edge_count() const;
};

struct RegionData {
    FaceColor color = FaceColor::White;
    std::vector<int> local_faces;        // indices into FaceStructure::faces
    int boundary_components() const { return static_cast<int>(local_faces.size()); }
};

// The full face structure: local faces per component, merged into regions
// along the containment forest.
struct FaceStructure {
    std::vector<LocalFace> faces;          // all local faces, all components
    std::vector<int> face_region;          // local face index -> region id
    std::vector<RegionData> regions;
    std::vector<int> comp_face_offset;     // component -> first local face index

    int region_of(int comp, int local_face) const {
        return face_region[comp_face_offset[comp] + local_face];
    }
};

// Traces all faces, merges regions along the nesting forest, attaches the
// stored colors, and checks Euler's identity |F| - |E| + |V| = r + 1.
// Throws std::runtime_error on inconsistent input.
FaceStructure build_face_structure(const EmbeddedColoredGraph& g);

// Validates every structural invariant of a properly 2-colored spanning
// sphere embedding: simple rotations, even degrees >= 2, genus zero per
// component, a tree-shaped nesting forest, and every edge bounding one
// white and one black region. Returns an error description or nullopt.
std::optional<std::string> validate_colored_graph(const EmbeddedColoredGraph& g);

// The unique proper 2-coloring (up to global swap) with the given color for
// region 0, or nullopt when none exists.
std::optional<std::vector<FaceColor>> two_color_regions(const EmbeddedColoredGraph& g,
                                                        const FaceStructure& fs,
                                                        FaceColor region0);

// l_f - 1 summed over regions of the given color, plus one: the number of
// components surrounded by a face of that color when the outer face has
// that color (independent of which such face is chosen).
int surrounded_component_count(const FaceStructure& fs, FaceColor color);

// Same quantity read off the face-component incidence tree rooted at an
// explicit outer region; used as the independent second route.
int surrounded_component_count_rooted(const EmbeddedColoredGraph& g,
                                      const FaceStructure& fs, int outer_region,
                                      FaceColor color);

// Serialization (one graph per stream):
//   m <M>
//   comp <i>
//   v <id>: n1 n2 ... nk        (cyclic order)
//   nest <child> <childface> in <parent> <parentface>
//   color <comp> <face> black|white   (one line per region, any member face)
void write_colored_graph(std::ostream& out, const EmbeddedColoredGraph& g);
EmbeddedColoredGraph read_colored_graph(std::istream& in);

}  // namespace hamsphere
