#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "altan/graph.hpp"

namespace altan {

// Connected sub-cubic plane graph, 2-connected, every degree-2 vertex on the
// outer face; bounded faces are the patch faces. Rotations are CCW.
struct PlanarPatch {
    Graph graph;
    std::vector<std::vector<int>> rotation;
    std::vector<std::vector<int>> faces; // directed vertex walks; faces[outer] is the outer face
    int outer = -1;

    int face_count() const { return static_cast<int>(faces.size()) - 1; } // bounded only
};

// Builds the face list from the rotation system, locates the outer face
// (the unique face containing all degree-2 vertices unless overridden) and
// validates the patch invariants.
PlanarPatch make_patch(Graph g, std::vector<std::vector<int>> rotation,
                       std::optional<int> outer_override = std::nullopt);

// Outer cycle traversed with the interior on the left; starts at the
// first vertex of the stored outer face walk.
std::vector<int> perimeter_walk(const PlanarPatch& p);

// Degree-2 perimeter vertices in perimeter order, canonicalised.
AttachmentSet natural_attachment_set(const PlanarPatch& p);

// Altan of a patch with its natural attachment, embedded so that the new
// 2h-ring bounds the new outer face.
PlanarPatch altan_of_patch(const PlanarPatch& p);

// Bounded-face size censuses of an altan and of the altanisation step
// (f_tilde = faces of the altan not inherited from the parent), checked
// against the Euler-derived identities.
struct FaceCensus {
    std::map<int, long long> f;       // bounded faces of the altan, by size
    std::map<int, long long> f_tilde; // new faces added by the altan step
    int n2 = 0, n3b = 0;              // parent perimeter degree counts
    bool parent_all_hexagons = false;
    bool parent_bipartite = false;
};

FaceCensus face_census(const PlanarPatch& parent, const PlanarPatch& alt);

// Perimeter degree word and its bay statistics. Runs of consecutive
// degree-3 perimeter vertices of length 1..4 are fissures, bays, coves and
// fjords; b = b2 + 2*b3 + 3*b4 counts adjacent degree-3 pairs.
struct BoundaryProfile {
    std::vector<int> code; // degree sequence along the perimeter walk
    int b1 = 0, b2 = 0, b3 = 0, b4 = 0;
    int b = 0;
    int n22 = 0; // adjacent degree-2 pairs
};

BoundaryProfile bay_features(const BoundaryProfile& profile);
BoundaryProfile boundary_profile(const PlanarPatch& p);

// Theorem-2 parity chain for bipartite patches:
// h = n2, p even, n3 even, and h, n3i, n3b, n, eta all share one parity.
bool parity_check(const PlanarPatch& p);

// Boundary-edge code of a benzenoid: runs of perimeter edges between
// consecutive degree-3 perimeter vertices, canonicalised to the
// lexicographically maximal rotation over both orientations. Benzene is "6".
std::string boundary_edge_code(const PlanarPatch& p);

// Inverse of boundary_edge_code; validates closure, simplicity and the
// round trip before returning the patch.
PlanarPatch parse_bec(const std::string& code);

// Exact perfect-matching count (Kekule count for benzenoids); memoised
// branch-and-bound over vertex bitmasks, capped at 64 vertices.
long long count_perfect_matchings(const Graph& g);

} // namespace altan
