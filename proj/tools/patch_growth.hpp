#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "altan/patch.hpp"

namespace altan::growth {

// A patch under face-by-face construction: CCW rotations plus the outer
// boundary cycle (interior on the left).
struct GrowthPatch {
    std::vector<std::vector<int>> rot;
    std::vector<int> boundary;
    std::vector<int> face_sizes; // bounded faces, in construction order
    int n = 0;

    int degree(int v) const { return static_cast<int>(rot[v].size()); }
};

GrowthPatch seed(int r);

// Glues a new r-gon along the boundary path of j edges starting at boundary
// position pos. Fails (nullopt) when endpoint/interior degree conditions or
// simplicity would be violated.
std::optional<GrowthPatch> grow(const GrowthPatch& p, int pos, int j, int r);

// Canonical form anchored at the outer face, invariant under rotation and
// reflection of the drawing.
std::vector<int> canonical_code(const GrowthPatch& p);

PlanarPatch to_planar_patch(const GrowthPatch& p);

// Enumerates one representative per isomorphism class of patches whose
// bounded faces all have sizes in `allowed`, with 1..max_faces faces.
void enumerate_patches(const std::vector<int>& allowed, int max_faces,
                       const std::function<void(const GrowthPatch&)>& visit);

} // namespace altan::growth
