#pragma once

#include <array>
#include <functional>
#include <vector>

#include "altan/patch.hpp"

namespace altan {

// Axial hexagonal lattice cell; neighbour k sits at angle 60k degrees.
struct Cell {
    int a = 0, b = 0;
    auto operator<=>(const Cell&) const = default;
};

inline constexpr std::array<Cell, 6> kHexDir = {
    Cell{1, 0}, Cell{0, 1}, Cell{-1, 1}, Cell{-1, 0}, Cell{0, -1}, Cell{1, -1}};

inline Cell operator+(Cell p, Cell q) { return {p.a + q.a, p.b + q.b}; }

// Sorted, translation-normalised cell set (min a and min b are both 0).
struct Polyhex {
    std::vector<Cell> cells;
    int size() const { return static_cast<int>(cells.size()); }
    bool operator==(const Polyhex&) const = default;
    bool operator<(const Polyhex& o) const { return cells < o.cells; }
};

Polyhex normalized(std::vector<Cell> cells);

// Minimum over the 12 lattice symmetries (6 rotations x reflection).
Polyhex canonical_polyhex(const Polyhex& p);

bool polyhex_connected(const std::vector<Cell>& cells);
bool polyhex_hole_free(const std::vector<Cell>& cells);

// No vertex shared by three cells.
bool is_catafused(const Polyhex& p);

inline constexpr int kDefaultEnumerationCap = 10;

// Streams one representative per isomorphism class with exactly eps cells
// (connected, hole-free), by canonical augmentation; deterministic order.
void enumerate_benzenoids(int eps, const std::function<void(const Polyhex&)>& visit,
                          int cap = kDefaultEnumerationCap);

// Same stream restricted to catafused systems, with subtree pruning.
void enumerate_catafused(int eps, const std::function<void(const Polyhex&)>& visit,
                         int cap = kDefaultEnumerationCap);

// Convex benzenoid: all six boundary sides free of degree-3 notches.
// Side lengths are counted in cells, cyclically, corners shared.
struct ConvexSpec {
    std::array<int, 6> sides{};
};

// All convex benzenoids with at most eps_max cells, each with its side
// vector (canonicalised over rotation and reflection), sorted by size then
// canonical form.
std::vector<std::pair<Polyhex, ConvexSpec>> enumerate_convex(int eps_max);

// Plane-graph realisation on the honeycomb lattice with CCW rotations.
PlanarPatch to_patch(const Polyhex& p);

} // namespace altan
