#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "altan/patch.hpp"

namespace altan {

struct IngestResult {
    std::vector<PlanarPatch> patches;
    int skipped = 0; // records that failed patch validation
    std::vector<std::string> warnings;
};

// Reads a planar_code stream: ">>planar_code<<" header, then per record a
// vertex count (a leading 0 byte switches to 16-bit little-endian labels)
// followed by zero-terminated 1-based rotation lists. Rotations are taken
// verbatim; records that fail patch validation are skipped and counted.
IngestResult read_planar_code(std::istream& in);

void write_planar_code(std::ostream& out, const std::vector<PlanarPatch>& patches);

} // namespace altan
