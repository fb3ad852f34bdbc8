#pragma once

#include <optional>
#include <vector>

#include "altan/exact_linalg.hpp"
#include "altan/graph.hpp"

namespace altan {

// Rational weighting indexed by vertex.
using VertexWeighting = RationalVector;

// was a kernel-extension request rejected? carries the obstruction C(q)
struct NotExtendable : Error {
    Rat obstruction;
    NotExtendable(const std::string& msg, Rat c) : Error(msg), obstruction(std::move(c)) {}
};

struct NotContractible : Error {
    int offending_vertex;
    NotContractible(const std::string& msg, int v) : Error(msg), offending_vertex(v) {}
};

// Checks lambda * q(v) == sum of q over neighbours of v, for every v.
bool check_local_condition(const Graph& g, const VertexWeighting& q, const Rat& lambda);

// C(q) = sum_{i=1..h} (-1)^i q(v_i) over the attachment tuple.
Rat functional_C(const VertexWeighting& q, const AttachmentSet& H);

// Same alternating sum over an explicit index block (typically the y-ring).
Rat functional_D(const VertexWeighting& q, const std::vector<int>& block);

// The alternating ring vector: +1 on y_i for even i, -1 for odd i, 0
// elsewhere. Requires pair.level >= 1 and even h; certified to lie in the
// kernel before being returned.
VertexWeighting special_vector(const AltanPair& pair);

// Extends a kernel vector q of pair.graph to a kernel vector of the altan.
// For odd h the free parameter is forced to C(q)/2; for even h extension
// requires C(q) == 0 and t defaults to 0. Output is certified.
VertexWeighting extend_kernel_vector(const AltanPair& pair, const VertexWeighting& q,
                                     std::optional<Rat> t = std::nullopt);

// Restricts a kernel vector of an altan (pair.level >= 1) to the parent
// vertices; requires the vector to vanish on the spoke block x_1..x_h.
// The restriction is certified against the parent graph.
VertexWeighting contract_kernel_vector(const AltanPair& pair, const VertexWeighting& q);

struct ExcessReport {
    int parent_nullity = 0;
    int altan_nullity = 0;
    int excess = 0;
    int h = 0;
    bool h_even = false;
};

// Computes both nullities and enforces the excess window: {0,1,2} for even
// h, {0} for odd h. A value outside the window throws TheoremViolation.
ExcessReport excess_nullity(const AltanPair& pair);

// Checks eta(altan^k) == eta(altan) for k = 2..k_max.
bool verify_iterated_stability(const AltanPair& pair, int k_max);

// Gaussian rebasing against the functional C: the first basis vector with
// C != 0 (if any) is moved to the front as q1 and every other vector q gets
// q += lambda * q1 with lambda = -C(q)/C(q1), so all but q1 have C == 0.
std::vector<VertexWeighting> rebase_basis(const std::vector<VertexWeighting>& basis,
                                          const AttachmentSet& H);

} // namespace altan
