#pragma once

#include <gmpxx.h>

#include <vector>

#include "altan/graph.hpp"

namespace altan {

using Int = mpz_class;
using Rat = mpq_class;
using RationalVector = std::vector<Rat>;

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> entries; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}
    Int& at(int i, int j) { return entries[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return entries[static_cast<size_t>(i) * cols + j]; }
};

IntMatrix adjacency_matrix(const Graph& g);

// Exact rank via fraction-free Bareiss elimination with partial pivoting
// (largest absolute entry, earliest row on ties).
int rank_exact(IntMatrix m);

// Basis of the rational kernel {v : Mv = 0}. Pivots are chosen in fixed
// column order (first nonzero row); each basis vector is scaled to primitive
// integer form with positive leading entry, so the output is deterministic.
std::vector<RationalVector> kernel_basis(const IntMatrix& m);

// Nullity of the adjacency matrix. Uses a machine-word Bareiss fast path
// with overflow detection, falling back to arbitrary precision.
int nullity(const Graph& g);

// Independent floating-point check: counts adjacency eigenvalues below tol
// in absolute value. Not used by nullity(); it exists to cross-check it.
int nullity_float_oracle(const Graph& g, double tol = 1e-8);

} // namespace altan
