#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "dualcx/delta_complex.hpp"
#include "dualcx/integer_matrix.hpp"
#include "dualcx/simplicial_complex.hpp"

namespace dualcx {

/// Unreduced homology: betti[k] = dim H_k(-, Q), torsion[k] = invariant
/// factors > 1 of H_k(-, Z).
struct HomologyProfile {
  std::vector<std::size_t> betti;
  std::vector<std::vector<mpz_class>> torsion;

  long euler_characteristic() const;
  bool operator==(const HomologyProfile&) const = default;
};

/// Matrix of the boundary map from k-cells to (k-1)-cells, 1 <= k <= dim.
/// Rows and columns follow the canonical cell order; the i-th face of a cell
/// carries sign (-1)^i.
IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k);
IntegerMatrix boundary_matrix(const DeltaComplex& c, int k);

/// Homology of an abstract chain complex given the cell counts per dimension
/// and boundaries[k-1] = matrix of the boundary from k-cells.
HomologyProfile chain_homology(const std::vector<std::size_t>& cell_counts,
                               const std::vector<IntegerMatrix>& boundaries);

HomologyProfile homology(const SimplicialComplex& c);
HomologyProfile homology(const DeltaComplex& c);

bool is_q_acyclic(const HomologyProfile& h);
bool is_q_acyclic(const SimplicialComplex& c);
bool is_q_acyclic(const DeltaComplex& c);
bool is_connected(const SimplicialComplex& c);
bool is_connected(const DeltaComplex& c);

}  // namespace dualcx
