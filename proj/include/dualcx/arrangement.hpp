#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dualcx/rational_matrix.hpp"
#include "dualcx/simplicial_complex.hpp"

namespace dualcx {

/// Hyperplanes H_i = (x_0 + a_i x_1 + ... + a_i^{n+1} x_{n+1} = 0) in P^{n+1},
/// one per label. `nodes` is empty when the rows were supplied directly.
struct Arrangement {
  int n = 0;
  std::vector<Label> labels;
  std::vector<mpq_class> nodes;
  std::vector<std::vector<mpq_class>> coeffs;

  int projective_dim() const { return n + 1; }
  std::size_t index_of(const Label& label) const;
  /// Coefficient rows of the labels in J, in the order given.
  RationalMatrix rows_for(const std::vector<Label>& subset) const;
};

/// Vandermonde arrangement. Default nodes are 0, 1, ..., |labels|-1.
Arrangement build_arrangement(const std::vector<Label>& labels, int n,
                              const std::optional<std::vector<mpq_class>>& nodes = std::nullopt);

/// Arrangement from explicit coefficient rows of length n+2.
Arrangement arrangement_from_rows(const std::vector<Label>& labels, int n,
                                  const std::vector<std::vector<mpq_class>>& rows);

/// Controls subset enumeration: a subset family larger than
/// `enumeration_limit` is sampled with `samples` draws from a fixed seed.
struct SubsetCheckOptions {
  std::size_t enumeration_limit = 1'000'000;
  std::size_t samples = 20'000;
  std::uint64_t seed = 0;
};

struct GeneralPositionReport {
  bool holds = false;
  bool exhaustive = true;
  std::size_t subsets_checked = 0;
  std::optional<std::vector<Label>> witness;  // a rank-deficient subset
};

/// Every min(|I|, n+2) of the coefficient rows must be independent;
/// checked by exact elimination.
GeneralPositionReport verify_general_position(const Arrangement& a,
                                              const SubsetCheckOptions& options = {});

/// Projective dimension of the intersection of the hyperplanes in J;
/// std::nullopt when the intersection is empty.
std::optional<int> stratum_dimension(const Arrangement& a, const std::vector<Label>& subset);

/// A rational point on the intersection, in homogeneous coordinates.
std::optional<std::vector<mpq_class>> stratum_point(const Arrangement& a,
                                                    const std::vector<Label>& subset);

struct InitialComplexReport {
  SimplicialComplex complex;
  std::size_t subsets_checked = 0;
  bool exhaustive = true;
};

/// Dual complex of the union of the hyperplanes: the n-skeleton of the
/// simplex on the labels, certified against stratum_dimension for every
/// subset of size <= n+2 (sampled above the enumeration limit).
InitialComplexReport initial_dual_complex(const Arrangement& a,
                                          const SubsetCheckOptions& options = {});

}  // namespace dualcx
