#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "dualcx/simplicial_complex.hpp"

namespace dualcx {

struct DeltaCell {
  int id = 0;
  int dim = 0;
  Label label;             // 0-cells only
  std::vector<int> faces;  // ids of the dim-1 faces d_0 .. d_dim
};

/// Δ-complex: ordered simplices glued by explicit face maps.
///
/// Faces are referenced by id, so a k-cell may use the same face several
/// times (a loop edge has faces {v, v}). Construction validates the
/// simplicial identities d_i d_j = d_{j-1} d_i for i < j.
class DeltaComplex {
 public:
  DeltaComplex() = default;
  explicit DeltaComplex(std::vector<DeltaCell> cells);

  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }
  std::size_t size() const { return index_.size(); }

  const std::vector<DeltaCell>& cells_of_dim(int k) const;
  const DeltaCell& cell(int id) const;
  bool has_cell(int id) const { return index_.count(id) != 0; }
  /// Position of the cell among the cells of its dimension.
  std::size_t position(int id) const;
  int next_id() const;

  /// Vertex ids of a cell, in the cell's own vertex order.
  std::vector<int> vertices_of(int id) const;
  /// The face of `id` spanned by the given increasing vertex positions.
  int face_spanned(int id, const std::vector<int>& positions) const;

  FVector f_vector() const;
  /// All cells, ordered by dimension and then by insertion.
  std::vector<DeltaCell> all_cells() const;

 private:
  std::vector<std::vector<DeltaCell>> by_dim_;
  std::map<int, std::pair<int, std::size_t>> index_;
};

/// Canonical Δ-structure of a simplicial complex: ids follow the canonical
/// cell order dimension by dimension, face i deletes the i-th sorted vertex.
DeltaComplex to_delta_complex(const SimplicialComplex& c);

/// Reads a Δ-complex as a simplicial complex over its 0-cell labels.
/// Throws InvalidInput when a cell repeats a vertex or two cells share a
/// vertex set.
SimplicialComplex as_simplicial(const DeltaComplex& d);
bool is_simplicial(const DeltaComplex& d);

/// One round of barycentric subdivision, kept as a Δ-complex. Its vertices
/// are the cells of `d`, its k-cells the flags of face maps of length k+1.
DeltaComplex barycentric_subdivision_delta(const DeltaComplex& d);

/// `rounds` subdivisions followed by conversion to a simplicial complex.
/// Two rounds always give a simplicial complex; one round requires the
/// first subdivision to be simplicial already.
SimplicialComplex barycentric_subdivision(const DeltaComplex& d, int rounds);

}  // namespace dualcx
