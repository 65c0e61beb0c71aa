#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dualcx {

using Label = std::string;

/// A simplex is the sorted, duplicate-free list of its vertex labels.
using Simplex = std::vector<Label>;

/// Sorts the labels and rejects duplicates or an empty list.
Simplex make_simplex(std::vector<Label> labels);

/// True when every label of `face` occurs in `cell` (both sorted).
bool is_face_of(const Simplex& face, const Simplex& cell);

struct FVector {
  std::vector<std::size_t> counts;

  int dim() const { return static_cast<int>(counts.size()) - 1; }
  long euler_characteristic() const;
  bool operator==(const FVector&) const = default;
};

/// Finite abstract simplicial complex over opaque string labels.
///
/// Every cell is stored explicitly, not only the facets. Cells iterate in
/// lexicographic order of their sorted labels, which is the canonical order
/// used for boundary signs and for serialization.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds the closure of `facets`. An empty `vertices` list takes the
  /// vertices from the facets; otherwise it must name every facet vertex.
  static SimplicialComplex from_facets(const std::vector<Label>& vertices,
                                       const std::vector<Simplex>& facets);

  /// Takes an explicit cell set and checks it is face-closed.
  static SimplicialComplex from_cells(std::set<Simplex> cells);

  const std::vector<Label>& vertices() const { return vertices_; }
  const std::set<Simplex>& cells() const { return cells_; }
  const std::vector<Simplex>& cells_of_dim(int k) const;

  bool contains(const Simplex& s) const { return cells_.count(s) != 0; }
  bool has_vertex(const Label& v) const;
  bool empty() const { return cells_.empty(); }
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t size() const { return cells_.size(); }

  /// Maximal cells, in canonical order.
  std::vector<Simplex> facets() const;
  FVector f_vector() const;

  bool operator==(const SimplicialComplex& other) const { return cells_ == other.cells_; }

 private:
  explicit SimplicialComplex(std::set<Simplex> cells);

  std::vector<Label> vertices_;
  std::set<Simplex> cells_;
  std::vector<std::vector<Simplex>> by_dim_;
};

SimplicialComplex full_skeleton(const std::vector<Label>& labels, int k);
SimplicialComplex remove_star(const SimplicialComplex& c, const Simplex& sigma);
SimplicialComplex stellar_subdivision(const SimplicialComplex& c, const Simplex& sigma,
                                      const Label& apex);

/// Open star: every cell having `sigma` as a face, `sigma` included.
std::set<Simplex> star(const SimplicialComplex& c, const Simplex& sigma);
SimplicialComplex link(const SimplicialComplex& c, const Simplex& sigma);
SimplicialComplex skeleton(const SimplicialComplex& c, int k);

/// Connected components of the 1-skeleton, each a sorted vertex list.
std::vector<std::vector<Label>> connected_components(const SimplicialComplex& c);

enum class PseudomanifoldViolation {
  kNone,
  kNotPure,
  kDisconnectedLink,
  kRidgeDegree,
  kNotStronglyConnected,
};

struct PseudomanifoldCertificate {
  bool holds = false;
  PseudomanifoldViolation violation = PseudomanifoldViolation::kNone;
  Simplex witness;
  std::string message;
};

const char* to_string(PseudomanifoldViolation v);

/// Checks, in order: purity, connectivity of links of cells of dimension
/// at most d-2, every ridge in exactly two facets, strong connectivity.
/// The certificate reports the first failing condition with a witness.
PseudomanifoldCertificate is_normal_pseudomanifold(const SimplicialComplex& c);

enum class IsoMode { kLabeled, kUnlabeled };

struct IsomorphismResult {
  bool isomorphic = false;
  /// Vertex bijection C1 -> C2; filled in unlabeled mode on success.
  std::map<Label, Label> mapping;
};

IsomorphismResult isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                             IsoMode mode);

}  // namespace dualcx
