#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dualcx/arrangement.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/simplicial_complex.hpp"

namespace dualcx {

/// One blown-up center and the linear space it came from.
struct CenterRecord {
  Simplex center;
  /// Dimension of the intersection of the hyperplanes in `center` in P^{n+1}.
  int linear_dimension = 0;
  /// Earlier centers strictly containing this one: the stratum is the blow-up
  /// of that linear space along them, hence rational.
  std::vector<Simplex> blown_up_along;
};

struct BlowupStep {
  int r = 0;
  int center_dimension = 0;
  std::vector<Simplex> centers;
  std::vector<CenterRecord> ledger;
  std::size_t cells_removed = 0;
  FVector f_before;
  FVector f_after;
  /// Input and model agree on every cell of dimension >= n-r after the step.
  bool schedule_holds = false;
};

/// Symbolic snc configuration: each surviving label subset stands for the
/// unique stratum cut out by those components.
class SncModel {
 public:
  /// X_0 = union of the arrangement's hyperplanes: every subset of size
  /// at most n+1 is a stratum.
  static SncModel initial(const Arrangement& a, const SubsetCheckOptions& options = {});
  static SncModel from_strata(std::vector<Label> labels, int n, std::set<Simplex> strata);

  const std::vector<Label>& labels() const { return labels_; }
  int n() const { return n_; }
  const std::set<Simplex>& strata() const { return strata_; }
  const std::vector<BlowupStep>& history() const { return history_; }

 private:
  friend SncModel blowup_step(const SncModel&, const SimplicialComplex&, int);

  std::vector<Label> labels_;
  int n_ = 0;
  std::set<Simplex> strata_;
  std::vector<BlowupStep> history_;
};

SimplicialComplex dual_complex(const SncModel& m);

struct EmbeddingCheck {
  bool holds = false;
  std::optional<Simplex> witness;
  std::string reason;
};

/// The embedding of C into the dual complex of M at stage r: same vertices,
/// every cell of C a stratum, and equality in dimensions >= n-r+1.
EmbeddingCheck check_embedding(const SimplicialComplex& c, const SncModel& m, int r);

/// (n-r+1)-subsets that are strata of M but not cells of C, canonical order.
/// Each is asserted to be a maximal cell of the model's dual complex.
std::vector<Simplex> excess_cells(const SncModel& m, const SimplicialComplex& c, int r);

/// Blows up the union of the strata indexed by excess_cells and records the
/// step; verifies that C and the model then agree in dimensions >= n-r.
SncModel blowup_step(const SncModel& m, const SimplicialComplex& c, int r);

struct ConstructionOptions {
  std::optional<int> n;  // defaults to dim C
  std::optional<std::vector<mpq_class>> nodes;
  SubsetCheckOptions subsets;
};

struct ArrangementSummary {
  int n = 0;
  std::vector<Label> labels;
  std::vector<mpq_class> nodes;
  bool general_position = false;
  bool exhaustive = true;
  std::size_t subsets_checked = 0;
};

struct Certificate {
  bool labeled_equal = false;
  bool homology_match = false;
  bool holds() const { return labeled_equal && homology_match; }
};

struct BlowupTrace {
  SimplicialComplex input;
  ArrangementSummary arrangement;
  std::vector<BlowupStep> steps;
  SimplicialComplex final_complex;
  HomologyProfile input_homology;
  HomologyProfile final_homology;
  Certificate certificate;
};

/// Runs the full construction for steps r = 0 .. n-1 and certifies that the
/// final dual complex equals C as a labeled complex.
BlowupTrace run_construction(const SimplicialComplex& c, const ConstructionOptions& options = {});

}  // namespace dualcx
