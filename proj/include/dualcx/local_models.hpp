#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dualcx/simplicial_complex.hpp"

namespace dualcx {

enum class ModelKind {
  kSncPair,    // smooth ambient, divisor (y_1 ... y_r = 0)
  kNodalPair,  // ambient (y_1 ... y_r = y_n y_{n+1}), divisor (y_1 ... y_r = y_{n+1} = 0)
};

/// Local form of a pair, as a product of a core model with split-off
/// smooth factors. A split factor either carries one divisor branch
/// (a coordinate hyperplane) or is a plain smooth line.
struct LocalModel {
  ModelKind kind = ModelKind::kSncPair;
  std::vector<Label> branches;        // core divisor branches, r = size
  std::vector<Label> split_branches;  // branches living on split factors
  int smooth_factors = 0;             // split factors without a branch

  int r() const { return static_cast<int>(branches.size()); }
  /// Every divisor branch through the chart origin, sorted.
  std::vector<Label> all_branches() const;
  std::string equation() const;
  std::string describe() const;
  bool operator==(const LocalModel&) const = default;
};

/// Branch labels default to y1 .. yr.
LocalModel snc_pair(int r);
LocalModel nodal_pair(int r);

/// Blow-up of Z = D ∩ H for D = (y_1 ... y_r = 0), H = (y_n = 0).
struct ZBlowupResult {
  int r = 0;
  /// t != 0 chart: y_1 ... y_r * s' = y_n, a graph over the other coordinates.
  std::string smooth_chart_equation;
  bool smooth_chart_is_smooth = true;
  /// D_1 = (t = 0) never enters the t != 0 chart.
  bool divisor_meets_smooth_chart = false;
  /// s != 0 chart near D_1: the nodal pair.
  LocalModel nodal_chart;
  /// r = 1 gives y_1 = y_n y_{n+1}, a smooth graph.
  bool nodal_ambient_smooth = false;
};

ZBlowupResult z_blowup_model(int r);

/// Blow-up of the last core branch of a nodal pair. Chart 0 is the snc pair
/// with that single branch; chart 1 splits the branch off and keeps a nodal
/// pair one size smaller (size zero normalized to an snc pair).
std::array<LocalModel, 2> component_blowup(const LocalModel& model);

struct ChartNode {
  LocalModel model;
  std::optional<Label> blown_up;  // branch blown up at this node, if any
  std::vector<int> children;
  int depth = 0;
};

struct ChartTree {
  std::vector<ChartNode> nodes;  // nodes[0] is the root

  int depth() const;
  std::vector<int> leaves() const;
};

struct ResolutionTrace {
  ChartTree tree;
  std::vector<Label> blowup_order;
  bool leaves_snc = false;
  /// At every node the children's branches are subsets of the node's and
  /// the continuing chart keeps the full set.
  bool branches_preserved = false;
  /// The local dual complex (simplex on the branch labels) is unchanged.
  bool dual_complex_unchanged = false;
  bool certificate() const { return leaves_snc && branches_preserved && dual_complex_unchanged; }
};

ResolutionTrace small_resolution_trace(const LocalModel& model);

/// Chart-level check that blowing up (x_1 = ... = x_c = 0) on (x_1 ... x_n = 0)
/// removes the star of the center's cell from the local dual complex.
struct StrataChartResult {
  int n_branches = 0;
  int r_center = 0;
  std::vector<Label> before;
  /// Branches of the strict transform in chart U_i, i = 1..r_center.
  std::vector<std::vector<Label>> chart_branches;
  /// Factors of the global equation s_1 ... s_r * x_{r+1} ... x_n.
  int formal_factors_before = 0;
  int formal_factors_after = 0;
  /// r_center = 1: the center is a whole component and s_1 is a unit on P^0.
  bool degenerate = false;
  SimplicialComplex local_before;
  SimplicialComplex local_after;
  bool matches_star_removal = false;
};

StrataChartResult strata_blowup_chart(int n_branches, int r_center);

}  // namespace dualcx
