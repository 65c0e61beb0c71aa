#include "dualcx/local_models.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dualcx/errors.hpp"

namespace dualcx {

namespace {

std::vector<Label> coordinate_labels(const std::string& stem, int count) {
  std::vector<Label> out;
  for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::string product(const std::vector<Label>& factors) {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  return out;
}

/// Closure of the simplex on `labels`; empty complex for no labels.
SimplicialComplex simplex_on(const std::vector<Label>& labels) {
  if (labels.empty()) return {};
  return SimplicialComplex::from_facets(labels, {make_simplex(labels)});
}

SimplicialComplex union_of(const std::vector<SimplicialComplex>& parts) {
  std::set<Simplex> cells;
  for (const auto& p : parts) cells.insert(p.cells().begin(), p.cells().end());
  return SimplicialComplex::from_cells(std::move(cells));
}

}  // namespace

std::vector<Label> LocalModel::all_branches() const {
  std::vector<Label> out = branches;
  out.insert(out.end(), split_branches.begin(), split_branches.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string LocalModel::equation() const {
  std::string out;
  if (kind == ModelKind::kNodalPair) {
    out = "(" + product(branches) + " = yn1 = 0) in (" + product(branches) + " = yn*yn1)";
  } else if (branches.empty()) {
    out = "smooth, empty divisor";
  } else {
    out = "(" + product(branches) + " = 0) in smooth";
  }
  for (const auto& b : split_branches) out += " x (" + b + " = 0) in A1";
  if (smooth_factors > 0) out += " x A" + std::to_string(smooth_factors);
  return out;
}

std::string LocalModel::describe() const {
  std::string out = kind == ModelKind::kNodalPair ? "NODAL_PAIR(" : "SNC_PAIR(";
  out += std::to_string(r()) + ")";
  if (!split_branches.empty()) out += " x split{" + product(split_branches) + "}";
  return out;
}

LocalModel snc_pair(int r) {
  if (r < 0) throw InvalidInput("branch count must be non-negative");
  return LocalModel{ModelKind::kSncPair, coordinate_labels("y", r), {}, 0};
}

LocalModel nodal_pair(int r) {
  if (r < 1) throw InvalidInput("a nodal pair needs at least one branch");
  return LocalModel{ModelKind::kNodalPair, coordinate_labels("y", r), {}, 0};
}

ZBlowupResult z_blowup_model(int r) {
  if (r < 1) throw InvalidInput("blowing up D ∩ H needs at least one branch of D");
  ZBlowupResult z;
  z.r = r;
  // Blow-up equation y_1...y_r s = y_n t; on t != 0 solve for y_n.
  z.smooth_chart_equation = product(coordinate_labels("y", r)) + "*s = yn";
  z.smooth_chart_is_smooth = true;
  z.divisor_meets_smooth_chart = false;
  z.nodal_chart = nodal_pair(r);
  z.nodal_ambient_smooth = r == 1;
  return z;
}

std::array<LocalModel, 2> component_blowup(const LocalModel& model) {
  if (model.kind != ModelKind::kNodalPair || model.r() < 1) {
    throw InvalidInput("component blow-up applies to nodal pairs only, got " + model.describe());
  }
  const Label last = model.branches.back();
  // y'_r = y_r / y_{n+1}: only the blown-up branch remains, ambient smooth.
  LocalModel first{ModelKind::kSncPair, {last}, model.split_branches, model.smooth_factors};
  // y'_{n+1} = y_{n+1} / y_r: y_r splits off with its branch.
  LocalModel second = model;
  second.branches.pop_back();
  second.split_branches.push_back(last);
  if (second.branches.empty()) second.kind = ModelKind::kSncPair;
  return {first, second};
}

int ChartTree::depth() const {
  int d = 0;
  for (const auto& node : nodes) d = std::max(d, node.depth);
  return d;
}

std::vector<int> ChartTree::leaves() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].children.empty()) out.push_back(static_cast<int>(i));
  }
  return out;
}

ResolutionTrace small_resolution_trace(const LocalModel& model) {
  if (model.kind != ModelKind::kNodalPair || model.r() < 1) {
    throw InvalidInput("small resolution starts from a nodal pair, got " + model.describe());
  }
  ResolutionTrace trace;
  auto& nodes = trace.tree.nodes;
  nodes.push_back(ChartNode{model, std::nullopt, {}, 0});
  std::size_t current = 0;
  while (nodes[current].model.kind == ModelKind::kNodalPair) {
    const auto charts = component_blowup(nodes[current].model);
    const Label branch = nodes[current].model.branches.back();
    nodes[current].blown_up = branch;
    trace.blowup_order.push_back(branch);
    const int depth = nodes[current].depth + 1;
    for (const auto& chart : charts) {
      nodes[current].children.push_back(static_cast<int>(nodes.size()));
      nodes.push_back(ChartNode{chart, std::nullopt, {}, depth});
    }
    current = static_cast<std::size_t>(nodes[current].children.back());
  }

  trace.leaves_snc = true;
  for (int leaf : trace.tree.leaves()) {
    trace.leaves_snc = trace.leaves_snc &&
                       nodes[static_cast<std::size_t>(leaf)].model.kind == ModelKind::kSncPair;
  }
  trace.branches_preserved = true;
  for (const auto& node : nodes) {
    if (node.children.empty()) continue;
    const auto mine = node.model.all_branches();
    const auto& cont = nodes[static_cast<std::size_t>(node.children.back())].model;
    trace.branches_preserved = trace.branches_preserved && cont.all_branches() == mine;
    for (int child : node.children) {
      const auto theirs = nodes[static_cast<std::size_t>(child)].model.all_branches();
      trace.branches_preserved = trace.branches_preserved &&
                                 std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end());
    }
  }
  // Every branch passes through each chart origin, so a chart's local dual
  // complex is the simplex on its branches; the leaves must glue back to
  // the root's simplex.
  std::vector<SimplicialComplex> charts;
  for (int leaf : trace.tree.leaves()) {
    charts.push_back(simplex_on(nodes[static_cast<std::size_t>(leaf)].model.all_branches()));
  }
  trace.dual_complex_unchanged = union_of(charts) == simplex_on(model.all_branches());
  return trace;
}

StrataChartResult strata_blowup_chart(int n_branches, int r_center) {
  if (n_branches < 1) throw InvalidInput("local model needs at least one branch");
  if (r_center < 1 || r_center > n_branches) {
    throw InvalidInput("center size " + std::to_string(r_center) + " outside 1.." +
                       std::to_string(n_branches));
  }
  StrataChartResult out;
  out.n_branches = n_branches;
  out.r_center = r_center;
  out.before = coordinate_labels("x", n_branches);
  out.formal_factors_before = n_branches;
  out.formal_factors_after = r_center + (n_branches - r_center);
  out.degenerate = r_center == 1;

  // The equation x_1 ... x_n as an exponent vector (index 0 unused).
  const std::vector<int> monomial(static_cast<std::size_t>(n_branches) + 1, 1);
  int multiplicity = 0;  // order of vanishing along the center
  for (int j = 1; j <= r_center; ++j) multiplicity += monomial[static_cast<std::size_t>(j)];

  for (int i = 1; i <= r_center; ++i) {
    // Chart U_i: x_j = x'_j * x_i for j <= r_center, j != i. Exponents in
    // the chart coordinates; key 0 is the exceptional coordinate x_i.
    std::map<int, int> exps;
    for (int j = 1; j <= n_branches; ++j) {
      const int e = monomial[static_cast<std::size_t>(j)];
      if (j <= r_center) {
        exps[0] += e;
        if (j != i) exps[j] += e;
      } else {
        exps[j] += e;
      }
    }
    exps[0] -= multiplicity;
    if (exps[0] != 0) {
      throw CertificationFailure("exceptional divisor survives in the strict transform");
    }
    std::vector<Label> branches;
    for (const auto& [var, e] : exps) {
      if (var != 0 && e > 0) branches.push_back("x" + std::to_string(var));
    }
    std::sort(branches.begin(), branches.end());
    out.chart_branches.push_back(std::move(branches));
  }

  out.local_before = simplex_on(out.before);
  std::vector<SimplicialComplex> charts;
  for (const auto& b : out.chart_branches) charts.push_back(simplex_on(b));
  out.local_after = union_of(charts);
  Simplex center;
  for (int j = 1; j <= r_center; ++j) center.push_back("x" + std::to_string(j));
  out.matches_star_removal =
      out.local_after == remove_star(out.local_before, make_simplex(center));
  return out;
}

}  // namespace dualcx
