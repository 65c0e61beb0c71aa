#include "dualcx/blowup.hpp"

#include <algorithm>

#include "dualcx/errors.hpp"

namespace dualcx {

namespace {

std::string describe(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s[i];
  return out + "}";
}

/// True when some stratum has `s` as a proper face.
bool has_coface(const std::set<Simplex>& strata, const Simplex& s, const std::vector<Label>& labels) {
  for (const auto& v : labels) {
    if (std::binary_search(s.begin(), s.end(), v)) continue;
    Simplex bigger = s;
    bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
    if (strata.count(bigger)) return true;
  }
  return false;
}

FVector strata_f_vector(const std::set<Simplex>& strata) {
  FVector f;
  for (const auto& s : strata) {
    if (f.counts.size() < s.size()) f.counts.resize(s.size(), 0);
    ++f.counts[s.size() - 1];
  }
  return f;
}

}  // namespace

SncModel SncModel::initial(const Arrangement& a, const SubsetCheckOptions& options) {
  auto report = initial_dual_complex(a, options);
  SncModel m;
  m.labels_ = report.complex.vertices();
  m.n_ = a.n;
  m.strata_ = report.complex.cells();
  return m;
}

SncModel SncModel::from_strata(std::vector<Label> labels, int n, std::set<Simplex> strata) {
  std::sort(labels.begin(), labels.end());
  // Reuses the complex validation: face-closed, sorted cells.
  const auto complex = SimplicialComplex::from_cells(strata);
  if (complex.vertices() != labels) {
    throw InvalidInput("strata must contain exactly the singletons of the labels");
  }
  if (complex.dim() > n) throw InvalidInput("strata of more than n+1 components");
  SncModel m;
  m.labels_ = std::move(labels);
  m.n_ = n;
  m.strata_ = std::move(strata);
  return m;
}

SimplicialComplex dual_complex(const SncModel& m) { return SimplicialComplex::from_cells(m.strata()); }

EmbeddingCheck check_embedding(const SimplicialComplex& c, const SncModel& m, int r) {
  EmbeddingCheck check;
  if (c.vertices() != m.labels()) {
    check.reason = "vertex sets differ";
    return check;
  }
  for (const auto& s : c.cells()) {
    if (!m.strata().count(s)) {
      check.witness = s;
      check.reason = "cell " + describe(s) + " is not a stratum";
      return check;
    }
  }
  const std::size_t min_size = static_cast<std::size_t>(std::max(0, m.n() - r + 1)) + 1;
  for (const auto& s : m.strata()) {
    if (s.size() >= min_size && !c.contains(s)) {
      check.witness = s;
      check.reason = "stratum " + describe(s) + " of dimension " + std::to_string(s.size() - 1) +
                     " has no matching cell";
      return check;
    }
  }
  check.holds = true;
  return check;
}

std::vector<Simplex> excess_cells(const SncModel& m, const SimplicialComplex& c, int r) {
  if (r < 0 || r >= m.n()) {
    throw InvalidInput("step index " + std::to_string(r) + " outside 0.." + std::to_string(m.n() - 1));
  }
  const auto embedding = check_embedding(c, m, r);
  if (!embedding.holds) {
    throw CertificationFailure("embedding precondition fails at step " + std::to_string(r) + ": " +
                               embedding.reason);
  }
  const std::size_t size = static_cast<std::size_t>(m.n() - r + 1);
  std::vector<Simplex> out;
  for (const auto& s : m.strata()) {
    if (s.size() != size || c.contains(s)) continue;
    // No cell of C contains s, and strata above this size already match C.
    if (has_coface(m.strata(), s, m.labels())) {
      throw CertificationFailure("center " + describe(s) + " is not a maximal cell at step " +
                                 std::to_string(r));
    }
    out.push_back(s);
  }
  return out;
}

SncModel blowup_step(const SncModel& m, const SimplicialComplex& c, int r) {
  const auto centers = excess_cells(m, c, r);
  SncModel next = m;
  BlowupStep step;
  step.r = r;
  step.center_dimension = r;
  step.f_before = strata_f_vector(m.strata());
  for (const auto& center : centers) {
    // Centers are maximal, so the star of each is the center alone; the
    // loop still removes the full star.
    std::size_t removed = 0;
    for (auto it = next.strata_.begin(); it != next.strata_.end();) {
      if (is_face_of(center, *it)) {
        it = next.strata_.erase(it);
        ++removed;
      } else {
        ++it;
      }
    }
    if (removed != 1) {
      throw CertificationFailure("blowing up " + describe(center) + " removed " +
                                 std::to_string(removed) + " cells");
    }
    step.cells_removed += removed;
    CenterRecord record;
    record.center = center;
    record.linear_dimension = m.n() + 1 - static_cast<int>(center.size());
    for (const auto& earlier : m.history()) {
      for (const auto& e : earlier.centers) {
        if (is_face_of(center, e)) record.blown_up_along.push_back(e);
      }
    }
    step.ledger.push_back(std::move(record));
  }
  step.centers = centers;
  step.f_after = strata_f_vector(next.strata_);
  const auto schedule = check_embedding(c, next, r + 1);
  step.schedule_holds = schedule.holds;
  if (!schedule.holds) {
    throw CertificationFailure("dimension schedule fails after step " + std::to_string(r) + ": " +
                               schedule.reason);
  }
  next.history_.push_back(std::move(step));
  return next;
}

BlowupTrace run_construction(const SimplicialComplex& c, const ConstructionOptions& options) {
  if (c.empty()) throw InvalidInput("construction needs a nonempty complex");
  const int n = options.n.value_or(c.dim());
  if (n < c.dim()) {
    throw InvalidInput("construction dimension " + std::to_string(n) + " is below dim C = " +
                       std::to_string(c.dim()));
  }
  const Arrangement a = build_arrangement(c.vertices(), n, options.nodes);

  BlowupTrace trace;
  trace.input = c;
  trace.arrangement.n = n;
  trace.arrangement.labels = a.labels;
  trace.arrangement.nodes = a.nodes;
  const auto gp = verify_general_position(a, options.subsets);
  trace.arrangement.general_position = gp.holds;
  trace.arrangement.exhaustive = gp.exhaustive;
  trace.arrangement.subsets_checked = gp.subsets_checked;

  SncModel model = SncModel::initial(a, options.subsets);
  const auto start = check_embedding(c, model, 0);
  if (!start.holds) throw CertificationFailure("initial embedding fails: " + start.reason);
  for (int r = 0; r < n; ++r) model = blowup_step(model, c, r);

  trace.steps = model.history();
  trace.final_complex = dual_complex(model);
  trace.input_homology = homology(c);
  trace.final_homology = homology(trace.final_complex);
  trace.certificate.labeled_equal =
      isomorphic(trace.final_complex, c, IsoMode::kLabeled).isomorphic;
  trace.certificate.homology_match = trace.final_homology == trace.input_homology;
  return trace;
}

}  // namespace dualcx
