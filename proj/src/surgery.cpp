#include "dualcx/surgery.hpp"

#include <random>
#include <vector>

#include "dualcx/errors.hpp"

namespace dualcx {

DoubledComplex double_cover_complex(const SimplicialComplex& c) {
  if (c.empty()) throw InvalidInput("cannot double an empty complex");
  DoubledComplex dc;
  dc.base = c;
  dc.doubled_dim = c.dim();
  std::vector<DeltaCell> cells = to_delta_complex(c).all_cells();
  int next = static_cast<int>(cells.size());
  const auto& top = c.cells_of_dim(dc.doubled_dim);
  std::size_t first_top = cells.size() - top.size();
  // to_delta_complex numbers cells in canonical order, top cells last.
  for (std::size_t i = 0; i < top.size(); ++i) {
    DeltaCell twin = cells[first_top + i];
    twin.id = next++;
    if (dc.doubled_dim == 0) twin.label = twin.label + "'";
    dc.copies[top[i]] = {cells[first_top + i].id, twin.id};
    cells.push_back(std::move(twin));
  }
  dc.cells = DeltaComplex(std::move(cells));
  return dc;
}

SimplicialComplex select_preimages(const DoubledComplex& dc, const PreimageChoice& choice) {
  std::vector<DeltaCell> kept;
  std::map<int, bool> dropped;
  for (const auto& [cell, ids] : dc.copies) {
    auto it = choice.find(cell);
    if (it == choice.end()) throw InvalidInput("no preimage chosen for a top cell");
    if (it->second != 0 && it->second != 1) throw InvalidInput("preimage choice must be 0 or 1");
    dropped[ids[1 - it->second]] = true;
  }
  if (choice.size() != dc.copies.size()) throw InvalidInput("choice names a cell that is not doubled");
  for (auto& cell : dc.cells.all_cells()) {
    if (!dropped.count(cell.id)) kept.push_back(std::move(cell));
  }
  if (dc.doubled_dim == 0) {
    // Points have no boundary to share: the kept copy takes the base label.
    std::map<int, Label> base_label;
    for (const auto& [cell, ids] : dc.copies) base_label[ids[0]] = base_label[ids[1]] = cell.front();
    for (auto& cell : kept) cell.label = base_label.at(cell.id);
  }
  return as_simplicial(DeltaComplex(std::move(kept)));
}

SimplicialComplex select_preimages(const DoubledComplex& dc) {
  PreimageChoice all_first;
  for (const auto& [cell, ids] : dc.copies) all_first[cell] = 0;
  return select_preimages(dc, all_first);
}

RoundtripReport verify_roundtrip(const SimplicialComplex& c, const RoundtripOptions& options) {
  RoundtripReport report;
  const DoubledComplex dc = double_cover_complex(c);
  std::vector<Simplex> tops;
  for (const auto& [cell, ids] : dc.copies) tops.push_back(cell);

  auto check = [&](const PreimageChoice& choice) {
    ++report.choices_checked;
    if (select_preimages(dc, choice) == c) return true;
    report.counterexample = choice;
    return false;
  };

  const bool small = tops.size() < 64 && (std::uint64_t{1} << tops.size()) <= options.exhaustive_limit;
  report.exhaustive = small;
  report.holds = true;
  if (small) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << tops.size()); ++bits) {
      PreimageChoice choice;
      for (std::size_t i = 0; i < tops.size(); ++i) choice[tops[i]] = static_cast<int>((bits >> i) & 1U);
      if (!check(choice)) {
        report.holds = false;
        break;
      }
    }
    return report;
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    PreimageChoice choice;
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < tops.size(); ++i) {
      if (i % 64 == 0) word = rng();
      choice[tops[i]] = static_cast<int>((word >> (i % 64)) & 1U);
    }
    if (!check(choice)) {
      report.holds = false;
      break;
    }
  }
  return report;
}

}  // namespace dualcx
