#include "dualcx/delta_complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <string>

#include "dualcx/errors.hpp"

namespace dualcx {

DeltaComplex::DeltaComplex(std::vector<DeltaCell> cells) {
  std::stable_sort(cells.begin(), cells.end(),
                   [](const DeltaCell& a, const DeltaCell& b) { return a.dim < b.dim; });
  std::set<Label> labels;
  for (auto& c : cells) {
    if (c.dim < 0) throw InvalidInput("cell " + std::to_string(c.id) + " has negative dimension");
    const auto d = static_cast<std::size_t>(c.dim);
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    if (!index_.emplace(c.id, std::make_pair(c.dim, by_dim_[d].size())).second) {
      throw InvalidInput("duplicate cell id " + std::to_string(c.id));
    }
    if (c.dim == 0) {
      if (!c.faces.empty()) throw InvalidInput("0-cell " + std::to_string(c.id) + " has faces");
      if (c.label.empty()) throw InvalidInput("0-cell " + std::to_string(c.id) + " has no label");
      if (!labels.insert(c.label).second) {
        throw InvalidInput("duplicate vertex label '" + c.label + "'");
      }
    } else if (c.faces.size() != d + 1) {
      throw InvalidInput("cell " + std::to_string(c.id) + " of dimension " +
                         std::to_string(c.dim) + " needs " + std::to_string(d + 1) + " faces");
    }
    by_dim_[d].push_back(std::move(c));
  }
  for (std::size_t d = 0; d < by_dim_.size(); ++d) {
    if (by_dim_[d].empty()) {
      throw InvalidInput("no cells of dimension " + std::to_string(d) +
                         " below cells of dimension " + std::to_string(by_dim_.size() - 1));
    }
  }
  for (const auto& layer : by_dim_) {
    for (const auto& c : layer) {
      for (int f : c.faces) {
        auto it = index_.find(f);
        if (it == index_.end() || it->second.first != c.dim - 1) {
          throw InvalidInput("cell " + std::to_string(c.id) + " has face " + std::to_string(f) +
                             " which is not a cell of dimension " + std::to_string(c.dim - 1));
        }
      }
      for (std::size_t j = 1; c.dim >= 2 && j < c.faces.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          const int lhs = cell(c.faces[j]).faces[i];
          const int rhs = cell(c.faces[i]).faces[j - 1];
          if (lhs != rhs) {
            throw InvalidInput("cell " + std::to_string(c.id) + " violates d_" +
                               std::to_string(i) + " d_" + std::to_string(j) + " = d_" +
                               std::to_string(j - 1) + " d_" + std::to_string(i));
          }
        }
      }
    }
  }
}

const std::vector<DeltaCell>& DeltaComplex::cells_of_dim(int k) const {
  static const std::vector<DeltaCell> kNone;
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return kNone;
  return by_dim_[static_cast<std::size_t>(k)];
}

const DeltaCell& DeltaComplex::cell(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InvalidInput("unknown cell id " + std::to_string(id));
  return by_dim_[static_cast<std::size_t>(it->second.first)][it->second.second];
}

std::size_t DeltaComplex::position(int id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InvalidInput("unknown cell id " + std::to_string(id));
  return it->second.second;
}

int DeltaComplex::next_id() const { return index_.empty() ? 0 : index_.rbegin()->first + 1; }

int DeltaComplex::face_spanned(int id, const std::vector<int>& positions) const {
  const DeltaCell* c = &cell(id);
  std::vector<int> pos = positions;
  while (static_cast<int>(pos.size()) < c->dim + 1) {
    // Drop the largest missing vertex; the simplicial identities make the
    // result independent of this choice.
    int missing = c->dim;
    while (std::binary_search(pos.begin(), pos.end(), missing)) --missing;
    for (int& p : pos) {
      if (p > missing) --p;
    }
    c = &cell(c->faces[static_cast<std::size_t>(missing)]);
  }
  return c->id;
}

std::vector<int> DeltaComplex::vertices_of(int id) const {
  const DeltaCell& c = cell(id);
  std::vector<int> out;
  for (int p = 0; p <= c.dim; ++p) out.push_back(face_spanned(id, {p}));
  return out;
}

FVector DeltaComplex::f_vector() const {
  FVector f;
  for (const auto& layer : by_dim_) f.counts.push_back(layer.size());
  return f;
}

std::vector<DeltaCell> DeltaComplex::all_cells() const {
  std::vector<DeltaCell> out;
  for (const auto& layer : by_dim_) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

DeltaComplex to_delta_complex(const SimplicialComplex& c) {
  std::map<Simplex, int> ids;
  std::vector<DeltaCell> cells;
  int next = 0;
  for (int k = 0; k <= c.dim(); ++k) {
    for (const auto& s : c.cells_of_dim(k)) {
      DeltaCell cell;
      cell.id = next;
      cell.dim = k;
      if (k == 0) {
        cell.label = s.front();
      } else {
        for (std::size_t i = 0; i < s.size(); ++i) {
          Simplex face = s;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
          cell.faces.push_back(ids.at(face));
        }
      }
      ids.emplace(s, next++);
      cells.push_back(std::move(cell));
    }
  }
  return DeltaComplex(std::move(cells));
}

namespace {

/// Vertex label sets of every cell, or the reason the complex is not simplicial.
std::optional<std::string> simplicial_cells(const DeltaComplex& d, std::set<Simplex>& out) {
  for (const auto& c : d.all_cells()) {
    std::vector<Label> labels;
    for (int v : d.vertices_of(c.id)) labels.push_back(d.cell(v).label);
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
      return "cell " + std::to_string(c.id) + " repeats a vertex";
    }
    if (!out.insert(labels).second) {
      return "cell " + std::to_string(c.id) + " shares its vertex set with another cell";
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_simplicial(const DeltaComplex& d) {
  std::set<Simplex> cells;
  return !simplicial_cells(d, cells).has_value();
}

SimplicialComplex as_simplicial(const DeltaComplex& d) {
  std::set<Simplex> cells;
  if (auto why = simplicial_cells(d, cells)) throw InvalidInput("not simplicial: " + *why);
  return SimplicialComplex::from_cells(std::move(cells));
}

DeltaComplex barycentric_subdivision_delta(const DeltaComplex& d) {
  using Chain = std::vector<std::uint32_t>;  // increasing vertex-position masks, last = full

  // Chains of nonempty subsets ending at `mask`, memoized by mask.
  std::map<std::uint32_t, std::vector<Chain>> memo;
  std::function<const std::vector<Chain>&(std::uint32_t)> chains_to =
      [&](std::uint32_t mask) -> const std::vector<Chain>& {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::vector<Chain> out{Chain{mask}};
    for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
      for (Chain ch : chains_to(sub)) {
        ch.push_back(mask);
        out.push_back(std::move(ch));
      }
    }
    std::sort(out.begin(), out.end());
    return memo.emplace(mask, std::move(out)).first->second;
  };

  const auto cells = d.all_cells();
  for (const auto& c : cells) {
    if (c.dim >= 31) throw InvalidInput("cell dimension too large to subdivide");
  }

  // Labels of the new vertices: old 0-cells keep theirs; higher cells are
  // named by their vertex tuple, disambiguated when the tuple repeats.
  std::map<int, Label> names;
  std::map<std::vector<Label>, std::vector<int>> by_tuple;
  for (const auto& c : cells) {
    if (c.dim == 0) {
      names[c.id] = c.label;
      continue;
    }
    std::vector<Label> tuple;
    for (int v : d.vertices_of(c.id)) tuple.push_back(d.cell(v).label);
    by_tuple[tuple].push_back(c.id);
  }
  std::set<Label> used;
  for (const auto& c : d.cells_of_dim(0)) used.insert(c.label);
  for (const auto& [tuple, ids] : by_tuple) {
    std::string base = "[";
    for (std::size_t i = 0; i < tuple.size(); ++i) base += (i ? "|" : "") + tuple[i];
    base += "]";
    for (std::size_t i = 0; i < ids.size(); ++i) {
      Label name = ids.size() == 1 ? base : base + "#" + std::to_string(i);
      if (!used.insert(name).second) {
        throw InvalidInput("subdivision label '" + name + "' collides with an existing label");
      }
      names[ids[i]] = name;
    }
  }

  std::map<std::pair<int, Chain>, int> ids;
  std::vector<DeltaCell> out;
  int next = 0;
  const int top = d.dim();
  for (int k = 0; k <= top; ++k) {
    for (const auto& c : cells) {
      if (c.dim < k) continue;
      const std::uint32_t full = (1U << (c.dim + 1)) - 1;
      for (const Chain& ch : chains_to(full)) {
        if (static_cast<int>(ch.size()) != k + 1) continue;
        DeltaCell cell;
        cell.id = next;
        cell.dim = k;
        if (k == 0) {
          cell.label = names.at(c.id);
        } else {
          for (int j = 0; j < k; ++j) {
            Chain rest = ch;
            rest.erase(rest.begin() + j);
            cell.faces.push_back(ids.at({c.id, rest}));
          }
          // Deleting the top of the flag moves to the face spanned by F_{k-1}.
          const std::uint32_t sub = ch[static_cast<std::size_t>(k - 1)];
          std::vector<int> positions;
          for (int p = 0; p <= c.dim; ++p) {
            if (sub & (1U << p)) positions.push_back(p);
          }
          Chain reindexed;
          for (int j = 0; j < k; ++j) {
            std::uint32_t m = 0;
            for (std::size_t q = 0; q < positions.size(); ++q) {
              if (ch[static_cast<std::size_t>(j)] & (1U << positions[q])) m |= 1U << q;
            }
            reindexed.push_back(m);
          }
          cell.faces.push_back(ids.at({d.face_spanned(c.id, positions), reindexed}));
        }
        ids.emplace(std::make_pair(c.id, ch), next++);
        out.push_back(std::move(cell));
      }
    }
  }
  return DeltaComplex(std::move(out));
}

SimplicialComplex barycentric_subdivision(const DeltaComplex& d, int rounds) {
  if (rounds != 1 && rounds != 2) throw InvalidInput("rounds must be 1 or 2");
  DeltaComplex current = barycentric_subdivision_delta(d);
  if (rounds == 2) current = barycentric_subdivision_delta(current);
  return as_simplicial(current);
}

}  // namespace dualcx
