#include "dualcx/homology.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "dualcx/errors.hpp"

namespace dualcx {

long HomologyProfile::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    chi += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(betti[k]);
  }
  return chi;
}

namespace {

void check_degree(int k, int dim) {
  if (k < 1 || k > dim) {
    throw InvalidInput("boundary degree " + std::to_string(k) + " outside 1.." +
                       std::to_string(dim));
  }
}

}  // namespace

IntegerMatrix boundary_matrix(const SimplicialComplex& c, int k) {
  check_degree(k, c.dim());
  const auto& rows = c.cells_of_dim(k - 1);
  const auto& cols = c.cells_of_dim(k);
  std::map<Simplex, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
  IntegerMatrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      Simplex face = cols[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      m(row_of.at(face), j) += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

IntegerMatrix boundary_matrix(const DeltaComplex& c, int k) {
  check_degree(k, c.dim());
  const auto& cols = c.cells_of_dim(k);
  IntegerMatrix m(c.cells_of_dim(k - 1).size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < cols[j].faces.size(); ++i) {
      m(c.position(cols[j].faces[i]), j) += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

HomologyProfile chain_homology(const std::vector<std::size_t>& cell_counts,
                               const std::vector<IntegerMatrix>& boundaries) {
  const std::size_t top = cell_counts.size();
  if (top == 0) throw InvalidInput("homology of the empty complex is not defined here");
  if (boundaries.size() + 1 != top) throw InvalidInput("boundary count does not match dimension");
  // forms[k] describes the boundary out of (k+1)-cells.
  std::vector<SmithForm> forms;
  for (const auto& b : boundaries) forms.push_back(smith_normal_form(b));
  HomologyProfile h;
  h.betti.resize(top);
  h.torsion.resize(top);
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t rank_out = k == 0 ? 0 : forms[k - 1].rank;
    const std::size_t rank_in = k + 1 < top ? forms[k].rank : 0;
    h.betti[k] = cell_counts[k] - rank_out - rank_in;
    if (k + 1 < top) {
      for (const auto& d : forms[k].invariant_factors) {
        if (d > 1) h.torsion[k].push_back(d);
      }
    }
  }
  return h;
}

HomologyProfile homology(const SimplicialComplex& c) {
  if (c.empty()) throw InvalidInput("homology of the empty complex is not defined here");
  std::vector<IntegerMatrix> boundaries;
  for (int k = 1; k <= c.dim(); ++k) boundaries.push_back(boundary_matrix(c, k));
  return chain_homology(c.f_vector().counts, boundaries);
}

HomologyProfile homology(const DeltaComplex& c) {
  if (c.empty()) throw InvalidInput("homology of the empty complex is not defined here");
  std::vector<IntegerMatrix> boundaries;
  for (int k = 1; k <= c.dim(); ++k) boundaries.push_back(boundary_matrix(c, k));
  return chain_homology(c.f_vector().counts, boundaries);
}

bool is_q_acyclic(const HomologyProfile& h) {
  if (h.betti.empty() || h.betti[0] != 1) return false;
  return std::all_of(h.betti.begin() + 1, h.betti.end(), [](std::size_t b) { return b == 0; });
}

bool is_q_acyclic(const SimplicialComplex& c) { return is_q_acyclic(homology(c)); }
bool is_q_acyclic(const DeltaComplex& c) { return is_q_acyclic(homology(c)); }

bool is_connected(const SimplicialComplex& c) {
  if (c.empty()) throw InvalidInput("connectivity of the empty complex is not defined here");
  return homology(skeleton(c, 1)).betti[0] == 1;
}

bool is_connected(const DeltaComplex& c) {
  if (c.empty()) throw InvalidInput("connectivity of the empty complex is not defined here");
  if (c.dim() == 0) return c.cells_of_dim(0).size() == 1;
  return chain_homology({c.cells_of_dim(0).size(), c.cells_of_dim(1).size()},
                        {boundary_matrix(c, 1)})
             .betti[0] == 1;
}

}  // namespace dualcx
