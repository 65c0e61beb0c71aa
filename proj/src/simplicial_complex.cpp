#include "dualcx/simplicial_complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

#include "dualcx/errors.hpp"

namespace dualcx {

Simplex make_simplex(std::vector<Label> labels) {
  if (labels.empty()) throw InvalidInput("simplex must have at least one vertex");
  std::sort(labels.begin(), labels.end());
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) throw InvalidInput("duplicate vertex label '" + *dup + "' in simplex");
  return labels;
}

bool is_face_of(const Simplex& face, const Simplex& cell) {
  return std::includes(cell.begin(), cell.end(), face.begin(), face.end());
}

long FVector::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    chi += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(counts[k]);
  }
  return chi;
}

namespace {

std::string describe(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i];
  }
  return out + "}";
}

void add_closure(const Simplex& s, std::set<Simplex>& out) {
  if (out.count(s)) return;
  const std::size_t n = s.size();
  // Subsets by bitmask; cells here never exceed a few dozen vertices.
  if (n > 30) throw InvalidInput("simplex " + describe(s) + " is too large");
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1UL << i)) face.push_back(s[i]);
    }
    out.insert(std::move(face));
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::set<Simplex> cells) : cells_(std::move(cells)) {
  for (const auto& s : cells_) {
    const std::size_t k = s.size() - 1;
    if (by_dim_.size() <= k) by_dim_.resize(k + 1);
    by_dim_[k].push_back(s);
    if (k == 0) vertices_.push_back(s.front());
  }
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Label>& vertices,
                                                 const std::vector<Simplex>& facets) {
  std::set<Simplex> cells;
  for (const auto& v : vertices) cells.insert(Simplex{v});
  for (const auto& f : facets) {
    for (const auto& v : f) {
      if (!vertices.empty() && !cells.count(Simplex{v})) throw InvalidInput("facet uses undeclared vertex '" + v + "'");
    }
    add_closure(make_simplex(f), cells);
  }
  return SimplicialComplex(std::move(cells));
}

SimplicialComplex SimplicialComplex::from_cells(std::set<Simplex> cells) {
  for (const auto& s : cells) {
    if (s.empty()) throw InvalidInput("empty cell is not stored");
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InvalidInput("cell " + describe(s) + " is not a sorted duplicate-free label list");
    }
    if (s.size() == 1) continue;
    // Closure under codimension-one faces is enough by induction on dimension.
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      if (!cells.count(face)) {
        throw InvalidInput("not face-closed: " + describe(face) + " missing under " + describe(s));
      }
    }
  }
  return SimplicialComplex(std::move(cells));
}

const std::vector<Simplex>& SimplicialComplex::cells_of_dim(int k) const {
  static const std::vector<Simplex> kNone;
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return kNone;
  return by_dim_[static_cast<std::size_t>(k)];
}

bool SimplicialComplex::has_vertex(const Label& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (const auto& s : cells_) {
    bool maximal = true;
    // A cell is maximal iff no one-vertex extension is a cell.
    for (const auto& v : vertices_) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      Simplex bigger = s;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
      if (cells_.count(bigger)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

FVector SimplicialComplex::f_vector() const {
  FVector f;
  for (const auto& layer : by_dim_) f.counts.push_back(layer.size());
  return f;
}

SimplicialComplex full_skeleton(const std::vector<Label>& labels, int k) {
  if (k < 0) throw InvalidInput("skeleton dimension must be non-negative");
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw InvalidInput("duplicate label '" + *dup + "'");
  }
  std::set<Simplex> cells;
  Simplex current;
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    if (!current.empty()) cells.insert(current);
    if (static_cast<int>(current.size()) == k + 1) return;
    for (std::size_t i = start; i < sorted.size(); ++i) {
      current.push_back(sorted[i]);
      grow(i + 1);
      current.pop_back();
    }
  };
  grow(0);
  return SimplicialComplex::from_cells(std::move(cells));
}

namespace {

void require_cell(const SimplicialComplex& c, const Simplex& sigma) {
  if (!c.contains(sigma)) throw InvalidInput("not a cell: " + describe(sigma));
}

}  // namespace

SimplicialComplex remove_star(const SimplicialComplex& c, const Simplex& sigma) {
  require_cell(c, sigma);
  std::set<Simplex> kept;
  for (const auto& s : c.cells()) {
    if (!is_face_of(sigma, s)) kept.insert(kept.end(), s);
  }
  return SimplicialComplex::from_cells(std::move(kept));
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& c, const Simplex& sigma,
                                      const Label& apex) {
  require_cell(c, sigma);
  if (c.has_vertex(apex)) throw InvalidInput("label '" + apex + "' already used");
  std::set<Simplex> cells;
  std::vector<Simplex> over;  // cells containing sigma
  for (const auto& s : c.cells()) {
    if (is_face_of(sigma, s)) {
      over.push_back(s);
    } else {
      cells.insert(s);
    }
  }
  const std::size_t m = sigma.size();
  for (const auto& gamma : over) {
    Simplex rest;
    std::set_difference(gamma.begin(), gamma.end(), sigma.begin(), sigma.end(),
                        std::back_inserter(rest));
    // Every proper subset tau of sigma, the empty one included.
    for (unsigned long mask = 0; mask + 1 < (1UL << m); ++mask) {
      std::vector<Label> cell = rest;
      for (std::size_t i = 0; i < m; ++i) {
        if (mask & (1UL << i)) cell.push_back(sigma[i]);
      }
      cell.push_back(apex);
      cells.insert(make_simplex(std::move(cell)));
    }
  }
  return SimplicialComplex::from_cells(std::move(cells));
}

std::set<Simplex> star(const SimplicialComplex& c, const Simplex& sigma) {
  require_cell(c, sigma);
  std::set<Simplex> out;
  for (const auto& s : c.cells()) {
    if (is_face_of(sigma, s)) out.insert(out.end(), s);
  }
  return out;
}

SimplicialComplex link(const SimplicialComplex& c, const Simplex& sigma) {
  require_cell(c, sigma);
  std::set<Simplex> out;
  for (const auto& s : c.cells()) {
    if (s.size() <= sigma.size() || !is_face_of(sigma, s)) continue;
    Simplex rest;
    std::set_difference(s.begin(), s.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
    out.insert(std::move(rest));
  }
  return SimplicialComplex::from_cells(std::move(out));
}

SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
  std::set<Simplex> out;
  for (const auto& s : c.cells()) {
    if (static_cast<int>(s.size()) <= k + 1) out.insert(out.end(), s);
  }
  return SimplicialComplex::from_cells(std::move(out));
}

std::vector<std::vector<Label>> connected_components(const SimplicialComplex& c) {
  const auto& verts = c.vertices();
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index = [&](const Label& v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  for (const auto& e : c.cells_of_dim(1)) {
    std::size_t a = find(index(e[0])), b = find(index(e[1]));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<Label>> groups;
  for (std::size_t i = 0; i < verts.size(); ++i) groups[find(i)].push_back(verts[i]);
  std::vector<std::vector<Label>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

const char* to_string(PseudomanifoldViolation v) {
  switch (v) {
    case PseudomanifoldViolation::kNone: return "none";
    case PseudomanifoldViolation::kNotPure: return "not_pure";
    case PseudomanifoldViolation::kDisconnectedLink: return "disconnected_link";
    case PseudomanifoldViolation::kRidgeDegree: return "ridge_degree";
    case PseudomanifoldViolation::kNotStronglyConnected: return "not_strongly_connected";
  }
  return "unknown";
}

PseudomanifoldCertificate is_normal_pseudomanifold(const SimplicialComplex& c) {
  if (c.empty()) throw InvalidInput("pseudomanifold check needs a nonempty complex");
  PseudomanifoldCertificate cert;
  const int d = c.dim();
  auto fail = [&](PseudomanifoldViolation v, Simplex w, std::string msg) {
    cert.holds = false;
    cert.violation = v;
    cert.witness = std::move(w);
    cert.message = std::move(msg);
    return cert;
  };

  for (const auto& f : c.facets()) {
    if (static_cast<int>(f.size()) - 1 != d) {
      return fail(PseudomanifoldViolation::kNotPure, f,
                  "maximal cell " + describe(f) + " has dimension below " + std::to_string(d));
    }
  }
  for (int k = 0; k <= d - 2; ++k) {
    for (const auto& s : c.cells_of_dim(k)) {
      if (connected_components(link(c, s)).size() != 1) {
        return fail(PseudomanifoldViolation::kDisconnectedLink, s,
                    "link of " + describe(s) + " is disconnected");
      }
    }
  }
  const auto& top = c.cells_of_dim(d);
  std::map<Simplex, std::vector<std::size_t>> ridge_owners;
  for (std::size_t t = 0; t < top.size(); ++t) {
    for (std::size_t i = 0; i < top[t].size() && d >= 1; ++i) {
      Simplex ridge = top[t];
      ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(i));
      ridge_owners[ridge].push_back(t);
    }
  }
  for (const auto& r : c.cells_of_dim(d - 1)) {
    const auto it = ridge_owners.find(r);
    const std::size_t count = it == ridge_owners.end() ? 0 : it->second.size();
    if (count != 2) {
      return fail(PseudomanifoldViolation::kRidgeDegree, r,
                  describe(r) + " lies in " + std::to_string(count) + " top cells, expected 2");
    }
  }
  // Facet adjacency through shared ridges.
  std::vector<std::size_t> parent(top.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [ridge, owners] : ridge_owners) {
    for (std::size_t i = 1; i < owners.size(); ++i) {
      std::size_t a = find(owners[0]), b = find(owners[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  for (std::size_t t = 0; t < top.size(); ++t) {
    if (find(t) != 0) {
      return fail(PseudomanifoldViolation::kNotStronglyConnected, top[t],
                  describe(top[t]) + " is not reachable from " + describe(top[0]) +
                      " through ridges");
    }
  }
  cert.holds = true;
  return cert;
}

namespace {

/// Complex re-encoded over vertex indices for the isomorphism search.
struct Indexed {
  std::vector<Label> names;
  std::set<std::vector<int>> cells;
  std::vector<std::vector<std::vector<int>>> incident;  // per vertex
  std::vector<std::vector<std::size_t>> signature;      // per vertex, count per dim
};

Indexed index_complex(const SimplicialComplex& c) {
  Indexed ix;
  ix.names = c.vertices();
  const int dims = c.dim() + 1;
  ix.incident.resize(ix.names.size());
  ix.signature.assign(ix.names.size(), std::vector<std::size_t>(static_cast<std::size_t>(dims), 0));
  for (const auto& s : c.cells()) {
    std::vector<int> cell;
    for (const auto& v : s) {
      cell.push_back(static_cast<int>(
          std::lower_bound(ix.names.begin(), ix.names.end(), v) - ix.names.begin()));
    }
    for (int v : cell) {
      ix.incident[static_cast<std::size_t>(v)].push_back(cell);
      ++ix.signature[static_cast<std::size_t>(v)][s.size() - 1];
    }
    ix.cells.insert(std::move(cell));
  }
  return ix;
}

class IsoSearch {
 public:
  IsoSearch(const Indexed& a, const Indexed& b)
      : a_(a), b_(b), fwd_(a.names.size(), -1), back_(b.names.size(), -1) {
    order_ = search_order();
  }

  bool run() { return extend(0); }

  std::map<Label, Label> mapping() const {
    std::map<Label, Label> m;
    for (std::size_t i = 0; i < fwd_.size(); ++i) {
      m[a_.names[i]] = b_.names[static_cast<std::size_t>(fwd_[i])];
    }
    return m;
  }

 private:
  // BFS over the 1-skeleton so each new vertex is constrained by mapped
  // neighbours; components start at their rarest-signature vertex.
  std::vector<int> search_order() const {
    const std::size_t n = a_.names.size();
    std::map<std::vector<std::size_t>, std::size_t> freq;
    for (const auto& s : a_.signature) ++freq[s];
    std::vector<int> seeds(n);
    std::iota(seeds.begin(), seeds.end(), 0);
    std::stable_sort(seeds.begin(), seeds.end(), [&](int x, int y) {
      return freq[a_.signature[static_cast<std::size_t>(x)]] <
             freq[a_.signature[static_cast<std::size_t>(y)]];
    });
    std::vector<bool> seen(n, false);
    std::vector<int> order;
    for (int seed : seeds) {
      if (seen[static_cast<std::size_t>(seed)]) continue;
      std::queue<int> q;
      q.push(seed);
      seen[static_cast<std::size_t>(seed)] = true;
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (const auto& cell : a_.incident[static_cast<std::size_t>(v)]) {
          if (cell.size() != 2) continue;
          int w = cell[0] == v ? cell[1] : cell[0];
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            q.push(w);
          }
        }
      }
    }
    return order;
  }

  bool consistent(int va, int vb) const {
    for (const auto& cell : a_.incident[static_cast<std::size_t>(va)]) {
      std::vector<int> image;
      bool complete = true;
      for (int u : cell) {
        int m = u == va ? vb : fwd_[static_cast<std::size_t>(u)];
        if (m < 0) {
          complete = false;
          break;
        }
        image.push_back(m);
      }
      if (!complete) continue;
      std::sort(image.begin(), image.end());
      if (!b_.cells.count(image)) return false;
    }
    for (const auto& cell : b_.incident[static_cast<std::size_t>(vb)]) {
      std::vector<int> pre;
      bool complete = true;
      for (int u : cell) {
        int m = u == vb ? va : back_[static_cast<std::size_t>(u)];
        if (m < 0) {
          complete = false;
          break;
        }
        pre.push_back(m);
      }
      if (!complete) continue;
      std::sort(pre.begin(), pre.end());
      if (!a_.cells.count(pre)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int va = order_[depth];
    for (std::size_t vb = 0; vb < b_.names.size(); ++vb) {
      if (back_[vb] >= 0) continue;
      if (a_.signature[static_cast<std::size_t>(va)] != b_.signature[vb]) continue;
      if (!consistent(va, static_cast<int>(vb))) continue;
      fwd_[static_cast<std::size_t>(va)] = static_cast<int>(vb);
      back_[vb] = va;
      if (extend(depth + 1)) return true;
      fwd_[static_cast<std::size_t>(va)] = -1;
      back_[vb] = -1;
    }
    return false;
  }

  const Indexed& a_;
  const Indexed& b_;
  std::vector<int> fwd_, back_, order_;
};

}  // namespace

IsomorphismResult isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                             IsoMode mode) {
  IsomorphismResult result;
  if (mode == IsoMode::kLabeled) {
    result.isomorphic = a == b;
    if (result.isomorphic) {
      for (const auto& v : a.vertices()) result.mapping[v] = v;
    }
    return result;
  }
  if (a.f_vector() != b.f_vector()) return result;
  const Indexed ia = index_complex(a);
  const Indexed ib = index_complex(b);
  auto sorted_sigs = [](std::vector<std::vector<std::size_t>> s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sorted_sigs(ia.signature) != sorted_sigs(ib.signature)) return result;
  IsoSearch search(ia, ib);
  if (search.run()) {
    result.isomorphic = true;
    result.mapping = search.mapping();
  }
  return result;
}

}  // namespace dualcx
