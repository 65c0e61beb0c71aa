#include "dualcx/group_complex.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "dualcx/errors.hpp"
#include "dualcx/rational_matrix.hpp"

namespace dualcx {

Presentation parse_presentation(const std::vector<Label>& generators,
                                const std::vector<std::string>& relators) {
  Presentation p;
  std::map<char, std::size_t> index;
  for (const auto& g : generators) {
    if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0]))) {
      throw InvalidInput("generator '" + g + "' must be a single lowercase letter");
    }
    if (!index.emplace(g[0], p.generators.size()).second) {
      throw InvalidInput("duplicate generator '" + g + "'");
    }
    p.generators.push_back(g);
  }
  for (const auto& rel : relators) {
    if (rel.empty()) throw InvalidInput("empty relator");
    Word w;
    for (char ch : rel) {
      const auto uch = static_cast<unsigned char>(ch);
      const char lower = static_cast<char>(std::tolower(uch));
      auto it = index.find(lower);
      if (!std::isalpha(uch) || it == index.end()) {
        throw InvalidInput(std::string("unknown generator '") + ch + "' in relator " + rel);
      }
      w.push_back(Letter{it->second, std::isupper(uch) ? -1 : 1});
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

std::string format_word(const Presentation& p, const Word& w) {
  std::string out;
  for (const auto& l : w) {
    std::string g = p.generators.at(l.generator);
    if (l.exponent < 0) {
      std::transform(g.begin(), g.end(), g.begin(), [](unsigned char c) { return std::toupper(c); });
    }
    out += g;
  }
  return out;
}

namespace {

struct Builder {
  std::vector<DeltaCell> cells;
  int next = 0;

  int vertex(const Label& label) {
    cells.push_back(DeltaCell{next, 0, label, {}});
    return next++;
  }
  int cell(int dim, std::vector<int> faces) {
    cells.push_back(DeltaCell{next, dim, {}, std::move(faces)});
    return next++;
  }
};

void validate(const Presentation& p) {
  for (const auto& w : p.relators) {
    if (w.empty()) throw InvalidInput("empty relator");
    for (const auto& l : w) {
      if (l.generator >= p.generators.size()) throw InvalidInput("relator uses an unknown generator");
      if (l.exponent != 1 && l.exponent != -1) throw InvalidInput("letter exponents must be +1 or -1");
    }
  }
}

}  // namespace

DeltaComplex presentation_complex(const Presentation& p, const PresentationComplexOptions& options) {
  validate(p);
  Builder b;
  std::set<Label> used;
  auto fresh = [&](Label want) {
    while (!used.insert(want).second) want += "'";
    return want;
  };
  const int base = b.vertex(fresh("base"));
  // Loop for generator g: base -> g.1 -> g.2 -> base. An edge u -> v has
  // faces {v, u}.
  struct Loop {
    std::array<int, 4> vertices;  // base, g.1, g.2, base
    std::array<int, 3> edges;
  };
  std::vector<Loop> loops;
  for (const auto& g : p.generators) {
    Loop loop;
    const int v1 = b.vertex(fresh(g + ".1"));
    const int v2 = b.vertex(fresh(g + ".2"));
    loop.vertices = {base, v1, v2, base};
    loops.push_back(loop);
  }
  for (auto& loop : loops) {
    for (int k = 0; k < 3; ++k) {
      loop.edges[static_cast<std::size_t>(k)] =
          b.cell(1, {loop.vertices[static_cast<std::size_t>(k) + 1], loop.vertices[static_cast<std::size_t>(k)]});
    }
  }

  // Boundary walk of each relator polygon: (edge, start, end, forward).
  struct Step {
    int edge, from, to;
    bool forward;
  };
  std::vector<std::vector<Step>> walks;
  for (Word w : p.relators) {
    if (options.pad_short_relators && w.size() < 3) {
      const std::size_t g = w.front().generator;
      w.push_back(Letter{g, 1});
      w.push_back(Letter{g, -1});
    }
    std::vector<Step> walk;
    for (const auto& l : w) {
      const Loop& loop = loops[l.generator];
      if (l.exponent > 0) {
        for (std::size_t k = 0; k < 3; ++k) {
          walk.push_back({loop.edges[k], loop.vertices[k], loop.vertices[k + 1], true});
        }
      } else {
        for (std::size_t k = 3; k-- > 0;) {
          walk.push_back({loop.edges[k], loop.vertices[k + 1], loop.vertices[k], false});
        }
      }
    }
    walks.push_back(std::move(walk));
  }

  std::vector<int> centers;
  for (std::size_t i = 0; i < walks.size(); ++i) centers.push_back(b.vertex(fresh("r" + std::to_string(i + 1))));
  // Vertices must precede edges in a DeltaComplex only by dimension, so
  // spokes can be created after the loop edges.
  std::vector<std::vector<int>> spokes(walks.size());
  for (std::size_t i = 0; i < walks.size(); ++i) {
    for (const auto& step : walks[i]) spokes[i].push_back(b.cell(1, {step.from, centers[i]}));
  }
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const auto& walk = walks[i];
    const std::size_t len = walk.size();
    for (std::size_t j = 0; j < len; ++j) {
      const int here = spokes[i][j];
      const int there = spokes[i][(j + 1) % len];
      // Triangle [center, u, v] with the boundary edge u -> v as face 0.
      if (walk[j].forward) {
        b.cell(2, {walk[j].edge, there, here});
      } else {
        b.cell(2, {walk[j].edge, here, there});
      }
    }
  }
  return DeltaComplex(std::move(b.cells));
}

LowHomology h1_h2(const DeltaComplex& d) {
  const auto h = homology(d);
  LowHomology out;
  if (h.betti.size() > 1) {
    out.betti1 = h.betti[1];
    out.torsion1 = h.torsion[1];
  }
  if (h.betti.size() > 2) {
    out.betti2 = h.betti[2];
    out.torsion2 = h.torsion[2];
  }
  return out;
}

Abelianization abelianization(const Presentation& p) {
  validate(p);
  IntegerMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (const auto& l : p.relators[i]) m(i, l.generator) += l.exponent;
  }
  const auto snf = smith_normal_form(m);
  Abelianization a;
  a.free_rank = p.generators.size() - snf.rank;
  for (const auto& d : snf.invariant_factors) {
    if (d > 1) a.torsion.push_back(d);
  }
  return a;
}

std::vector<TwoCycle> two_cycle_basis(const DeltaComplex& d) {
  if (d.dim() < 2) return {};
  if (d.dim() > 2) throw InvalidInput("two_cycle_basis expects a complex of dimension 2");
  const auto kernel = RationalMatrix(boundary_matrix(d, 2)).nullspace();
  std::vector<TwoCycle> out;
  for (const auto& v : kernel) {
    mpz_class lcm_den = 1;
    for (const auto& x : v) lcm_den = lcm(lcm_den, x.get_den());
    mpz_class g = 0;
    for (const auto& x : v) g = gcd(g, mpz_class(x * lcm_den));
    TwoCycle c;
    for (const auto& x : v) {
      const mpz_class coeff = mpz_class(x * lcm_den) / g;
      if (abs(coeff) > 1) throw InvalidInput("2-cycle basis has a coefficient outside {-1,0,1}");
      c.coefficients.push_back(static_cast<int>(coeff.get_si()));
    }
    out.push_back(std::move(c));
  }
  return out;
}

void validate_cycle(const DeltaComplex& d, const TwoCycle& cycle) {
  const auto& triangles = d.cells_of_dim(2);
  const auto& coeffs = cycle.coefficients;
  if (coeffs.size() != triangles.size()) {
    throw InvalidInput("cycle has " + std::to_string(coeffs.size()) + " coefficients for " +
                       std::to_string(triangles.size()) + " 2-cells");
  }
  if (std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; })) {
    throw InvalidInput("cycle is zero");
  }
  for (int c : coeffs) {
    if (c < -1 || c > 1) throw InvalidInput("cycle coefficients must lie in {-1,0,1}");
  }
  const IntegerMatrix boundary = boundary_matrix(d, 2);
  for (std::size_t row = 0; row < boundary.rows(); ++row) {
    mpz_class sum = 0;
    for (std::size_t col = 0; col < triangles.size(); ++col) sum += boundary(row, col) * coeffs[col];
    if (sum != 0) throw InvalidInput("chain has nonzero boundary");
  }
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Corner positions (start, end) of face i of a triangle.
constexpr std::array<std::array<std::size_t, 2>, 3> kFaceCorners{{{1, 2}, {0, 2}, {0, 1}}};

}  // namespace

long CycleSurface::euler_characteristic() const {
  return static_cast<long>(vertex_image.size()) - static_cast<long>(edge_image.size()) +
         static_cast<long>(triangles.size());
}

bool CycleSurface::is_sphere() const {
  if (triangles.empty() || euler_characteristic() != 2) return false;
  UnionFind uf(triangles.size());
  std::map<int, std::size_t> first;
  for (std::size_t j = 0; j < triangles.size(); ++j) {
    for (int e : edges[j]) {
      auto [it, fresh] = first.emplace(e, j);
      if (!fresh) uf.unite(it->second, j);
    }
  }
  for (std::size_t j = 0; j < triangles.size(); ++j) {
    if (uf.find(j) != 0) return false;
  }
  return true;
}

CycleSurface cycle_surface(const DeltaComplex& d, const TwoCycle& cycle) {
  validate_cycle(d, cycle);
  const auto& all = d.cells_of_dim(2);
  CycleSurface s;
  std::vector<int> sign;
  for (std::size_t col = 0; col < all.size(); ++col) {
    if (cycle.coefficients[col] == 0) continue;
    s.triangles.push_back(all[col].id);
    sign.push_back(cycle.coefficients[col]);
  }
  const std::size_t n = s.triangles.size();
  s.edges.assign(n, {-1, -1, -1});

  // Occurrences of each edge, split by the orientation they induce.
  using Occurrence = std::pair<std::size_t, std::size_t>;  // (triangle, face)
  std::map<int, std::array<std::vector<Occurrence>, 2>> occurrences;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& faces = d.cell(s.triangles[j]).faces;
    for (std::size_t i = 0; i < 3; ++i) {
      const int induced = sign[j] * (i % 2 == 0 ? 1 : -1);
      occurrences[faces[i]][induced > 0 ? 0 : 1].emplace_back(j, i);
    }
  }
  UnionFind corners(3 * n);
  std::vector<Occurrence> representative;
  for (const auto& [edge, sides] : occurrences) {
    if (sides[0].size() != sides[1].size()) throw InvalidInput("chain has nonzero boundary");
    for (std::size_t k = 0; k < sides[0].size(); ++k) {
      const int id = static_cast<int>(s.edge_image.size());
      s.edge_image.push_back(edge);
      representative.push_back(sides[0][k]);
      const auto [j1, i1] = sides[0][k];
      const auto [j2, i2] = sides[1][k];
      s.edges[j1][i1] = id;
      s.edges[j2][i2] = id;
      for (std::size_t end = 0; end < 2; ++end) {
        corners.unite(3 * j1 + kFaceCorners[i1][end], 3 * j2 + kFaceCorners[i2][end]);
      }
    }
  }
  std::map<std::size_t, int> vertex_of_root;
  std::vector<int> corner_vertex(3 * n);
  for (std::size_t c = 0; c < 3 * n; ++c) {
    auto [it, fresh] = vertex_of_root.emplace(corners.find(c), static_cast<int>(s.vertex_image.size()));
    if (fresh) s.vertex_image.push_back(d.vertices_of(s.triangles[c / 3])[c % 3]);
    corner_vertex[c] = it->second;
  }
  for (const auto& [j, i] : representative) {
    // Face 0 of an edge is its end, face 1 its start.
    s.edge_ends.push_back({corner_vertex[3 * j + kFaceCorners[i][1]], corner_vertex[3 * j + kFaceCorners[i][0]]});
  }
  return s;
}

DeltaComplex cone_off(const DeltaComplex& d, const std::vector<TwoCycle>& cycles) {
  if (cycles.empty()) return d;
  std::vector<DeltaCell> cells = d.all_cells();
  std::set<Label> used;
  for (const auto& v : d.cells_of_dim(0)) used.insert(v.label);
  int next = d.next_id();
  std::vector<DeltaCell> added;

  for (std::size_t k = 0; k < cycles.size(); ++k) {
    const CycleSurface surface = cycle_surface(d, cycles[k]);
    Label apex_label = "cone" + std::to_string(k + 1);
    while (!used.insert(apex_label).second) apex_label += "'";
    const int apex = next++;
    added.push_back(DeltaCell{apex, 0, apex_label, {}});
    // cone(s) = [s, apex]: faces d_i = cone(d_i s) for i <= dim s, last = image of s.
    std::vector<int> cone_vertex, cone_edge;
    for (int v : surface.vertex_image) {
      cone_vertex.push_back(next);
      added.push_back(DeltaCell{next++, 1, {}, {apex, v}});
    }
    for (std::size_t e = 0; e < surface.edge_image.size(); ++e) {
      const auto& ends = surface.edge_ends[e];
      cone_edge.push_back(next);
      added.push_back(DeltaCell{next++, 2, {}, {cone_vertex[static_cast<std::size_t>(ends[0])],
                                                 cone_vertex[static_cast<std::size_t>(ends[1])],
                                                 surface.edge_image[e]}});
    }
    for (std::size_t j = 0; j < surface.triangles.size(); ++j) {
      std::vector<int> faces;
      for (int e : surface.edges[j]) faces.push_back(cone_edge[static_cast<std::size_t>(e)]);
      faces.push_back(surface.triangles[j]);
      added.push_back(DeltaCell{next++, 3, {}, std::move(faces)});
    }
  }
  cells.insert(cells.end(), added.begin(), added.end());
  return DeltaComplex(std::move(cells));
}

HomologyProfile attached_cell_homology(const DeltaComplex& d, const std::vector<TwoCycle>& cycles) {
  if (cycles.empty()) return homology(d);
  if (d.dim() != 2) throw InvalidInput("3-cells attach to a complex of dimension 2");
  for (const auto& c : cycles) validate_cycle(d, c);
  const auto f = d.f_vector().counts;
  IntegerMatrix top(f[2], cycles.size());
  for (std::size_t k = 0; k < cycles.size(); ++k)
    for (std::size_t row = 0; row < f[2]; ++row) top(row, k) = cycles[k].coefficients[row];
  return chain_homology({f[0], f[1], f[2], cycles.size()}, {boundary_matrix(d, 1), boundary_matrix(d, 2), top});
}

SuperperfectReport q_superperfect_report(const Presentation& p, const std::vector<TwoCycle>& cycles,
                                         const ReportOptions& options) {
  SuperperfectReport report;
  const DeltaComplex c2 = presentation_complex(p, {options.pad_short_relators});
  report.c2 = homology(c2);
  report.abelian = abelianization(p);
  const std::size_t b1 = report.c2.betti.size() > 1 ? report.c2.betti[1] : 0;
  const std::vector<mpz_class> t1 = report.c2.betti.size() > 1 ? report.c2.torsion[1] : std::vector<mpz_class>{};
  report.h1_matches_abelianization = b1 == report.abelian.free_rank && t1 == report.abelian.torsion;

  const DeltaComplex top = cone_off(c2, cycles);
  HomologyProfile h = report.c2;
  if (!cycles.empty()) {
    h = attached_cell_homology(c2, cycles);
    report.c3 = h;
    report.coned = homology(top);
    for (const auto& c : cycles) report.cycle_surfaces_spherical.push_back(cycle_surface(c2, c).is_sphere());
    report.h3_vanishes = h.betti.size() < 4 || (h.betti[3] == 0 && h.torsion[3].empty());
  }
  const std::size_t top_b1 = h.betti.size() > 1 ? h.betti[1] : 0;
  const std::size_t top_b2 = h.betti.size() > 2 ? h.betti[2] : 0;
  report.q_superperfect = top_b1 == 0 && top_b2 == 0;
  report.q_acyclic = is_q_acyclic(h);
  if (options.simplicialize) report.simplicial = barycentric_subdivision(top, 2);
  return report;
}

}  // namespace dualcx
