#include "dualcx/corpus.hpp"

#include "dualcx/errors.hpp"

namespace dualcx::corpus {

namespace {

SimplicialComplex numbered(int vertices, const std::vector<std::vector<int>>& facets) {
  std::vector<Label> labels;
  for (int v = 1; v <= vertices; ++v) labels.push_back(std::to_string(v));
  std::vector<Simplex> cells;
  for (const auto& f : facets) {
    std::vector<Label> s;
    for (int v : f) s.push_back(std::to_string(v));
    cells.push_back(make_simplex(s));
  }
  return SimplicialComplex::from_facets(labels, cells);
}

}  // namespace

SimplicialComplex path3() {
  return SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

SimplicialComplex cycle(int k) {
  if (k < 3) throw InvalidInput("a simplicial cycle needs at least 3 vertices");
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i + 1, (i + 1) % k + 1});
  return numbered(k, edges);
}

SimplicialComplex full_triangle() {
  return SimplicialComplex::from_facets({"a", "b", "c"}, {{"a", "b", "c"}});
}

SimplicialComplex boundary_tetrahedron() {
  return numbered(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

SimplicialComplex rp2_6() {
  return numbered(6, {{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {1, 4, 6}, {1, 5, 6},
                      {2, 3, 6}, {2, 4, 5}, {2, 4, 6}, {3, 4, 5}, {3, 5, 6}});
}

SimplicialComplex torus_7() {
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 7; ++i) {
    faces.push_back({i + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1});
    faces.push_back({i + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1});
  }
  return numbered(7, faces);
}

SimplicialComplex klein_8() {
  return numbered(8, {{1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 6}, {2, 4, 7},
                      {2, 5, 6}, {2, 5, 7}, {3, 5, 7}, {3, 4, 6}, {3, 4, 8}, {3, 7, 8},
                      {4, 5, 8}, {4, 6, 7}, {5, 6, 8}, {6, 7, 8}});
}

DeltaComplex circle_delta() {
  return DeltaComplex({{0, 0, "v", {}}, {1, 1, {}, {0, 0}}});
}

DeltaComplex rp2_delta() {
  // Edges a, b are loops at v and c runs v -> w. The first triangle reads
  // a a b^-1; the second is a disk bounded by b.
  return DeltaComplex({{0, 0, "v", {}},
                       {1, 0, "w", {}},
                       {2, 1, {}, {0, 0}},
                       {3, 1, {}, {0, 0}},
                       {4, 1, {}, {1, 0}},
                       {5, 2, {}, {2, 3, 2}},
                       {6, 2, {}, {4, 4, 3}}});
}

std::vector<Named> standard() {
  std::vector<Named> out{{"path3", path3()}};
  for (int k = 3; k <= 8; ++k) out.push_back({"cycle" + std::to_string(k), cycle(k)});
  out.push_back({"boundary_tetrahedron", boundary_tetrahedron()});
  out.push_back({"rp2_6", rp2_6()});
  out.push_back({"torus_7", torus_7()});
  out.push_back({"klein_8", klein_8()});
  return out;
}

}  // namespace dualcx::corpus
