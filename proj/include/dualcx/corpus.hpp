#pragma once

#include <string>
#include <vector>

#include "dualcx/delta_complex.hpp"
#include "dualcx/simplicial_complex.hpp"

// Small named complexes used by the tests, the acceptance suite and the
// sample data files. Vertices are labelled "1", "2", ... unless noted.
namespace dualcx::corpus {

SimplicialComplex path3();                  // a - b - c
SimplicialComplex cycle(int k);             // k-gon, k >= 3
SimplicialComplex full_triangle();          // a, b, c with the 2-cell
SimplicialComplex boundary_tetrahedron();   // f = (4, 6, 4)
SimplicialComplex rp2_6();                  // 6-vertex real projective plane
SimplicialComplex torus_7();                // 7-vertex torus, f = (7, 21, 14)
SimplicialComplex klein_8();                // 8-vertex Klein bottle, f = (8, 24, 16)

/// Circle with one vertex and one loop edge.
DeltaComplex circle_delta();
/// Projective plane from one 2-cell glued along the word aa.
DeltaComplex rp2_delta();

struct Named {
  std::string name;
  SimplicialComplex complex;
};

/// path3, cycles 3..8, the tetrahedron boundary, rp2_6, torus_7, klein_8.
std::vector<Named> standard();

}  // namespace dualcx::corpus
