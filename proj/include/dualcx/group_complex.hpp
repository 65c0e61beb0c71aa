#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dualcx/delta_complex.hpp"
#include "dualcx/homology.hpp"

namespace dualcx {

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Finite presentation <generators | relators>.
struct Presentation {
  std::vector<Label> generators;
  std::vector<Word> relators;
};

/// Relators are strings over single-letter generators: lowercase for the
/// generator, uppercase for its inverse ("abAB" is the commutator).
Presentation parse_presentation(const std::vector<Label>& generators,
                                const std::vector<std::string>& relators);

std::string format_word(const Presentation& p, const Word& w);

struct PresentationComplexOptions {
  /// Pad relators of length 1-2 with a backtrack g g^-1 so every attached
  /// polygon has at least three sides.
  bool pad_short_relators = true;
};

/// Wedge of circles, each subdivided into three edges at a base vertex,
/// with one fan-triangulated polygon per relator.
DeltaComplex presentation_complex(const Presentation& p, const PresentationComplexOptions& options = {});

/// H_1 and H_2 with torsion.
struct LowHomology {
  std::size_t betti1 = 0;
  std::size_t betti2 = 0;
  std::vector<mpz_class> torsion1;
  std::vector<mpz_class> torsion2;
};

LowHomology h1_h2(const DeltaComplex& d);

/// Abelianization from the relator exponent-sum matrix.
struct Abelianization {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;
  bool operator==(const Abelianization&) const = default;
};

Abelianization abelianization(const Presentation& p);

/// Integer 2-chain with coefficients in {-1, 0, 1}, indexed by the position
/// of the 2-cells in the complex.
struct TwoCycle {
  std::vector<int> coefficients;
};

/// Basis of H_2 for complexes without 3-cells, as primitive integer vectors
/// of ker d_2. Throws when a basis vector has a coefficient outside {-1,0,1}.
std::vector<TwoCycle> two_cycle_basis(const DeltaComplex& d);

/// Throws InvalidInput unless the cycle has one coefficient per 2-cell,
/// all in {-1, 0, 1}, and zero boundary.
void validate_cycle(const DeltaComplex& d, const TwoCycle& cycle);

/// Surface carried by a cycle: its triangles, with the occurrences of each
/// edge paired off (positive with negative, in cell order) and corners
/// identified along the pairs.
struct CycleSurface {
  std::vector<int> triangles;                  // 2-cell ids, cell order
  std::vector<std::array<int, 3>> edges;       // per triangle: surface edge of face i
  std::vector<std::array<int, 2>> edge_ends;   // per surface edge: surface vertex of face 0, 1
  std::vector<int> edge_image;                 // per surface edge: 1-cell id in d
  std::vector<int> vertex_image;               // per surface vertex: 0-cell id in d
  long euler_characteristic() const;
  /// Connected with Euler characteristic 2.
  bool is_sphere() const;
};

CycleSurface cycle_surface(const DeltaComplex& d, const TwoCycle& cycle);

/// Glues the cone over each cycle's surface to d along the surface. When
/// the surface is a 2-sphere this attaches a 3-ball with boundary the cycle.
DeltaComplex cone_off(const DeltaComplex& d, const std::vector<TwoCycle>& cycles);

/// Cellular homology of d with one 3-cell attached per cycle, its boundary
/// being the cycle. Agrees with homology(cone_off(d, cycles)) when every
/// cycle surface is a sphere.
HomologyProfile attached_cell_homology(const DeltaComplex& d, const std::vector<TwoCycle>& cycles);

struct SuperperfectReport {
  HomologyProfile c2;
  /// Cellular homology with one 3-cell per cycle.
  std::optional<HomologyProfile> c3;
  /// Homology of the Delta-complex from cone_off.
  std::optional<HomologyProfile> coned;
  std::vector<bool> cycle_surfaces_spherical;
  Abelianization abelian;
  bool h1_matches_abelianization = false;
  std::optional<bool> h3_vanishes;
  /// b_1 = b_2 = 0 on c3 (on the 2-complex when no cycles).
  bool q_superperfect = false;
  bool q_acyclic = false;
  /// Second barycentric subdivision of cone_off(C_2, cycles).
  std::optional<SimplicialComplex> simplicial;
};

struct ReportOptions {
  bool pad_short_relators = true;
  bool simplicialize = true;
};

SuperperfectReport q_superperfect_report(const Presentation& p, const std::vector<TwoCycle>& cycles = {},
                                         const ReportOptions& options = {});

}  // namespace dualcx
