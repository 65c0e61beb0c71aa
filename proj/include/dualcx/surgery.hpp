#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

#include "dualcx/delta_complex.hpp"
#include "dualcx/simplicial_complex.hpp"

namespace dualcx {

/// Dual complex of a double cover branched along a general ample divisor:
/// every top-dimensional cell has two preimages sharing one boundary, all
/// lower cells have one.
struct DoubledComplex {
  SimplicialComplex base;
  int doubled_dim = 0;
  DeltaComplex cells;
  std::map<Simplex, std::array<int, 2>> copies;  // top cell -> its two cell ids
};

DoubledComplex double_cover_complex(const SimplicialComplex& c);

/// Copy index (0 or 1) to keep for each top cell; the other copy is the
/// one removed by blowing up the chosen preimage point.
using PreimageChoice = std::map<Simplex, int>;

SimplicialComplex select_preimages(const DoubledComplex& dc, const PreimageChoice& choice);
SimplicialComplex select_preimages(const DoubledComplex& dc);

struct RoundtripOptions {
  /// Enumerate all choice functions when there are at most this many.
  std::uint64_t exhaustive_limit = 1U << 10;
  std::size_t samples = 1024;
  std::uint64_t seed = 0;
};

struct RoundtripReport {
  bool holds = false;
  bool exhaustive = true;
  std::size_t choices_checked = 0;
  std::optional<PreimageChoice> counterexample;
};

RoundtripReport verify_roundtrip(const SimplicialComplex& c, const RoundtripOptions& options = {});

}  // namespace dualcx
