#include <doctest.h>

#include "dualcx/arrangement.hpp"
#include "dualcx/errors.hpp"
#include "oracles.hpp"

using namespace dualcx;

namespace {

std::vector<Label> pick(const std::vector<Label>& labels, const std::vector<std::size_t>& idx) {
  std::vector<Label> out;
  for (auto i : idx) out.push_back(labels[i]);
  return out;
}

// Rank of the rows for J, computed through the integer oracle after clearing
// denominators (default nodes are integers, so rows already are).
std::size_t oracle_rank(const Arrangement& a, const std::vector<Label>& subset) {
  IntegerMatrix m(subset.size(), static_cast<std::size_t>(a.n + 2));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    const auto& row = a.coeffs[a.index_of(subset[i])];
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = row[j].get_num();
  }
  return oracle::rank_q(m);
}

}  // namespace

TEST_CASE("build_arrangement rows") {
  const auto a = build_arrangement({"a", "b", "c"}, 1, std::vector<mpq_class>{0, 1, 2});
  CHECK(a.projective_dim() == 2);
  CHECK(a.coeffs == std::vector<std::vector<mpq_class>>{{1, 0, 0}, {1, 1, 1}, {1, 2, 4}});
  const auto b = build_arrangement({"a", "b"}, 0);
  CHECK(b.coeffs == std::vector<std::vector<mpq_class>>{{1, 0}, {1, 1}});
  CHECK_THROWS_AS(build_arrangement({"a", "b", "c"}, 1, std::vector<mpq_class>{0, 1, 0}), InvalidInput);
  CHECK_THROWS_AS(build_arrangement({"a", "a"}, 1), InvalidInput);
  CHECK_THROWS_AS(build_arrangement({}, 1), InvalidInput);

  const auto half = build_arrangement({"x", "y"}, 1, std::vector<mpq_class>{mpq_class(1, 2), mpq_class(-3, 4)});
  CHECK(half.coeffs[0][2] == mpq_class(1, 4));
  CHECK(half.coeffs[1][2] == mpq_class(9, 16));
}

TEST_CASE("general position") {
  const auto lines = build_arrangement({"a", "b", "c"}, 1);
  CHECK(verify_general_position(lines).holds);
  const auto big = build_arrangement(oracle::labels(8), 3);
  const auto report = verify_general_position(big);
  CHECK(report.holds);
  CHECK(report.exhaustive);
  CHECK(report.subsets_checked == oracle::binomial(8, 5));

  const auto bad = arrangement_from_rows({"a", "b", "c"}, 1, {{1, 0, 0}, {1, 1, 1}, {1, 1, 1}});
  const auto r = verify_general_position(bad);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(*r.witness == std::vector<Label>{"a", "b", "c"});
  CHECK_THROWS_AS(initial_dual_complex(bad), InvalidInput);
}

TEST_CASE("stratum dimensions") {
  const auto p2 = build_arrangement({"a", "b", "c"}, 1);
  CHECK(stratum_dimension(p2, {"a", "b"}) == 0);
  CHECK_FALSE(stratum_dimension(p2, {"a", "b", "c"}).has_value());
  const auto p3 = build_arrangement({"a", "b", "c", "d"}, 2);
  CHECK(stratum_dimension(p3, {"c"}) == 2);
  CHECK_THROWS_AS(stratum_dimension(p3, {"z"}), InvalidInput);

  const auto point = stratum_point(p3, {"a", "b"});
  REQUIRE(point);
  for (const auto& l : std::vector<Label>{"a", "b"}) {
    const auto& row = p3.coeffs[p3.index_of(l)];
    mpq_class dot = 0;
    for (std::size_t j = 0; j < row.size(); ++j) dot += row[j] * (*point)[j];
    CHECK(dot == 0);
  }
  CHECK_FALSE(stratum_point(p3, {"a", "b", "c", "d"}).has_value());
}

TEST_CASE("Vandermonde sub-rank property against the oracle") {
  for (int m = 1; m <= 8; ++m) {
    for (int n = 0; n <= 4; ++n) {
      const auto a = build_arrangement(oracle::labels(m), n);
      for (std::size_t k = 1; k <= std::min<std::size_t>(m, n + 2); ++k) {
        for (const auto& idx : oracle::subsets(m, k)) {
          const auto j = pick(a.labels, idx);
          const auto rank = oracle_rank(a, j);
          CHECK(rank == k);
          const auto dim = stratum_dimension(a, j);
          if (static_cast<int>(k) <= n + 1) {
            CHECK(dim == n + 1 - static_cast<int>(k));
          } else {
            CHECK_FALSE(dim.has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("initial dual complex") {
  CHECK(initial_dual_complex(build_arrangement({"a", "b", "c"}, 1)).complex == full_skeleton({"a", "b", "c"}, 1));
  CHECK(initial_dual_complex(build_arrangement({"a", "b", "c", "d"}, 2)).complex ==
        full_skeleton({"a", "b", "c", "d"}, 2));
  const auto seven = initial_dual_complex(build_arrangement(oracle::labels(7), 2));
  CHECK(seven.complex.f_vector().counts == std::vector<std::size_t>{7, 21, 35});
  CHECK(seven.exhaustive);
}

TEST_CASE("sampling above the enumeration limit is seeded") {
  SubsetCheckOptions options;
  options.enumeration_limit = 10;
  options.samples = 50;
  const auto a = build_arrangement(oracle::labels(8), 2);
  const auto r1 = verify_general_position(a, options);
  const auto r2 = verify_general_position(a, options);
  CHECK(r1.holds);
  CHECK_FALSE(r1.exhaustive);
  CHECK(r1.subsets_checked == r2.subsets_checked);
  const auto init = initial_dual_complex(a, options);
  CHECK_FALSE(init.exhaustive);
  CHECK(init.complex == full_skeleton(oracle::labels(8), 2));
}
