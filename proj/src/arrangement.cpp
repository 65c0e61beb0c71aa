#include "dualcx/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "dualcx/errors.hpp"

namespace dualcx {

std::size_t Arrangement::index_of(const Label& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InvalidInput("unknown label '" + label + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

RationalMatrix Arrangement::rows_for(const std::vector<Label>& subset) const {
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& l : subset) rows.push_back(coeffs[index_of(l)]);
  RationalMatrix m(rows.size(), static_cast<std::size_t>(n + 2));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

namespace {

void check_labels(const std::vector<Label>& labels, int n) {
  if (labels.empty()) throw InvalidInput("arrangement needs at least one label");
  if (n < 0) throw InvalidInput("construction dimension must be non-negative");
  std::set<Label> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InvalidInput("duplicate label '" + l + "'");
  }
}

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value = value * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (value > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(value + 0.5L);
}

/// Calls `visit` on k-subsets of {0..n-1} (as sorted index lists): all of
/// them when few enough, otherwise a seeded sample. Stops when `visit`
/// returns false. Returns whether the family was enumerated exhaustively.
bool for_subsets(std::size_t n, std::size_t k, const SubsetCheckOptions& options,
                 std::size_t& visited, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  if (k == 0 || k > n) return true;
  if (binomial_capped(n, k, options.enumeration_limit) <= options.enumeration_limit) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      ++visited;
      if (!visit(idx)) return true;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) return true;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  // Raw engine output keeps the sample identical across standard libraries.
  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> pool(n);
  for (std::size_t s = 0; s < options.samples; ++s) {
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> idx(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(idx.begin(), idx.end());
    ++visited;
    if (!visit(idx)) break;
  }
  return false;
}

std::vector<Label> pick(const Arrangement& a, const std::vector<std::size_t>& idx) {
  std::vector<Label> out;
  for (auto i : idx) out.push_back(a.labels[i]);
  return out;
}

}  // namespace

Arrangement build_arrangement(const std::vector<Label>& labels, int n,
                              const std::optional<std::vector<mpq_class>>& nodes) {
  check_labels(labels, n);
  Arrangement a;
  a.n = n;
  a.labels = labels;
  if (nodes) {
    if (nodes->size() != labels.size()) {
      throw InvalidInput("expected " + std::to_string(labels.size()) + " nodes, got " +
                         std::to_string(nodes->size()));
    }
    a.nodes = *nodes;
  } else {
    for (std::size_t i = 0; i < labels.size(); ++i) a.nodes.emplace_back(static_cast<long>(i));
  }
  std::vector<mpq_class> sorted = a.nodes;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw InvalidInput("duplicate node " + dup->get_str());
  }
  for (const auto& node : a.nodes) {
    std::vector<mpq_class> row;
    mpq_class power = 1;
    for (int j = 0; j <= n + 1; ++j) {
      row.push_back(power);
      power *= node;
    }
    a.coeffs.push_back(std::move(row));
  }
  return a;
}

Arrangement arrangement_from_rows(const std::vector<Label>& labels, int n,
                                  const std::vector<std::vector<mpq_class>>& rows) {
  check_labels(labels, n);
  if (rows.size() != labels.size()) throw InvalidInput("one coefficient row per label required");
  for (const auto& r : rows) {
    if (r.size() != static_cast<std::size_t>(n + 2)) {
      throw InvalidInput("coefficient rows must have n+2 entries");
    }
  }
  Arrangement a;
  a.n = n;
  a.labels = labels;
  a.coeffs = rows;
  return a;
}

GeneralPositionReport verify_general_position(const Arrangement& a,
                                              const SubsetCheckOptions& options) {
  GeneralPositionReport report;
  const std::size_t k = std::min(a.labels.size(), static_cast<std::size_t>(a.n + 2));
  report.holds = true;
  report.exhaustive = for_subsets(a.labels.size(), k, options, report.subsets_checked,
                                  [&](const std::vector<std::size_t>& idx) {
                                    auto subset = pick(a, idx);
                                    if (a.rows_for(subset).rank() == k) return true;
                                    report.holds = false;
                                    report.witness = std::move(subset);
                                    return false;
                                  });
  return report;
}

std::optional<int> stratum_dimension(const Arrangement& a, const std::vector<Label>& subset) {
  if (subset.empty()) throw InvalidInput("stratum needs a nonempty label subset");
  std::set<Label> distinct(subset.begin(), subset.end());
  if (distinct.size() != subset.size()) throw InvalidInput("repeated label in stratum subset");
  const auto rank = static_cast<int>(a.rows_for(subset).rank());
  // k independent forms cut P^{n+1} down to dimension n+1-k; n+2 of them
  // leave only the zero vector.
  if (rank >= a.n + 2) return std::nullopt;
  return a.n + 1 - rank;
}

std::optional<std::vector<mpq_class>> stratum_point(const Arrangement& a,
                                                    const std::vector<Label>& subset) {
  auto kernel = a.rows_for(subset).nullspace();
  if (kernel.empty()) return std::nullopt;
  return kernel.front();
}

InitialComplexReport initial_dual_complex(const Arrangement& a,
                                          const SubsetCheckOptions& options) {
  const auto gp = verify_general_position(a, options);
  if (!gp.holds) {
    std::string w;
    for (const auto& l : *gp.witness) w += (w.empty() ? "" : ",") + l;
    throw InvalidInput("hyperplanes are not in general position: {" + w + "} is dependent");
  }
  InitialComplexReport report;
  report.subsets_checked = 0;
  const std::size_t top = std::min(a.labels.size(), static_cast<std::size_t>(a.n + 2));
  for (std::size_t size = 1; size <= top; ++size) {
    const bool full = for_subsets(
        a.labels.size(), size, options, report.subsets_checked,
        [&](const std::vector<std::size_t>& idx) {
          const auto subset = pick(a, idx);
          const auto dim = stratum_dimension(a, subset);
          const bool ok = size <= static_cast<std::size_t>(a.n + 1)
                              ? dim && *dim == a.n + 1 - static_cast<int>(size)
                              : !dim.has_value();
          if (!ok) {
            std::string w;
            for (const auto& l : subset) w += (w.empty() ? "" : ",") + l;
            throw CertificationFailure("stratum {" + w + "} has unexpected dimension");
          }
          return true;
        });
    report.exhaustive = report.exhaustive && full;
  }
  report.complex = full_skeleton(a.labels, a.n);
  return report;
}

}  // namespace dualcx
