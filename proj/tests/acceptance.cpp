// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "dualcx/arrangement.hpp"
#include "dualcx/blowup.hpp"
#include "dualcx/corpus.hpp"
#include "dualcx/group_complex.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/io.hpp"
#include "dualcx/local_models.hpp"
#include "dualcx/surgery.hpp"
#include "oracles.hpp"

using namespace dualcx;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Job {
  std::string name;
  SimplicialComplex c;
  int n;
};

// The named corpus at n = dim C, then 50 random subcomplexes of
// full_skeleton(m, n) with m <= 8, n <= 3.
std::vector<Job> realization_jobs() {
  std::vector<Job> jobs;
  for (const auto& [name, c] : corpus::standard()) jobs.push_back({name, c, c.dim()});
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 50; ++i) {
    const int m = 1 + static_cast<int>(rng() % 8);
    const int n = 1 + static_cast<int>(rng() % 3);
    jobs.push_back({"random" + std::to_string(i), oracle::random_subcomplex(m, n, rng, 0.45), n});
  }
  return jobs;
}

Outcome realization() {
  Outcome o;
  const auto start = Clock::now();
  const auto jobs = realization_jobs();
  for (const auto& job : jobs) {
    ConstructionOptions options;
    options.n = job.n;
    const auto t = run_construction(job.c, options);
    o.require(t.steps.size() == static_cast<std::size_t>(job.n), job.name + ": wrong number of steps");
    for (const auto& s : t.steps) o.require(s.schedule_holds, job.name + ": schedule fails");
    o.require(t.final_complex == job.c, job.name + ": final complex differs");
    o.require(t.certificate.holds(), job.name + ": certificate fails");
  }
  const double secs = seconds_since(start);
  o.require(secs < 5.0, "took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = std::to_string(jobs.size()) + " complexes in " + std::to_string(secs) + " s";
  return o;
}

Outcome arrangement_certification() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t checked = 0;
  for (int m = 1; m <= 8; ++m) {
    for (int n = 0; n <= 4; ++n) {
      const auto a = build_arrangement(oracle::labels(m), n);
      for (std::size_t k = 1; k <= std::min<std::size_t>(m, n + 2); ++k) {
        for (const auto& idx : oracle::subsets(m, k)) {
          std::vector<Label> j;
          IntegerMatrix rows(k, static_cast<std::size_t>(n + 2));
          for (std::size_t i = 0; i < k; ++i) {
            j.push_back(a.labels[idx[i]]);
            for (int e = 0; e < n + 2; ++e) {
              mpz_class power;
              mpz_ui_pow_ui(power.get_mpz_t(), idx[i], static_cast<unsigned long>(e));
              rows(i, static_cast<std::size_t>(e)) = power;
            }
          }
          const auto dim = stratum_dimension(a, j);
          const std::size_t rank = oracle::rank_q(rows);
          if (static_cast<int>(k) <= n + 1) {
            o.require(dim == n + 1 - static_cast<int>(k) && rank == k, "wrong stratum dimension");
          } else {
            o.require(!dim.has_value() && rank == k, "expected an empty stratum");
          }
          ++checked;
        }
      }
    }
  }
  const double secs = seconds_since(start);
  o.require(secs < 5.0, "took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = std::to_string(checked) + " subsets in " + std::to_string(secs) + " s";
  return o;
}

Outcome homology_oracles() {
  Outcome o;
  const auto start = Clock::now();
  const auto tet = homology(corpus::boundary_tetrahedron());
  const auto rp2 = homology(corpus::rp2_6());
  const auto torus = homology(corpus::torus_7());
  o.require(tet.betti == std::vector<std::size_t>{1, 0, 1}, "tetrahedron betti");
  o.require(rp2.betti == std::vector<std::size_t>{1, 0, 0}, "RP2 betti");
  o.require(rp2.torsion[1] == std::vector<mpz_class>{2}, "RP2 torsion");
  o.require(torus.betti == std::vector<std::size_t>{1, 2, 1}, "torus betti");
  o.require(oracle::betti(corpus::boundary_tetrahedron()) == tet.betti, "tetrahedron oracle");
  o.require(oracle::betti(corpus::rp2_6()) == rp2.betti, "RP2 oracle");
  o.require(oracle::betti(corpus::torus_7()) == torus.betti, "torus oracle");
  // Z/2 in H_1 shows up as one extra class in H_1 and H_2 over F_2.
  o.require(oracle::betti(corpus::rp2_6(), 2) == std::vector<std::size_t>{1, 1, 1}, "RP2 mod 2 oracle");
  o.require(oracle::betti(corpus::torus_7(), 2) == torus.betti, "torus mod 2 oracle");
  for (const auto& [name, c] : corpus::standard()) {
    for (int k = 2; k <= c.dim(); ++k) {
      o.require((oracle::boundary(c, k - 1) * oracle::boundary(c, k)).is_zero(), name + ": oracle dd != 0");
      o.require((boundary_matrix(c, k - 1) * boundary_matrix(c, k)).is_zero(), name + ": dd != 0");
    }
    o.require(homology(c).betti == oracle::betti(c), name + ": betti differ from oracle");
  }
  const double secs = seconds_since(start);
  o.require(secs < 2.0, "took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = "corpus agrees with the rank oracle in " + std::to_string(secs) + " s";
  return o;
}

Outcome q_acyclicity() {
  Outcome o;
  o.require(is_q_acyclic(corpus::rp2_6()), "RP2 should be Q-acyclic");
  o.require(is_q_acyclic(presentation_complex(parse_presentation({"a"}, {"aa"}))), "<a|a^2> should be Q-acyclic");
  o.require(!is_q_acyclic(corpus::torus_7()), "torus should not be Q-acyclic");
  o.require(!is_q_acyclic(corpus::cycle(5)), "circle should not be Q-acyclic");
  o.require(!is_q_acyclic(corpus::circle_delta()), "one-edge circle should not be Q-acyclic");
  return o;
}

Outcome surgery() {
  Outcome o;
  std::size_t total = 0;
  RoundtripOptions options;
  options.exhaustive_limit = std::uint64_t{1} << 16;
  std::vector<SimplicialComplex> all;
  for (const auto& n : corpus::standard()) all.push_back(n.complex);
  all.push_back(SimplicialComplex::from_facets({"p"}, {}));
  for (const auto& c : all) {
    const auto r = verify_roundtrip(c, options);
    o.require(r.holds, "roundtrip fails");
    o.require(r.exhaustive, "not exhaustive");
    total += r.choices_checked;
  }
  if (o.ok) o.detail = std::to_string(total) + " choice functions, all exhaustive";
  return o;
}

Outcome local_models() {
  Outcome o;
  for (int r = 1; r <= 6; ++r) {
    const auto t = small_resolution_trace(nodal_pair(r));
    const std::string tag = "r=" + std::to_string(r);
    o.require(t.tree.depth() == r, tag + ": depth");
    o.require(t.leaves_snc, tag + ": non-snc leaf");
    o.require(t.branches_preserved, tag + ": branch labels");
    o.require(t.dual_complex_unchanged, tag + ": dual complex");
    o.require(t.tree.leaves().size() == static_cast<std::size_t>(r + 1), tag + ": leaf count");
  }
  return o;
}

std::vector<std::pair<std::vector<Label>, std::vector<std::string>>> presentations() {
  return {
      {{"a"}, {}},
      {{"a"}, {"a"}},
      {{"a"}, {"aa"}},
      {{"a"}, {"aaaaa"}},
      {{"a", "b"}, {"abAB"}},
      {{"a", "b"}, {"aa", "bbb"}},
      {{"a", "b"}, {"aabb", "abAB"}},
      {{"a", "b"}, {"aab", "abbb"}},
      {{"a", "b"}, {"abaBAB"}},
      {{"a", "b", "c"}, {"abc", "aabbcc"}},
      {{"a", "b", "c"}, {"aaaa", "bbbbbb", "abAB", "cc"}},
      {{"x", "y"}, {"xxyyy", "xyXY"}},
  };
}

Outcome group_pipeline() {
  Outcome o;
  std::size_t with_torsion = 0;
  const auto list = presentations();
  for (const auto& [gens, rels] : list) {
    const auto p = parse_presentation(gens, rels);
    const auto low = h1_h2(presentation_complex(p));
    IntegerMatrix m(p.relators.size(), p.generators.size());
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      for (const auto& l : p.relators[i]) m(i, l.generator) += l.exponent;
    std::vector<mpz_class> torsion;
    std::size_t rank = 0;
    for (const auto& d : oracle::determinantal_invariants(m)) {
      ++rank;
      if (d > 1) torsion.push_back(d);
    }
    o.require(low.betti1 == p.generators.size() - rank, "free rank of H1 differs from the oracle");
    o.require(low.torsion1 == torsion, "torsion of H1 differs from the oracle");
    with_torsion += !torsion.empty();
  }
  o.require(list.size() >= 10 && with_torsion > 0, "presentation corpus too small");

  const auto torus = presentation_complex(parse_presentation({"a", "b"}, {"abAB"}));
  const auto before = homology(torus);
  o.require(before.betti == std::vector<std::size_t>{1, 2, 1}, "torus complex homology");
  const auto coned = attached_cell_homology(torus, two_cycle_basis(torus));
  o.require(coned.betti == std::vector<std::size_t>{1, 2, 0, 0}, "coned torus betti");
  o.require(coned.torsion[2].empty() && coned.torsion[3].empty(), "coned torus torsion");
  if (o.ok) {
    o.detail = std::to_string(list.size()) + " presentations (" + std::to_string(with_torsion) +
               " with torsion); coned torus betti (1,2,0,0)";
  }
  return o;
}

// Writes every trace and report of the suite to `dir`, one file each.
void write_suite(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto out = [&](const std::string& name, const io::json& j) { io::write_json_file((dir / name).string(), j); };
  for (const auto& job : realization_jobs()) {
    ConstructionOptions options;
    options.n = job.n;
    out("realize_" + job.name + ".json", io::to_json(run_construction(job.c, options)));
  }
  for (const auto& [name, c] : corpus::standard()) out("roundtrip_" + name + ".json", io::to_json(verify_roundtrip(c)));
  for (int r = 1; r <= 6; ++r) {
    out("resolve_" + std::to_string(r) + ".json", io::to_json(small_resolution_trace(nodal_pair(r))));
  }
  int i = 0;
  for (const auto& [gens, rels] : presentations()) {
    const auto p = parse_presentation(gens, rels);
    out("group_" + std::to_string(i++) + ".json", io::to_json(q_superperfect_report(p, {}, {true, false}), p));
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Outcome o;
  const auto base = std::filesystem::temp_directory_path() / ("dualcx_acceptance_" + std::to_string(::getpid()));
  write_suite(base / "a");
  write_suite(base / "b");
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(base / "a")) {
    const auto other = base / "b" / entry.path().filename();
    o.require(std::filesystem::exists(other), "missing " + other.string());
    o.require(slurp(entry.path()) == slurp(other), entry.path().filename().string() + " differs");
    ++files;
  }
  std::filesystem::remove_all(base);
  if (o.ok) o.detail = std::to_string(files) + " trace files byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"realization identity", realization},
      {"arrangement certification", arrangement_certification},
      {"homology oracle agreement", homology_oracles},
      {"Q-acyclicity gate", q_acyclicity},
      {"surgery roundtrip", surgery},
      {"local-model resolution", local_models},
      {"group pipeline", group_pipeline},
      {"determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += !o.ok;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << name;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << "\n";
  }
  return failures == 0 ? 0 : 1;
}
