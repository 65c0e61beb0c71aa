#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dualcx/arrangement.hpp"
#include "dualcx/blowup.hpp"
#include "dualcx/errors.hpp"
#include "dualcx/group_complex.hpp"
#include "dualcx/homology.hpp"
#include "dualcx/io.hpp"
#include "dualcx/local_models.hpp"
#include "dualcx/surgery.hpp"

namespace {

constexpr const char* kVersion = "dualcx 1.0.0";

using dualcx::io::json;

std::vector<mpq_class> parse_nodes(const std::vector<std::string>& raw) {
  std::vector<mpq_class> out;
  for (const auto& s : raw) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw dualcx::InvalidInput("bad node value '" + s + "'");
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

int emit(const json& j, bool ok) {
  std::cout << dualcx::io::dump(j);
  return ok ? 0 : 2;
}

struct Realize {
  std::string input;
  std::optional<int> ambient_dim;
  std::string trace;
  std::vector<std::string> nodes;

  int run(std::uint64_t seed) const {
    const auto c = dualcx::io::simplicial_from_json(dualcx::io::read_json_file(input));
    dualcx::ConstructionOptions options;
    options.n = ambient_dim;
    if (!nodes.empty()) options.nodes = parse_nodes(nodes);
    options.subsets.seed = seed;
    const auto result = dualcx::run_construction(c, options);
    const json j = dualcx::io::to_json(result);
    if (!trace.empty()) dualcx::io::write_json_file(trace, j);
    std::cerr << "realize: n=" << result.arrangement.n << ", " << result.steps.size() << " steps, f=("
              << join(result.final_complex.f_vector().counts) << "), certificate "
              << (result.certificate.holds() ? "holds" : "FAILED") << "\n";
    return emit(j, result.certificate.holds());
  }
};

struct Homology {
  std::string input;
  std::string ring = "Z";

  int run() const {
    const json doc = dualcx::io::read_json_file(input);
    const auto h = dualcx::io::is_delta_json(doc) ? dualcx::homology(dualcx::io::delta_from_json(doc))
                                                  : dualcx::homology(dualcx::io::simplicial_from_json(doc));
    const auto r = ring == "Q" ? dualcx::io::Ring::kRationals : dualcx::io::Ring::kIntegers;
    std::cerr << "homology: betti (" << join(h.betti) << ")" << (dualcx::is_q_acyclic(h) ? ", Q-acyclic" : "")
              << "\n";
    return emit(dualcx::io::to_json(h, r), true);
  }
};

struct ArrangementCmd {
  std::vector<std::string> labels;
  int dim = 0;
  std::vector<std::string> nodes;
  bool check = false;

  int run(std::uint64_t seed) const {
    std::optional<std::vector<mpq_class>> q;
    if (!nodes.empty()) q = parse_nodes(nodes);
    const auto a = dualcx::build_arrangement(labels, dim, q);
    json rows = json::array();
    for (const auto& row : a.coeffs) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.get_str());
      rows.push_back(std::move(r));
    }
    json nodes_json = json::array();
    for (const auto& x : a.nodes) nodes_json.push_back(x.get_str());
    json out{{"labels", a.labels}, {"n", a.n}, {"ambient_projective_dim", a.projective_dim()},
             {"nodes", std::move(nodes_json)}, {"rows", std::move(rows)}};
    if (!check) return emit(out, true);

    dualcx::SubsetCheckOptions options;
    options.seed = seed;
    const auto gp = dualcx::verify_general_position(a, options);
    json gp_json{{"holds", gp.holds}, {"exhaustive", gp.exhaustive}, {"subsets_checked", gp.subsets_checked}};
    if (gp.witness) gp_json["witness"] = *gp.witness;
    out["general_position"] = std::move(gp_json);
    bool ok = gp.holds;
    if (ok) {
      const auto init = dualcx::initial_dual_complex(a, options);
      out["initial_dual_complex"] = {{"f_vector", dualcx::io::to_json(init.complex.f_vector())},
                                     {"subsets_checked", init.subsets_checked},
                                     {"exhaustive", init.exhaustive}};
    }
    out["certified"] = ok;
    std::cerr << "arrangement: " << a.labels.size() << " hyperplanes in P^" << a.projective_dim() << ", "
              << (ok ? "general position certified" : "NOT in general position") << "\n";
    return emit(out, ok);
  }
};

struct Roundtrip {
  std::string input;

  int run(std::uint64_t seed) const {
    const auto c = dualcx::io::simplicial_from_json(dualcx::io::read_json_file(input));
    dualcx::RoundtripOptions options;
    options.seed = seed;
    const auto report = dualcx::verify_roundtrip(c, options);
    std::cerr << "surgery roundtrip: " << report.choices_checked << " choice functions"
              << (report.exhaustive ? " (exhaustive)" : " (sampled)") << ", " << (report.holds ? "holds" : "FAILED")
              << "\n";
    return emit(dualcx::io::to_json(report), report.holds);
  }
};

struct Resolve {
  int branches = 1;

  int run() const {
    const auto trace = dualcx::small_resolution_trace(dualcx::nodal_pair(branches));
    std::cerr << "localmodel: depth " << trace.tree.depth() << ", " << trace.tree.leaves().size()
              << " leaves, certificate " << (trace.certificate() ? "holds" : "FAILED") << "\n";
    return emit(dualcx::io::to_json(trace), trace.certificate());
  }
};

struct Group {
  std::vector<std::string> gens;
  std::vector<std::string> rels;
  std::string cycles;
  bool basis = false;
  bool no_pad = false;
  std::string emit_complex;

  int run() const {
    const auto p = dualcx::parse_presentation(gens, rels);
    if (basis && !cycles.empty()) throw dualcx::InvalidInput("--cycles and --h2-basis are exclusive");
    std::vector<dualcx::TwoCycle> chosen;
    if (!cycles.empty()) chosen = dualcx::io::cycles_from_json(dualcx::io::read_json_file(cycles));
    if (basis) chosen = dualcx::two_cycle_basis(dualcx::presentation_complex(p, {!no_pad}));
    dualcx::ReportOptions options;
    options.pad_short_relators = !no_pad;
    options.simplicialize = !emit_complex.empty();
    const auto report = dualcx::q_superperfect_report(p, chosen, options);
    if (report.simplicial) dualcx::io::write_json_file(emit_complex, dualcx::io::to_json(*report.simplicial));
    std::cerr << "group: H1 " << (report.h1_matches_abelianization ? "matches" : "DOES NOT match")
              << " the abelianization; " << (report.q_superperfect ? "Q-superperfect" : "not Q-superperfect")
              << (report.c3 ? (report.q_acyclic ? ", C3 Q-acyclic" : ", C3 not Q-acyclic") : "")
              << "\n";
    return emit(dualcx::io::to_json(report, p), report.h1_matches_abelianization);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual complexes of snc configurations: realization, homology and surgery tools"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();

  Realize realize;
  auto* realize_cmd = app.add_subcommand("realize", "Run the blow-up construction and certify the result");
  realize_cmd->add_option("complex", realize.input, "Simplicial complex JSON")->required()->check(CLI::ExistingFile);
  realize_cmd->add_option("--ambient-dim", realize.ambient_dim, "Construction dimension n (default dim C)");
  realize_cmd->add_option("--trace", realize.trace, "Also write the trace to this file");
  realize_cmd->add_option("--nodes", realize.nodes, "Vandermonde nodes, comma separated")->delimiter(',');

  Homology hom;
  auto* hom_cmd = app.add_subcommand("homology", "Homology of a simplicial or Delta-complex");
  hom_cmd->add_option("complex", hom.input, "Complex JSON")->required()->check(CLI::ExistingFile);
  hom_cmd->add_option("--ring", hom.ring, "Z or Q")->check(CLI::IsMember({"Z", "Q"}))->capture_default_str();

  ArrangementCmd arr;
  auto* arr_cmd = app.add_subcommand("arrangement", "Build and certify a Vandermonde arrangement");
  arr_cmd->add_option("--labels", arr.labels, "Hyperplane labels, comma separated")->required()->delimiter(',');
  arr_cmd->add_option("--dim", arr.dim, "Construction dimension n")->required();
  arr_cmd->add_option("--nodes", arr.nodes, "Nodes, comma separated")->delimiter(',');
  arr_cmd->add_flag("--check", arr.check, "Certify general position and the initial dual complex");

  Roundtrip roundtrip;
  auto* surgery_cmd = app.add_subcommand("surgery", "Dual-complex surgeries");
  surgery_cmd->require_subcommand(1);
  auto* roundtrip_cmd = surgery_cmd->add_subcommand("roundtrip", "Double cover then preimage selection");
  roundtrip_cmd->add_option("complex", roundtrip.input, "Simplicial complex JSON")->required()->check(CLI::ExistingFile);

  Resolve resolve;
  auto* local_cmd = app.add_subcommand("localmodel", "Local chart models");
  local_cmd->require_subcommand(1);
  auto* resolve_cmd = local_cmd->add_subcommand("resolve", "Small resolution of a nodal pair");
  resolve_cmd->add_option("--branches", resolve.branches, "Number of core branches r >= 1")->required();

  Group group;
  auto* group_cmd = app.add_subcommand("group", "Presentation complex and superperfectness checks");
  group_cmd->add_option("--gens", group.gens, "Generators, comma separated")->required()->delimiter(',');
  group_cmd->add_option("--rels", group.rels, "Relators (uppercase = inverse), repeatable")->delimiter(',');
  group_cmd->add_option("--cycles", group.cycles, "JSON file with 2-cycles to cone off")->check(CLI::ExistingFile);
  group_cmd->add_flag("--h2-basis", group.basis, "Cone off a computed basis of H_2");
  group_cmd->add_flag("--no-pad", group.no_pad, "Keep relator polygons with fewer than three sides");
  group_cmd->add_option("--emit-complex", group.emit_complex, "Write the twice subdivided complex here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*realize_cmd) return realize.run(seed);
    if (*hom_cmd) return hom.run();
    if (*arr_cmd) return arr.run(seed);
    if (*roundtrip_cmd) return roundtrip.run(seed);
    if (*resolve_cmd) return resolve.run();
    if (*group_cmd) return group.run();
  } catch (const dualcx::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const dualcx::CertificationFailure& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return 2;
  } catch (const dualcx::io::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
