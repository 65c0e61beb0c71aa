#include "dualcx/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "dualcx/errors.hpp"

namespace dualcx::io {

namespace {

json integer(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json simplex_list(const std::vector<Simplex>& cells) {
  json out = json::array();
  for (const auto& s : cells) out.push_back(s);
  return out;
}

template <typename T>
T field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string(what) + " is missing \"" + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string(what) + " has a malformed \"" + key + "\": " + e.what());
  }
}

}  // namespace

json to_json(const SimplicialComplex& c) {
  return json{{"vertices", c.vertices()}, {"facets", simplex_list(c.facets())}};
}

SimplicialComplex simplicial_from_json(const json& j) {
  const auto vertices = field<std::vector<Label>>(j, "vertices", "simplicial complex");
  const auto facets = field<std::vector<std::vector<Label>>>(j, "facets", "simplicial complex");
  std::set<Label> known(vertices.begin(), vertices.end());
  if (known.size() != vertices.size()) throw InvalidInput("duplicate entry in \"vertices\"");
  std::vector<Simplex> cells;
  for (const auto& f : facets) {
    for (const auto& v : f) {
      if (!known.count(v)) throw InvalidInput("facet mentions unknown vertex '" + v + "'");
    }
    cells.push_back(make_simplex(f));
  }
  return SimplicialComplex::from_facets(vertices, cells);
}

json to_json(const DeltaComplex& d) {
  json cells = json::array();
  for (const auto& c : d.all_cells()) {
    json cell{{"id", c.id}, {"dim", c.dim}};
    if (c.dim == 0) {
      cell["label"] = c.label;
    } else {
      cell["faces"] = c.faces;
    }
    cells.push_back(std::move(cell));
  }
  return json{{"cells", std::move(cells)}};
}

DeltaComplex delta_from_json(const json& j) {
  if (!j.is_object() || !j.contains("cells") || !j.at("cells").is_array()) {
    throw InvalidInput("Δ-complex needs a \"cells\" array");
  }
  std::vector<DeltaCell> cells;
  for (const auto& c : j.at("cells")) {
    DeltaCell cell;
    cell.id = field<int>(c, "id", "cell");
    cell.dim = field<int>(c, "dim", "cell");
    if (cell.dim == 0) {
      cell.label = field<std::string>(c, "label", "0-cell");
    } else {
      cell.faces = field<std::vector<int>>(c, "faces", "cell");
    }
    cells.push_back(std::move(cell));
  }
  return DeltaComplex(std::move(cells));
}

bool is_delta_json(const json& j) { return j.is_object() && j.contains("cells"); }

json to_json(const HomologyProfile& h, Ring ring) {
  json out{{"betti", h.betti}, {"euler_characteristic", h.euler_characteristic()}};
  if (ring == Ring::kIntegers) {
    json torsion = json::array();
    for (const auto& t : h.torsion) {
      json layer = json::array();
      for (const auto& d : t) layer.push_back(integer(d));
      torsion.push_back(std::move(layer));
    }
    out["torsion"] = std::move(torsion);
    out["ring"] = "Z";
  } else {
    out["ring"] = "Q";
  }
  out["q_acyclic"] = is_q_acyclic(h);
  out["connected"] = !h.betti.empty() && h.betti[0] == 1;
  return out;
}

json to_json(const FVector& f) { return f.counts; }

json to_json(const BlowupTrace& trace) {
  json nodes = json::array();
  for (const auto& q : trace.arrangement.nodes) nodes.push_back(q.get_str());
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json ledger = json::array();
    for (const auto& rec : s.ledger) {
      ledger.push_back({{"center", rec.center},
                        {"linear_dimension", rec.linear_dimension},
                        {"blown_up_along", simplex_list(rec.blown_up_along)}});
    }
    steps.push_back({{"r", s.r},
                     {"center_dimension", s.center_dimension},
                     {"centers", simplex_list(s.centers)},
                     {"cells_removed", s.cells_removed},
                     {"f_before", to_json(s.f_before)},
                     {"f_after", to_json(s.f_after)},
                     {"schedule_holds", s.schedule_holds},
                     {"ledger", std::move(ledger)}});
  }
  return json{{"input", to_json(trace.input)},
              {"n", trace.arrangement.n},
              {"ambient_projective_dim", trace.arrangement.n + 1},
              {"arrangement",
               {{"labels", trace.arrangement.labels},
                {"nodes", std::move(nodes)},
                {"general_position", trace.arrangement.general_position},
                {"exhaustive", trace.arrangement.exhaustive},
                {"subsets_checked", trace.arrangement.subsets_checked}}},
              {"steps", std::move(steps)},
              {"final", to_json(trace.final_complex)},
              {"f_vector", to_json(trace.final_complex.f_vector())},
              {"homology", to_json(trace.final_homology)},
              {"certificate",
               {{"labeled_equal", trace.certificate.labeled_equal},
                {"homology_match", trace.certificate.homology_match},
                {"holds", trace.certificate.holds()}}}};
}

json to_json(const LocalModel& m) {
  return json{{"kind", m.kind == ModelKind::kNodalPair ? "NODAL_PAIR" : "SNC_PAIR"},
              {"r", m.r()},
              {"branches", m.branches},
              {"split_branches", m.split_branches},
              {"smooth_factors", m.smooth_factors},
              {"equation", m.equation()}};
}

json to_json(const ResolutionTrace& trace) {
  json nodes = json::array();
  for (std::size_t i = 0; i < trace.tree.nodes.size(); ++i) {
    const auto& node = trace.tree.nodes[i];
    json entry{{"index", i}, {"depth", node.depth}, {"model", to_json(node.model)}, {"children", node.children}};
    entry["blown_up"] = node.blown_up ? json(*node.blown_up) : json(nullptr);
    nodes.push_back(std::move(entry));
  }
  return json{{"nodes", std::move(nodes)},
              {"depth", trace.tree.depth()},
              {"leaves", trace.tree.leaves()},
              {"blowup_order", trace.blowup_order},
              {"certificate",
               {{"leaves_snc", trace.leaves_snc},
                {"branches_preserved", trace.branches_preserved},
                {"dual_complex_unchanged", trace.dual_complex_unchanged},
                {"holds", trace.certificate()}}}};
}

json to_json(const StrataChartResult& r) {
  return json{{"n_branches", r.n_branches},
              {"r_center", r.r_center},
              {"before", r.before},
              {"chart_branches", r.chart_branches},
              {"formal_factors_before", r.formal_factors_before},
              {"formal_factors_after", r.formal_factors_after},
              {"degenerate", r.degenerate},
              {"matches_star_removal", r.matches_star_removal}};
}

json to_json(const RoundtripReport& r) {
  json out{{"holds", r.holds}, {"exhaustive", r.exhaustive}, {"choices_checked", r.choices_checked}};
  if (r.counterexample) {
    json ce = json::array();
    for (const auto& [cell, copy] : *r.counterexample) ce.push_back({{"cell", cell}, {"copy", copy}});
    out["counterexample"] = std::move(ce);
  }
  return out;
}

json to_json(const SuperperfectReport& r, const Presentation& p) {
  json relators = json::array();
  for (const auto& w : p.relators) relators.push_back(format_word(p, w));
  json abelian{{"free_rank", r.abelian.free_rank}, {"torsion", json::array()}};
  for (const auto& t : r.abelian.torsion) abelian["torsion"].push_back(integer(t));
  json out{{"generators", p.generators},
           {"relators", std::move(relators)},
           {"c2_homology", to_json(r.c2)},
           {"abelianization", std::move(abelian)},
           {"h1_matches_abelianization", r.h1_matches_abelianization},
           {"q_superperfect", r.q_superperfect},
           {"q_acyclic", r.q_acyclic}};
  if (r.c3) out["c3_homology"] = to_json(*r.c3);
  if (r.coned) out["coned_complex_homology"] = to_json(*r.coned);
  if (!r.cycle_surfaces_spherical.empty()) out["cycle_surfaces_spherical"] = r.cycle_surfaces_spherical;
  if (r.h3_vanishes) out["h3_vanishes"] = *r.h3_vanishes;
  if (r.simplicial) out["simplicial_f_vector"] = to_json(r.simplicial->f_vector());
  return out;
}

std::vector<TwoCycle> cycles_from_json(const json& j) {
  const auto rows = field<std::vector<std::vector<int>>>(j, "cycles", "cycle file");
  std::vector<TwoCycle> out;
  for (const auto& r : rows) out.push_back(TwoCycle{r});
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << dump(j);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace dualcx::io
