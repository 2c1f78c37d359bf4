// Command-line front end: validation, cohomology, faces, ABFP complexes,
// extensions, T-graph lifts, face rings, and the bundled demonstrations.
#include <CLI11.hpp>
#include <json.hpp>

#include "gkm/abfp.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/extension.hpp"
#include "gkm/facering.hpp"
#include "gkm/graph_io.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using json = nlohmann::json;
using namespace gkm;

namespace {

struct RunConfig {
  std::string catalog_name;
  std::string input_path;
  int degree = 6;
  std::string mode = "rational";
  int jobs = 1;
  std::string format = "text";
  std::uint64_t seed = 0;
};

CoeffMode coeff_mode(const RunConfig& cfg) {
  return cfg.mode == "integer" ? CoeffMode::integer : CoeffMode::rational;
}

GkmGraph load_graph(const RunConfig& cfg) {
  if (!cfg.catalog_name.empty()) return catalog(cfg.catalog_name);
  std::ifstream in(cfg.input_path);
  if (!in) throw ParseError("cannot open input file: " + cfg.input_path);
  std::stringstream buf;
  buf << in.rdbuf();
  return graph_from_interchange(buf.str());
}

void render_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_text(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); })) {
      out << prefix << " =";
      for (const auto& x : j) out << ' ' << x.dump();
      out << '\n';
    } else {
      int i = 0;
      for (const auto& x : j) render_text(x, prefix + "[" + std::to_string(i++) + "]", out);
    }
  } else {
    out << prefix << " = " << j.dump() << '\n';
  }
}

void emit(const json& report, const RunConfig& cfg) {
  if (cfg.format == "structured")
    std::cout << report.dump(2) << '\n';
  else
    render_text(report, "", std::cout);
}

json int_table(const std::vector<int>& v) { return json(v); }

json vec_table(const std::vector<IntVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_string(v));
  return out;
}

bool class_is_zero(const CohomologyClass& c) {
  for (const auto& f : c.value)
    if (!f.is_zero()) return false;
  return true;
}

int cmd_validate(const RunConfig& cfg) {
  GkmGraph g = load_graph(cfg);
  auto rep = validate_graph(g);
  json report;
  report["command"] = "validate";
  report["graph"]["rank"] = g.rank;
  report["graph"]["valence"] = g.valence;
  report["graph"]["vertices"] = g.num_vertices();
  report["graph"]["edges"] = g.num_edges();
  report["graph"]["signed"] = g.is_signed;
  report["valid"] = rep.ok();
  report["violations"] = rep.violations;
  bool congruence_ok = false;
  if (rep.ok() && g.has_connection()) {
    auto cong = check_congruence(g);
    congruence_ok = cong.ok();
    report["congruence_violations"] = cong.violations;
  }
  report["congruence_ok"] = congruence_ok;
  report["effective_rational"] = check_effectivity(g, CoeffMode::rational);
  report["effective_integer"] = check_effectivity(g, CoeffMode::integer);
  report["gkm_level"] = gkm_independence_level(g);
  emit(report, cfg);
  return rep.ok() && congruence_ok ? 0 : 1;
}

int cmd_cohom(const RunConfig& cfg) {
  GkmGraph g = load_graph(cfg);
  json report;
  report["command"] = "cohom";
  report["degree_cutoff"] = cfg.degree;
  report["hilbert"] = int_table(hilbert_function(g, cfg.degree, coeff_mode(cfg), cfg.jobs));
  ModuleGenerators gens = module_generators(g, cfg.degree);
  report["generators_per_degree"] = int_table(gens.new_per_degree);
  FreenessVerdict fv = freeness_probe(g, cfg.degree);
  report["free_up_to_cutoff"] = fv.free_up_to;
  if (!fv.free_up_to) {
    report["relation_degree"] = fv.witness_degree2;
    json rel = json::array();
    for (const auto& c : fv.relation) rel.push_back(c.str());
    report["relation_coefficients"] = rel;
  }
  emit(report, cfg);
  return 0;
}

int cmd_faces(const RunConfig& cfg) {
  GkmGraph g = load_graph(cfg);
  FacePoset poset = face_poset(g);
  json report;
  report["command"] = "faces";
  report["rank_profile"] = int_table(poset.rank_profile());
  report["regular_cw"] = check_regular_cw(poset);
  SimplicialCheck sc = check_simplicial_opposite(poset);
  report["simplicial_opposite"] = sc.simplicial;
  report["simplicial_failures"] = sc.failing_faces;
  bool signs_exist = true;
  try {
    solve_signs(poset);
  } catch (const std::runtime_error&) {
    signs_exist = false;
  }
  report["sign_assignment_exists"] = signs_exist;
  emit(report, cfg);
  return 0;
}

int cmd_abfp(const RunConfig& cfg) {
  GkmGraph g = load_graph(cfg);
  AbfpComplex c = build_abfp(g, coeff_mode(cfg));
  json report;
  report["command"] = "abfp";
  report["degree_cutoff"] = cfg.degree;
  report["cochain_ok"] = check_cochain(c, cfg.degree);
  report["homology_at_cohomology"] =
      int_table(homology_at(c, AbfpPosition::cohomology, cfg.degree));
  report["homology_at_zero"] = int_table(homology_at(c, AbfpPosition::zero, cfg.degree));
  report["homology_at_one"] = int_table(homology_at(c, AbfpPosition::one, cfg.degree));
  SignIndependence si = sign_independence_check(g, cfg.degree);
  report["sign_independence"]["applicable"] = si.applicable;
  report["sign_independence"]["equal"] = si.equal;
  emit(report, cfg);
  return report["cochain_ok"].get<bool>() ? 0 : 1;
}

int cmd_extend(const RunConfig& cfg, int target_rank, long bound) {
  GkmGraph g = load_graph(cfg);
  auto solutions = search_extension(g, target_rank, Int(bound));
  json report;
  report["command"] = "extend";
  report["target_rank"] = target_rank;
  report["bound"] = bound;
  report["solutions"] = static_cast<int>(solutions.size());
  json docs = json::array();
  for (const auto& s : solutions) docs.push_back(to_interchange(s));
  report["labelings"] = docs;
  emit(report, cfg);
  return 0;
}

int cmd_lift(const RunConfig& cfg) {
  GkmGraph g = load_graph(cfg);
  TGraph t = lift_to_tgraph(g);
  auto rep = validate_tgraph(t);
  CharacteristicFunction chi = facet_normals(t);
  json report;
  report["command"] = "lift";
  report["tgraph_valid"] = rep.ok();
  report["violations"] = rep.violations;
  std::vector<IntVec> normals = chi.lambda;
  report["facet_normals"] = vec_table(normals);
  report["tgraph"] = to_interchange(t);
  emit(report, cfg);
  return rep.ok() ? 0 : 1;
}

int cmd_facering(const RunConfig& cfg, bool check_iso) {
  GkmGraph g = load_graph(cfg);
  FacePoset poset = face_poset(g);
  json report;
  report["command"] = "facering";
  report["degree_cutoff"] = cfg.degree;
  SimplicialCheck sc = check_simplicial_opposite(poset);
  report["simplicial_opposite"] = sc.simplicial;
  auto fr = face_ring_hilbert(poset, cfg.degree);
  auto hf = hilbert_function(g, cfg.degree, CoeffMode::rational, cfg.jobs);
  report["face_ring_dims"] = int_table(fr);
  report["cohomology_dims"] = int_table(hf);
  report["dims_match"] = fr == hf;

  // randomized confluence sampling: rewrite order must not change normal forms
  std::mt19937_64 rng(cfg.seed);
  int non_top = static_cast<int>(poset.faces.size()) - 1;
  bool confluent = true;
  int trials = 0;
  for (int t = 0; t < 40 && non_top > 0; ++t) {
    std::vector<int> faces = {static_cast<int>(rng() % non_top),
                              static_cast<int>(rng() % non_top)};
    try {
      FaceRingElement canonical = straighten(poset, faces);
      std::mt19937_64 order(cfg.seed + t + 1);
      if (straighten(poset, faces, &order) != canonical) confluent = false;
      ++trials;
    } catch (const std::runtime_error&) {
      // non-unique join: the relation is undefined on this pair
    }
  }
  report["confluence_trials"] = trials;
  report["confluent"] = confluent;

  bool ok = report["dims_match"].get<bool>() && confluent;
  if (check_iso) {
    FacemapIso iso = check_facemap_iso(g, cfg.degree);
    json per = json::array();
    for (bool b : iso.per_degree) per.push_back(b);
    report["iso_per_degree"] = per;
    report["iso_all"] = iso.all;
    ok = ok && iso.all;
  }
  emit(report, cfg);
  return ok ? 0 : 1;
}

int cmd_quotient(const RunConfig& cfg, const std::string& pair_name) {
  ExtensionPair pair = catalog_extension(pair_name);
  QuotientComparison qc = face_ring_quotient_check(pair.gK, pair.gT, pair.p, cfg.degree);
  json report;
  report["command"] = "quotient";
  report["pair"] = pair_name;
  report["degree_cutoff"] = cfg.degree;
  report["quotient_dims"] = int_table(qc.quotient_dims);
  report["target_dims"] = int_table(qc.target_dims);
  json eq = json::array();
  for (bool b : qc.equal) eq.push_back(b);
  report["equal_per_degree"] = eq;
  report["all_equal"] = qc.all_equal;
  emit(report, cfg);
  return qc.all_equal ? 0 : 1;
}

int cmd_demo_counterexample(const RunConfig& cfg, bool identity_p) {
  GkmGraph g = catalog("fig3");
  json report;
  report["command"] = "demo-counterexample";
  report["mode"] = cfg.mode;
  bool all_ok = true;

  // 1. degree 2 is spanned by the global linear forms: dimension 3, no new
  //    module generators
  auto basis2 = cohomology_basis(g, 2, coeff_mode(cfg));
  ModuleGenerators gens = module_generators(g, 6);
  bool deg2_ok = basis2.size() == 3 && gens.new_per_degree[1] == 0;
  report["checks"]["degree2_linear_only"] = deg2_ok;
  all_ok = all_ok && deg2_ok;

  // 2. Thom classes of the four distinguished edges
  TGraph lift = lift_to_tgraph(g);
  FacePoset poset = face_poset(g);
  auto vertex_index = [&](const std::string& name) {
    return static_cast<int>(std::find(g.vertex_names.begin(), g.vertex_names.end(), name) -
                            g.vertex_names.begin());
  };
  auto edge_face = [&](const std::string& a, const std::string& b) {
    int u = std::min(vertex_index(a), vertex_index(b));
    int v = std::max(vertex_index(a), vertex_index(b));
    for (int fi : poset.by_rank[1])
      if (poset.faces[fi].vertices == std::vector<int>{u, v}) return poset.faces[fi];
    throw std::runtime_error("edge face not found");
  };
  CohomologyClass th12 = thom_class(lift, edge_face("1", "2"));
  CohomologyClass th23 = thom_class(lift, edge_face("2", "3"));
  CohomologyClass th36 = thom_class(lift, edge_face("3", "6"));
  CohomologyClass th16 = thom_class(lift, edge_face("1", "6"));
  bool thom_ok = true;
  for (const auto* th : {&th12, &th23, &th36, &th16})
    thom_ok = thom_ok && th->degree2 == 4 && is_cohomology_class(g, *th);
  report["checks"]["thom_classes_degree4"] = thom_ok;
  all_ok = all_ok && thom_ok;

  // 3. the signed four-term relation among them
  Polynomial x = Polynomial::variable(3, 0), y = Polynomial::variable(3, 1),
             z = Polynomial::variable(3, 2);
  bool relation_found = false;
  for (int mask = 0; mask < 16 && !relation_found; ++mask) {
    auto sgn = [&](int bit) { return Rat(mask >> bit & 1 ? -1 : 1); };
    CohomologyClass total = poly_multiply(sgn(0) * y, th12);
    total = class_sum(total, poly_multiply(sgn(1) * Rat(-1) * z, th23));
    total = class_sum(total, poly_multiply(sgn(2) * y, th36));
    total = class_sum(total, poly_multiply(sgn(3) * Rat(-1) * x, th16));
    relation_found = class_is_zero(total);
  }
  report["checks"]["four_term_relation"] = relation_found;
  all_ok = all_ok && relation_found;

  // 4. restriction to the rank-2 subtorus is not surjective in degree 2
  if (identity_p) {
    RestrictionResult rr = restriction_map(g, g, IntMatrix::identity(3), 2);
    report["checks"]["restriction_surjective"] = rr.surjective;
    report["hypothesis_changed"] = true;
    all_ok = all_ok && rr.surjective;
  } else {
    ExtensionPair pair = catalog_extension("flag");
    RestrictionResult rr = restriction_map(pair.gT, pair.gK, pair.p, 2);
    bool nonsurj = !rr.surjective && rr.image_dim <= 3 &&
                   static_cast<int>(rr.target_basis.size()) == 4;
    report["checks"]["restriction_not_surjective"] = nonsurj;
    report["restriction_image_dim"] = rr.image_dim;
    all_ok = all_ok && nonsurj;
  }

  // 5. not a free module: a relation among the degree-4 generators
  FreenessVerdict fv = freeness_probe(g, 8);
  bool relation_among_deg4 = !fv.free_up_to && !fv.relation.empty();
  for (std::size_t i = 0; i < fv.gens.generators.size() && relation_among_deg4; ++i)
    if (!fv.relation[i].is_zero() && fv.gens.generators[i].degree2 != 4 &&
        fv.gens.generators[i].degree2 != 0)
      relation_among_deg4 = false;
  report["checks"]["not_free_with_degree4_witness"] = relation_among_deg4;
  report["relation_degree"] = fv.witness_degree2;
  all_ok = all_ok && relation_among_deg4;

  report["all_checks_pass"] = all_ok;
  emit(report, cfg);
  return all_ok ? 0 : 1;
}

int cmd_demo_extension(const RunConfig& cfg, const std::string& pair_name) {
  GkmGraph gK, gT;
  IntMatrix p;
  if (pair_name == "identity") {
    gK = gT = catalog("cpn_torus:3");
    p = IntMatrix::identity(3);
  } else {
    ExtensionPair pair = catalog_extension(pair_name);
    gK = pair.gK;
    gT = pair.gT;
    p = pair.p;
  }
  json report;
  report["command"] = "demo-extension";
  report["pair"] = pair_name;
  report["degree_cutoff"] = cfg.degree;
  int level = gkm_independence_level(gK);
  report["gkm_level_of_base"] = level;
  if (level < 3) {
    report["hypothesis_violated"] = true;
    emit(report, cfg);
    return 0;
  }
  report["hypothesis_violated"] = false;
  bool all_ok = true;

  json surj = json::array();
  for (int d2 = 0; d2 <= cfg.degree; d2 += 2) {
    RestrictionResult rr = restriction_map(gT, gK, p, d2);
    surj.push_back(rr.surjective);
    all_ok = all_ok && rr.surjective;
  }
  report["surjective_per_degree"] = surj;

  KernelIdealReport ki = kernel_ideal_check(gT, gK, p, cfg.degree);
  report["kernel_dims"] = int_table(ki.kernel_dims);
  report["ideal_dims"] = int_table(ki.ideal_dims);
  report["kernel_equals_ideal"] = ki.all_equal;
  all_ok = all_ok && ki.all_equal;

  FreenessVerdict fv = freeness_probe(gT, cfg.degree);
  report["free_up_to_cutoff"] = fv.free_up_to;
  all_ok = all_ok && fv.free_up_to;

  report["all_checks_pass"] = all_ok;
  emit(report, cfg);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on abstract GKM graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input) {
      auto* cat = cmd->add_option("--catalog", cfg.catalog_name, "built-in graph name");
      auto* inp = cmd->add_option("--input", cfg.input_path, "graph interchange file");
      cat->excludes(inp);
    }
    cmd->add_option("--degree,-D", cfg.degree, "even degree cutoff 2d")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--mode", cfg.mode, "coefficient mode")
        ->check(CLI::IsMember({"rational", "integer"}));
    cmd->add_option("--jobs", cfg.jobs, "thread bound for degree slices")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--seed", cfg.seed, "seed for randomized property checks");
  };

  auto* validate = app.add_subcommand("validate", "validate a graph and its connection");
  add_common(validate, true);
  auto* cohom = app.add_subcommand("cohom", "Hilbert function, generators, freeness");
  add_common(cohom, true);
  auto* faces = app.add_subcommand("faces", "face poset, CW and sign structure");
  add_common(faces, true);
  auto* abfp = app.add_subcommand("abfp", "face-indexed cochain complex homology");
  add_common(abfp, true);

  int target_rank = 0;
  long bound = 2;
  auto* extend = app.add_subcommand("extend", "search label lifts to a larger torus");
  add_common(extend, true);
  extend->add_option("--rank", target_rank, "target label rank")->required();
  extend->add_option("--bound", bound, "coordinate bound for free lift entries");

  auto* lift = app.add_subcommand("lift", "lift an unsigned torus graph to a T-graph");
  add_common(lift, true);

  bool check_iso = false;
  auto* facering = app.add_subcommand("facering", "face ring and the morphism to cohomology");
  add_common(facering, true);
  facering->add_flag("--check-iso", check_iso, "verify the morphism is an isomorphism");

  std::string pair_name = "cp4";
  auto* quotient = app.add_subcommand("quotient", "face ring modulo the kernel forms");
  add_common(quotient, false);
  quotient->add_option("--pair", pair_name, "catalog extension pair")->required();

  bool identity_p = false;
  auto* demo_cx = app.add_subcommand("demo-counterexample",
                                     "the complete counterexample pipeline");
  add_common(demo_cx, false);
  demo_cx->add_flag("--identity-p", identity_p, "replace the projection by the identity");

  std::string t1_pair = "cp4";
  auto* demo_ext = app.add_subcommand("demo-extension", "surjectivity, kernel, freeness suite");
  add_common(demo_ext, false);
  demo_ext->add_option("--pair", t1_pair, "catalog extension pair or 'identity'");
  cfg.degree = 6;

  try {
    app.parse(argc, argv);
    if (demo_ext->parsed() && !demo_ext->count("--degree")) cfg.degree = 12;
    if (cfg.degree % 2 != 0) throw CLI::ValidationError("--degree must be even");

    if (validate->parsed()) return cmd_validate(cfg);
    if (cohom->parsed()) return cmd_cohom(cfg);
    if (faces->parsed()) return cmd_faces(cfg);
    if (abfp->parsed()) return cmd_abfp(cfg);
    if (extend->parsed()) return cmd_extend(cfg, target_rank, bound);
    if (lift->parsed()) return cmd_lift(cfg);
    if (facering->parsed()) return cmd_facering(cfg, check_iso);
    if (quotient->parsed()) return cmd_quotient(cfg, pair_name);
    if (demo_cx->parsed()) return cmd_demo_counterexample(cfg, identity_p);
    if (demo_ext->parsed()) return cmd_demo_extension(cfg, t1_pair);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
