// stackypi1 command-line entry point.  Every subcommand reads JSON inputs,
// calls the library and emits a RunReport (--json) or a short summary.
//
// Exit codes: 0 success, 1 domain error or failed check, 2 malformed input.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "stackypi1/json_io.hpp"

using namespace stackypi1;
using json_io::Json;

namespace {

struct Globals {
  bool json = false;
  std::string budget_spec;
  int threads = 1;
  std::uint64_t seed = 1;
  bool timing = false;
};

struct Context {
  Globals g;
  Budget budget;
  json_io::RunReport report;
  std::ostringstream summary;
  bool failed_check = false;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return out.str();
}

Json load(Context& ctx, const std::string& option, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::SchemaError, "cannot read " + option + " file '" + path + "'", "");
  std::stringstream buf;
  buf << in.rdbuf();
  ctx.report.inputs.push_back({option, sha256_hex(buf.str())});
  return json_io::parse_text(buf.str());
}

Budget parse_budget(const std::string& spec) {
  Budget b;
  if (spec.empty()) return b;
  const auto comma = spec.find(',');
  try {
    b.max_states = std::stoull(spec.substr(0, comma));
    if (comma != std::string::npos) b.max_matrix_dim = std::stoll(spec.substr(comma + 1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::SchemaError, "budget must be <states>[,<max matrix dim>], got '" + spec + "'", "");
  }
  return b;
}

std::vector<int> parse_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::SchemaError, what + " must be a comma-separated integer list, got '" + text + "'", "");
    }
  }
  return out;
}

std::string default_basepoint(const RawSpace& raw) {
  if (raw.levels[0].empty()) throw Error(ErrorKind::BasepointMissing, "space has no vertices");
  std::string best = raw.levels[0][0].id;
  for (const auto& c : raw.levels[0]) best = std::min(best, c.id);
  return best;
}

void check_dims(const Context& ctx, const RawFilteredComplex& raw) {
  for (auto d : raw.dims) ctx.budget.check_dim(d);
}

// ---- subcommands ---------------------------------------------------------------

struct SpaceOpts {
  std::string space;
  std::string basepoint;
  bool raw = false;
};

void run_space(Context& ctx, const SpaceOpts& o) {
  const auto in = json_io::read_space(load(ctx, "space", o.space));
  const auto s = build_space(in.raw);
  ctx.report.results = json_io::space_summary(s);
  const auto counts = s.nondegenerate_counts();
  ctx.summary << "nondegenerate counts: (" << counts[0] << "," << counts[1] << "," << counts[2] << "," << counts[3]
              << ")\npi0 classes: " << pi0(s).size() << "\n";
  for (const auto& u : s.unverified()) ctx.report.warnings.push_back("unverified: " + u);
}

void run_pi1(Context& ctx, const SpaceOpts& o) {
  const auto in = json_io::read_space(load(ctx, "space", o.space));
  const auto s = build_space(in.raw);
  const std::string bp = o.basepoint.empty() ? default_basepoint(in.raw) : o.basepoint;
  const auto p = o.raw ? pi1_presentation_raw(s, bp) : pi1_presentation(s, bp);
  const auto ab = abelianization(p);
  ctx.report.results = Json{{"basepoint", bp}, {"presentation", json_io::to_json(p)}, {"abelianization", json_io::to_json(ab)}};
  ctx.summary << "pi1 at " << bp << ": " << format_presentation(p) << "\nabelianization: " << format_abelianization(ab)
              << "\n";
  for (const auto& u : s.unverified()) ctx.report.warnings.push_back("unverified: " + u);
}

struct CohomologyOpts {
  std::string space;
  std::string system;
  int max_degree = 2;
  std::optional<int> weight;
};

void run_cohomology(Context& ctx, const CohomologyOpts& o) {
  const auto in = json_io::read_space(load(ctx, "space", o.space));
  const auto s = build_space(in.raw);
  LocalSystem sys = trivial_matrix_system(s, 1);
  if (!o.system.empty()) sys = json_io::read_local_system(load(ctx, "system", o.system));
  const auto check = check_local_system(s, sys);
  ctx.report.results["check"] = json_io::to_json(check);
  ctx.summary << "local system " << (check.ok ? "valid" : "INVALID") << "\n";
  for (const auto& f : check.failures) ctx.summary << "  " << f << "\n";
  if (!check.ok) {
    ctx.failed_check = true;
    return;
  }
  const auto* m = std::get_if<MatrixLocalSystem>(&sys);
  if (!m) {
    ctx.summary << "finite structure group: cohomology needs a matrix local system\n";
    return;
  }
  const auto h = cohomology(s, *m, o.max_degree);
  ctx.report.results["cohomology"] = json_io::to_json(h);
  for (const auto& d : h.degrees) {
    ctx.summary << "H^" << d.degree << ": ";
    if (d.computed) ctx.summary << d.dimension;
    else ctx.summary << "not computed";
    ctx.summary << "\n";
  }
  if (o.weight) {
    const auto wf = weight_filtration_cohomology(s, *m, *o.weight);
    Json degrees = Json::array();
    for (std::size_t j = 0; j < wf.structures.size(); ++j) {
      degrees.push_back(Json{{"degree", static_cast<int>(j)},
                             {"induced", json_io::to_json(wf.induced[j])},
                             {"structure", json_io::to_json(wf.structures[j])}});
      ctx.summary << "W^B on H^" << j << ":";
      for (const auto& [w, d] : wf.structures[j].graded()) {
        auto it = wf.structures[j].slopes.find(w);
        ctx.summary << " weight " << w << " dim " << d;
        if (it != wf.structures[j].slopes.end()) ctx.summary << " slope " << it->second;
      }
      ctx.summary << "\n";
    }
    ctx.report.results["weight_filtration"] = Json{{"w", *o.weight}, {"degrees", std::move(degrees)}};
  }
}

struct TorsorOpts {
  std::string space;
  std::string group;
  bool framed = false;
  bool weight_classes = false;
  bool list = false;
};

void run_torsors(Context& ctx, const TorsorOpts& o) {
  const auto in = json_io::read_space(load(ctx, "space", o.space));
  const auto g = json_io::read_group(load(ctx, "group", o.group));
  const auto s = build_space(in.raw);
  EnumerationOptions opt{ctx.g.threads, &ctx.budget};
  ctx.report.results["group"] = Json{{"name", g.name()}, {"order", g.order()}};
  if (o.framed) {
    SimplicialBasepoint bp;
    if (in.basepoint) bp = *in.basepoint;
    else bp.points.emplace_back(0, default_basepoint(in.raw));
    const auto e = enumerate_framed(s, bp, g, opt);
    ctx.report.results["framed"] = json_io::to_json(e, o.list);
    ctx.report.warnings.insert(ctx.report.warnings.end(), e.warnings.begin(), e.warnings.end());
    ctx.summary << "framed torsors: " << e.framed.size() << "\n";
  }
  if (o.weight_classes) {
    const auto w = weight_equivalence(s, g, opt);
    ctx.report.results["classes"] = json_io::to_json(w);
    ctx.report.warnings.insert(ctx.report.warnings.end(), w.classification.warnings.begin(), w.classification.warnings.end());
    ctx.summary << "torsor classes: " << w.classification.classes.size() << " (groupoid cardinality "
                << to_string(w.classification.groupoid_cardinality) << ")\nweight classes: " << w.classes.size() << "\n";
  } else if (!o.framed) {
    const auto c = torsor_classes(s, g, opt);
    ctx.report.results["classes"] = json_io::to_json(c);
    ctx.report.warnings.insert(ctx.report.warnings.end(), c.warnings.begin(), c.warnings.end());
    ctx.summary << "torsor classes: " << c.classes.size() << " (groupoid cardinality "
                << to_string(c.groupoid_cardinality) << ")\n";
  }
}

struct RealizeOpts {
  std::string presentation;
  int bound = 24;
  std::string emit_plan;
};

void run_realize(Context& ctx, const RealizeOpts& o) {
  const Json j = load(ctx, "presentation", o.presentation);
  json_io::check_format(j);
  const auto p = json_io::read_presentation(j);
  const auto plan = realize(p);
  const auto fp = fingerprint(p, plan.pushout, o.bound, ctx.g.threads, &ctx.budget);
  const auto unfolded = fingerprint(complex_pi1(plan.unfolding.complex), GroupPresentation{}, o.bound, ctx.g.threads,
                                    &ctx.budget);
  const auto& a = plan.realized.complex;
  ctx.report.results = Json{{"complex", Json{{"vertices", a.num_vertices},
                                             {"edges", a.edges.size()},
                                             {"triangles", a.triangles.size()},
                                             {"used_bridges", plan.realized.used_bridges}}},
                            {"unfolded", Json{{"vertices", plan.unfolding.complex.num_vertices},
                                              {"triangles", plan.unfolding.complex.triangles.size()},
                                              {"fingerprint_trivial", unfolded.consistent}}},
                            {"pushout", json_io::to_json(plan.pushout)},
                            {"fingerprint", json_io::to_json(fp)}};
  if (!o.emit_plan.empty()) {
    std::ofstream out(o.emit_plan);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write plan to '" + o.emit_plan + "'");
    out << json_io::to_json(plan).dump(2) << "\n";
  }
  ctx.summary << "realized complex: " << a.num_vertices << " vertices, " << a.edges.size() << " edges, "
              << a.triangles.size() << " triangles\npushout: " << format_presentation(plan.pushout)
              << "\nfingerprint (bound " << o.bound << "): " << (fp.consistent ? "consistent" : "INCONSISTENT");
  if (!fp.consistent) ctx.summary << " (" << fp.reason << ")";
  ctx.summary << "\nunfolding simply connected by fingerprint: " << (unfolded.consistent ? "yes" : "NO") << "\n";
  if (!fp.consistent || !unfolded.consistent) ctx.failed_check = true;
}

struct SsOpts {
  std::string input;
  std::optional<int> from_page;
  std::string output;
};

void run_ss(Context& ctx, const std::string& mode, const SsOpts& o) {
  const auto raw = json_io::read_filtered_complex(load(ctx, "input", o.input));
  check_dims(ctx, raw);
  const auto fc = build_filtered_complex(raw);
  if (mode == "pages") {
    Json list = Json::array();
    for (const auto& p : pages(fc, ctx.g.threads)) {
      list.push_back(json_io::to_json(p));
      ctx.summary << "E_" << p.r << ":";
      for (const auto& c : p.cells) ctx.summary << " (" << c.weight << "," << c.degree << ")=" << c.dimension;
      ctx.summary << (p.all_differentials_zero ? "  d=0" : "  d!=0") << "\n";
    }
    ctx.report.results = Json{{"bound_page", bound_page(fc)}, {"pages", std::move(list)}};
  } else if (mode == "dec") {
    const auto d = dec(fc);
    const auto cmp = compare_dec_pages(fc);
    ctx.report.results = Json{{"dec", json_io::filtered_complex_json(d)}, {"d2b_holds", cmp.ok}};
    if (!o.output.empty()) {
      std::ofstream out(o.output);
      if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write '" + o.output + "'");
      out << json_io::filtered_complex_json(d).dump(2) << "\n";
    }
    ctx.summary << "Dec filtration on weights " << d.min_weight() << ".." << d.max_weight()
                << "; E_1(Dec) = E_2 comparison: " << (cmp.ok ? "holds" : "FAILS") << "\n";
    if (!cmp.ok) ctx.failed_check = true;
  } else if (mode == "classify") {
    const auto c = classify_mtc(fc);
    ctx.report.results = json_io::to_json(c);
    ctx.summary << "classification: " << to_string(c.kind) << "\n";
  } else {
    DegenerationCertificate cert;
    if (o.from_page) cert = check_degeneration(fc, *o.from_page);
    else cert = check_degeneration(fc, classify_mtc(fc).kind);
    ctx.report.results = json_io::to_json(cert);
    ctx.summary << "degeneration from E_" << cert.from_page << ": " << (cert.passed ? "verified" : "FAILS") << "\n";
    if (!cert.passed) ctx.failed_check = true;
  }
}

struct RootOpts {
  std::string phi;
  std::string elements;
  std::string roots;
};

void run_root_lift(Context& ctx, const RootOpts& o) {
  LocalMonodromyDatum d{json_io::read_group(load(ctx, "phi", o.phi)), parse_list(o.elements, "--elements"),
                        parse_list(o.roots, "--roots")};
  const auto r = root_lift_check(d);
  ctx.report.results = json_io::to_json(r);
  ctx.summary << "verdict: " << to_string(r.verdict) << "\nkernel basis:\n" << r.kernel_basis << "\n";
}

void run_parabolic(Context& ctx, const std::string& mode, const std::string& input) {
  const auto p = json_io::read_parabolic(load(ctx, "input", input));
  if (mode == "degree") {
    const auto deg = parabolic_degree(p);
    ctx.report.results = Json{{"parabolic_degree", to_string(deg)}};
    ctx.summary << "parabolic degree: " << to_string(deg) << "\n";
    return;
  }
  const auto t = parabolic_translate(p);
  ctx.report.results = json_io::to_json(t);
  ctx.summary << (t.valid ? "valid root-stack object" : "violations:") << "\n";
  for (const auto& v : t.violations) ctx.summary << "  divisor " << v.divisor << ", piece " << v.piece << ": " << v.message << "\n";
  if (!t.valid) ctx.failed_check = true;
}

struct WreathOpts {
  std::string g;
  std::string phi;
  std::string action;
  bool validate = false;
  bool changeaction = false;
  std::string gamma;
  std::string omega;
};

void run_wreath(Context& ctx, const WreathOpts& o) {
  const auto g = json_io::read_group(load(ctx, "g", o.g));
  const auto phi = json_io::read_group(load(ctx, "phi", o.phi));
  GroupAction action = trivial_action(g, phi);
  if (!o.action.empty()) {
    const Json a = load(ctx, "action", o.action);
    json_io::check_format(a);
    action = json_io::read_action(a, g, phi);
  }
  const auto h = wreath_semidirect(g, phi, action);
  ctx.report.results["order"] = h.order();
  ctx.report.results["wreath_order"] = h.wreath_order();
  ctx.summary << "|H| = " << h.order() << " (|G wr Phi| = " << h.wreath_order() << ")\n";
  if (o.validate) {
    std::mt19937_64 rng(ctx.g.seed);
    const auto ax = validate_axioms(h, rng);
    ctx.report.results["axioms"] = json_io::to_json(ax);
    ctx.summary << "group axioms (" << (ax.exhaustive ? "exhaustive" : "sampled") << "): " << (ax.ok() ? "pass" : "FAIL")
                << "\n";
    if (!ax.ok()) ctx.failed_check = true;
  }
  if (o.changeaction) {
    if (o.gamma.empty() || o.omega.empty())
      throw Error(ErrorKind::SchemaError, "--changeaction-check needs --gamma and --omega", "");
    const auto gamma = json_io::read_group(load(ctx, "gamma", o.gamma));
    const auto rep = changeaction_check(gamma, parse_list(o.omega, "--omega"), g, phi, action, ctx.g.threads, &ctx.budget);
    ctx.report.results["changeaction"] = json_io::to_json(rep);
    ctx.summary << "left cardinality " << to_string(rep.left.cardinality) << ", right cardinality "
                << to_string(rep.right.cardinality) << ": " << (rep.equal ? "equal" : "DIFFERENT")
                << "\nquotient square: " << to_string(rep.quot_left.cardinality) << " vs "
                << to_string(rep.quot_right.cardinality) << ": " << (rep.quot_equal ? "equal" : "DIFFERENT") << "\n";
    if (!rep.equal || !rep.quot_equal) ctx.failed_check = true;
  }
}

int emit(Context& ctx, int code) {
  if (ctx.g.json) std::cout << json_io::to_json(ctx.report).dump(2) << "\n";
  else {
    std::cout << ctx.summary.str();
    for (const auto& w : ctx.report.warnings) std::cout << "warning: " << w << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stackypi1: fundamental groups, torsors and weight spectral sequences on simplicial spaces"};
  app.require_subcommand(1);
  Context ctx;
  app.add_flag("--json", ctx.g.json, "emit the JSON run report");
  app.add_option("--budget", ctx.g.budget_spec, "enumeration budget <states>[,<max matrix dim>]")->envname("STACKYPI1_BUDGET");
  app.add_option("--threads", ctx.g.threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--seed", ctx.g.seed, "seed for randomized spot checks");
  app.add_flag("--timing", ctx.g.timing, "include wall-clock timing in the report");

  SpaceOpts space_o;
  auto* space = app.add_subcommand("space", "validate a simplicial space and report its components");
  space->add_option("--space", space_o.space, "space.json")->required();
  auto* pi1 = app.add_subcommand("pi1", "edge-path presentation of the fundamental group");
  pi1->add_option("--space", space_o.space, "space.json")->required();
  pi1->add_option("--basepoint", space_o.basepoint, "level-0 component id");
  pi1->add_flag("--raw", space_o.raw, "skip the Tietze post-pass");

  CohomologyOpts coh_o;
  auto* coh = app.add_subcommand("cohomology", "cohomology with local coefficients");
  coh->add_option("--space", coh_o.space, "space.json")->required();
  coh->add_option("--system", coh_o.system, "localsystem.json (default: trivial rank 1)");
  coh->add_option("--max-degree", coh_o.max_degree)->check(CLI::Range(0, 2));
  coh->add_option("--weight", coh_o.weight, "also compute the weight filtration with levels in weight w");

  TorsorOpts tor_o;
  auto* tor = app.add_subcommand("torsors", "G-torsors: framed enumeration and isomorphism classes");
  tor->add_option("--space", tor_o.space, "space.json")->required();
  tor->add_option("--group", tor_o.group, "group.json")->required();
  tor->add_flag("--framed", tor_o.framed, "count framed descent data at the basepoint");
  tor->add_flag("--weight-classes", tor_o.weight_classes, "partition classes by restriction to level 0");
  tor->add_flag("--list", tor_o.list, "list framed objects in the report");

  RealizeOpts real_o;
  auto* real = app.add_subcommand("realize", "realize a presentation by a 2-complex and its unfolding pushout");
  real->add_option("--presentation", real_o.presentation, "pres.json")->required();
  real->add_option("--fingerprint-bound", real_o.bound, "catalog order bound")->check(CLI::Range(1, 24));
  real->add_option("--emit-plan", real_o.emit_plan, "write the full realization plan");

  SsOpts ss_o;
  std::string ss_mode;
  auto* ss = app.add_subcommand("ss", "spectral sequence of a filtered complex");
  ss->add_option("mode", ss_mode, "pages | dec | classify | degeneration")
      ->required()
      ->check(CLI::IsMember({"pages", "dec", "classify", "degeneration"}));
  ss->add_option("--input", ss_o.input, "fcomplex.json")->required();
  ss->add_option("--from-page", ss_o.from_page, "degeneration: first page to check");
  ss->add_option("--output", ss_o.output, "dec: write the Dec complex");

  RootOpts root_o;
  auto* root = app.add_subcommand("root-lift", "root-stack lifting criterion for local monodromy");
  root->add_option("--phi", root_o.phi, "group.json")->required();
  root->add_option("--elements", root_o.elements, "commuting element indices, comma separated")->required();
  root->add_option("--roots", root_o.roots, "root multiplicities, comma separated")->required();

  std::string par_mode, par_input;
  auto* par = app.add_subcommand("parabolic", "parabolic descriptors");
  par->add_option("mode", par_mode, "translate | degree")->required()->check(CLI::IsMember({"translate", "degree"}));
  par->add_option("--input", par_input, "par.json")->required();

  WreathOpts wr_o;
  auto* wr = app.add_subcommand("wreath", "(G wr Phi) x| Phi and the change-of-action square");
  wr->add_option("--g", wr_o.g, "group.json for G")->required();
  wr->add_option("--phi", wr_o.phi, "group.json for Phi")->required();
  wr->add_option("--action", wr_o.action, "action.json (default: trivial)");
  wr->add_flag("--validate", wr_o.validate, "check the group axioms");
  wr->add_flag("--changeaction-check", wr_o.changeaction, "compare groupoid cardinalities");
  wr->add_option("--gamma", wr_o.gamma, "group.json for Gamma");
  wr->add_option("--omega", wr_o.omega, "images of Gamma's elements in Phi, comma separated");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    const bool unknown = app.get_subcommands().empty();
    if (unknown) {
      // first positional word that is not the value of a global option
      for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--budget" || a == "--threads" || a == "--seed") ++i;
        else if (a.rfind("-", 0) != 0) {
          message = "unknown command '" + a + "'";
          break;
        }
      }
    }
    const Error err(unknown ? ErrorKind::UnknownCommand : ErrorKind::SchemaError, message, "");
    ctx.report.command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    ctx.report.results = Json{{"error", json_io::error_json(err)}};
    std::cerr << "error: " << to_string(err.kind()) << ": " << message << "\n";
    if (ctx.g.json) std::cout << json_io::to_json(ctx.report).dump(2) << "\n";
    return 2;
  }

  auto* cmd = app.get_subcommands().front();
  ctx.report.command = cmd->get_name();
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    ctx.budget = parse_budget(ctx.g.budget_spec);
    const std::string name = cmd->get_name();
    if (name == "space") run_space(ctx, space_o);
    else if (name == "pi1") run_pi1(ctx, space_o);
    else if (name == "cohomology") run_cohomology(ctx, coh_o);
    else if (name == "torsors") run_torsors(ctx, tor_o);
    else if (name == "realize") run_realize(ctx, real_o);
    else if (name == "ss") {
      ctx.report.command = "ss " + ss_mode;
      run_ss(ctx, ss_mode, ss_o);
    } else if (name == "root-lift") run_root_lift(ctx, root_o);
    else if (name == "parabolic") {
      ctx.report.command = "parabolic " + par_mode;
      run_parabolic(ctx, par_mode, par_input);
    } else if (name == "wreath") run_wreath(ctx, wr_o);
    else throw Error(ErrorKind::UnknownCommand, "unknown command " + name);
    code = ctx.failed_check ? 1 : 0;
  } catch (const Error& e) {
    const bool malformed = e.kind() == ErrorKind::SchemaError || e.kind() == ErrorKind::UnknownCommand;
    code = malformed ? 2 : 1;
    ctx.report.results = Json{{"error", json_io::error_json(e)}};
    ctx.summary.str("");
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what();
    if (!e.where().empty() || malformed) std::cerr << " (at \"" << e.where() << "\")";
    std::cerr << "\n";
  }
  if (ctx.g.timing) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    ctx.report.timing = Json{{"total_ms", ms}};
  }
  return emit(ctx, code);
}
