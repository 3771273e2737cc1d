// starsuper: build *-superalgebras, run analyses, and the verification suites.

#include "starsuper/analysis.hpp"
#include "starsuper/errors.hpp"
#include "starsuper/io.hpp"
#include "starsuper/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace starsuper;

namespace {

struct Globals {
  int cap_n = AnalysisConfig{}.cap_n;
  std::uint64_t cap_evals = AnalysisConfig{}.cap_evals;
  std::uint64_t mod_p = 0;
  int threads = 1;
  std::uint64_t seed = 1;
  std::string out;

  AnalysisConfig config() const {
    AnalysisConfig c;
    c.cap_n = cap_n;
    c.cap_evals = cap_evals;
    if (mod_p != 0) c.mod_p = mod_p;
    c.threads = threads;
    c.seed = seed;
    check_config(c);
    return c;
  }
};

// Writes CSV rows to --out when given.
void emit_report(const Globals& g, const std::vector<ReportRow>& rows) {
  if (g.out.empty()) return;
  std::ofstream f(g.out);
  if (!f) throw InvalidArgument("cannot write " + g.out);
  write_csv(f, rows);
}

StarSuperAlgebra load_valid(const std::string& path) {
  StarSuperAlgebra a = read_algebra_file(path);
  const ValidationReport report = validate(a);
  if (!report.empty()) {
    std::string msg = path + " is not a valid *-superalgebra:";
    for (const auto& v : report) msg += "\n  " + v.invariant + ": " + v.detail;
    throw InvalidArgument(msg);
  }
  return a;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

std::vector<int> parse_grading(const std::string& s) {
  std::vector<int> out;
  for (const auto& p : split(s, ',')) {
    if (p != "0" && p != "1") throw InvalidArgument("grading entries must be 0 or 1, got '" + p + "'");
    out.push_back(p == "1");
  }
  return out;
}

std::vector<VarKind> parse_kinds(const std::string& s) {
  if (s == "all") return {kGradedKinds.begin(), kGradedKinds.end()};
  std::vector<VarKind> out;
  for (const auto& p : split(s, ',')) out.push_back(parse_var_kind(p));
  return out;
}

// --- build --------------------------------------------------------------------------

struct BuildArgs {
  std::string family;
  int h = -1, l = 0, n = -1;
  std::string sign = "minus";
  std::string diamond = "t";
};

FamilyTag tag_from(const BuildArgs& b) {
  std::string desc;
  if (b.family == "mhl-t" || b.family == "mhl-exc") {
    desc = b.family + ":" + std::to_string(b.h) + "," + std::to_string(b.l);
  } else if (b.family == "mhh-s") {
    desc = b.family + ":" + std::to_string(b.h);
  } else if (b.family == "mn-cmn") {
    desc = b.family + ":" + std::to_string(b.n) + "," + b.diamond + "," + b.sign;
  } else if (b.family == "mn-cmn-exc") {
    desc = b.family + ":" + std::to_string(b.n);
  } else {
    throw InvalidArgument("unknown family '" + b.family + "'");
  }
  return parse_family_descriptor(desc);
}

int cmd_build(const Globals& g, const BuildArgs& b) {
  const FamilyTag tag = tag_from(b);
  const StarSuperAlgebra a = build_family(tag);
  std::ostream& summary = g.out.empty() ? std::cerr : std::cout;
  summary << "family," << tag.describe() << "\ndim," << a.dim() << "\nhom_dims," << to_string(hom_dims(a)) << "\n";
  if (g.out.empty()) {
    std::cout << serialize_algebra(a);
  } else {
    write_algebra_file(a, g.out);
  }
  return 0;
}

// --- ut ---------------------------------------------------------------------------------

int cmd_ut(const Globals& g, const std::string& spec_path, const std::string& components, const std::string& grading) {
  UtSpec spec;
  std::string grading_text = grading;
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    if (!in) throw ParseError("cannot read " + spec_path);
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
      for (const auto& c : doc.at("components")) spec.components.push_back(parse_family_descriptor(c.get<std::string>()));
      if (grading_text.empty()) {
        for (const auto& x : doc.at("grading")) grading_text += (grading_text.empty() ? "" : ",") + std::to_string(x.get<int>());
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed UT spec: ") + e.what());
    }
  } else {
    for (const auto& c : split(components, ';')) spec.components.push_back(parse_family_descriptor(c));
  }
  if (spec.components.empty()) throw InvalidArgument("UT* needs at least one component");
  spec.gtilde = parse_grading(grading_text);
  const UtAlgebra ut = ut_star(spec);
  const UtLayout& lay = ut.layout;
  std::cout << "k,component,s_k,eta_k,Bl_k\n";
  for (std::size_t k = 1; k <= spec.components.size(); ++k) {
    std::cout << k << "," << spec.components[k - 1].describe() << "," << lay.sizes[k - 1] << "," << lay.eta[k] << ","
              << lay.block_first(static_cast<int>(k)) << ".." << lay.block_last(static_cast<int>(k)) << "\n";
  }
  std::cout << "dim," << ut.algebra.dim() << "\nradical_dim," << jacobson_radical(ut.algebra).dim() << "\n";
  if (!g.out.empty()) write_algebra_file(ut.algebra, g.out);
  return 0;
}

// --- analyses ---------------------------------------------------------------------------

int cmd_dims(const Globals& g, const std::string& path) {
  const StarSuperAlgebra a = load_valid(path);
  const HomDims h = hom_dims(a);
  std::vector<ReportRow> rows;
  std::cout << "kind,dim\n";
  for (VarKind k : kGradedKinds) {
    std::cout << to_string(k) << "," << h.of(k) << "\n";
    rows.push_back({"hom_dim", path, to_string(k), "", "", std::to_string(h.of(k)), "info"});
  }
  emit_report(g, rows);
  return 0;
}

int cmd_threshold(const Globals& g, const std::string& path, const std::string& kinds, int cap, bool unbarred,
                  bool ordinary) {
  const AnalysisConfig cfg = g.config();
  const StarSuperAlgebra a = load_valid(path);
  std::vector<ReportRow> rows;
  std::cout << "kind,threshold\n";
  const auto report = [&](const ThresholdReport& r) {
    std::cout << to_string(r.kind) << "," << r.threshold << "\n";
    rows.push_back({"threshold", path, to_string(r.kind), "", "", std::to_string(r.threshold), "info"});
    if (r.witness) {
      rows.push_back({"witness", path, to_string(r.kind), std::to_string(r.threshold - 1), "", r.witness->describe(), "info"});
    }
  };
  if (ordinary) {
    report(ordinary_capelli_threshold(a, cap, cfg, !unbarred));
  } else {
    for (VarKind k : parse_kinds(kinds)) report(capelli_threshold(a, k, cap, cfg, !unbarred));
  }
  emit_report(g, rows);
  return 0;
}

int cmd_identity(const Globals& g, const std::string& path, const std::string& gamma, int capelli, const std::string& kind,
                 const std::string& deleted) {
  const AnalysisConfig cfg = g.config();
  const StarSuperAlgebra a = load_valid(path);
  GeneratorSet set;
  std::string subject;
  if (!gamma.empty()) {
    if (gamma == "hom+1") {
      set = gamma_generators(hom_dims(a).plus_one());
    } else {
      const auto parts = split(gamma, ',');
      if (parts.size() != 4) throw InvalidArgument("--gamma takes four ranks or hom+1");
      set = gamma_generators(std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2]), std::stoi(parts[3]));
    }
    subject = "gamma(" + gamma + ")";
  } else if (capelli > 0) {
    CapelliDescriptor d = CapelliDescriptor::unbarred(capelli, parse_var_kind(kind));
    for (const auto& p : split(deleted, ',')) {
      const int j = std::stoi(p);
      if (j < 1 || j >= capelli) throw InvalidArgument("deleted x index out of range: " + p);
      d.deleted[static_cast<std::size_t>(j - 1)] = true;
    }
    subject = d.describe();
    set.emplace_back(std::move(d));
  } else {
    throw InvalidArgument("identity needs --gamma or --capelli");
  }
  const WitnessReport r = satisfies_generator_set(a, set, cfg);
  std::cout << "polynomials,identity\n" << subject << "," << (r.is_identity ? "true" : "false") << "\n";
  std::vector<ReportRow> rows = {{"identity", path, "", "", "", r.is_identity ? "true" : "false", "info"}};
  if (r.witness) {
    std::cout << "witness," << r.witness->describe() << "\n";
    rows.push_back({"witness", path, "", "", "", r.witness->describe(), "info"});
  }
  emit_report(g, rows);
  return 0;
}

int cmd_codim(const Globals& g, const std::string& path, int n, bool table, bool ordinary) {
  const AnalysisConfig cfg = g.config();
  const StarSuperAlgebra a = load_valid(path);
  std::vector<ReportRow> rows;
  const std::string kind = ordinary ? "x" : "graded";
  if (n > cfg.cap_n) {
    throw SizeCapExceeded("n=" + std::to_string(n) + " exceeds --cap-n=" + std::to_string(cfg.cap_n));
  }
  std::cout << "n,value,root\n";
  for (int k = table ? 1 : n; k <= n; ++k) {
    const std::uint64_t value = ordinary ? codim_ordinary(a, k, cfg) : codim_graded(a, k, cfg).value;
    const std::string root = format_decimal(std::pow(static_cast<double>(value), 1.0 / k));
    std::cout << k << "," << value << "," << root << "\n";
    rows.push_back({"codim", path, kind, std::to_string(k), "", std::to_string(value), "info"});
    rows.push_back({"codim_root", path, kind, std::to_string(k), "", root, "info"});
  }
  emit_report(g, rows);
  return 0;
}

int cmd_exponent(const Globals& g, const std::string& path) {
  const StarSuperAlgebra a = load_valid(path);
  const int e = admissible_exponent(a);
  const bool reduced = is_reduced(a);
  std::cout << "exponent," << e << "\nreduced," << (reduced ? "true" : "false") << "\n";
  emit_report(g, {{"exponent", path, "", "", "", std::to_string(e), "info"},
                  {"reduced", path, "", "", "", reduced ? "true" : "false", "info"}});
  return 0;
}

int cmd_verify(const Globals& g, const std::string& suite) {
  const std::vector<ReportRow> rows = run_suite(suite, g.config());
  if (g.out.empty()) {
    write_csv(std::cout, rows);
  } else {
    emit_report(g, rows);
  }
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.status == "fail";
  std::cerr << rows.size() << " rows, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with finite-dimensional *-superalgebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--cap-n", g.cap_n, "Largest n for codimensions")->capture_default_str();
  app.add_option("--cap-evals", g.cap_evals, "Evaluation budget of a single check")->capture_default_str();
  app.add_option("--mod-p", g.mod_p, "Screening prime (> 2^30)");
  app.add_option("--threads", g.threads, "Worker threads for codimensions")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed of the randomized witness search")->capture_default_str();
  app.add_option("--out", g.out, "Output file (algebra JSON or CSV report)");

  std::function<int()> action;

  BuildArgs b;
  auto* build = app.add_subcommand("build", "Build a simple family and write its interchange document");
  build->set_help_flag("--help", "Print this help message and exit");
  build->add_option("--family", b.family, "mhl-t, mhh-s, mhl-exc, mn-cmn or mn-cmn-exc")->required();
  build->add_option("--h", b.h);
  build->add_option("--l", b.l);
  build->add_option("--n", b.n);
  build->add_option("--sign", b.sign, "minus or plus (mn-cmn)");
  build->add_option("--diamond", b.diamond, "t or s (mn-cmn)");
  build->callback([&] { action = [&] { return cmd_build(g, b); }; });

  std::string ut_spec_path, ut_components, ut_grading;
  auto* ut = app.add_subcommand("ut", "Build UT*(A_1, ..., A_m) and print its layout");
  ut->add_option("spec", ut_spec_path, "JSON file with components and grading");
  ut->add_option("--components", ut_components, "e.g. \"mhl-t:1,0;mhl-t:1,0\"");
  ut->add_option("--grading", ut_grading, "gtilde, e.g. \"0,1\"");
  ut->callback([&] { action = [&] { return cmd_ut(g, ut_spec_path, ut_components, ut_grading); }; });

  std::string path;
  auto* dims = app.add_subcommand("dims", "Dimensions of the four homogeneous components");
  dims->add_option("algebra", path)->required();
  dims->callback([&] { action = [&] { return cmd_dims(g, path); }; });

  std::string kinds = "all";
  int cap = 12;
  bool unbarred = false, ordinary = false;
  auto* thr = app.add_subcommand("threshold", "Capelli thresholds");
  thr->add_option("algebra", path)->required();
  thr->add_option("--kind", kinds, "y+, y-, z+, z-, comma list or all")->capture_default_str();
  thr->add_option("--cap", cap, "Largest rank searched")->capture_default_str();
  thr->add_flag("--unbarred", unbarred, "Only Cap_m itself, not the barred set");
  thr->add_flag("--ordinary", ordinary, "Ungraded alternating variables");
  thr->callback([&] { action = [&] { return cmd_threshold(g, path, kinds, cap, unbarred, ordinary); }; });

  std::string gamma, id_kind = "y+", deleted;
  int capelli = 0;
  auto* idn = app.add_subcommand("identity", "Check graded identities");
  idn->add_option("algebra", path)->required();
  idn->add_option("--gamma", gamma, "Generator set ranks \"a,b,c,d\" or hom+1");
  idn->add_option("--capelli", capelli, "Rank of a single Capelli polynomial");
  idn->add_option("--kind", id_kind, "Kind of the Capelli polynomial")->capture_default_str();
  idn->add_option("--delete", deleted, "Deleted x positions, e.g. \"1,3\"");
  idn->callback([&] { action = [&] { return cmd_identity(g, path, gamma, capelli, id_kind, deleted); }; });

  int n = 1;
  bool table = false, codim_ordinary_flag = false;
  auto* cod = app.add_subcommand("codim", "Graded (or ordinary) codimensions");
  cod->add_option("algebra", path)->required();
  cod->add_option("--n", n)->required();
  cod->add_flag("--table", table, "All n from 1");
  cod->add_flag("--ordinary", codim_ordinary_flag, "Ordinary codimension");
  cod->callback([&] { action = [&] { return cmd_codim(g, path, n, table, codim_ordinary_flag); }; });

  auto* exp = app.add_subcommand("exponent", "Admissible exponent from the Wedderburn data");
  exp->add_option("algebra", path)->required();
  exp->callback([&] { action = [&] { return cmd_exponent(g, path); }; });

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify-paper", "Run the verification suites");
  ver->add_option("--suite", suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
  ver->callback([&] { action = [&] { return cmd_verify(g, suite); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  try {
    return action();
  } catch (const SizeCapExceeded& e) {
    std::cerr << "size cap: " << e.what() << "\n";
    return 2;
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
