#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "borelab/report.hpp"

namespace fs = std::filesystem;
using namespace borelab;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string type;
  std::string pi1;
  bool adjoint = false;
  bool all = false;
  bool dedupe = false;
  std::string format = "text";
  std::string out;
  int jobs = 0;
  int max_length = -1;
  std::vector<std::string> checks;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

NodeSet parse_nodes(const std::string& list) {
  NodeSet s;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0 || v >= kMaxNodes) throw std::invalid_argument(item);
      s.insert(v);
    } catch (const std::logic_error&) {
      throw UsageError("bad node index '" + item + "' in --pi1");
    }
  }
  if (s.empty()) throw UsageError("--pi1 needs at least one node");
  return s;
}

std::vector<InvolutionSpec> select_specs(const AffineDiagram& d, const Options& o) {
  if (o.all) {
    if (!o.pi1.empty()) throw UsageError("--all and --pi1 are mutually exclusive");
    return catalog_involutions(d, o.adjoint, o.dedupe);
  }
  if (o.pi1.empty()) {
    if (o.adjoint) {
      for (int i = 0; i < d.nodes; ++i)
        if (d.marks[i] == 1) return {make_involution(d, NodeSet::single(i), true)};
    }
    throw UsageError("select an involution with --pi1 or sweep with --all");
  }
  return {make_involution(d, parse_nodes(o.pi1), o.adjoint)};
}

void write_to(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

fs::path sweep_dir(const Options& o) {
  fs::path dir = ".";
  if (!o.out.empty())
    dir = o.out;
  else if (const char* env = std::getenv("BORELAB_OUT_DIR"); env && *env)
    dir = env;
  fs::create_directories(dir);
  return dir;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("format '" + o.format + "' is not available for this command");
}

struct Run {
  std::shared_ptr<GradedContext> ctx;
  MinusculePoset poset;
  FamilyTable families;
};

Run run_one(const std::shared_ptr<const RootSystem>& rs, const InvolutionSpec& spec, int jobs) {
  Run r{std::make_shared<GradedContext>(rs, spec), {}, {}};
  r.poset = enumerate(*r.ctx, jobs);
  r.families = ideal_families(*r.ctx, r.poset);
  return r;
}

int cmd_catalog(const Options& o) {
  require_format(o, {"text", "json"});
  AffineDiagram d = load_diagram(o.type);
  auto rs = std::make_shared<RootSystem>(d);
  auto specs = catalog_involutions(d, o.adjoint, o.dedupe);
  if (o.format == "json") {
    Json doc;
    doc["diagram"] = d.label;
    doc["marks"] = d.marks;
    doc["involutions"] = Json::array();
    for (const auto& s : specs) doc["involutions"].push_back(involution_json(GradedContext(rs, s)));
    write_to(o.out, doc.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  os << d.label << "  marks " << RootVector(d.marks).to_string() << "\n" << ascii_layout(d) << "\n";
  for (const auto& s : specs) os << involution_text(GradedContext(rs, s)) << "\n";
  write_to(o.out, os.str());
  return 0;
}

// enumerate, maxima and verify share this driver.
int cmd_document(const Options& o, bool with_checks, bool maxima_only) {
  require_format(o, maxima_only || with_checks ? std::initializer_list<const char*>{"text", "json"}
                                               : std::initializer_list<const char*>{"text", "json", "dot"});
  AffineDiagram d = load_diagram(o.type);
  auto rs = std::make_shared<RootSystem>(d);
  auto specs = select_specs(d, o);
  const bool sweep = o.all;
  fs::path dir = sweep ? sweep_dir(o) : fs::path();
  bool all_pass = true;
  for (const auto& spec : specs) {
    Run r = run_one(rs, spec, o.jobs);
    std::vector<CheckResult> checks;
    if (with_checks) checks = verify_all(*r.ctx, r.poset, {o.max_length, o.jobs, o.checks});
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    all_pass = all_pass && pass;
    Json doc = result_document(*r.ctx, r.poset, r.families, with_checks ? &checks : nullptr);
    if (maxima_only) doc.erase("families");
    std::string body;
    std::string ext = o.format == "text" ? ".txt" : "." + o.format;
    if (o.format == "json")
      body = doc.dump(2) + "\n";
    else if (o.format == "dot")
      body = hasse_dot(*r.ctx, r.poset);
    else if (maxima_only)
      body = result_text(doc).substr(0, result_text(doc).find("families:"));
    else
      body = result_text(doc) + (with_checks ? "checks:\n" + checks_text(checks) : "");
    if (sweep) {
      write_to((dir / (spec.file_stem() + ext)).string(), body);
      std::cout << (with_checks ? (pass ? "PASS " : "FAIL ") : "") << spec.file_stem() << "  size " << r.poset.size()
                << "  maxima " << r.poset.maximal().size() << "\n";
    } else {
      write_to(o.out, body);
    }
  }
  return all_pass ? 0 : kExitVerifyFailed;
}

int cmd_export(const Options& o) {
  AffineDiagram d = load_diagram(o.type);
  auto rs = std::make_shared<RootSystem>(d);
  fs::path dir = sweep_dir(o);
  for (const auto& spec : select_specs(d, o)) {
    Run r = run_one(rs, spec, o.jobs);
    write_to((dir / (spec.file_stem() + ".json")).string(), result_document(*r.ctx, r.poset, r.families).dump(2) + "\n");
    write_to((dir / (spec.file_stem() + ".dot")).string(), hasse_dot(*r.ctx, r.poset));
    std::cout << (dir / spec.file_stem()).string() << ".{json,dot}\n";
  }
  return 0;
}

void add_common(CLI::App* cmd, Options& o, bool selects) {
  cmd->add_option("--type", o.type, "affine diagram label, e.g. E8~1 or D5~2")->required();
  cmd->add_flag("--adjoint", o.adjoint, "adjoint involution (k = 2) on an untwisted diagram");
  cmd->add_flag("--dedupe", o.dedupe, "keep one involution per diagram-automorphism orbit");
  cmd->add_option("--out", o.out, "output file, or directory in sweep mode");
  if (!selects) {
    cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    return;
  }
  cmd->add_option("--pi1", o.pi1, "comma-separated Kac node indices with s_i = 1");
  cmd->add_flag("--all", o.all, "sweep every involution of the diagram");
  cmd->add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  cmd->add_option("--jobs", o.jobs, "worker threads, 0 for the OpenMP default")->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-length", o.max_length, "length bound of the alcove sweep in verify");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Borel-stable abelian subalgebras of graded affine algebras"};
  app.require_subcommand(1);
  Options o;
  auto* catalog = app.add_subcommand("catalog", "list the involutions of a diagram");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate sigma-minuscule elements and families");
  auto* maxima = app.add_subcommand("maxima", "maximal elements with dimension formulas");
  auto* verify = app.add_subcommand("verify", "run the structural checks");
  auto* export_cmd = app.add_subcommand("export", "write JSON and DOT files");
  add_common(catalog, o, false);
  for (auto* c : {enumerate_cmd, maxima, verify, export_cmd}) add_common(c, o, true);
  verify->add_option("--check", o.checks, "run only the named checks (repeatable)")
      ->check(CLI::IsMember(check_names()))
      ->delimiter(',');
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    if (catalog->parsed()) return cmd_catalog(o);
    if (enumerate_cmd->parsed()) return cmd_document(o, false, false);
    if (maxima->parsed()) return cmd_document(o, false, true);
    if (verify->parsed()) return cmd_document(o, true, false);
    return cmd_export(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
