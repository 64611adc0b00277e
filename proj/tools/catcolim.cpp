#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "catcolim/dsl.hpp"
#include "catcolim/equiv.hpp"
#include "json.hpp"

using namespace catcolim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitCheck = 2;
constexpr int kExitUndecided = 3;

int exit_for(const error& e) {
  switch (e.code) {
    case errc::parse_error:
    case errc::resolve_error:
      return kExitParse;
    case errc::undecided:
    case errc::cap_exceeded:
    case errc::not_finite:
    case errc::index_not_finite:
    case errc::value_not_finite:
      return kExitUndecided;
    default:
      return kExitCheck;
  }
}

struct Options {
  std::vector<std::string> files;
  bool json = false;
  std::string dot_file;
  std::string out_file;
  std::string out_name = "Result";
  int bound = 4;
  Caps caps;
};

void apply_caps_env(Caps& caps) {
  const char* env = std::getenv("CATCOLIM_CAPS");
  if (!env) return;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    std::string key = item.substr(0, eq);
    long val = std::strtol(item.c_str() + eq + 1, nullptr, 10);
    if (key == "max_rules") caps.max_rules = static_cast<int>(val);
    if (key == "max_word_len") caps.max_word_len = static_cast<int>(val);
    if (key == "max_bfs_nodes") caps.max_bfs_nodes = val;
  }
}

Workspace load_workspace(const Options& opts) {
  std::string all;
  for (const auto& path : opts.files) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open input file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    all += ss.str();
    all += "\n";
  }
  return parse_workspace(all);
}

std::ostream& output_stream(const Options& opts, std::ofstream& file_holder) {
  if (opts.out_file.empty()) return std::cout;
  file_holder.open(opts.out_file);
  if (!file_holder)
    throw error(errc::validation_error, "cannot open output file '" + opts.out_file + "'");
  return file_holder;
}

void emit_category(const Options& opts, const FpCategory& cat,
                   const std::vector<int>& highlighted = {}) {
  std::ofstream holder;
  std::ostream& os = output_stream(opts, holder);
  if (opts.json) {
    os << category_to_json(cat) << "\n";
  } else {
    os << print_category(opts.out_name, cat);
  }
  if (!opts.dot_file.empty()) {
    std::ofstream dot(opts.dot_file);
    if (!dot)
      throw error(errc::validation_error,
                  "cannot open dot file '" + opts.dot_file + "'");
    dot << category_to_dot(cat, opts.out_name, highlighted);
  }
}

const CatPtr& need_category(const Workspace& ws, const std::string& name) {
  const CatPtr* c = ws.find_category(name);
  if (!c) throw error(errc::resolve_error, "no category named '" + name + "'");
  return *c;
}
const DiagramOfCategories& need_diagram(const Workspace& ws, const std::string& name) {
  const DiagramOfCategories* d = ws.find_diagram(name);
  if (!d) throw error(errc::resolve_error, "no diagram named '" + name + "'");
  return *d;
}
const WeightPresentation& need_weight(const Workspace& ws, const std::string& name) {
  const WeightPresentation* w = ws.find_weight(name);
  if (!w) throw error(errc::resolve_error, "no weight named '" + name + "'");
  return *w;
}
const MarkedClass& need_marking(const Workspace& ws, const std::string& name) {
  const MarkedClass* m = ws.find_marking(name);
  if (!m) throw error(errc::resolve_error, "no marking named '" + name + "'");
  return *m;
}

int report_exit(const Report& rep) {
  if (rep.ok()) return kExitOk;
  return rep.has_unknown() && rep.entries.size() ==
                                  static_cast<size_t>(std::count_if(
                                      rep.entries.begin(), rep.entries.end(),
                                      [](const CheckEntry& e) {
                                        return e.verdict == Verdict::unknown;
                                      }))
             ? kExitUndecided
             : kExitCheck;
}

int cmd_check(const Options& opts) {
  Workspace ws = load_workspace(opts);
  Report all;
  for (const auto& [name, cat] : ws.categories) {
    auto eng = engine_for(cat, opts.caps);
    ++all.checked;
    if (!eng->rs().complete)
      all.add("category " + name, Verdict::unknown,
              "completion hit caps; equality may be undecided");
  }
  for (const auto& [name, F] : ws.diagrams)
    all.merge(validate_diagram(F, opts.caps), "diagram " + name + ": ");
  for (const auto& [name, W] : ws.weights)
    all.merge(validate_weight(W, opts.caps), "weight " + name + ": ");
  std::cout << all.summary() << "\n";
  return report_exit(all);
}

int cmd_enumerate(const Options& opts, const std::string& cat_name) {
  Workspace ws = load_workspace(opts);
  const CatPtr& cat = need_category(ws, cat_name);
  FinitenessReport rep = enumerate_arrows(cat, opts.caps);
  std::cout << finiteness_name(rep.verdict) << " (" << rep.arrow_count
            << " arrows found)\n";
  if (rep.verdict == Finiteness::finite)
    for (const auto& w : rep.normal_forms)
      std::cout << "  " << cat->objects[static_cast<size_t>(w.src)] << " -> "
                << cat->objects[static_cast<size_t>(w.dst)] << ": "
                << print_word(*cat, w) << "\n";
  return rep.verdict == Finiteness::finite ? kExitOk : kExitUndecided;
}

int cmd_oplax(const Options& opts, const std::string& diag) {
  Workspace ws = load_workspace(opts);
  GrothendieckResult G = oplax_colimit(need_diagram(ws, diag), opts.caps);
  emit_category(opts, *G.total, G.cartesian_generators);
  return kExitOk;
}

int cmd_sigma(const Options& opts, const std::string& diag, const std::string& marked) {
  Workspace ws = load_workspace(opts);
  SigmaColimResult S =
      sigma_bicolimit(need_diagram(ws, diag), need_marking(ws, marked), opts.caps);
  emit_category(opts, *S.loc.localized, S.loc.targets);
  return kExitOk;
}

int cmd_weighted(const Options& opts, const std::string& diag,
                 const std::string& weight) {
  Workspace ws = load_workspace(opts);
  WeightedColimResult W =
      weighted_bicolimit(need_diagram(ws, diag), need_weight(ws, weight), opts.caps);
  for (const auto& warn : W.elements.warnings) std::cerr << "warning: " << warn << "\n";
  emit_category(opts, *W.sigma.loc.localized, W.sigma.loc.targets);
  return kExitOk;
}

MarkedClass marking_or_empty(const Workspace& ws, const std::string& name,
                             const CatPtr& index) {
  if (name.empty()) {
    MarkedClass S;
    S.index = index;
    return S;
  }
  return need_marking(ws, name);
}

int cmd_codescent_build(const Options& opts, const std::string& diag,
                        const std::string& marked) {
  Workspace ws = load_workspace(opts);
  const DiagramOfCategories& F = need_diagram(ws, diag);
  MarkedCodescentResult R =
      build_marked_codescent(F, marking_or_empty(ws, marked, F.index), opts.caps);
  std::ofstream holder;
  std::ostream& os = output_stream(opts, holder);
  if (opts.json) {
    nlohmann::json j;
    j["X0"] = nlohmann::json::parse(category_to_json(*R.X->x0));
    j["X1"] = nlohmann::json::parse(category_to_json(*R.X->x1));
    j["X2"] = nlohmann::json::parse(category_to_json(*R.X->x2));
    os << j.dump(2) << "\n";
  } else {
    os << print_category(opts.out_name + "_X0", *R.X->x0)
       << print_category(opts.out_name + "_X1", *R.X->x1)
       << print_category(opts.out_name + "_X2", *R.X->x2);
  }
  if (!opts.dot_file.empty()) {
    std::ofstream dot(opts.dot_file);
    dot << category_to_dot(*R.X->x1, opts.out_name + "_X1", {});
  }
  return kExitOk;
}

int cmd_codescent_check(const Options& opts, const std::string& diag,
                        const std::string& marked) {
  Workspace ws = load_workspace(opts);
  const DiagramOfCategories& F = need_diagram(ws, diag);
  MarkedCodescentResult R =
      build_marked_codescent(F, marking_or_empty(ws, marked, F.index), opts.caps);
  Report rep = check_codescent(*R.X, opts.caps);
  std::cout << rep.summary() << "\n";
  return report_exit(rep);
}

int cmd_codescent_bicoeq(const Options& opts, const std::string& diag,
                         const std::string& marked) {
  Workspace ws = load_workspace(opts);
  const DiagramOfCategories& F = need_diagram(ws, diag);
  MarkedCodescentResult R =
      build_marked_codescent(F, marking_or_empty(ws, marked, F.index), opts.caps);
  BicoeqResult B = bicoequalizer_of_codescent(R.X, opts.caps);
  emit_category(opts, *B.data.C, B.xi_gens);
  return kExitOk;
}

int cmd_nerve(const Options& opts, const std::string& cat_name,
              const std::string& marked, bool bicoeq) {
  Workspace ws = load_workspace(opts);
  const CatPtr& cat = need_category(ws, cat_name);
  std::vector<int> targets;
  if (!marked.empty()) {
    const MarkedClass& M = need_marking(ws, marked);
    if (M.index != cat)
      throw error(errc::index_mismatch, "marking is not on the given category");
    targets = M.marked;
  }
  LocalizationResult L = invert(cat, targets);
  NerveResult N = nerve_codescent(L.quotient, opts.caps);
  if (bicoeq) {
    BicoeqResult B = bicoequalizer_of_codescent(N.X, opts.caps);
    emit_category(opts, *B.data.C, B.xi_gens);
    return kExitOk;
  }
  Report rep = check_codescent(*N.X, opts.caps);
  std::ofstream holder;
  std::ostream& os = output_stream(opts, holder);
  os << print_category(opts.out_name + "_X1", *N.X->x1)
     << print_category(opts.out_name + "_X2", *N.X->x2);
  std::cout << rep.summary() << "\n";
  return report_exit(rep);
}

int cmd_equiv(const Options& opts, const std::string& left, const std::string& right) {
  Workspace ws = load_workspace(opts);
  const CatPtr& L = need_category(ws, left);
  const CatPtr& R = need_category(ws, right);
  SearchBound bound;
  bound.max_image_len = opts.bound;
  EquivResult res = find_equivalence(L, R, bound, opts.caps);
  if (!res.found) {
    std::cout << (res.note.empty() ? "NotFoundWithinBound" : res.note) << "\n";
    return kExitCheck;
  }
  const EquivalenceWitness& w = *res.witness;
  std::cout << "Found equivalence " << left << " ~ " << right << "\n";
  for (size_t o = 0; o < L->objects.size(); ++o)
    std::cout << "  " << L->objects[o] << " -> "
              << R->objects[static_cast<size_t>(w.fwd.on_object(static_cast<int>(o)))]
              << "\n";
  for (size_t g = 0; g < L->generators.size(); ++g)
    std::cout << "  " << L->generators[g].name << " -> "
              << print_word(*R, w.fwd.generator_map[g]) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted bicolimits of finitely presented categories"};
  app.require_subcommand(1);

  Options opts;
  apply_caps_env(opts.caps);
  app.add_option("-f,--file", opts.files, "input workspace files")
      ->expected(-1);
  app.add_flag("--json", opts.json, "emit JSON instead of the DSL");
  app.add_option("--dot", opts.dot_file, "write a DOT rendering to this file");
  app.add_option("--out", opts.out_file, "write the main output to this file");
  app.add_option("--name", opts.out_name, "name for emitted presentations");
  app.add_option("--bound", opts.bound, "generator image length bound for searches");
  app.add_option("--max-rules", opts.caps.max_rules, "completion rule cap");
  app.add_option("--max-word-len", opts.caps.max_word_len, "word length cap");
  app.add_option("--max-nodes", opts.caps.max_bfs_nodes, "search node cap");

  std::string a_cat, a_diag, a_marked, a_weight, a_left, a_right;
  bool a_bicoeq = false;

  auto* c_check = app.add_subcommand("check", "validate everything in the workspace");
  auto* c_enum = app.add_subcommand("enumerate", "enumerate the arrows of a category");
  c_enum->add_option("--category", a_cat, "category name")->required();
  auto* c_oplax = app.add_subcommand("oplax", "oplax colimit of a diagram");
  c_oplax->add_option("--diagram", a_diag)->required();
  auto* c_sigma = app.add_subcommand("sigma", "marked bicolimit of a diagram");
  c_sigma->add_option("--diagram", a_diag)->required();
  c_sigma->add_option("--marked", a_marked)->required();
  auto* c_weighted = app.add_subcommand("weighted", "weighted bicolimit of a diagram");
  c_weighted->add_option("--diagram", a_diag)->required();
  c_weighted->add_option("--weight", a_weight)->required();
  auto* c_code = app.add_subcommand("codescent", "codescent diagram operations");
  c_code->require_subcommand(1);
  auto* c_build = c_code->add_subcommand("build", "build the marked codescent diagram");
  c_build->add_option("--diagram", a_diag)->required();
  c_build->add_option("--marked", a_marked);
  auto* c_ccheck = c_code->add_subcommand("check", "build and verify the axioms");
  c_ccheck->add_option("--diagram", a_diag)->required();
  c_ccheck->add_option("--marked", a_marked);
  auto* c_bicoeq = c_code->add_subcommand("bicoeq", "bicoequalizer of the diagram");
  c_bicoeq->add_option("--diagram", a_diag)->required();
  c_bicoeq->add_option("--marked", a_marked);
  auto* c_nerve = app.add_subcommand("nerve", "nerve codescent diagram of a localization");
  c_nerve->add_option("--category", a_cat)->required();
  c_nerve->add_option("--marked", a_marked);
  c_nerve->add_flag("--bicoeq", a_bicoeq, "also bicoequalize");
  auto* c_equiv = app.add_subcommand("equiv", "search for an equivalence");
  c_equiv->add_option("--left", a_left)->required();
  c_equiv->add_option("--right", a_right)->required();

  // global flags may appear after a subcommand
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (opts.files.empty() && !c_check->parsed() && app.get_subcommands().empty())
      throw error(errc::parse_error, "no input files");
    if (c_check->parsed()) return cmd_check(opts);
    if (c_enum->parsed()) return cmd_enumerate(opts, a_cat);
    if (c_oplax->parsed()) return cmd_oplax(opts, a_diag);
    if (c_sigma->parsed()) return cmd_sigma(opts, a_diag, a_marked);
    if (c_weighted->parsed()) return cmd_weighted(opts, a_diag, a_weight);
    if (c_code->parsed()) {
      if (c_build->parsed()) return cmd_codescent_build(opts, a_diag, a_marked);
      if (c_ccheck->parsed()) return cmd_codescent_check(opts, a_diag, a_marked);
      if (c_bicoeq->parsed()) return cmd_codescent_bicoeq(opts, a_diag, a_marked);
    }
    if (c_nerve->parsed()) return cmd_nerve(opts, a_cat, a_marked, a_bicoeq);
    if (c_equiv->parsed()) return cmd_equiv(opts, a_left, a_right);
    std::cerr << "no command\n";
    return kExitParse;
  } catch (const error& e) {
    std::cerr << errc_name(e.code) << ": " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheck;
  }
}
