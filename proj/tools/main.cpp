#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flagrep/characterization.hpp"
#include "flagrep/io.hpp"
#include "flagrep/macaulay.hpp"
#include "flagrep/multicomplex.hpp"
#include "flagrep/oracle.hpp"
#include "flagrep/shedding.hpp"
#include "flagrep/structure.hpp"
#include "json.hpp"
#include "repro.hpp"

#ifndef FLAGREP_DATA_DIR
#define FLAGREP_DATA_DIR "data/expected"
#endif

using namespace flagrep;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

Tuple parse_tuple(const std::string& s) {
  Tuple out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ParseError("bad integer tuple '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw ParseError("empty tuple");
  return out;
}

int print_bool(bool v, const char* key) {
  std::cout << json{{key, v}}.dump(2) << "\n";
  return v ? kOk : kNo;
}

int print_check(const CheckReport& r, const char* key) {
  std::cout << json{{key, r.ok}, {"failures", r.failures}}.dump(2) << "\n";
  return r.ok ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flagrep: fine f-vectors of colored complexes and generalized Macaulay representations"};
  app.require_subcommand(1);
  int status = kOk;

  std::string path;
  std::vector<std::string> paths;
  std::string type_s;
  std::string lambda_s;
  std::string aprime_s;
  std::string x_s;
  std::string dot_path;
  std::string expected_dir = FLAGREP_DATA_DIR;
  std::optional<int> color;
  std::optional<int> facets;
  bool fixpoint = false;
  bool verbose = false;
  bool last = false;
  bool literal = false;
  long long n_value = 0;
  int jobs = 1;

  auto* fine_f = app.add_subcommand("fine-f", "Fine f-vector of a colored complex");
  fine_f->add_option("complex", path)->required();
  fine_f->callback([&] {
    ColoredComplex c = complex_from_json(read_file(path));
    FineVector f = fine_f_vector(c);
    std::cout << fine_vector_to_json(f, true);
  });

  auto* fine_h = app.add_subcommand("fine-h", "Fine h-vector of a colored complex");
  fine_h->add_option("complex", path)->required();
  fine_h->callback([&] {
    ColoredComplex c = complex_from_json(read_file(path));
    FineVector h = fine_h_vector(fine_f_vector(c));
    json out = json::parse(fine_vector_to_json(h, true));
    out["collapsed"] = collapsed(h);
    std::cout << out.dump(2) << "\n";
  });

  auto* compress = app.add_subcommand("compress", "Color compression of a multicomplex");
  compress->add_option("multicomplex", path)->required();
  auto* color_opt = compress->add_option("--color", color, "apply C_t once");
  compress->add_flag("--fixpoint", fixpoint, "apply C_1..C_n until stable")->excludes(color_opt);
  compress->callback([&] {
    ColoredMulticomplex m = multicomplex_from_json(read_file(path));
    if (color) {
      std::cout << multicomplex_to_json(compress_t(m, *color));
    } else {
      FixpointResult r = color_compress_fixpoint(m);
      json out = json::parse(multicomplex_to_json(r.result));
      out["applied"] = r.colors;
      std::cout << out.dump(2) << "\n";
    }
  });

  auto* check = app.add_subcommand("check", "Structural predicates");
  check->require_subcommand(1);
  auto add_check = [&](const char* name, const char* help, auto fn) {
    auto* sub = check->add_subcommand(name, help);
    sub->add_option("complex", path)->required();
    sub->add_option("--type", type_s, "a, defaults to the complex's type");
    sub->callback([&, fn] {
      ColoredComplex c = complex_from_json(read_file(path));
      Tuple a = type_s.empty() ? c.type() : parse_tuple(type_s);
      status = fn(c, a);
    });
  };
  add_check("shifted", "color-shifted", [](const ColoredComplex& c, const Tuple&) {
    return print_bool(is_color_shifted(c), "shifted");
  });
  add_check("compressed", "color-compressed", [](const ColoredComplex& c, const Tuple&) {
    return print_bool(is_color_compressed(c), "compressed");
  });
  add_check("vertex-decomp", "vertex-decomposable", [](const ColoredComplex& c, const Tuple&) {
    DecompositionResult r = is_vertex_decomposable(c);
    std::cout << certificate_to_json(r);
    return r.ok ? kOk : kNo;
  });
  add_check("mac-decomp", "a-Macaulay decomposable", [](const ColoredComplex& c, const Tuple& a) {
    DecompositionResult r = is_macaulay_decomposable(c, a);
    std::cout << certificate_to_json(r);
    return r.ok ? kOk : kNo;
  });

  auto* shed = app.add_subcommand("shed", "Shedding tree of a pure color-compressed balanced complex");
  shed->add_option("complex", path)->required();
  shed->add_option("--dot", dot_path, "also write DOT");
  shed->add_flag("--verbose-labels", verbose, "full terminal labels in DOT");
  shed->add_flag("--last", last, "take the last terminal at each step");
  shed->callback([&] {
    ColoredComplex c = complex_from_json(read_file(path));
    SheddingOptions opts;
    if (last) opts.policy = TerminalPolicy::Last;
    SheddingTree s = shedding_tree(c, opts);
    std::cout << shedding_to_json(s);
    if (!dot_path.empty()) write_file(dot_path, shedding_to_dot(s, verbose));
  });

  auto* tree = app.add_subcommand("tree", "Macaulay tree operations");
  tree->require_subcommand(1);
  auto* t_validate = tree->add_subcommand("validate", "check the Macaulay tree conditions");
  t_validate->add_option("tree", path)->required();
  t_validate->callback([&] {
    MacaulayTree t = tree_from_json(read_file(path));
    ValidityReport r = validate(t);
    json out{{"valid", r.ok}, {"failures", r.failures}};
    if (r.ok) {
      out["n"] = r.N;
      out["condensed"] = is_condensed(t);
      CheckReport cl = is_compressed_like(t);
      out["compressed_like"] = cl.ok;
      if (cl.ok) out["compatible"] = is_compatible(t).ok;
    }
    std::cout << out.dump(2) << "\n";
    status = r.ok ? kOk : kNo;
  });
  auto* t_condense = tree->add_subcommand("condense", "condensation");
  t_condense->add_option("tree", path)->required();
  t_condense->add_flag("--literal", literal, "contract without relabeling, as printed");
  t_condense->callback([&] {
    CondenseOptions opts;
    opts.literal = literal;
    std::cout << tree_to_json(condensation(tree_from_json(read_file(path)), opts));
  });
  auto* t_twin = tree->add_subcommand("twin", "a'-twin");
  t_twin->add_option("tree", path)->required();
  t_twin->add_option("--aprime", aprime_s)->required();
  t_twin->callback([&] { std::cout << tree_to_json(twin(tree_from_json(read_file(path)), parse_tuple(aprime_s))); });
  auto* t_wedge = tree->add_subcommand("wedge", "wedge of alpha and alpha'");
  t_wedge->add_option("trees", paths, "alpha.json alpha_prime.json")->required()->expected(2);
  t_wedge->callback([&] {
    std::cout << tree_to_json(wedge(tree_from_json(read_file(paths[0])), tree_from_json(read_file(paths[1]))));
  });
  auto* t_preceq = tree->add_subcommand("preceq", "alpha preceq alpha'");
  t_preceq->add_option("trees", paths, "alpha.json alpha_prime.json")->required()->expected(2);
  t_preceq->callback([&] {
    status = print_bool(preceq(rep_from_json(read_file(paths[0])), rep_from_json(read_file(paths[1]))), "preceq");
  });
  auto* t_realize = tree->add_subcommand("realize", "the realized balanced complex");
  t_realize->add_option("tree", path)->required();
  t_realize->callback([&] { std::cout << complex_to_json(realize(tree_from_json(read_file(path)))); });
  auto* t_diff = tree->add_subcommand("diff", "partial differential");
  t_diff->add_option("tree", path)->required();
  t_diff->add_option("--x", x_s, "x, comma separated")->required()->allow_extra_args(false);
  t_diff->callback([&] { std::cout << partial_diff(tree_from_json(read_file(path)), parse_tuple(x_s)) << "\n"; });
  auto* t_dot = tree->add_subcommand("dot", "DOT rendering");
  t_dot->add_option("tree", path)->required();
  t_dot->callback([&] { std::cout << to_dot(tree_from_json(read_file(path))); });

  auto* enum_reps = app.add_subcommand("enum-reps", "All generalized a-Macaulay representations of N");
  enum_reps->add_option("--type", type_s)->required();
  enum_reps->add_option("--n", n_value)->required()->check(CLI::NonNegativeNumber);
  enum_reps->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  enum_reps->callback([&] {
    EnumOptions opts;
    opts.jobs = jobs;
    std::cout << trees_to_json(enumerate_reps(parse_tuple(type_s), n_value, opts));
  });

  auto* feasible = app.add_subcommand("feasible", "Feasibility of fine/flag vectors");
  feasible->require_subcommand(1);
  auto add_feasible = [&](const char* name, const char* help, auto fn) {
    auto* sub = feasible->add_subcommand(name, help);
    sub->add_option("array", path)->required();
    sub->add_option("--type", type_s)->required();
    sub->callback([&, fn] {
      Tuple a = parse_tuple(type_s);
      Feasibility r = fn(a, fine_vector_from_json(read_file(path), a));
      std::cout << feasibility_to_json(r);
      status = r.feasible ? kOk : kNo;
    });
  };
  add_feasible("fine-f", "fine f-vector of an a-colored complex",
               [](const Tuple& a, const FineVector& f) { return check_fine_f_colored(a, f); });
  add_feasible("flag-f-cm", "flag f-vector of a completely balanced CM complex",
               [](const Tuple& a, const FineVector& f) { return check_flag_f_cm(static_cast<int>(a.size()), f); });
  add_feasible("flag-h-cm", "flag h-vector of a completely balanced CM complex",
               [](const Tuple& a, const FineVector& h) { return check_flag_h_cm(static_cast<int>(a.size()), h); });

  auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle->require_subcommand(1);
  auto* census = oracle->add_subcommand("census", "pure color-compressed balanced complexes, one per class");
  census->add_option("--type", type_s)->required();
  census->add_option("--lambda-max", lambda_s, "vertex bound; without it, --facets is required");
  census->add_option("--facets", facets);
  census->callback([&] {
    Tuple a = parse_tuple(type_s);
    std::vector<ColoredComplex> found;
    if (lambda_s.empty()) {
      if (!facets) throw CLI::ValidationError("census", "--facets or --lambda-max is required");
      found = compressed_census(a, *facets);
    } else {
      OracleFilter flt;
      flt.pure = flt.balanced = flt.color_compressed = flt.up_to_iso = true;
      flt.facets = facets;
      found = enumerate_complexes(a, parse_tuple(lambda_s), flt);
    }
    json arr = json::array();
    for (const ColoredComplex& c : found) arr.push_back(json::parse(complex_to_json(c)));
    std::cout << json{{"count", found.size()}, {"complexes", arr}}.dump(2) << "\n";
  });
  auto* cross = oracle->add_subcommand("cross-validate", "brute force against the characterization");
  cross->add_option("--type", type_s)->required();
  cross->add_option("--lambda-max", lambda_s)->required();
  cross->callback([&] {
    CrossReport r = cross_validate(parse_tuple(type_s), parse_tuple(lambda_s));
    std::cout << cross_report_to_json(r);
    status = r.match ? kOk : kNo;
  });

  auto* repro = app.add_subcommand("repro", "Regenerate a figure or table and diff against expectations");
  std::string target;
  repro->add_option("target", target)->required()->check(CLI::IsMember({"fig1", "fig2", "fig7", "example-flag-tables"}));
  repro->add_option("--expected-dir", expected_dir);
  repro->callback([&] {
    tools::ReproResult r = tools::repro(target, expected_dir);
    std::cout << r.report;
    status = r.match ? kOk : kNo;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kError;
  } catch (const CapacityError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return status;
}
