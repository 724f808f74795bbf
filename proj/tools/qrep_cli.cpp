#include "qrep/intertwiner.hpp"
#include "qrep/io.hpp"
#include "qrep/models.hpp"
#include "qrep/report.hpp"
#include "qrep/subspace.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace qrep;

namespace {

struct Global {
  std::uint64_t seed = 0;
  double tol_scale = 1.0;
  bool json = false;
  bool csv = false;

  Tolerances tolerances() const {
    Tolerances t;
    t.seed = seed;
    t.scale = tol_scale;
    return t;
  }
};

Params parse_params(const std::vector<std::string>& items) {
  Params out;
  for (const auto& item : items) {
    auto grid = expand_grid({item});
    if (grid.size() != 1) throw ValidationError("--param '" + item + "' must have a single value");
    out.insert(grid.front().begin(), grid.front().end());
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

struct Input {
  Representation rep;
  Json identity;
  bool finite_truncation = false;
};

Input load_input(const std::string& file, const std::string& model,
                 const std::vector<std::string>& params, const Global& g) {
  const Tolerances tol = g.tolerances();
  if (!model.empty()) {
    if (!file.empty()) throw ValidationError("give either a file or --model, not both");
    Params p = parse_params(params);
    BuiltModel built = build_model(model, p, tol);
    return {built.rep, Json{{"model", model}, {"params", p}, {"seed", g.seed}},
            built.finite_truncation};
  }
  if (file.empty()) throw ValidationError("no input: give a file, '-' for stdin, or --model");
  Json doc = read_json(file);
  bool truncation = false;
  if (auto meta = doc.find("meta"); meta != doc.end() && meta->is_object())
    truncation = meta->value("finite_truncation", false);
  return {representation_from_json(doc), Json{{"file", file}, {"seed", g.seed}}, truncation};
}

int run_analyze(const std::string& file, const std::string& model,
                const std::vector<std::string>& params, const Global& g) {
  Input in = load_input(file, model, params, g);
  AnalysisReport report = analyze(in.rep, in.identity, in.finite_truncation, g.tolerances());
  if (g.csv) {
    std::cout << "dim_end,dim_radical,dim_generated_algebra,dim_star_closed,indecomposable,"
                 "transitive,simple,canonically_simple,irreducible,finite_truncation\n"
              << report.end.dimension() << ',' << report.indecomposable.radical_dim << ','
              << report.simple.algebra_dim << ',' << report.irreducible.star_dim << ','
              << report.indecomposable.indecomposable << ',' << report.transitive << ','
              << report.simple.simple << ',' << report.canonically_simple << ','
              << report.irreducible.irreducible << ',' << report.finite_truncation << '\n';
  } else {
    std::cout << to_json(report).dump(2) << '\n';
  }
  return 0;
}

int run_hom(const std::string& a, const std::string& b, bool with_basis, const Global& g) {
  const Tolerances tol = g.tolerances();
  Representation from = representation_from_json(read_json(a));
  Representation to = representation_from_json(read_json(b));
  HomBasis h = hom(from, to, tol);
  Json out{{"from", a}, {"to", b}, {"dim", h.dimension()}, {"rank", to_json(h.rank)},
           {"residual_bound", h.tolerance}, {"max_residual", h.max_residual},
           {"tolerances", to_json(tol)}};
  if (with_basis) {
    Json basis = Json::array();
    for (const auto& t : h.basis) basis.push_back(vertex_tuple_to_json(from.quiver(), t));
    out["basis"] = basis;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_iso(const std::string& a, const std::string& b, const Global& g) {
  const Tolerances tol = g.tolerances();
  Representation x = representation_from_json(read_json(a));
  Representation y = representation_from_json(read_json(b));
  IsoResult r = are_isomorphic(x, y, tol);
  Json out{{"a", a},
           {"b", b},
           {"verdict", to_string(r.verdict)},
           {"reason", r.reason},
           {"dim_hom", r.hom_dimension},
           {"samples_tried", r.samples_tried},
           {"seed", r.seed}};
  if (r.witness) out["witness"] = vertex_tuple_to_json(x.quiver(), *r.witness);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_build(const std::string& model, const std::vector<std::string>& params,
              const std::string& out, const Global& g) {
  Params p = parse_params(params);
  BuiltModel built = build_model(model, p, g.tolerances());
  Json meta{{"model", model}, {"params", p}, {"finite_truncation", built.finite_truncation}};
  write_text(out, representation_to_json(built.rep, meta).dump(2) + "\n");
  return 0;
}

int run_sweep(const std::string& model, const std::vector<std::string>& grid,
              const std::string& n_range, const std::string& out, int jobs, const Global& g) {
  SweepSpec spec;
  spec.model = model;
  spec.grid = expand_grid(grid);
  spec.n_values = parse_n_range(n_range);
  spec.jobs = jobs;
  std::vector<SweepRow> rows = run_sweep(spec, g.tolerances());
  std::string text;
  if (g.json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json row{{"model", r.model}, {"N", r.n}, {"params", r.params},
               {"params_hash", fnv1a_hex(r.model + "|" + format_params(r.params))}};
      row["dim_end"] = r.dim_end ? Json(*r.dim_end) : Json(nullptr);
      row["dim_hom_cross"] = r.dim_hom_cross ? Json(*r.dim_hom_cross) : Json(nullptr);
      row["summand_dim"] = r.summand_dim ? Json(*r.summand_dim) : Json(nullptr);
      row["recursion_pass_rate"] =
          r.recursion_pass_rate ? Json(*r.recursion_pass_rate) : Json(nullptr);
      row["wall_ms"] = r.wall_ms;
      row["flags"] = r.flags;
      row["error"] = r.error;
      arr.push_back(std::move(row));
    }
    text = arr.dump(2) + "\n";
  } else {
    text = std::string(kSweepCsvHeader) + "\n";
    for (const auto& r : rows) text += sweep_row_csv(r) + "\n";
  }
  write_text(out, text);
  return 0;
}

int run_convert(const std::string& mode, const std::string& file, const std::string& out,
                const Global& g) {
  const Tolerances tol = g.tolerances();
  Json doc = read_json(file);
  Json result;
  BridgeCheck check;
  if (mode == "rep-to-system") {
    auto c = rep_to_system_checked(representation_from_json(doc), tol);
    result = system_to_json(c.system);
    check = c.check;
  } else if (mode == "system-to-rep") {
    auto c = system_to_rep_checked(system_from_json(doc, tol), tol);
    result = representation_to_json(c.rep);
    check = c.check;
  } else if (mode == "remove-loops") {
    auto c = remove_loops_checked(representation_from_json(doc), tol);
    result = representation_to_json(c.rep);
    check = c.check;
  } else {
    auto c = from_operator_checked(operator_from_json(doc), tol);
    result = system_to_json(c.system);
    check = c.check;
  }
  write_text(out, result.dump(2) + "\n");
  Json sidecar{{"conversion", mode},
               {"input", file},
               {"dim_end_before", check.before},
               {"dim_end_after", check.after},
               {"preserved", check.preserved()}};
  if (out.empty() || out == "-")
    std::cerr << sidecar.dump() << '\n';
  else
    write_text(out + ".check.json", sidecar.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-dimensional quiver representations: Hom spaces and structure tests"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "Seed for randomized witnesses")->capture_default_str();
  app.add_option("--tol-scale", g.tol_scale, "Multiplier applied to every tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  auto* json_flag = app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output")->excludes(json_flag);

  std::string file, file_b, model, out, n_range, mode;
  std::vector<std::string> params, grid;
  bool with_basis = false;
  int jobs = 1;

  auto* analyze = app.add_subcommand("analyze", "Run every structural test on a representation");
  analyze->add_option("file", file, "Representation document ('-' for stdin)");
  analyze->add_option("--model", model, "Builder name instead of a file");
  analyze->add_option("--param", params, "Builder parameter key=value (repeatable)");

  auto* hom_cmd = app.add_subcommand("hom", "Basis of Hom(A, B)");
  hom_cmd->add_option("a", file, "Source representation")->required();
  hom_cmd->add_option("b", file_b, "Target representation")->required();
  hom_cmd->add_flag("--basis", with_basis, "Include the basis matrices");

  auto* iso = app.add_subcommand("iso", "Isomorphism test with witness");
  iso->add_option("a", file, "First representation")->required();
  iso->add_option("b", file_b, "Second representation")->required();

  auto* build = app.add_subcommand("build", "Write a representation document from a builder");
  build->add_option("--model", model, "Builder name")->required();
  build->add_option("--param", params, "Builder parameter key=value (repeatable)");
  build->add_option("--out", out, "Output file ('-' or omitted for stdout)");

  auto* sweep = app.add_subcommand("sweep", "Truncation sweep over N and a parameter grid");
  sweep->add_option("--model", model, "Builder name")->required();
  sweep->add_option("--grid", grid, "key=v1,v2,... (repeatable)");
  sweep->add_option("--n-range", n_range, "a:b or a:b:step")->required();
  sweep->add_option("--out", out, "Output file ('-' or omitted for stdout)");
  sweep->add_option("--jobs", jobs, "Concurrent rows")->check(CLI::PositiveNumber);

  auto* convert = app.add_subcommand("convert", "Bridges between representations, systems and operators");
  auto* modes = convert->add_option_group("direction");
  modes->add_flag_callback("--rep-to-system", [&] { mode = "rep-to-system"; });
  modes->add_flag_callback("--system-to-rep", [&] { mode = "system-to-rep"; });
  modes->add_flag_callback("--remove-loops", [&] { mode = "remove-loops"; });
  modes->add_flag_callback("--operator-to-4system", [&] { mode = "operator-to-4system"; });
  modes->require_option(1);
  convert->add_option("file", file, "Input document ('-' for stdin)")->required();
  convert->add_option("--out", out, "Output file ('-' or omitted for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(file, model, params, g);
    if (hom_cmd->parsed()) return run_hom(file, file_b, with_basis, g);
    if (iso->parsed()) return run_iso(file, file_b, g);
    if (build->parsed()) return run_build(model, params, out, g);
    if (sweep->parsed()) return run_sweep(model, grid, n_range, out, jobs, g);
    if (convert->parsed()) return run_convert(mode, file, out, g);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  } catch (const SizeLimitError& e) {
    std::cerr << "size limit: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
