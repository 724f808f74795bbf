#include "qrep/models.hpp"

#include "qrep/intertwiner.hpp"
#include "qrep/kronecker.hpp"
#include "qrep/operators.hpp"
#include "qrep/structure.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

namespace qrep {

namespace {

double get(const Params& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

// Size parameter; "N" and "n" are accepted interchangeably.
Index size_param(const Params& p, Index fallback) {
  double v = static_cast<double>(fallback);
  if (auto it = p.find("N"); it != p.end())
    v = it->second;
  else if (auto jt = p.find("n"); jt != p.end())
    v = jt->second;
  if (v < 0 || v != std::floor(v)) throw ValidationError("size parameter must be a nonnegative integer");
  return static_cast<Index>(v);
}

bool is_example(const std::string& name) {
  auto names = example_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

}  // namespace

std::vector<std::string> model_names() {
  std::vector<std::string> out{"perturbation_model", "hrr_model", "jordan_first",
                               "jordan_second",      "wide",      "tall"};
  for (const auto& e : example_names()) out.push_back(e);
  return out;
}

BuiltModel build_model(const std::string& name, const Params& params, const Tolerances& tol) {
  if (name == "perturbation_model")
    return {name, params, perturbation_model(size_param(params, 4)), true};
  if (name == "hrr_model")
    return {name, params, hrr_model(size_param(params, 4), get(params, "lambda", 1.1), tol).rep,
            true};
  if (name == "jordan_first" || name == "jordan_second" || name == "wide" || name == "tall") {
    KroneckerFamily f;
    f.kind = name == "jordan_first"    ? KroneckerKind::jordan_first
             : name == "jordan_second" ? KroneckerKind::jordan_second
             : name == "wide"          ? KroneckerKind::wide
                                       : KroneckerKind::tall;
    f.n = static_cast<int>(size_param(params, 1));
    f.lambda = Complex(get(params, "lambda", 0.0), get(params, "lambda_im", 0.0));
    return {name, params, build_family(f), false};
  }
  if (is_example(name)) {
    Params p = params;
    if (!p.count("N") && p.count("n")) p["N"] = p["n"];
    return {name, params, example_rep(name, p), example_is_truncation(name)};
  }
  std::string known;
  for (const auto& m : model_names()) known += (known.empty() ? "" : ", ") + m;
  throw ValidationError("unknown model '" + name + "' (available: " + known + ")");
}

std::string format_params(const Params& params) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << ';';
    first = false;
    os << k << '=' << v;
  }
  return os.str();
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<Params> expand_grid(const std::vector<std::string>& assignments) {
  std::vector<Params> grid{Params{}};
  for (const auto& a : assignments) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ValidationError("grid entry '" + a + "' must look like key=v1,v2");
    const std::string key = a.substr(0, eq);
    std::vector<double> values;
    std::stringstream ss(a.substr(eq + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw ValidationError("grid entry '" + a + "': '" + item + "' is not a number");
      }
    }
    if (values.empty()) throw ValidationError("grid entry '" + a + "' has no values");
    std::vector<Params> next;
    for (const auto& g : grid)
      for (double v : values) {
        Params p = g;
        p[key] = v;
        next.push_back(std::move(p));
      }
    grid = std::move(next);
  }
  return grid;
}

std::vector<Index> parse_n_range(const std::string& text) {
  std::vector<long long> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("n-range '" + text + "' must look like a:b or a:b:step");
    }
  }
  if (parts.size() < 2 || parts.size() > 3)
    throw ValidationError("n-range '" + text + "' must look like a:b or a:b:step");
  const long long step = parts.size() == 3 ? parts[2] : 1;
  if (step < 1 || parts[0] < 0 || parts[1] < parts[0])
    throw ValidationError("n-range '" + text + "' must be increasing with a positive step");
  std::vector<Index> out;
  for (long long n = parts[0]; n <= parts[1]; n += step) out.push_back(static_cast<Index>(n));
  return out;
}

namespace {

SweepRow sweep_one(const std::string& model, const Params& grid_params, Index n,
                   const Tolerances& tol) {
  SweepRow row;
  row.model = model;
  row.n = n;
  row.params = grid_params;
  const auto start = std::chrono::steady_clock::now();
  try {
    Params p = grid_params;
    p["N"] = static_cast<double>(n);
    BuiltModel built = build_model(model, p, tol);
    const Representation& rep = built.rep;
    if (built.finite_truncation) row.flags.push_back("finite_truncation");

    if (rep.total_dim() > 0) {
      HomBasis e = end(rep, tol);
      row.dim_end = e.dimension();
      if (e.dimension() == 1) row.flags.push_back("transitive");

      if (model == "hrr_model") {
        RecursionReport r = end_recursion_check(hrr_model(n, get(p, "lambda", 1.1), tol), e, tol);
        row.recursion_pass_rate = r.pass_rate();
      } else if (model == "perturbation_model") {
        const double bound = tol.tau_hom() * std::max(1.0, rep.scale());
        Index ok = 0;
        for (const auto& t : e.basis)
          if (perturbation_structure_residual(t) <= bound) ++ok;
        row.recursion_pass_rate =
            e.basis.empty() ? 1.0 : static_cast<double>(ok) / static_cast<double>(e.basis.size());
      }

      if (auto mu = grid_params.find("mu"); mu != grid_params.end()) {
        if (model == "hrr_model") {
          row.dim_hom_cross = cross_model_hom(get(p, "lambda", 1.1), mu->second, n, tol).hom_dim;
        } else {
          Params q = p;
          q["lambda"] = mu->second;
          row.dim_hom_cross = hom(rep, build_model(model, q, tol).rep, tol).dimension();
        }
      }

      DecompositionTree tree = decompose(rep, tol);
      Index summand = 0;
      const auto leaves = tree.leaves();
      for (const auto& leaf : leaves)
        for (Index d : leaf.dims()) summand = std::max(summand, d);
      row.summand_dim = summand;
      row.flags.push_back(leaves.size() == 1 ? "indecomposable" : "decomposable");
    }
  } catch (const Error& ex) {
    row.error = ex.what();
  }
  row.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const Tolerances& tol) {
  build_model(spec.model, {{"N", 2.0}}, tol);  // rejects unknown names up front

  struct Task {
    const Params* params;
    Index n;
  };
  std::vector<Task> tasks;
  for (const auto& p : spec.grid)
    for (Index n : spec.n_values) {
      if (spec.model == "hrr_model") {
        const double lambda = get(p, "lambda", 1.1);
        if (lambda > 1.0 && n > hrr_max_admissible_n(lambda, tol.weight_floor)) continue;
        if (auto mu = p.find("mu");
            mu != p.end() && mu->second > 1.0 &&
            n > hrr_max_admissible_n(mu->second, tol.weight_floor))
          continue;
      }
      tasks.push_back({&p, n});
    }

  std::vector<SweepRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++)
      rows[i] = sweep_one(spec.model, *tasks[i].params, tasks[i].n, tol);
  };
  const int jobs = std::max(1, std::min<int>(spec.jobs, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

const char* const kSweepCsvHeader =
    "model,N,params,params_hash,dim_end,dim_hom_cross,summand_dim,recursion_pass_rate,wall_ms,"
    "flags,error";

std::string sweep_row_csv(const SweepRow& row) {
  auto opt = [](const auto& v) {
    if (!v) return std::string();
    std::ostringstream os;
    os << *v;
    return os.str();
  };
  std::string flags;
  for (const auto& f : row.flags) flags += (flags.empty() ? "" : "|") + f;
  const std::string params = format_params(row.params);
  std::ostringstream ms;
  ms.precision(3);
  ms << std::fixed << row.wall_ms;
  std::ostringstream os;
  os << csv_field(row.model) << ',' << row.n << ',' << csv_field(params) << ','
     << fnv1a_hex(row.model + "|" + params) << ',' << opt(row.dim_end) << ','
     << opt(row.dim_hom_cross) << ',' << opt(row.summand_dim) << ','
     << opt(row.recursion_pass_rate) << ',' << ms.str() << ',' << csv_field(flags) << ','
     << csv_field(row.error);
  return os.str();
}

}  // namespace qrep
