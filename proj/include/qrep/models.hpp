#pragma once

#include "qrep/io.hpp"
#include "qrep/numeric.hpp"
#include "qrep/representation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qrep {

using Params = std::map<std::string, double>;

/// A named builder invocation together with the representation it produced.
struct BuiltModel {
  std::string name;
  Params params;
  Representation rep;
  bool finite_truncation = false;
};

/// Registered builders:
///   perturbation_model (N), hrr_model (N, lambda),
///   jordan_first / jordan_second (n, lambda, lambda_im), wide / tall (n),
///   and the worked examples ex1 ... ex9 (see example_rep).
BuiltModel build_model(const std::string& name, const Params& params, const Tolerances& tol = {});

std::vector<std::string> model_names();

/// "k=v;k=v" with keys sorted.
std::string format_params(const Params& params);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

struct SweepRow {
  std::string model;
  Index n = 0;
  Params params;
  std::optional<Index> dim_end;
  std::optional<Index> dim_hom_cross;
  std::optional<Index> summand_dim;
  std::optional<double> recursion_pass_rate;
  double wall_ms = 0.0;
  std::vector<std::string> flags;
  std::string error;
};

struct SweepSpec {
  std::string model;
  std::vector<Params> grid;  // one entry per parameter combination
  std::vector<Index> n_values;
  int jobs = 1;
};

/// Expands "k=v1,v2" assignments into their cartesian product, in the order
/// given (last key varies fastest).
std::vector<Params> expand_grid(const std::vector<std::string>& assignments);

/// Parses "a:b" or "a:b:step".
std::vector<Index> parse_n_range(const std::string& text);

/// One row per (params, N) in grid order. Rows whose model cannot be built at
/// that N because of weight admissibility are omitted; other failures are
/// recorded in the row's error column.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const Tolerances& tol = {});

extern const char* const kSweepCsvHeader;

std::string sweep_row_csv(const SweepRow& row);

}  // namespace qrep
