#pragma once

#include "qrep/intertwiner.hpp"
#include "qrep/io.hpp"
#include "qrep/structure.hpp"

#include <map>
#include <string>

namespace qrep {

struct AnalysisReport {
  Json input;  // file name or builder + params, plus seed
  bool finite_truncation = false;
  Tolerances tol;

  HomBasis end;
  IndecomposabilityResult indecomposable;
  bool transitive = false;
  SimplicityResult simple;
  bool canonically_simple = false;
  IrreducibilityResult irreducible;

  std::map<std::string, double> timings_ms;
};

/// Runs every structural test on `rep`. Throws NumericalError if the verdicts
/// violate canonically simple => simple => indecomposable or
/// transitive => indecomposable.
AnalysisReport analyze(const Representation& rep, const Json& input, bool finite_truncation,
                       const Tolerances& tol = {});

Json to_json(const AnalysisReport& report);
Json to_json(const RankInfo& info);
Json to_json(const Tolerances& tol);

}  // namespace qrep
