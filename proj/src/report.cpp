#include "qrep/report.hpp"

#include <chrono>
#include <cmath>

namespace qrep {

namespace {

template <class F>
auto timed(std::map<std::string, double>& timings, const char* key, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  timings[key] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

// JSON has no infinity; an empty side of a rank decision is reported as null.
Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

AnalysisReport analyze(const Representation& rep, const Json& input, bool finite_truncation,
                       const Tolerances& tol) {
  if (rep.total_dim() == 0) throw ValidationError("the zero representation has no verdicts");
  AnalysisReport r;
  r.input = input;
  r.finite_truncation = finite_truncation;
  r.tol = tol;
  r.end = timed(r.timings_ms, "end", [&] { return end(rep, tol); });
  r.indecomposable =
      timed(r.timings_ms, "indecomposable", [&] { return is_indecomposable(rep, tol); });
  r.transitive = r.end.dimension() == 1;
  r.simple = timed(r.timings_ms, "simple", [&] { return is_simple(rep, tol); });
  r.canonically_simple = is_canonically_simple(rep);
  r.irreducible = timed(r.timings_ms, "irreducible", [&] { return is_irreducible(rep, tol); });

  if (r.canonically_simple && !r.simple.simple)
    throw NumericalError("verdicts inconsistent: canonically simple but not simple");
  if (r.simple.simple && !r.indecomposable.indecomposable)
    throw NumericalError("verdicts inconsistent: simple but decomposable");
  if (r.transitive && !r.indecomposable.indecomposable)
    throw NumericalError("verdicts inconsistent: transitive but decomposable");
  if (r.simple.simple && !r.transitive)
    throw NumericalError("verdicts inconsistent: simple but not transitive");
  return r;
}

Json to_json(const RankInfo& info) {
  return {{"rows", info.rows},           {"cols", info.cols},
          {"rank", info.rank},           {"sigma_max", info.sigma_max},
          {"threshold", info.threshold}, {"gap", finite_or_null(info.gap)}};
}

Json to_json(const Tolerances& tol) {
  return {{"kappa", tol.kappa},         {"hom", tol.hom},
          {"range", tol.range},         {"inv", tol.inv},
          {"cluster", tol.cluster},     {"idempotent", tol.idempotent},
          {"algebra", tol.algebra},     {"weight_floor", tol.weight_floor},
          {"scale", tol.scale},         {"size_limit", tol.size_limit}};
}

Json to_json(const AnalysisReport& r) {
  const auto& ind = r.indecomposable;
  Json indec{{"value", ind.indecomposable},
             {"dim_end", ind.end_dim},
             {"dim_radical", ind.radical_dim},
             {"dim_semisimple_quotient", ind.semisimple_dim()},
             {"radical_rank", to_json(ind.radical_rank)}};
  if (ind.idempotent) {
    indec["idempotent_defect"] = ind.idempotent_defect;
    indec["spectral_separation"] = ind.spectral_separation;
    indec["tries"] = ind.tries;
  }
  Json simple{{"value", r.simple.simple},
              {"dim_generated_algebra", r.simple.algebra_dim},
              {"dim_full_matrix_algebra", r.simple.full_dim}};
  if (r.simple.witness_rep) {
    Json dims = Json::object();
    const auto& w = *r.simple.witness_rep;
    for (std::size_t v = 0; v < w.quiver().vertex_count(); ++v)
      dims[w.quiver().vertices()[v]] = w.dim(v);
    simple["subrepresentation_dims"] = dims;
  }
  Json out{
      {"input", r.input},
      {"finite_truncation", r.finite_truncation},
      {"end", {{"dim", r.end.dimension()},
               {"rank", to_json(r.end.rank)},
               {"residual_bound", r.end.tolerance},
               {"max_residual", r.end.max_residual}}},
      {"verdicts",
       {{"indecomposable", indec},
        {"transitive", {{"value", r.transitive}, {"dim_end", r.end.dimension()}}},
        {"simple", simple},
        {"canonically_simple", {{"value", r.canonically_simple}}},
        {"irreducible",
         {{"value", r.irreducible.irreducible},
          {"dim_star_closed", r.irreducible.star_dim},
          {"dim_end", r.irreducible.end_dim}}}}},
      {"implications_checked", true},
      {"tolerances", to_json(r.tol)},
      {"timings_ms", r.timings_ms}};
  if (r.finite_truncation)
    out["note"] = "finite truncation of an operator on l2; verdicts describe the truncation only";
  return out;
}

}  // namespace qrep
