#include "stardisc/report.hpp"

#include <ostream>

#include "stardisc/io.hpp"

namespace stardisc {

Json report_header(std::string_view kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

Json point_to_json(const Point& p) {
  Json arr = Json::array();
  for (double c : p.coords()) arr.push_back(c);
  return arr;
}

Json discrepancy_to_json(const DiscrepancyResult& r, const PointSet& points) {
  Json j = report_header("discrepancy");
  j["s"] = points.dim();
  j["n"] = points.size();
  j["method"] = to_string(r.method);
  j["value"] = r.value;
  if (r.delta) {
    j["delta"] = *r.delta;
    j["upper"] = r.value + *r.delta;
  }
  j["witness"] = point_to_json(r.witness);
  return j;
}

Json table_to_json(const CoefficientTable& t) {
  Json j = report_header("table");
  j["q"] = t.qs;
  j["s"] = t.dims;
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.dims.size(); ++i) {
    Json row;
    row["s"] = t.dims[i];
    row["coefficients"] = t.values[i];
    Json shown = Json::array();
    for (double v : t.values[i]) shown.push_back(round_up_cents(v));
    row["display"] = shown;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Json constants_to_json(const TheoremConstants& c) {
  Json j;
  j["L"] = c.log_inv;
  j["K"] = c.levels;
  j["c"] = c.c;
  j["lambda"] = c.lambda;
  return j;
}

Json audit_to_json(const AuditReport& r) {
  Json j = report_header("audit");
  j["inputs"] = {{"q", r.constants.q}, {"s", r.constants.s}, {"n", r.constants.n}};
  j["constants"] = constants_to_json(r.constants);
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"margin", c.margin()}, {"pass", c.pass}});
  j["checks"] = checks;
  j["overall"] = r.overall;
  return j;
}

Json chain_to_json(const ChainDecomposition& c) {
  Json j = report_header("chain");
  j["K"] = c.levels;
  j["x"] = point_to_json(c.x);
  Json chain = Json::array();
  for (const auto& p : c.chain) chain.push_back(point_to_json(p));
  j["chain"] = chain;
  Json measures = Json::array();
  for (unsigned k = 0; k <= c.levels; ++k) measures.push_back(box_difference_measure(c.link(k)));
  j["link_measures"] = measures;
  return j;
}

Json experiment_to_json(const ExperimentReport& r) {
  const auto& cfg = r.config;
  Json j = report_header("experiment");
  Json config;
  config["s"] = cfg.s;
  config["n"] = cfg.n;
  config["q"] = cfg.q;
  config["trials"] = cfg.trials;
  config["seed"] = cfg.seed;
  config["method"] = to_string(cfg.method);
  if (cfg.method == Method::cover) config["delta"] = cfg.delta;
  config["budget"] = cfg.budget;
  j["config"] = config;
  j["rng"] = {{"name", Philox4x32::kName}, {"version", Philox4x32::kVersion}};
  j["threshold"] = r.threshold;
  j["pass_count"] = r.pass_count;
  j["empirical_probability"] = r.empirical_probability;
  j["ci"] = {{"level", cfg.ci_level}, {"low", r.ci_low}, {"high", r.ci_high}};
  j["surrogate"] = r.surrogate;
  j["ci_certain_violation"] = r.ci_high < cfg.q;
  j["scaled_discrepancy"] = {{"min", r.scaled.min},
                             {"median", r.scaled.median},
                             {"max", r.scaled.max},
                             {"mean", r.scaled.mean}};
  return j;
}

void write_trial_csv(std::ostream& out, const ExperimentReport& r) {
  out << "trial_index,discrepancy,pass\n";
  for (const auto& o : r.outcomes)
    out << o.index << ',' << format_real(o.discrepancy) << ',' << (o.pass ? 1 : 0) << '\n';
}

}  // namespace stardisc
