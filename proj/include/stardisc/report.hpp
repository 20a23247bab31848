#pragma once

#include <iosfwd>
#include <string_view>

#include <json.hpp>

#include "stardisc/bounds.hpp"
#include "stardisc/covers.hpp"
#include "stardisc/discrepancy.hpp"
#include "stardisc/montecarlo.hpp"

namespace stardisc {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "stardisc/1";

/// Every machine report starts with {"schema": "stardisc/1", "kind": kind}.
Json report_header(std::string_view kind);

Json point_to_json(const Point& p);

Json discrepancy_to_json(const DiscrepancyResult& r, const PointSet& points);
Json table_to_json(const CoefficientTable& t);
Json constants_to_json(const TheoremConstants& c);
Json audit_to_json(const AuditReport& r);
Json chain_to_json(const ChainDecomposition& c);

/// The run configuration minus parallelism, which never affects results.
Json experiment_to_json(const ExperimentReport& r);

/// Per-trial rows "trial_index,discrepancy,pass".
void write_trial_csv(std::ostream& out, const ExperimentReport& r);

}  // namespace stardisc
