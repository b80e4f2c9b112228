#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "changcheck/chang.hpp"
#include "changcheck/cube.hpp"
#include "changcheck/distribution.hpp"
#include "changcheck/info.hpp"

namespace changcheck {

// JSON objects keep fields in declaration order.
using Json = nlohmann::ordered_json;

// Set spec: {"n": int, "points": [mask, ...]} or {"n": int, "hexbitset": "..."}
// with the hex string's lowest-order bit standing for mask 0.
CubeSet parse_set_spec(const Json& spec);
CubeSet parse_set_spec(std::string_view text);
Json set_spec_json(const CubeSet& set);

// Distribution: {"shape": [m_1, ...], "probs": [...]} row-major.
DiscreteDistribution parse_distribution(const Json& spec);
Json distribution_json(const DiscreteDistribution& p);

Json report_json(const ChangReport& report);
Json trace_json(const ProofTrace& trace);
Json breakdown_json(const DivergenceBreakdown& breakdown);
Json summary_json(const SweepSummary& summary);
Json level_k_json(const LevelKReport& report);

// Columns: set_hexbitset, alpha, w1, bound, slack.
void write_sweep_csv(std::ostream& out, const std::vector<ChangRow>& rows);

}  // namespace changcheck
