#include "changcheck/json_io.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace changcheck {

namespace {

void require_keys(const Json& obj, std::initializer_list<const char*> allowed,
                  const char* what) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw std::invalid_argument(std::string(what) + ": unknown key \"" +
                                  item.key() + "\"");
    }
  }
}

int parse_dimension(const Json& obj, const char* what) {
  if (!obj.contains("n") || !obj.at("n").is_number_integer()) {
    throw std::invalid_argument(std::string(what) +
                                ": \"n\" must be an integer");
  }
  const auto n = obj.at("n").get<std::int64_t>();
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument(std::string(what) + ": \"n\" must be in [1, " +
                                std::to_string(kMaxDimension) + "]");
  }
  return static_cast<int>(n);
}

}  // namespace

CubeSet parse_set_spec(const Json& spec) {
  if (!spec.is_object()) {
    throw std::invalid_argument("set spec must be a JSON object");
  }
  require_keys(spec, {"n", "points", "hexbitset"}, "set spec");
  const int n = parse_dimension(spec, "set spec");
  const bool has_points = spec.contains("points");
  const bool has_hex = spec.contains("hexbitset");
  if (has_points == has_hex) {
    throw std::invalid_argument(
        "set spec: provide exactly one of \"points\" or \"hexbitset\"");
  }
  if (has_hex) {
    if (!spec.at("hexbitset").is_string()) {
      throw std::invalid_argument("set spec: \"hexbitset\" must be a string");
    }
    return CubeSet::from_hex(n, spec.at("hexbitset").get<std::string>());
  }
  if (!spec.at("points").is_array()) {
    throw std::invalid_argument("set spec: \"points\" must be an array");
  }
  std::vector<CubePoint> points;
  points.reserve(spec.at("points").size());
  for (const auto& el : spec.at("points")) {
    if (!el.is_number_integer()) {
      throw std::invalid_argument("set spec: points must be integers");
    }
    const auto raw = el.get<std::int64_t>();
    if (raw < 0 || raw >= (std::int64_t{1} << n)) {
      throw std::invalid_argument("set spec: point " + std::to_string(raw) +
                                  " is outside [0, 2^n)");
    }
    points.emplace_back(static_cast<std::uint32_t>(raw), n);
  }
  return CubeSet::from_points(n, points);
}

CubeSet parse_set_spec(std::string_view text) {
  Json spec;
  try {
    spec = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("set spec is not valid JSON: ") +
                                e.what());
  }
  return parse_set_spec(spec);
}

Json set_spec_json(const CubeSet& set) {
  Json out;
  out["n"] = set.n();
  out["hexbitset"] = set.to_hex();
  return out;
}

DiscreteDistribution parse_distribution(const Json& spec) {
  if (!spec.is_object()) {
    throw std::invalid_argument("distribution spec must be a JSON object");
  }
  require_keys(spec, {"shape", "probs"}, "distribution spec");
  if (!spec.contains("shape") || !spec.at("shape").is_array()) {
    throw std::invalid_argument(
        "distribution spec: \"shape\" must be an array of factor sizes");
  }
  if (!spec.contains("probs") || !spec.at("probs").is_array()) {
    throw std::invalid_argument(
        "distribution spec: \"probs\" must be an array of numbers");
  }
  std::vector<std::size_t> shape;
  shape.reserve(spec.at("shape").size());
  for (const auto& el : spec.at("shape")) {
    if (!el.is_number_integer() || el.get<std::int64_t>() < 1) {
      throw std::invalid_argument(
          "distribution spec: factor sizes must be positive integers");
    }
    shape.push_back(el.get<std::size_t>());
  }
  std::vector<double> probs;
  probs.reserve(spec.at("probs").size());
  for (const auto& el : spec.at("probs")) {
    if (!el.is_number()) {
      throw std::invalid_argument("distribution spec: probs must be numbers");
    }
    probs.push_back(el.get<double>());
  }
  return DiscreteDistribution(std::move(shape), std::move(probs));
}

Json distribution_json(const DiscreteDistribution& p) {
  Json out;
  out["shape"] = p.shape();
  out["probs"] = p.probs();
  return out;
}

Json report_json(const ChangReport& report) {
  Json out;
  out["n"] = report.n;
  out["set_size"] = report.set_size;
  out["alpha"] = report.alpha;
  out["w1"] = report.w1;
  out["bound"] = report.bound;
  out["slack"] = report.slack;
  out["holds"] = report.holds;
  return out;
}

Json trace_json(const ProofTrace& trace) {
  Json out;
  out["ln_inv_alpha"] = trace.ln_inv_alpha;
  out["divergence"] = trace.divergence;
  out["marginal_divergence_sum"] = trace.marginal_divergence_sum;
  out["half_l1_sum"] = trace.half_l1_sum;
  out["w1_over_alpha_sq"] = trace.w1_over_alpha_sq;
  return out;
}

Json breakdown_json(const DivergenceBreakdown& breakdown) {
  Json out;
  out["joint"] = breakdown.joint;
  out["marginal_sum"] = breakdown.marginal_sum;
  out["gap"] = breakdown.gap;
  out["per_coordinate"] = breakdown.per_coordinate;
  return out;
}

Json summary_json(const SweepSummary& summary) {
  Json out;
  out["n"] = summary.n;
  out["sets_checked"] = summary.sets_checked;
  out["violations"] = summary.violations;
  out["min_slack"] = summary.min_slack;
  out["argmin_set"] = set_spec_json(summary.argmin_set);
  return out;
}

Json level_k_json(const LevelKReport& report) {
  Json out;
  out["k"] = report.k;
  out["lhs"] = report.lhs;
  out["rhs"] = report.rhs;
  out["applicable"] = report.applicable;
  out["holds"] = report.holds;
  return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<ChangRow>& rows) {
  out << "set_hexbitset,alpha,w1,bound,slack\n";
  char buf[160];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g,%.17g",
                  row.report.alpha, row.report.w1, row.report.bound,
                  row.report.slack);
    out << row.set.to_hex() << buf << '\n';
  }
}

}  // namespace changcheck
