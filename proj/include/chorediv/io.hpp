#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "chorediv/chore_set.hpp"
#include "chorediv/cost.hpp"
#include "chorediv/errors.hpp"
#include "chorediv/fairness.hpp"
#include "chorediv/instance.hpp"

namespace chorediv {

// Instance files are single JSON documents:
//
//   {"version": 1, "n": 2, "m": 3,
//    "agents": [{"kind": "cardinality"},
//               {"kind": "partition_complement",
//                "blocks": [{"chores": [0, 1], "cap": 1},
//                           {"chores": [2], "cap": 0}]}]}
//
// Chore sets are arrays of 0-based indices; "table" values are listed in
// binary-counter subset order (bit j = chore j). Allocations serialize as
// {"bundles": [[...], ...], "cost_profile": [...], "social_cost": N}.

inline constexpr int kInstanceFileVersion = 1;

namespace detail {

using json = nlohmann::json;

inline json set_to_json(ChoreSet s) {
  json arr = json::array();
  for (int t : s) arr.push_back(t);
  return arr;
}

inline ChoreSet set_from_json(const json& arr, int m,
                              const std::string& field) {
  if (!arr.is_array()) {
    throw SchemaError("field '" + field + "' must be an array of indices");
  }
  ChoreSet s;
  for (const json& v : arr) {
    if (!v.is_number_integer()) {
      throw SchemaError("field '" + field + "' must hold integers");
    }
    const int t = v.get<int>();
    if (t < 0 || t >= m) {
      throw SchemaError("field '" + field + "' has chore index " +
                        std::to_string(t) + " outside [0, " +
                        std::to_string(m) + ")");
    }
    s = s.with(t);
  }
  return s;
}

inline int int_field(const json& obj, const std::string& field) {
  if (!obj.contains(field)) {
    throw SchemaError("missing field '" + field + "'");
  }
  if (!obj[field].is_number_integer()) {
    throw SchemaError("field '" + field + "' must be an integer");
  }
  return obj[field].get<int>();
}

inline json spec_to_json(const CostSpec& spec) {
  json out;
  std::visit(
      [&out](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CardinalityCost>) {
          out["kind"] = "cardinality";
        } else if constexpr (std::is_same_v<T, ThresholdCost>) {
          out["kind"] = "threshold";
          out["k"] = s.k;
        } else if constexpr (std::is_same_v<T, PartitionComplementCost>) {
          out["kind"] = "partition_complement";
          json blocks = json::array();
          for (const PartitionBlock& b : s.blocks) {
            blocks.push_back(
                json{{"chores", set_to_json(b.chores)}, {"cap", b.cap}});
          }
          out["blocks"] = std::move(blocks);
        } else if constexpr (std::is_same_v<T, CoverageMaxCost>) {
          out["kind"] = "coverage_max";
          json sets = json::array();
          for (ChoreSet f : s.sets) sets.push_back(set_to_json(f));
          out["sets"] = std::move(sets);
        } else {
          out["kind"] = "table";
          out["values"] = s.values;
        }
      },
      spec);
  return out;
}

inline CostSpec spec_from_json(const json& obj, int m) {
  if (!obj.is_object() || !obj.contains("kind") ||
      !obj["kind"].is_string()) {
    throw SchemaError("each agent record needs a string field 'kind'");
  }
  const std::string kind = obj["kind"].get<std::string>();
  if (kind == "cardinality") {
    return CardinalityCost{};
  }
  if (kind == "threshold") {
    return ThresholdCost{int_field(obj, "k")};
  }
  if (kind == "partition_complement") {
    if (!obj.contains("blocks") || !obj["blocks"].is_array()) {
      throw SchemaError("partition_complement needs an array field 'blocks'");
    }
    PartitionComplementCost spec;
    for (const json& b : obj["blocks"]) {
      spec.blocks.push_back(PartitionBlock{
          set_from_json(b.contains("chores") ? b["chores"] : json(), m,
                        "chores"),
          int_field(b, "cap")});
    }
    return spec;
  }
  if (kind == "coverage_max") {
    if (!obj.contains("sets") || !obj["sets"].is_array()) {
      throw SchemaError("coverage_max needs an array field 'sets'");
    }
    CoverageMaxCost spec;
    for (const json& f : obj["sets"]) {
      spec.sets.push_back(set_from_json(f, m, "sets"));
    }
    return spec;
  }
  if (kind == "table") {
    if (!obj.contains("values") || !obj["values"].is_array()) {
      throw SchemaError("table needs an array field 'values'");
    }
    TableCost spec;
    for (const json& v : obj["values"]) {
      if (!v.is_number_integer()) {
        throw SchemaError("field 'values' must hold integers");
      }
      spec.values.push_back(v.get<int>());
    }
    return spec;
  }
  throw SchemaError("unknown cost kind '" + kind + "'");
}

}  // namespace detail

inline std::string serialize_instance(const Instance& inst) {
  detail::json doc;
  doc["version"] = kInstanceFileVersion;
  doc["n"] = inst.agent_count();
  doc["m"] = inst.chore_count();
  detail::json agents = detail::json::array();
  for (const CostOracle& c : inst.costs()) {
    agents.push_back(detail::spec_to_json(c.spec()));
  }
  doc["agents"] = std::move(agents);
  return doc.dump(2) + "\n";
}

// Parses an instance document. Table specs are validated on load when
// m <= 16 (rejecting tables without binary marginals and certifying
// supermodular ones); larger tables are accepted uncertified. With
// require_certified set, any agent left uncertified rejects the document.
inline Instance parse_instance(const std::string& text,
                               bool require_certified = false) {
  detail::json doc;
  try {
    doc = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("top level must be an object");
  if (detail::int_field(doc, "version") != kInstanceFileVersion) {
    throw SchemaError("unsupported file version");
  }
  const int n = detail::int_field(doc, "n");
  const int m = detail::int_field(doc, "m");
  if (n < 1) throw SchemaError("field 'n' must be at least 1");
  if (m < 0 || m > kMaxChores) {
    throw SchemaError("field 'm' must be in [0, 64]");
  }
  if (!doc.contains("agents") || !doc["agents"].is_array()) {
    throw SchemaError("missing array field 'agents'");
  }
  if (static_cast<int>(doc["agents"].size()) != n) {
    throw SchemaError("field 'agents' must list exactly n cost specs");
  }

  std::vector<CostOracle> costs;
  costs.reserve(static_cast<std::size_t>(n));
  for (const detail::json& agent : doc["agents"]) {
    costs.push_back(
        CostOracle::with_validation(detail::spec_from_json(agent, m), m));
    if (require_certified && !costs.back().supermodular_certified()) {
      throw ValidationError(
          "certification requested but a cost is not certified binary "
          "supermodular");
    }
  }
  return Instance(std::move(costs));
}

inline std::string serialize_allocation(const Instance& inst,
                                        const Allocation& alloc) {
  detail::json doc;
  detail::json bundles = detail::json::array();
  for (ChoreSet b : alloc.bundles) bundles.push_back(detail::set_to_json(b));
  doc["bundles"] = std::move(bundles);
  doc["cost_profile"] = cost_profile(inst, alloc);
  doc["social_cost"] = social_cost(inst, alloc);
  return doc.dump(2) + "\n";
}

inline Allocation parse_allocation(const std::string& text,
                                   const Instance& inst) {
  detail::json doc;
  try {
    doc = detail::json::parse(text);
  } catch (const detail::json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("bundles") ||
      !doc["bundles"].is_array()) {
    throw SchemaError("allocation document needs an array field 'bundles'");
  }
  if (static_cast<int>(doc["bundles"].size()) != inst.agent_count()) {
    throw SchemaError("field 'bundles' must list one bundle per agent");
  }
  Allocation alloc;
  for (const detail::json& b : doc["bundles"]) {
    alloc.bundles.push_back(
        detail::set_from_json(b, inst.chore_count(), "bundles"));
  }
  return alloc;
}

// Built-in instances, addressable by name:
//   incomparable-1   three agents, eleven chores; cardinality vs two
//                    threshold-3 costs.
//   incomparable-2   three agents, ten chores; two cardinality costs and one
//                    cost with four unit chores plus three complement pairs.
//   no-po-efx(k)     two agents, 2k+1 chores with identical costs: k
//                    complement pairs and one always-costly chore.
//   exact3cover-demo two agents, six chores, identical coverage-max cost
//                    over the family {0,1,2}, {3,4,5}.
inline Instance builtin_instance(const std::string& name) {
  if (name == "incomparable-1") {
    const int m = 11;
    std::vector<CostOracle> costs;
    costs.emplace_back(CardinalityCost{}, m);
    costs.emplace_back(ThresholdCost{3}, m);
    costs.emplace_back(ThresholdCost{3}, m);
    return Instance(std::move(costs));
  }
  if (name == "incomparable-2") {
    const int m = 10;
    PartitionComplementCost pairs;
    for (int t = 0; t < 4; ++t) {
      pairs.blocks.push_back({ChoreSet::singleton(t), 0});
    }
    for (int t = 4; t < 10; t += 2) {
      pairs.blocks.push_back({ChoreSet::of({t, t + 1}), 1});
    }
    std::vector<CostOracle> costs;
    costs.emplace_back(CardinalityCost{}, m);
    costs.emplace_back(CardinalityCost{}, m);
    costs.emplace_back(std::move(pairs), m);
    return Instance(std::move(costs));
  }
  if (name.rfind("no-po-efx(", 0) == 0 && name.back() == ')') {
    int k = 0;
    try {
      k = std::stoi(name.substr(10, name.size() - 11));
    } catch (const std::exception&) {
      throw InvalidParameter("cannot parse pair count in '" + name + "'");
    }
    if (k < 1 || 2 * k + 1 > kMaxChores) {
      throw InvalidParameter("pair count must be in [1, 31]");
    }
    const int m = 2 * k + 1;
    PartitionComplementCost spec;
    for (int t = 0; t < 2 * k; t += 2) {
      spec.blocks.push_back({ChoreSet::of({t, t + 1}), 1});
    }
    spec.blocks.push_back({ChoreSet::singleton(2 * k), 0});
    std::vector<CostOracle> costs;
    costs.emplace_back(spec, m);
    costs.emplace_back(spec, m);
    return Instance(std::move(costs));
  }
  if (name == "exact3cover-demo") {
    const int m = 6;
    CoverageMaxCost spec{{ChoreSet::of({0, 1, 2}), ChoreSet::of({3, 4, 5})}};
    std::vector<CostOracle> costs;
    costs.emplace_back(spec, m);
    costs.emplace_back(spec, m);
    return Instance(std::move(costs));
  }
  throw InvalidParameter("unknown builtin instance '" + name + "'");
}

}  // namespace chorediv
