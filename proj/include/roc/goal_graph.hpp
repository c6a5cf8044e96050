#pragma once

#include <map>
#include <string>
#include <vector>

#include "roc/strategy.hpp"
#include "roc/violation.hpp"

namespace roc {

enum class GoalKind { Need, StrategicGoal, OperationalGoal, Objective, Requirement, ChangeGoal };
enum class Horizon { None, Strategic, Operational };
enum class EdgeKind { Derives, Supports, Determines };

const char* to_string(GoalKind k);
const char* to_string(Horizon h);
const char* to_string(EdgeKind k);

/// Layering tier along derives edges: need (0) -> goal (1) -> objective (2)
/// -> requirement (3). Derives edges may stay on a tier or skip downward,
/// never point upward.
int layer_rank(GoalKind k);

struct GoalNode {
  std::string id;
  std::string label;
  GoalKind kind = GoalKind::Need;
  Horizon horizon = Horizon::None;
};

struct Stakeholder {
  std::string id;
  std::string name;
  std::string role;
};

struct GoalEdge {
  std::string from;
  EdgeKind kind = EdgeKind::Derives;
  std::string to;

  bool operator==(const GoalEdge&) const = default;
  bool operator<(const GoalEdge& o) const {
    if (from != o.from) return from < o.from;
    if (kind != o.kind) return kind < o.kind;
    return to < o.to;
  }
};

/// Target of a realized_by link: a process model, or one fragment of it.
struct RealizationRef {
  std::string model_id;
  std::string fragment_id;  // empty = the whole model

  std::string to_string() const;
  static RealizationRef parse(const std::string& text);

  bool operator==(const RealizationRef&) const = default;
  bool operator<(const RealizationRef& o) const {
    if (model_id != o.model_id) return model_id < o.model_id;
    return fragment_id < o.fragment_id;
  }
};

struct GoalGraph {
  std::string id;
  std::vector<GoalNode> nodes;
  std::vector<Stakeholder> stakeholders;
  std::vector<GoalEdge> edges;
  std::map<std::string, std::vector<RealizationRef>> realizations;  // node id -> refs

  const GoalNode* find_node(const std::string& node_id) const;
  const GoalNode* find_node_by_label(const std::string& normalized_label) const;
  const Stakeholder* find_stakeholder(const std::string& stakeholder_id) const;
};

/// Empty result iff the graph is acyclic over derives/supports edges, derives
/// edges respect the layering tiers, every requirement descends from an
/// objective, determines edges originate at stakeholders, and horizons are
/// declared where required. Pure and deterministic.
std::vector<Violation> validate_goals(const GoalGraph& g);

/// All simple derives-paths from any need to the given node, as id sequences
/// in lexicographic order. A need traces to itself with a single-node path.
/// Throws on an unknown id.
std::vector<std::vector<std::string>> trace(const GoalGraph& g, const std::string& node_id);

/// Returns a copy of the graph with a realized_by link added. Idempotent:
/// linking an existing ref leaves the graph unchanged. Throws on an unknown
/// goal id; ref validity against a workspace is the caller's concern (see
/// workspace.hpp).
GoalGraph link_realization(const GoalGraph& g, const std::string& goal_id, const RealizationRef& ref);

}  // namespace roc
