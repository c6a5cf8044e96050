#include "roc/goal_graph.hpp"

#include <algorithm>
#include <set>

namespace roc {

const char* to_string(GoalKind k) {
  switch (k) {
    case GoalKind::Need: return "need";
    case GoalKind::StrategicGoal: return "strategic_goal";
    case GoalKind::OperationalGoal: return "operational_goal";
    case GoalKind::Objective: return "objective";
    case GoalKind::Requirement: return "requirement";
    case GoalKind::ChangeGoal: return "change_goal";
  }
  return "?";
}

const char* to_string(Horizon h) {
  switch (h) {
    case Horizon::None: return "none";
    case Horizon::Strategic: return "strategic";
    case Horizon::Operational: return "operational";
  }
  return "?";
}

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Derives: return "derives";
    case EdgeKind::Supports: return "supports";
    case EdgeKind::Determines: return "determines";
  }
  return "?";
}

int layer_rank(GoalKind k) {
  switch (k) {
    case GoalKind::Need: return 0;
    case GoalKind::StrategicGoal:
    case GoalKind::OperationalGoal:
    case GoalKind::ChangeGoal: return 1;
    case GoalKind::Objective: return 2;
    case GoalKind::Requirement: return 3;
  }
  return 0;
}

std::string RealizationRef::to_string() const {
  if (fragment_id.empty()) return model_id;
  return model_id + "/" + fragment_id;
}

RealizationRef RealizationRef::parse(const std::string& text) {
  RealizationRef ref;
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    ref.model_id = text;
  } else {
    ref.model_id = text.substr(0, slash);
    ref.fragment_id = text.substr(slash + 1);
  }
  return ref;
}

const GoalNode* GoalGraph::find_node(const std::string& node_id) const {
  for (const auto& n : nodes)
    if (n.id == node_id) return &n;
  return nullptr;
}

const GoalNode* GoalGraph::find_node_by_label(const std::string& normalized_label) const {
  for (const auto& n : nodes)
    if (normalize_label(n.label) == normalized_label) return &n;
  return nullptr;
}

const Stakeholder* GoalGraph::find_stakeholder(const std::string& stakeholder_id) const {
  for (const auto& s : stakeholders)
    if (s.id == stakeholder_id) return &s;
  return nullptr;
}

namespace {

// Adjacency over a subset of edge kinds, nodes only.
std::map<std::string, std::vector<std::string>> adjacency(const GoalGraph& g, bool derives_only) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : g.edges) {
    if (e.kind == EdgeKind::Determines) continue;
    if (derives_only && e.kind != EdgeKind::Derives) continue;
    if (g.find_node(e.from) && g.find_node(e.to)) adj[e.from].push_back(e.to);
  }
  for (auto& [_, tos] : adj) {
    std::sort(tos.begin(), tos.end());
    tos.erase(std::unique(tos.begin(), tos.end()), tos.end());
  }
  return adj;
}

// Returns the id of a node on a cycle, or empty when acyclic.
std::string find_cycle(const GoalGraph& g) {
  auto adj = adjacency(g, /*derives_only=*/false);
  std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
  std::string found;

  auto dfs = [&](auto&& self, const std::string& cur) -> bool {
    state[cur] = 1;
    auto it = adj.find(cur);
    if (it != adj.end()) {
      for (const auto& next : it->second) {
        int s = state.count(next) ? state[next] : 0;
        if (s == 1) {
          found = next;
          return true;
        }
        if (s == 0 && self(self, next)) return true;
      }
    }
    state[cur] = 2;
    return false;
  };

  for (const auto& n : g.nodes) {
    if ((state.count(n.id) ? state[n.id] : 0) == 0 && dfs(dfs, n.id)) return found;
  }
  return {};
}

}  // namespace

std::vector<Violation> validate_goals(const GoalGraph& g) {
  std::vector<Violation> out;

  std::set<std::string> ids;
  for (const auto& n : g.nodes)
    if (!ids.insert(n.id).second)
      out.push_back({ViolationCode::DuplicateId, n.id, "duplicate node id '" + n.id + "'"});
  for (const auto& s : g.stakeholders)
    if (!ids.insert(s.id).second)
      out.push_back({ViolationCode::DuplicateId, s.id, "duplicate stakeholder id '" + s.id + "'"});

  for (const auto& n : g.nodes) {
    if (normalize_label(n.label).empty())
      out.push_back({ViolationCode::EmptyLabel, n.id, "node '" + n.id + "' has an empty label"});
    if (n.kind == GoalKind::Need && n.horizon == Horizon::None)
      out.push_back({ViolationCode::MissingHorizon, n.id,
                     "need '" + n.id + "' must declare a strategic or operational horizon"});
    if (n.kind == GoalKind::Requirement && n.horizon != Horizon::None)
      out.push_back({ViolationCode::InvalidHorizon, n.id,
                     "requirement '" + n.id + "' must not carry a horizon"});
  }
  for (const auto& s : g.stakeholders)
    if (normalize_label(s.name).empty())
      out.push_back({ViolationCode::MissingName, s.id, "stakeholder '" + s.id + "' has an empty name"});

  for (const auto& e : g.edges) {
    std::string label = e.from + " " + to_string(e.kind) + " " + e.to;
    if (e.kind == EdgeKind::Determines) {
      if (!g.find_stakeholder(e.from))
        out.push_back({ViolationCode::InvalidDetermines, e.from,
                       "determines edge '" + label + "' must originate at a stakeholder"});
      if (!g.find_node(e.to))
        out.push_back({ViolationCode::UnknownNode, e.to,
                       "determines edge '" + label + "' points at an unknown node"});
      continue;
    }
    for (const auto& endpoint : {e.from, e.to}) {
      if (g.find_node(endpoint)) continue;
      if (g.find_stakeholder(endpoint))
        out.push_back({ViolationCode::EdgeEndpointNotNode, endpoint,
                       "edge '" + label + "' must connect goal nodes, not stakeholders"});
      else
        out.push_back({ViolationCode::UnknownNode, endpoint,
                       "edge '" + label + "' references unknown node '" + endpoint + "'"});
    }
    if (e.kind == EdgeKind::Derives) {
      const GoalNode* from = g.find_node(e.from);
      const GoalNode* to = g.find_node(e.to);
      if (from && to && layer_rank(from->kind) > layer_rank(to->kind))
        out.push_back({ViolationCode::LayeringViolation, e.from,
                       "derives edge '" + label + "' points upward: " +
                           std::string(to_string(from->kind)) + " cannot derive " +
                           to_string(to->kind)});
    }
  }

  std::string cycle_node = find_cycle(g);
  if (!cycle_node.empty())
    out.push_back({ViolationCode::CycleDetected, cycle_node,
                   "derives/supports cycle through node '" + cycle_node + "'"});

  // Every requirement must descend from at least one objective.
  auto derives = adjacency(g, /*derives_only=*/true);
  for (const auto& n : g.nodes) {
    if (n.kind != GoalKind::Requirement) continue;
    bool derived = false;
    std::set<std::string> seen;
    std::vector<std::string> stack;
    for (const auto& [from, tos] : derives)
      if (std::find(tos.begin(), tos.end(), n.id) != tos.end()) stack.push_back(from);
    while (!stack.empty() && !derived) {
      std::string cur = stack.back();
      stack.pop_back();
      if (!seen.insert(cur).second) continue;
      const GoalNode* node = g.find_node(cur);
      if (node && node->kind == GoalKind::Objective) {
        derived = true;
        break;
      }
      for (const auto& [from, tos] : derives)
        if (std::find(tos.begin(), tos.end(), cur) != tos.end()) stack.push_back(from);
    }
    if (!derived)
      out.push_back({ViolationCode::RequirementUnderived, n.id,
                     "requirement '" + n.id + "' is not derived from any objective"});
  }

  for (const auto& [goal_id, _] : g.realizations)
    if (!g.find_node(goal_id))
      out.push_back({ViolationCode::UnknownNode, goal_id,
                     "realization on unknown node '" + goal_id + "'"});

  return out;
}

std::vector<std::vector<std::string>> trace(const GoalGraph& g, const std::string& node_id) {
  if (!g.find_node(node_id)) throw Error("trace: unknown node '" + node_id + "' in graph '" + g.id + "'");

  auto adj = adjacency(g, /*derives_only=*/true);
  std::vector<std::vector<std::string>> paths;
  std::vector<std::string> current;
  std::set<std::string> on_path;

  auto dfs = [&](auto&& self, const std::string& cur) -> void {
    current.push_back(cur);
    on_path.insert(cur);
    if (cur == node_id) {
      paths.push_back(current);
    } else {
      auto it = adj.find(cur);
      if (it != adj.end())
        for (const auto& next : it->second)
          if (!on_path.count(next)) self(self, next);
    }
    on_path.erase(cur);
    current.pop_back();
  };

  std::vector<std::string> needs;
  for (const auto& n : g.nodes)
    if (n.kind == GoalKind::Need) needs.push_back(n.id);
  std::sort(needs.begin(), needs.end());
  for (const auto& need : needs) dfs(dfs, need);

  std::sort(paths.begin(), paths.end());
  return paths;
}

GoalGraph link_realization(const GoalGraph& g, const std::string& goal_id, const RealizationRef& ref) {
  if (!g.find_node(goal_id))
    throw Error("link_realization: unknown goal '" + goal_id + "' in graph '" + g.id + "'");
  GoalGraph copy = g;
  auto& refs = copy.realizations[goal_id];
  if (std::find(refs.begin(), refs.end(), ref) == refs.end()) refs.push_back(ref);
  return copy;
}

}  // namespace roc
