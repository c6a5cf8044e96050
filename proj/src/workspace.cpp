#include "roc/workspace.hpp"

#include <algorithm>
#include <set>

namespace roc {

namespace {

template <typename T, typename Key>
const T* find_by_id(const std::vector<T>& items, Key key, const std::string& id) {
  for (const auto& item : items)
    if (key(item) == id) return &item;
  return nullptr;
}

}  // namespace

const ProcessModel* Workspace::find_model(const std::string& id) const {
  return find_by_id(models, [](const ProcessModel& m) { return m.id; }, id);
}

const GoalGraph* Workspace::find_goals(const std::string& id) const {
  return find_by_id(goal_graphs, [](const GoalGraph& g) { return g.id; }, id);
}

const ComponentCatalog* Workspace::find_catalog(const std::string& id) const {
  return find_by_id(catalogs, [](const ComponentCatalog& c) { return c.id; }, id);
}

const AliasMap* Workspace::find_alias_map(const std::string& id) const {
  return find_by_id(alias_maps, [](const AliasMap& a) { return a.id(); }, id);
}

const cbr::Case* Workspace::find_case(const std::string& id) const {
  return find_by_id(cases, [](const cbr::Case& c) { return c.id; }, id);
}

std::vector<Violation> validate_workspace(const Workspace& w) {
  std::vector<Violation> out;

  auto check_unique = [&](const char* category, auto get_id, const auto& items) {
    std::set<std::string> ids;
    for (const auto& item : items) {
      std::string id = get_id(item);
      if (!ids.insert(id).second)
        out.push_back({ViolationCode::DuplicateId, id,
                       std::string("duplicate ") + category + " id '" + id + "'"});
    }
  };
  check_unique("net", [](const ProcessModel& m) { return m.id; }, w.models);
  check_unique("goals", [](const GoalGraph& g) { return g.id; }, w.goal_graphs);
  check_unique("catalog", [](const ComponentCatalog& c) { return c.id; }, w.catalogs);
  check_unique("aliases", [](const AliasMap& a) { return a.id(); }, w.alias_maps);
  check_unique("case", [](const cbr::Case& c) { return c.id; }, w.cases);

  for (const auto& m : w.models) {
    auto v = validate_model(m);
    out.insert(out.end(), v.begin(), v.end());
  }
  for (const auto& g : w.goal_graphs) {
    auto v = validate_goals(g);
    out.insert(out.end(), v.begin(), v.end());
  }
  for (const auto& c : w.catalogs) {
    auto v = validate_catalog(c);
    out.insert(out.end(), v.begin(), v.end());
  }

  for (const auto& g : w.goal_graphs) {
    for (const auto& [goal_id, refs] : g.realizations) {
      for (const auto& ref : refs) {
        const ProcessModel* m = w.find_model(ref.model_id);
        if (!m) {
          out.push_back({ViolationCode::DanglingReference, goal_id,
                         "realization of '" + goal_id + "' references unknown model '" +
                             ref.model_id + "'"});
          continue;
        }
        if (ref.fragment_id.empty() || !validate_model(*m).empty()) continue;
        auto fragments = extract_fragments(*m);
        bool found = std::any_of(fragments.begin(), fragments.end(),
                                 [&](const Fragment& f) { return f.id == ref.fragment_id; });
        if (!found)
          out.push_back({ViolationCode::DanglingReference, goal_id,
                         "realization of '" + goal_id + "' references unknown fragment '" +
                             ref.to_string() + "'"});
      }
    }
  }

  for (const auto& c : w.cases) {
    std::set<std::string> tobe_ids;
    for (const auto& f : c.tobe_fragments) tobe_ids.insert(f.id);
    for (const auto& [fid, component] : c.component_map)
      if (!tobe_ids.count(fid))
        out.push_back({ViolationCode::DanglingReference, c.id,
                       "case '" + c.id + "' maps unknown to-be fragment '" + fid + "'"});
  }

  return out;
}

AliasMap combined_aliases(const Workspace& w) { return merge_aliases(w.alias_maps); }

std::map<std::string, std::vector<Fragment>> fragments_by_model(const Workspace& w) {
  std::map<std::string, std::vector<Fragment>> out;
  for (const auto& m : w.models)
    if (validate_model(m).empty()) out[m.id] = extract_fragments(m);
  return out;
}

Workspace link_realization(const Workspace& w, const std::string& graph_id,
                           const std::string& goal_id, const RealizationRef& ref) {
  const GoalGraph* g = w.find_goals(graph_id);
  if (!g) throw Error("link_realization: unknown goal graph '" + graph_id + "'");
  const ProcessModel* m = w.find_model(ref.model_id);
  if (!m) throw Error("link_realization: unknown model '" + ref.model_id + "'");
  if (!ref.fragment_id.empty()) {
    auto fragments = extract_fragments(*m);
    bool found = std::any_of(fragments.begin(), fragments.end(),
                             [&](const Fragment& f) { return f.id == ref.fragment_id; });
    if (!found) throw Error("link_realization: unknown fragment '" + ref.to_string() + "'");
  }
  Workspace copy = w;
  for (auto& graph : copy.goal_graphs)
    if (graph.id == graph_id) graph = roc::link_realization(graph, goal_id, ref);
  return copy;
}

cbr::Case new_case(const Workspace& w, const NewCaseSpec& spec) {
  if (spec.id.empty()) throw Error("new_case: case id must not be empty");

  const ProcessModel* asis = w.find_model(spec.asis_model);
  if (!asis) throw Error("new_case: unknown as-is model '" + spec.asis_model + "'");

  cbr::Case c;
  c.id = spec.id;
  c.enterprise_type = spec.enterprise_type;
  c.targeted_process = spec.targeted_process;
  c.project_type = spec.project_type;
  c.notes = spec.notes;
  c.asis_fragments = extract_fragments(*asis);

  if (!spec.tobe_model.empty()) {
    const ProcessModel* tobe = w.find_model(spec.tobe_model);
    if (!tobe) throw Error("new_case: unknown to-be model '" + spec.tobe_model + "'");
    c.tobe_fragments = extract_fragments(*tobe);
  }
  if (!spec.goal_graph.empty()) {
    const GoalGraph* g = w.find_goals(spec.goal_graph);
    if (!g) throw Error("new_case: unknown goal graph '" + spec.goal_graph + "'");
    for (const auto& n : g->nodes) {
      std::string label = normalize_label(n.label);
      if (!label.empty()) c.goal_labels.insert(label);
    }
  }
  if (!spec.catalog.empty()) {
    const ComponentCatalog* catalog = w.find_catalog(spec.catalog);
    if (!catalog) throw Error("new_case: unknown catalog '" + spec.catalog + "'");
    c.component_map = map_components(c.tobe_fragments, *catalog).entries;
  }
  return c;
}

}  // namespace roc
