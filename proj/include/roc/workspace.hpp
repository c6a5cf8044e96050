#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "roc/alignment.hpp"
#include "roc/cbr.hpp"
#include "roc/goal_graph.hpp"
#include "roc/process_model.hpp"

namespace roc {

/// Everything one .roc source (or a set of merged sources) declares.
struct Workspace {
  std::vector<AliasMap> alias_maps;
  std::vector<ComponentCatalog> catalogs;
  std::vector<GoalGraph> goal_graphs;
  std::vector<ProcessModel> models;
  std::vector<cbr::Case> cases;
  std::optional<cbr::SimilarityWeights> weights;

  const ProcessModel* find_model(const std::string& id) const;
  const GoalGraph* find_goals(const std::string& id) const;
  const ComponentCatalog* find_catalog(const std::string& id) const;
  const AliasMap* find_alias_map(const std::string& id) const;
  const cbr::Case* find_case(const std::string& id) const;
};

/// Per-entity validators plus cross-reference checks (unique ids per
/// category, realization targets resolve, case component maps point at the
/// case's own to-be fragments).
std::vector<Violation> validate_workspace(const Workspace& w);

/// The union of all alias maps in the workspace.
AliasMap combined_aliases(const Workspace& w);

/// Extracted fragments of every valid model, keyed by model id.
std::map<std::string, std::vector<Fragment>> fragments_by_model(const Workspace& w);

/// Workspace-level realization linking: validates that the goal graph, the
/// goal, and the referenced model (and fragment, when given) all exist.
Workspace link_realization(const Workspace& w, const std::string& graph_id,
                           const std::string& goal_id, const RealizationRef& ref);

struct NewCaseSpec {
  std::string id;
  std::string asis_model;
  std::string tobe_model;  // empty = query case without a solution
  std::string goal_graph;  // optional
  std::string catalog;     // optional; fills the component map
  std::string enterprise_type;
  std::string targeted_process;
  std::string project_type;
  std::string notes;
};

/// Assembles a case from workspace artifacts: fragments are extracted from
/// the named models, goal labels taken from the goal graph, and the component
/// map computed against the catalog. Throws on unknown ids or invalid models.
/// The case is not persisted.
cbr::Case new_case(const Workspace& w, const NewCaseSpec& spec);

}  // namespace roc
