#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "roc/goal_graph.hpp"
#include "roc/process_model.hpp"

namespace roc {

/// A reference-model component and the strategies it provides. Provided
/// strategies are kept verbatim; matching normalizes both sides.
struct Component {
  std::string name;
  std::string module;
  std::vector<std::string> provides;

  bool provides_strategy(const Strategy& s) const;
};

struct ComponentCatalog {
  std::string id;
  std::vector<Component> components;

  const Component* find(const std::string& name) const;
};

std::vector<Violation> validate_catalog(const ComponentCatalog& c);

/// Equivalences between state labels of different models (e.g. "stock" =
/// "stock product"). Resolution maps a normalized label to the
/// lexicographically least member of its equivalence class.
class AliasMap {
 public:
  AliasMap() = default;
  AliasMap(std::string id, std::vector<std::pair<std::string, std::string>> pairs);

  const std::string& id() const { return id_; }
  const std::vector<std::pair<std::string, std::string>>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

  std::string resolve(const std::string& normalized_label) const;

 private:
  std::string id_;
  std::vector<std::pair<std::string, std::string>> pairs_;  // raw, as written
  std::map<std::string, std::string> canon_;                // normalized -> representative
};

AliasMap merge_aliases(const std::vector<AliasMap>& maps);

enum class GapClass { NoGap, NegatedCapability, ManualToAutomated, StrategyMismatch };

const char* to_string(GapClass g);

/// NoGap when labels and polarities agree; otherwise the as-is polarity
/// decides: negated labels mark a missing capability, manual labels a manual
/// step to automate, and anything else is a plain strategy mismatch.
GapClass classify_gap(const Strategy& asis, const Strategy& reference);

struct AlignmentPair {
  Fragment asis;
  Fragment reference;
  GapClass gap = GapClass::NoGap;
  bool alternative = false;  // several reference fragments share the as-is endpoints
};

struct AlignmentReport {
  std::vector<AlignmentPair> pairs;
  std::vector<Fragment> unmatched_asis;
  std::vector<Fragment> unmatched_reference;
  std::vector<std::pair<std::string, std::string>> component_map;  // reference fragment id -> component
  std::vector<std::string> uncovered_reference;                    // fragment ids with no provider
  double coverage = 0.0;  // matched as-is fragments / all as-is fragments
};

/// Pairs as-is fragments with reference fragments sharing (source, target)
/// after alias resolution. Every reference candidate of an endpoint match
/// yields one pair; the as-is side is shared and flagged as alternative.
/// Matching is by endpoints only — strategies are classified, not matched.
/// Deterministic: candidates keep reference list order, ties broken by
/// strategy label.
AlignmentReport align(const std::vector<Fragment>& asis, const std::vector<Fragment>& reference,
                      const AliasMap& aliases = {});

struct ComponentMapping {
  std::vector<std::pair<std::string, std::string>> entries;  // fragment id -> component name
  std::vector<std::string> uncovered;                        // fragment ids, in input order
};

/// Maps each reference fragment to every component providing its strategy,
/// sorted by component name. Throws ValidationError on an invalid catalog.
ComponentMapping map_components(const std::vector<Fragment>& reference, const ComponentCatalog& catalog);

/// align + map_components against the reference list in one step.
AlignmentReport align_with_catalog(const std::vector<Fragment>& asis,
                                   const std::vector<Fragment>& reference,
                                   const ComponentCatalog& catalog, const AliasMap& aliases = {});

struct SupportReport {
  std::vector<std::string> unsupported;  // node ids, sorted
  std::vector<std::string> warnings;     // goals with no realization link
};

/// Flags nodes whose realizing fragments carry a gap that no catalog
/// component resolves. fragments_by_model supplies the extracted fragments of
/// every model a realization may point to; a realization into a missing model
/// or fragment throws. Goal-kind nodes without any realization are reported
/// as warnings, not flagged.
SupportReport support_check(const GoalGraph& g,
                            const std::map<std::string, std::vector<Fragment>>& fragments_by_model,
                            const AlignmentReport& report);

}  // namespace roc
