#include "roc/alignment.hpp"

#include <algorithm>
#include <set>

namespace roc {

bool Component::provides_strategy(const Strategy& s) const {
  for (const auto& p : provides)
    if (normalize_label(p) == s.canonical_label()) return true;
  return false;
}

const Component* ComponentCatalog::find(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<Violation> validate_catalog(const ComponentCatalog& c) {
  std::vector<Violation> out;
  std::set<std::string> names;
  for (const auto& comp : c.components) {
    if (normalize_label(comp.name).empty())
      out.push_back({ViolationCode::EmptyLabel, c.id, "component with an empty name"});
    if (!names.insert(comp.name).second)
      out.push_back({ViolationCode::DuplicateComponent, comp.name,
                     "duplicate component '" + comp.name + "'"});
    if (comp.provides.empty())
      out.push_back({ViolationCode::EmptyProvides, comp.name,
                     "component '" + comp.name + "' provides no strategies"});
    for (const auto& p : comp.provides)
      if (normalize_label(p).empty())
        out.push_back({ViolationCode::EmptyLabel, comp.name,
                       "component '" + comp.name + "' provides an empty strategy"});
  }
  return out;
}

AliasMap::AliasMap(std::string id, std::vector<std::pair<std::string, std::string>> pairs)
    : id_(std::move(id)), pairs_(std::move(pairs)) {
  // Union-find over normalized labels; the representative of each class is
  // its lexicographically least member.
  std::map<std::string, std::string> parent;
  auto find = [&](std::string x) {
    while (true) {
      auto it = parent.find(x);
      if (it == parent.end() || it->second == x) return x;
      x = it->second;
    }
  };
  for (const auto& [a, b] : pairs_) {
    std::string na = normalize_state_label(a);
    std::string nb = normalize_state_label(b);
    if (na.empty() || nb.empty()) continue;
    parent.emplace(na, na);
    parent.emplace(nb, nb);
    std::string ra = find(na);
    std::string rb = find(nb);
    if (ra == rb) continue;
    if (rb < ra) std::swap(ra, rb);
    parent[rb] = ra;
  }
  for (const auto& [label, _] : parent) canon_[label] = find(label);
}

std::string AliasMap::resolve(const std::string& normalized_label) const {
  auto it = canon_.find(normalized_label);
  return it == canon_.end() ? normalized_label : it->second;
}

AliasMap merge_aliases(const std::vector<AliasMap>& maps) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& m : maps)
    pairs.insert(pairs.end(), m.pairs().begin(), m.pairs().end());
  return AliasMap("merged", std::move(pairs));
}

const char* to_string(GapClass g) {
  switch (g) {
    case GapClass::NoGap: return "NoGap";
    case GapClass::NegatedCapability: return "NegatedCapability";
    case GapClass::ManualToAutomated: return "ManualToAutomated";
    case GapClass::StrategyMismatch: return "StrategyMismatch";
  }
  return "?";
}

GapClass classify_gap(const Strategy& asis, const Strategy& reference) {
  if (asis.normalized_label == reference.normalized_label && asis.polarity == reference.polarity)
    return GapClass::NoGap;
  if (asis.polarity == Polarity::Negated) return GapClass::NegatedCapability;
  if (asis.polarity == Polarity::Manual) return GapClass::ManualToAutomated;
  return GapClass::StrategyMismatch;
}

AlignmentReport align(const std::vector<Fragment>& asis, const std::vector<Fragment>& reference,
                      const AliasMap& aliases) {
  auto endpoint_key = [&](const Fragment& f) {
    return std::make_pair(aliases.resolve(f.source), aliases.resolve(f.target));
  };

  AlignmentReport report;
  std::set<std::size_t> matched_reference;
  std::size_t matched_asis = 0;

  for (const auto& a : asis) {
    auto key = endpoint_key(a);
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < reference.size(); ++i)
      if (endpoint_key(reference[i]) == key) candidates.push_back(i);
    if (candidates.empty()) {
      report.unmatched_asis.push_back(a);
      continue;
    }
    ++matched_asis;
    // Candidates already sit in reference list order, the primary pairing
    // order; fragment triplet uniqueness makes further tie-breaking moot.
    for (std::size_t i : candidates) {
      matched_reference.insert(i);
      report.pairs.push_back({a, reference[i], classify_gap(a.strategy, reference[i].strategy),
                              candidates.size() > 1});
    }
  }

  for (std::size_t i = 0; i < reference.size(); ++i)
    if (!matched_reference.count(i)) report.unmatched_reference.push_back(reference[i]);

  report.coverage = asis.empty() ? 1.0 : static_cast<double>(matched_asis) / asis.size();
  return report;
}

ComponentMapping map_components(const std::vector<Fragment>& reference, const ComponentCatalog& catalog) {
  auto violations = validate_catalog(catalog);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  ComponentMapping mapping;
  for (const auto& f : reference) {
    std::vector<std::string> providers;
    for (const auto& c : catalog.components)
      if (c.provides_strategy(f.strategy)) providers.push_back(c.name);
    std::sort(providers.begin(), providers.end());
    if (providers.empty()) {
      mapping.uncovered.push_back(f.id);
      continue;
    }
    for (const auto& name : providers) mapping.entries.emplace_back(f.id, name);
  }
  return mapping;
}

AlignmentReport align_with_catalog(const std::vector<Fragment>& asis,
                                   const std::vector<Fragment>& reference,
                                   const ComponentCatalog& catalog, const AliasMap& aliases) {
  AlignmentReport report = align(asis, reference, aliases);
  auto mapping = map_components(reference, catalog);
  report.component_map = std::move(mapping.entries);
  report.uncovered_reference = std::move(mapping.uncovered);
  return report;
}

SupportReport support_check(const GoalGraph& g,
                            const std::map<std::string, std::vector<Fragment>>& fragments_by_model,
                            const AlignmentReport& report) {
  std::set<std::string> covered;
  for (const auto& [fid, _] : report.component_map) covered.insert(fid);

  // Reference fragments of the report, by id, for covered-id confirmation.
  std::map<std::string, const Fragment*> reference_by_id;
  for (const auto& p : report.pairs) reference_by_id.emplace(p.reference.id, &p.reference);
  for (const auto& f : report.unmatched_reference) reference_by_id.emplace(f.id, &f);

  auto supported = [&](const Fragment& f) {
    for (const auto& p : report.pairs)
      if (p.gap == GapClass::NoGap && (p.asis.same_triplet(f) || p.reference.same_triplet(f)))
        return true;
    if (covered.count(f.id)) {
      auto it = reference_by_id.find(f.id);
      if (it != reference_by_id.end() && it->second->same_triplet(f)) return true;
    }
    return false;
  };

  SupportReport result;
  for (const auto& [goal_id, refs] : g.realizations) {
    bool all_supported = true;
    for (const auto& ref : refs) {
      auto model_it = fragments_by_model.find(ref.model_id);
      if (model_it == fragments_by_model.end())
        throw Error("support_check: realization of '" + goal_id + "' points at unknown model '" +
                    ref.model_id + "'");
      std::vector<const Fragment*> realizing;
      if (ref.fragment_id.empty()) {
        for (const auto& f : model_it->second) realizing.push_back(&f);
      } else {
        const Fragment* found = nullptr;
        for (const auto& f : model_it->second)
          if (f.id == ref.fragment_id) found = &f;
        if (!found)
          throw Error("support_check: realization of '" + goal_id + "' points at unknown fragment '" +
                      ref.to_string() + "'");
        realizing.push_back(found);
      }
      for (const Fragment* f : realizing)
        if (!supported(*f)) all_supported = false;
    }
    if (!all_supported) result.unsupported.push_back(goal_id);
  }
  std::sort(result.unsupported.begin(), result.unsupported.end());

  std::vector<std::string> goal_ids;
  for (const auto& n : g.nodes) {
    bool goal_kind = n.kind == GoalKind::StrategicGoal || n.kind == GoalKind::OperationalGoal ||
                     n.kind == GoalKind::ChangeGoal;
    if (goal_kind && !g.realizations.count(n.id)) goal_ids.push_back(n.id);
  }
  std::sort(goal_ids.begin(), goal_ids.end());
  for (const auto& id : goal_ids)
    result.warnings.push_back("goal '" + id + "' has no realization link");
  return result;
}

}  // namespace roc
