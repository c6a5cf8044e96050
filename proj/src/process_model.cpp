#include "roc/process_model.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace roc {

const char* to_string(PlaceKind k) {
  switch (k) {
    case PlaceKind::Start: return "start";
    case PlaceKind::Intermediate: return "intermediate";
    case PlaceKind::Exit: return "exit";
  }
  return "?";
}

const char* to_string(Level l) {
  switch (l) {
    case Level::Intentional: return "intentional";
    case Level::Strategy: return "strategy";
    case Level::Operational: return "operational";
  }
  return "?";
}

const Place* ProcessModel::find_place(const std::string& place_id) const {
  for (const auto& p : places)
    if (p.id == place_id) return &p;
  return nullptr;
}

const Place* ProcessModel::find_place_by_label(const std::string& normalized_label) const {
  for (const auto& p : places)
    if (p.normalized() == normalized_label) return &p;
  return nullptr;
}

const Transition* ProcessModel::find_transition(const std::string& transition_id) const {
  for (const auto& t : transitions)
    if (t.id == transition_id) return &t;
  return nullptr;
}

const Place* ProcessModel::start_place() const {
  for (const auto& p : places)
    if (p.kind == PlaceKind::Start) return &p;
  return nullptr;
}

const Place* ProcessModel::exit_place() const {
  for (const auto& p : places)
    if (p.kind == PlaceKind::Exit) return &p;
  return nullptr;
}

namespace {

// Structural adjacency: place -> places reachable through one transition.
std::map<std::string, std::set<std::string>> forward_adjacency(const ProcessModel& m) {
  std::map<std::string, std::set<std::string>> adj;
  for (const auto& t : m.transitions)
    for (const auto& in : t.inputs)
      for (const auto& out : t.outputs) adj[in].insert(out);
  return adj;
}

std::set<std::string> closure(const std::string& seed,
                              const std::map<std::string, std::set<std::string>>& adj) {
  std::set<std::string> seen{seed};
  std::vector<std::string> stack{seed};
  while (!stack.empty()) {
    std::string cur = stack.back();
    stack.pop_back();
    auto it = adj.find(cur);
    if (it == adj.end()) continue;
    for (const auto& next : it->second)
      if (seen.insert(next).second) stack.push_back(next);
  }
  return seen;
}

// (input, output) place pairs of a transition, ordered by normalized labels.
// Unknown place ids are skipped; validate_model reports them separately.
std::vector<std::pair<const Place*, const Place*>> transition_pairs(const ProcessModel& m,
                                                                    const Transition& t) {
  std::vector<std::pair<const Place*, const Place*>> pairs;
  std::set<std::string> in_ids(t.inputs.begin(), t.inputs.end());
  std::set<std::string> out_ids(t.outputs.begin(), t.outputs.end());
  for (const auto& in : in_ids)
    for (const auto& out : out_ids) {
      const Place* src = m.find_place(in);
      const Place* dst = m.find_place(out);
      if (src && dst) pairs.emplace_back(src, dst);
    }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    auto ka = std::make_pair(a.first->normalized(), a.second->normalized());
    auto kb = std::make_pair(b.first->normalized(), b.second->normalized());
    return ka < kb;
  });
  return pairs;
}

}  // namespace

std::vector<Violation> validate_model(const ProcessModel& m) {
  std::vector<Violation> out;

  // The empty model is valid; everything else needs the full structure.
  if (m.places.empty() && m.transitions.empty()) return out;

  std::set<std::string> place_ids;
  for (const auto& p : m.places) {
    if (!place_ids.insert(p.id).second)
      out.push_back({ViolationCode::DuplicateId, p.id, "duplicate place id '" + p.id + "'"});
  }
  std::set<std::string> transition_ids;
  for (const auto& t : m.transitions) {
    if (!transition_ids.insert(t.id).second)
      out.push_back({ViolationCode::DuplicateId, t.id, "duplicate transition id '" + t.id + "'"});
  }

  std::vector<const Place*> starts, exits;
  for (const auto& p : m.places) {
    if (p.kind == PlaceKind::Start) starts.push_back(&p);
    if (p.kind == PlaceKind::Exit) exits.push_back(&p);
  }
  if (starts.empty())
    out.push_back({ViolationCode::MissingStart, m.id, "model has no start place"});
  for (std::size_t i = 1; i < starts.size(); ++i)
    out.push_back({ViolationCode::DuplicateStart, starts[i]->id,
                   "more than one start place; first is '" + starts[0]->id + "'"});
  if (exits.empty()) out.push_back({ViolationCode::MissingExit, m.id, "model has no exit place"});
  for (std::size_t i = 1; i < exits.size(); ++i)
    out.push_back({ViolationCode::DuplicateExit, exits[i]->id,
                   "more than one exit place; first is '" + exits[0]->id + "'"});

  std::set<std::string> labels;
  for (const auto& p : m.places) {
    std::string norm = p.normalized();
    if (norm.empty()) {
      out.push_back({ViolationCode::EmptyLabel, p.id, "place '" + p.id + "' has an empty label"});
      continue;
    }
    if (!labels.insert(norm).second)
      out.push_back({ViolationCode::DuplicateLabel, p.id,
                     "place label '" + norm + "' duplicates another place after normalization"});
  }

  bool unknown_refs = false;
  for (const auto& t : m.transitions) {
    if (t.strategy.normalized_label.empty())
      out.push_back({ViolationCode::EmptyStrategy, t.id, "transition '" + t.id + "' has an empty strategy"});
    if (t.inputs.empty())
      out.push_back({ViolationCode::EmptyInputs, t.id, "transition '" + t.id + "' has no input places"});
    if (t.outputs.empty())
      out.push_back({ViolationCode::EmptyOutputs, t.id, "transition '" + t.id + "' has no output places"});
    for (const auto& group : {t.inputs, t.outputs})
      for (const auto& pid : group)
        if (!m.find_place(pid)) {
          unknown_refs = true;
          out.push_back({ViolationCode::UnknownPlace, t.id,
                         "transition '" + t.id + "' references undeclared place '" + pid + "'"});
        }
  }

  // Fragment triplets must be unique across the whole model.
  std::set<std::string> triplets;
  for (const auto& t : m.transitions) {
    for (const auto& [src, dst] : transition_pairs(m, t)) {
      std::string key = src->normalized() + "\x1f" + dst->normalized() + "\x1f" +
                        t.strategy.canonical_label();
      if (!triplets.insert(key).second)
        out.push_back({ViolationCode::DuplicateFragment, t.id,
                       "transition '" + t.id + "' repeats fragment <" + src->normalized() + ", " +
                           dst->normalized() + ", " + t.strategy.canonical_label() + ">"});
    }
  }

  // Path property only makes sense once start/exit are unambiguous and every
  // arc points at a known place; otherwise it would only echo earlier errors.
  if (starts.size() == 1 && exits.size() == 1 && !unknown_refs) {
    auto fwd = forward_adjacency(m);
    std::map<std::string, std::set<std::string>> bwd;
    for (const auto& [from, tos] : fwd)
      for (const auto& to : tos) bwd[to].insert(from);
    auto from_start = closure(starts[0]->id, fwd);
    auto to_exit = closure(exits[0]->id, bwd);
    for (const auto& p : m.places) {
      if (!from_start.count(p.id))
        out.push_back({ViolationCode::UnreachablePlace, p.id,
                       "place '" + p.id + "' is not reachable from the start place"});
      else if (!to_exit.count(p.id))
        out.push_back({ViolationCode::NoPathToExit, p.id,
                       "place '" + p.id + "' cannot reach the exit place"});
    }
  }

  return out;
}

std::vector<Fragment> extract_fragments(const ProcessModel& m) {
  auto violations = validate_model(m);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  std::vector<Fragment> out;
  int index = 1;
  for (const auto& t : m.transitions) {
    for (const auto& [src, dst] : transition_pairs(m, t)) {
      Fragment f;
      f.id = "PF" + std::to_string(index++);
      f.source = src->normalized();
      f.target = dst->normalized();
      f.source_raw = src->label;
      f.target_raw = dst->label;
      f.strategy = t.strategy;
      out.push_back(std::move(f));
    }
  }
  return out;
}

RefinementTree refine(const ProcessModel& m, const std::string& parent_fragment,
                      const std::vector<Strategy>& children) {
  if (children.empty()) throw Error("refine: no child strategies given");

  auto fragments = extract_fragments(m);
  const Fragment* parent = nullptr;
  for (const auto& f : fragments)
    if (f.id == parent_fragment) parent = &f;
  if (!parent)
    throw Error("refine: unknown fragment '" + parent_fragment + "' in model '" + m.id + "'");

  std::set<std::string> seen;
  for (const auto& s : children)
    if (!seen.insert(s.canonical_label()).second)
      throw Error("refine: duplicate child strategy '" + s.canonical_label() + "'");

  RefinementTree tree;
  tree.parent = parent_fragment;
  int k = 1;
  for (const auto& s : children) {
    Fragment child = *parent;
    child.id = parent_fragment + "." + std::to_string(k++);
    child.strategy = s;
    tree.children.push_back(std::move(child));
  }
  return tree;
}

ProcessModel flatten(const ProcessModel& m, const RefinementTree& tree) {
  auto fragments = extract_fragments(m);
  const Fragment* parent = nullptr;
  for (const auto& f : fragments)
    if (f.id == tree.parent) parent = &f;
  if (!parent)
    throw Error("flatten: refinement parent '" + tree.parent + "' does not exist in model '" +
                m.id + "'");
  for (const auto& child : tree.children)
    if (child.source != parent->source || child.target != parent->target)
      throw Error("flatten: child '" + child.id + "' does not share the parent's endpoints");

  // Locate the owning transition and the refined (input, output) pair.
  const Transition* owner = nullptr;
  std::size_t pair_index = 0;
  int index = 1;
  for (const auto& t : m.transitions) {
    auto pairs = transition_pairs(m, t);
    for (std::size_t i = 0; i < pairs.size(); ++i, ++index) {
      if ("PF" + std::to_string(index) == tree.parent) {
        owner = &t;
        pair_index = i;
      }
    }
  }
  if (!owner) throw Error("flatten: refinement parent '" + tree.parent + "' not found");

  ProcessModel result;
  result.id = m.id;
  result.level = m.level;
  result.places = m.places;
  for (const auto& t : m.transitions) {
    if (&t != owner) {
      result.transitions.push_back(t);
      continue;
    }
    auto pairs = transition_pairs(m, t);
    int k = 1;
    for (const auto& child : tree.children) {
      Transition alt;
      alt.id = t.id + "." + std::to_string(k++);
      alt.strategy = child.strategy;
      alt.inputs = {pairs[pair_index].first->id};
      alt.outputs = {pairs[pair_index].second->id};
      result.transitions.push_back(std::move(alt));
    }
    // Pairs that were not refined keep the original strategy.
    int r = 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i == pair_index) continue;
      Transition rest;
      rest.id = t.id + ".r" + std::to_string(r++);
      rest.strategy = t.strategy;
      rest.inputs = {pairs[i].first->id};
      rest.outputs = {pairs[i].second->id};
      result.transitions.push_back(std::move(rest));
    }
  }
  return result;
}

}  // namespace roc
