#pragma once

#include <string>
#include <vector>

#include "roc/strategy.hpp"
#include "roc/violation.hpp"

namespace roc {

enum class PlaceKind { Start, Intermediate, Exit };
enum class Level { Intentional, Strategy, Operational };

const char* to_string(PlaceKind k);
const char* to_string(Level l);

struct Place {
  std::string id;
  std::string label;  // as written in the source
  PlaceKind kind = PlaceKind::Intermediate;

  std::string normalized() const { return normalize_state_label(label); }
};

struct Transition {
  std::string id;
  Strategy strategy;
  std::vector<std::string> inputs;   // place ids
  std::vector<std::string> outputs;  // place ids
};

/// The unit of alignment: <source state, target state, strategy>.
/// Source and target hold normalized state labels; the *_raw fields keep the
/// original casing for display.
struct Fragment {
  std::string id;  // "PF" + index, dotted for refinement children
  std::string source;
  std::string target;
  std::string source_raw;
  std::string target_raw;
  Strategy strategy;

  bool same_triplet(const Fragment& other) const {
    return source == other.source && target == other.target && strategy == other.strategy;
  }
};

struct RefinementTree {
  std::string parent;  // fragment id
  std::vector<Fragment> children;
};

/// A strategy-labeled Petri net. Transition order is significant: fragment
/// ids PF1..PFn follow it, so two loads of the same source agree.
struct ProcessModel {
  std::string id;
  Level level = Level::Strategy;
  std::vector<Place> places;
  std::vector<Transition> transitions;

  const Place* find_place(const std::string& place_id) const;
  const Place* find_place_by_label(const std::string& normalized_label) const;
  const Transition* find_transition(const std::string& transition_id) const;
  const Place* start_place() const;
  const Place* exit_place() const;
};

/// Structural validation. Empty result iff all invariants hold: unique ids,
/// exactly one start and one exit place, unique normalized labels, transitions
/// with nonempty endpoints over known places, unique fragment triplets, and
/// every place on some start-to-exit path. The model with no places and no
/// transitions is valid. Pure and deterministic.
std::vector<Violation> validate_model(const ProcessModel& m);

/// One fragment per (input, output) pair of each transition, in transition
/// order; pairs of one transition are ordered by (source label, target label).
/// Throws ValidationError when validate_model(m) is nonempty.
std::vector<Fragment> extract_fragments(const ProcessModel& m);

/// Decomposes a fragment into children with the same endpoints and ids
/// parent + "." + k. Throws on an unknown parent id, empty child list, or
/// duplicate child strategies.
RefinementTree refine(const ProcessModel& m, const std::string& parent_fragment,
                      const std::vector<Strategy>& children);

/// Returns a new model where the refined fragment's transition is replaced by
/// one alternative transition per child. When the parent transition carries
/// several (input, output) pairs, the pairs that were not refined are kept as
/// single-pair transitions with the original strategy. The original model is
/// untouched. Throws on a dangling tree reference.
ProcessModel flatten(const ProcessModel& m, const RefinementTree& tree);

}  // namespace roc
