#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "roc/process_model.hpp"

namespace roc::net {

/// 1-safe marking: the set of place ids holding exactly one token each.
using Marking = std::set<std::string>;

enum class FireFailure { NotEnabled, SafetyViolation };

class FireError : public Error {
 public:
  FireError(FireFailure reason, const std::string& message) : Error(message), reason_(reason) {}
  FireFailure reason() const { return reason_; }

 private:
  FireFailure reason_;
};

inline constexpr std::size_t kDefaultBound = std::size_t{1} << 16;

/// Transitions whose every input place holds a token.
std::set<std::string> enabled(const ProcessModel& m, const Marking& marking);

/// Removes the tokens from the transition's inputs and adds tokens to its
/// outputs. Throws FireError when the transition is not enabled or when
/// firing would put a second token on a place (1-safety).
Marking fire(const ProcessModel& m, const Marking& marking, const std::string& transition_id);

enum class ReachStatus { Reachable, Unreachable, Truncated };

const char* to_string(ReachStatus s);

struct ReachResult {
  ReachStatus status = ReachStatus::Unreachable;
  std::vector<std::string> witness;  // transition ids; empty unless Reachable
  std::size_t explored = 0;          // distinct markings discovered
};

/// Breadth-first search of the marking graph, capped at `bound` distinct
/// markings. The witness is a minimal-length firing sequence; among those,
/// the least by transition id order. Hitting the cap without finding the
/// target yields Truncated, never a verdict. Throws on an invalid model,
/// a marking naming unknown places, or bound = 0.
ReachResult reachable(const ProcessModel& m, const Marking& from, const Marking& to,
                      std::size_t bound = kDefaultBound);

struct SoundnessReport {
  bool exit_reachable = false;
  std::set<std::string> dead_transitions;  // never enabled in the explored graph
  std::size_t explored_markings = 0;
  bool truncated = false;  // implies explored_markings = bound
};

/// Explores the marking graph from {start} and reports whether {exit} is
/// reachable and which transitions were never enabled. Throws on an invalid
/// model or bound = 0.
SoundnessReport soundness_lite(const ProcessModel& m, std::size_t bound = kDefaultBound);

}  // namespace roc::net
