#include "roc/net_engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

namespace roc::net {

const char* to_string(ReachStatus s) {
  switch (s) {
    case ReachStatus::Reachable: return "reachable";
    case ReachStatus::Unreachable: return "unreachable";
    case ReachStatus::Truncated: return "truncated";
  }
  return "?";
}

namespace {

bool is_enabled(const Transition& t, const Marking& marking) {
  if (t.inputs.empty()) return false;
  return std::all_of(t.inputs.begin(), t.inputs.end(),
                     [&](const std::string& pid) { return marking.count(pid) > 0; });
}

// Fires without precondition checks; empty result when 1-safety would break.
std::optional<Marking> fire_safe(const Transition& t, const Marking& marking) {
  Marking next = marking;
  for (const auto& pid : t.inputs) next.erase(pid);
  for (const auto& pid : t.outputs) {
    if (!next.insert(pid).second) return std::nullopt;
  }
  return next;
}

void check_marking(const ProcessModel& m, const Marking& marking, const char* what) {
  for (const auto& pid : marking)
    if (!m.find_place(pid))
      throw Error(std::string(what) + " marking names unknown place '" + pid + "'");
}

void require_valid(const ProcessModel& m) {
  auto violations = validate_model(m);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

std::vector<const Transition*> sorted_transitions(const ProcessModel& m) {
  std::vector<const Transition*> ts;
  ts.reserve(m.transitions.size());
  for (const auto& t : m.transitions) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](const Transition* a, const Transition* b) { return a->id < b->id; });
  return ts;
}

struct Exploration {
  std::map<Marking, std::pair<Marking, std::string>> pred;  // discovered -> (previous, via)
  std::set<Marking> seen;
  std::set<std::string> live;  // transitions enabled somewhere
  bool capped = false;
  std::optional<Marking> target_hit;
};

// BFS over the marking graph. Transitions expand in id order from a FIFO
// frontier, so the first discovery of a marking carries the minimal-length,
// lexicographically-least firing sequence.
Exploration explore(const ProcessModel& m, const Marking& from,
                    const std::optional<Marking>& target, std::size_t bound) {
  Exploration ex;
  ex.seen.insert(from);
  if (target && from == *target) {
    ex.target_hit = from;
    return ex;
  }
  auto ts = sorted_transitions(m);
  std::deque<Marking> frontier{from};
  while (!frontier.empty()) {
    Marking cur = frontier.front();
    frontier.pop_front();
    for (const Transition* t : ts) {
      if (!is_enabled(*t, cur)) continue;
      ex.live.insert(t->id);
      auto next = fire_safe(*t, cur);
      if (!next) continue;  // would break 1-safety; treated as not firable
      if (ex.seen.count(*next)) continue;
      if (ex.seen.size() >= bound) {
        ex.capped = true;
        return ex;
      }
      ex.seen.insert(*next);
      ex.pred[*next] = {cur, t->id};
      if (target && *next == *target) {
        ex.target_hit = *next;
        return ex;
      }
      frontier.push_back(*next);
    }
  }
  return ex;
}

}  // namespace

std::set<std::string> enabled(const ProcessModel& m, const Marking& marking) {
  std::set<std::string> out;
  for (const auto& t : m.transitions)
    if (is_enabled(t, marking)) out.insert(t.id);
  return out;
}

Marking fire(const ProcessModel& m, const Marking& marking, const std::string& transition_id) {
  const Transition* t = m.find_transition(transition_id);
  if (!t) throw Error("fire: unknown transition '" + transition_id + "'");
  if (!is_enabled(*t, marking))
    throw FireError(FireFailure::NotEnabled, "transition '" + transition_id + "' is not enabled");
  auto next = fire_safe(*t, marking);
  if (!next)
    throw FireError(FireFailure::SafetyViolation,
                    "firing '" + transition_id + "' would put a second token on a place");
  return *next;
}

ReachResult reachable(const ProcessModel& m, const Marking& from, const Marking& to, std::size_t bound) {
  require_valid(m);
  check_marking(m, from, "source");
  check_marking(m, to, "target");
  if (bound == 0) throw Error("reachable: bound must be at least 1");

  auto ex = explore(m, from, to, bound);
  ReachResult result;
  result.explored = ex.seen.size();
  if (ex.target_hit) {
    result.status = ReachStatus::Reachable;
    Marking cur = *ex.target_hit;
    while (cur != from) {
      const auto& [prev, via] = ex.pred.at(cur);
      result.witness.push_back(via);
      cur = prev;
    }
    std::reverse(result.witness.begin(), result.witness.end());
  } else if (ex.capped) {
    result.status = ReachStatus::Truncated;
  } else {
    result.status = ReachStatus::Unreachable;
  }
  return result;
}

SoundnessReport soundness_lite(const ProcessModel& m, std::size_t bound) {
  require_valid(m);
  if (bound == 0) throw Error("soundness_lite: bound must be at least 1");

  SoundnessReport report;
  if (m.places.empty()) return report;

  // Full exploration, not target-directed: stopping at the exit marking
  // would under-report live transitions.
  Marking start{m.start_place()->id};
  Marking exit{m.exit_place()->id};
  auto ex = explore(m, start, std::nullopt, bound);
  report.exit_reachable = ex.seen.count(exit) > 0;
  report.explored_markings = ex.seen.size();
  report.truncated = ex.capped;
  for (const auto& t : m.transitions)
    if (!ex.live.count(t.id)) report.dead_transitions.insert(t.id);
  return report;
}

}  // namespace roc::net
