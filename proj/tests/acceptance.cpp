// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Fixture regressions come straight from the bundled models; the
// property criteria use seeded random generators and independent oracles.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "roc/dsl.hpp"
#include "roc/net_engine.hpp"
#include "roc/repository.hpp"
#include "support/builders.hpp"
#include "support/helpers.hpp"

using namespace roc;
using namespace test_support;

namespace {

struct Failure {
  std::string detail;
};

void expect(bool condition, const std::string& detail) {
  if (!condition) throw Failure{detail};
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}

// Paper notation for a fragment row: exit is written bare, states in parens.
std::string triplet_text(const std::string& source, const std::string& target,
                         const std::string& strategy) {
  std::string tgt = lower(target) == "exit" ? "exit" : "(" + target + ")";
  return "<(" + source + "), " + tgt + ", *" + strategy + "*>";
}

std::vector<std::string> fragment_triplets_via_cli(const std::string& model) {
  auto result = run_cli({"fragments", fixture_path("electro_tech.roc"), "--model", model,
                         "--format", "tsv"});
  expect(result.exit_code == 0, "fragments exited with " + std::to_string(result.exit_code));
  std::vector<std::string> triplets;
  auto lines = lines_of(result.output);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_tabs(lines[i]);
    expect(cells.size() == 5, "unexpected fragments row: " + lines[i]);
    triplets.push_back(lower(triplet_text(cells[1], cells[2], cells[3])));
  }
  return triplets;
}

// ---------------------------------------------------------------------------

void criterion_1_electro_tech_fragments() {
  auto start = std::chrono::steady_clock::now();

  auto asis = fragment_triplets_via_cli("et_asis");
  std::vector<std::string> expected_asis = {
      "<(start), (support material), *manual strategy*>",
      "<(support material), (work with material), *not demand management strategy*>",
      "<(work with material), (stock), *not real time production planning strategy*>",
      "<(stock), exit, *manual order processing strategy*>",
  };
  expect(asis == expected_asis, "as-is triplets do not match the published list");

  auto tobe = fragment_triplets_via_cli("et_tobe");
  std::vector<std::string> expected_tobe = {
      "<(start), (support material), *planning strategy*>",
      "<(support material), (work with material), *backward strategy*>",
      "<(support material), (work with material), *forward strategy*>",
      "<(work with material), (stock product), *lifo*>",
      "<(work with material), (stock product), *fifo*>",
      "<(stock product), (stock product), *reservation strategy*>",
      "<(stock product), (stock product), *quality inspection strategy*>",
      "<(stock product), exit, *financial control strategy*>",
  };
  expect(tobe == expected_tobe, "to-be triplets do not match the published list");

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  expect(elapsed < 1000, "runtime " + std::to_string(elapsed) + "ms exceeds 1s");
}

void check_alignment_table(const std::string& fixture, const std::string& asis,
                           const std::string& tobe, const std::string& catalog,
                           const std::vector<std::string>& expected_components,
                           const std::set<std::string>& allowed_gaps,
                           const std::string& required_pf3_gap) {
  auto tsv = run_cli({"align", fixture_path(fixture), "--asis", asis, "--reference", tobe,
                      "--catalog", catalog, "--format", "tsv"});
  expect(tsv.exit_code == 0 || tsv.exit_code == 1,
         "align exited with " + std::to_string(tsv.exit_code));
  auto lines = lines_of(tsv.output);
  expect(lines.size() == 5, "expected 4 pairs, got " + std::to_string(lines.size() - 1));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_tabs(lines[i]);
    expect(cells.size() >= 7, "short row: " + lines[i]);
    expect(cells[0] == "PF" + std::to_string(i), "unexpected fragment order: " + lines[i]);
    expect(cells[6] == expected_components[i - 1],
           cells[0] + " maps to '" + cells[6] + "', expected '" + expected_components[i - 1] + "'");
    expect(allowed_gaps.count(cells[5]) == 1, cells[0] + " has gap " + cells[5]);
    if (!required_pf3_gap.empty() && cells[0] == "PF3")
      expect(cells[5] == required_pf3_gap, "PF3 gap is " + cells[5]);
  }

  auto text = run_cli({"align", fixture_path(fixture), "--asis", asis, "--reference", tobe,
                       "--catalog", catalog});
  expect(text.output.find("coverage: 1.00") != std::string::npos, "coverage is not 1.0");
}

void criterion_2_geneva_order_management() {
  check_alignment_table("geneva_order_management.roc", "geneva_om_asis", "geneva_om_tobe",
                        "geneva_catalog",
                        {"Demand management",
                         "Master Production Scheduling Material Requirements Planning",
                         "Inventory Management", "Finance and Control"},
                        {"NegatedCapability", "StrategyMismatch", "ManualToAutomated"}, "");
}

void criterion_3_geneva_sop() {
  check_alignment_table("geneva_sop.roc", "geneva_sop_asis", "geneva_sop_tobe", "apo_catalog",
                        {"Forecasting (APO)", "Supply chain cockpit (APO)",
                         "Advance planning and scheduling (APO)", "SOP & ATP"},
                        {"NegatedCapability", "StrategyMismatch", "ManualToAutomated", "NoGap"},
                        "NegatedCapability");
}

using Triplet = std::tuple<std::string, std::string, std::string>;

Triplet triplet_of(const Fragment& f) { return {f.source, f.target, f.strategy.canonical_label()}; }

std::multiset<Triplet> triplets_of(const std::vector<Fragment>& fs) {
  std::multiset<Triplet> out;
  for (const auto& f : fs) out.insert(triplet_of(f));
  return out;
}

void check_refinement(const ProcessModel& m, const std::string& parent,
                      const std::vector<std::string>& child_strategies) {
  std::vector<Strategy> children;
  for (const auto& s : child_strategies) children.push_back(normalize_strategy(s));
  auto tree = refine(m, parent, children);

  auto fragments = extract_fragments(m);
  const Fragment* parent_fragment = nullptr;
  for (const auto& f : fragments)
    if (f.id == parent) parent_fragment = &f;
  expect(parent_fragment != nullptr, "missing parent " + parent);

  std::set<std::string> got, want;
  for (const auto& c : tree.children) {
    expect(c.source == parent_fragment->source && c.target == parent_fragment->target,
           "child endpoints drifted for " + c.id);
    got.insert(c.strategy.normalized_label);
  }
  for (const auto& s : child_strategies) want.insert(normalize_strategy(s).normalized_label);
  expect(got == want, "child strategy set mismatch for " + parent);

  auto expected = triplets_of(fragments);
  expected.erase(expected.find(triplet_of(*parent_fragment)));
  for (const auto& c : tree.children) expected.insert(triplet_of(c));
  expect(triplets_of(extract_fragments(flatten(m, tree))) == expected,
         "flatten-then-extract multiset mismatch for " + parent);
}

void criterion_4_refinement() {
  auto sop = geneva_sop_tobe();
  check_refinement(sop, "PF1", {"product planning", "sales planning", "performance management"});
  check_refinement(sop, "PF2", {"master production scheduling", "capacity planning strategy",
                                "material requirements planning"});
  check_refinement(sop, "PF3", {"consolidation strategy", "feedback to demand and supply"});
  check_refinement(sop, "PF4", {"performance review", "financial review", "approval/action items"});

  // 1000 random refinements of random chains with at most 8 places
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> places_dist(2, 8);
  for (int round = 0; round < 1000; ++round) {
    int n = places_dist(rng);
    std::vector<std::string> labels, strategies;
    std::set<std::string> used;
    for (int i = 0; i < n; ++i) {
      std::string w;
      do {
        w = random_word(rng);
      } while (!used.insert(w).second);
      labels.push_back(w);
    }
    std::set<std::string> used_strategies;
    for (int i = 0; i + 1 < n; ++i) {
      std::string s;
      do {
        s = random_strategy(rng);
      } while (!used_strategies.insert(normalize_strategy(s).canonical_label()).second);
      strategies.push_back(s);
    }
    auto m = chain_model("rnd", strategies, labels);
    auto fragments = extract_fragments(m);
    if (fragments.empty()) continue;

    std::uniform_int_distribution<int> pick(0, static_cast<int>(fragments.size()) - 1);
    std::uniform_int_distribution<int> child_count(1, 4);
    std::vector<std::string> child_strategies;
    std::set<std::string> child_keys;
    int k = child_count(rng);
    for (int i = 0; i < k; ++i) {
      std::string s;
      do {
        s = random_strategy(rng);
      } while (!child_keys.insert(normalize_strategy(s).canonical_label()).second);
      child_strategies.push_back(s);
    }
    check_refinement(m, fragments[pick(rng)].id, child_strategies);
  }
}

void criterion_5_net_engine_oracle() {
  std::mt19937 rng(777);
  int reachable_hits = 0;
  for (int round = 0; round < 500; ++round) {
    auto m = random_net(rng, 10, 4);
    net::Marking from{m.start_place()->id};
    net::Marking to;
    std::uniform_int_distribution<int> target_kind(0, 1);
    if (target_kind(rng) == 0) {
      to = {m.exit_place()->id};
    } else {
      std::uniform_int_distribution<int> pick(0, static_cast<int>(m.places.size()) - 1);
      to = {m.places[pick(rng)].id};
      if (target_kind(rng) == 0) to.insert(m.places[pick(rng)].id);
    }

    auto result = net::reachable(m, from, to);
    expect(result.status != net::ReachStatus::Truncated, "unexpected truncation");
    auto closure = marking_closure(m, from);
    bool oracle = closure.count(to) > 0;
    expect((result.status == net::ReachStatus::Reachable) == oracle,
           "verdict disagrees with the enumeration oracle");

    if (result.status == net::ReachStatus::Reachable) {
      ++reachable_hits;
      net::Marking cur = from;
      for (const auto& tid : result.witness) cur = net::fire(m, cur, tid);
      expect(cur == to, "witness replay missed the target");
    }
  }
  expect(reachable_hits >= 100, "generator produced too few reachable instances: " +
                                    std::to_string(reachable_hits));
}

void criterion_6_dsl_round_trip() {
  std::mt19937 rng(20240815);
  for (int round = 0; round < 1000; ++round) {
    auto ws = random_workspace(rng);
    std::string printed = dsl::print(ws);
    expect(printed == dsl::print(ws), "printing twice is not byte-identical");
    auto reparsed = dsl::parse(printed);
    if (!reparsed.ok()) {
      std::string detail = "reparse failed:";
      for (const auto& d : reparsed.diagnostics) detail += " " + dsl::format(d);
      expect(false, detail);
    }
    expect(dsl::structurally_equal(reparsed.workspace, ws),
           "parse(print(w)) is not structurally equal to w");
    expect(dsl::print(reparsed.workspace) == printed, "canonical form is not a fixpoint");
  }
}

void criterion_7_cbr_cycle() {
  auto repo = cbr::load_repository(fixture_path("cases.roc"));
  expect(repo.cases.size() == 3, "fixture repository should hold 3 cases");
  for (const auto& c : repo.cases) {
    auto score = cbr::similarity(c, c);
    expect(score.total == 1.0, "similarity(" + c.id + ", " + c.id + ") != 1.0");
  }

  auto query_result = dsl::parse(read_file(test_fixture_path("query_om_full.roc")));
  expect(query_result.ok(), "query fixture must parse");
  const cbr::Case* query = query_result.workspace.find_case("query_om");
  expect(query != nullptr, "query case missing");

  auto first = cbr::retrieve(repo, *query, 3);
  for (int i = 0; i < 10; ++i) {
    auto again = cbr::retrieve(repo, *query, 3);
    expect(again.size() == first.size(), "retrieve size changed between runs");
    for (std::size_t k = 0; k < first.size(); ++k)
      expect(again[k].retrieved->id == first[k].retrieved->id &&
                 again[k].score.total == first[k].score.total,
             "retrieve ordering changed between runs");
  }
  expect(first[0].retrieved->id == "geneva_om", "geneva_om should rank first");

  // retain/reload round-trip
  TempDir tmp;
  std::string path = tmp.file("repo.roc");
  cbr::Repository fresh;
  for (const auto& c : repo.cases) cbr::retain(fresh, c, path);
  auto reloaded = cbr::load_repository(path);
  Workspace a, b;
  a.cases = fresh.cases;
  b.cases = reloaded.cases;
  expect(dsl::structurally_equal(a, b), "retain/reload changed the repository");

  // adapt + test: reuse the solved geneva case against the fresh query
  auto adapted = cbr::adapt(*repo.find("geneva_om"), *query);
  expect(adapted.non_transferable.empty(), "geneva adapt should transfer everything");
  auto geneva = parse_fixture({"geneva_order_management.roc"});
  auto report = cbr::test_solution(adapted.proposed, *query, *geneva.find_catalog("geneva_catalog"));
  expect(report.coverage == 1.0, "adapt+test coverage is not 1.0");
}

void criterion_8_goal_layering() {
  auto ws = parse_fixture({"electro_tech.roc"});
  const GoalGraph* g = ws.find_goals("et_goals");
  expect(g != nullptr, "et_goals missing");
  expect(validate_goals(*g).empty(), "electro tech goal fixture must validate cleanly");

  const GoalNode* payroll = g->find_node_by_label("automate payroll");
  const GoalNode* need = g->find_node_by_label("need for information");
  expect(payroll && need, "quoted nodes missing from fixture");
  auto paths = trace(*g, payroll->id);
  bool found = false;
  for (const auto& path : paths)
    if (path.size() == 2 && path.front() == need->id && path.back() == payroll->id) found = true;
  expect(found, "trace(automate payroll) lacks the path from the need");

  GoalGraph upward = *g;
  upward.edges.push_back({payroll->id, EdgeKind::Derives, need->id});
  bool rejected = false;
  for (const auto& v : validate_goals(upward))
    if (v.code == ViolationCode::LayeringViolation) rejected = true;
  expect(rejected, "upward derives edge was not rejected");
}

struct Criterion {
  int number;
  const char* description;
  std::function<void()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "Electro Tech fragment tables reproduce the published triplets", criterion_1_electro_tech_fragments},
      {2, "Geneva order management alignment reproduces Table 1", criterion_2_geneva_order_management},
      {3, "Geneva SOP alignment reproduces Table 2", criterion_3_geneva_sop},
      {4, "SOP refinements match the published children; flatten law holds", criterion_4_refinement},
      {5, "reachable agrees with the enumeration oracle; witnesses replay", criterion_5_net_engine_oracle},
      {6, "parse/print round-trip on 1000 random workspaces", criterion_6_dsl_round_trip},
      {7, "CBR identity, stable retrieval, retain round-trip, adapt+test", criterion_7_cbr_cycle},
      {8, "goal layering validates the fixture and rejects upward edges", criterion_8_goal_layering},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    try {
      c.run();
      std::printf("PASS  criterion %d: %s\n", c.number, c.description);
    } catch (const Failure& f) {
      ++failed;
      std::printf("FAIL  criterion %d: %s — %s\n", c.number, c.description, f.detail.c_str());
    } catch (const std::exception& e) {
      ++failed;
      std::printf("FAIL  criterion %d: %s — unexpected error: %s\n", c.number, c.description,
                  e.what());
    }
  }
  if (failed) {
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
