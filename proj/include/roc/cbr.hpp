#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "roc/alignment.hpp"
#include "roc/process_model.hpp"

namespace roc::cbr {

/// A stored implementation episode: the problem (goals, as-is fragments) and
/// its solution (to-be fragments, component mapping), plus project metadata.
/// A case without to-be fragments is a query — a problem awaiting a solution.
struct Case {
  std::string id;
  std::string enterprise_type;
  std::string targeted_process;
  std::string project_type;
  std::string notes;
  std::set<std::string> goal_labels;  // normalized
  std::vector<Fragment> asis_fragments;
  std::vector<Fragment> tobe_fragments;
  std::vector<std::pair<std::string, std::string>> component_map;  // to-be fragment id -> component

  bool solved() const { return !tobe_fragments.empty(); }
};

struct SimilarityWeights {
  double fragment = 0.5;
  double goal = 0.3;
  double component = 0.2;
};

struct SimilarityScore {
  double total = 0.0;
  double fragment_sim = 0.0;
  double goal_sim = 0.0;
  double component_sim = 0.0;
};

/// Weighted sum of three Jaccard indices: as-is fragment triplets, goal
/// labels, and component names. Empty vs empty counts as 1, empty vs
/// nonempty as 0, so similarity(c, c) is always 1. Symmetric.
SimilarityScore similarity(const Case& a, const Case& b, const SimilarityWeights& w = {});

struct Repository {
  std::vector<Case> cases;  // sorted by id
  std::optional<SimilarityWeights> configured_weights;  // from the repository file

  SimilarityWeights weights() const { return configured_weights.value_or(SimilarityWeights{}); }
  const Case* find(const std::string& case_id) const;
};

struct RetrievedCase {
  const Case* retrieved = nullptr;
  SimilarityScore score;
};

/// Top-k cases by total similarity, descending; ties broken by case id
/// ascending. k = 0 is an error; an empty repository yields an empty list.
std::vector<RetrievedCase> retrieve(const Repository& repo, const Case& query, std::size_t k);

struct AdaptResult {
  std::vector<Fragment> proposed;          // verbatim copies from the solved case
  std::vector<Fragment> non_transferable;  // solved to-be fragments with no matching query endpoints
};

/// Transfers every solved to-be fragment whose endpoints (after aliases)
/// appear among the query's as-is endpoints. Throws when the solved case has
/// no to-be fragments.
AdaptResult adapt(const Case& solved, const Case& query, const AliasMap& aliases = {});

/// Aligns the proposed to-be fragments against the query's as-is fragments
/// and maps them to catalog components; the caller inspects coverage.
AlignmentReport test_solution(const std::vector<Fragment>& proposal, const Case& query,
                              const ComponentCatalog& catalog, const AliasMap& aliases = {});

}  // namespace roc::cbr
