#include "roc/cbr.hpp"

#include <algorithm>

namespace roc::cbr {

namespace {

// Jaccard index with the empty-set convention that keeps identity = 1:
// empty vs empty is 1, empty vs nonempty is 0.
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& x : a)
    if (b.count(x)) ++common;
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

std::set<std::string> fragment_keys(const std::vector<Fragment>& fragments) {
  std::set<std::string> keys;
  for (const auto& f : fragments)
    keys.insert(f.source + "\x1f" + f.target + "\x1f" + f.strategy.canonical_label());
  return keys;
}

std::set<std::string> component_names(const Case& c) {
  std::set<std::string> names;
  for (const auto& [_, name] : c.component_map) names.insert(normalize_label(name));
  return names;
}

}  // namespace

SimilarityScore similarity(const Case& a, const Case& b, const SimilarityWeights& w) {
  SimilarityScore score;
  score.fragment_sim = jaccard(fragment_keys(a.asis_fragments), fragment_keys(b.asis_fragments));
  score.goal_sim = jaccard(a.goal_labels, b.goal_labels);
  score.component_sim = jaccard(component_names(a), component_names(b));
  score.total = w.fragment * score.fragment_sim + w.goal * score.goal_sim +
                w.component * score.component_sim;
  return score;
}

const Case* Repository::find(const std::string& case_id) const {
  for (const auto& c : cases)
    if (c.id == case_id) return &c;
  return nullptr;
}

std::vector<RetrievedCase> retrieve(const Repository& repo, const Case& query, std::size_t k) {
  if (k == 0) throw Error("retrieve: k must be at least 1");
  std::vector<RetrievedCase> ranked;
  ranked.reserve(repo.cases.size());
  const SimilarityWeights w = repo.weights();
  for (const auto& c : repo.cases) ranked.push_back({&c, similarity(query, c, w)});
  std::sort(ranked.begin(), ranked.end(), [](const RetrievedCase& a, const RetrievedCase& b) {
    if (a.score.total != b.score.total) return a.score.total > b.score.total;
    return a.retrieved->id < b.retrieved->id;
  });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

AdaptResult adapt(const Case& solved, const Case& query, const AliasMap& aliases) {
  if (!solved.solved())
    throw Error("adapt: case '" + solved.id + "' has no to-be fragments to reuse");

  std::set<std::pair<std::string, std::string>> query_endpoints;
  for (const auto& f : query.asis_fragments)
    query_endpoints.insert({aliases.resolve(f.source), aliases.resolve(f.target)});

  AdaptResult result;
  for (const auto& f : solved.tobe_fragments) {
    std::pair<std::string, std::string> key{aliases.resolve(f.source), aliases.resolve(f.target)};
    if (query_endpoints.count(key))
      result.proposed.push_back(f);
    else
      result.non_transferable.push_back(f);
  }
  return result;
}

AlignmentReport test_solution(const std::vector<Fragment>& proposal, const Case& query,
                              const ComponentCatalog& catalog, const AliasMap& aliases) {
  return align_with_catalog(query.asis_fragments, proposal, catalog, aliases);
}

}  // namespace roc::cbr
