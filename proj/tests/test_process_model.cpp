#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "roc/process_model.hpp"
#include "support/builders.hpp"

using namespace roc;
using namespace test_support;

namespace {

bool has_code(const std::vector<Violation>& vs, ViolationCode code) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.code == code; });
}

using Triplet = std::tuple<std::string, std::string, std::string>;

Triplet triplet(const Fragment& f) {
  return {f.source, f.target, f.strategy.canonical_label()};
}

std::multiset<Triplet> triplets(const std::vector<Fragment>& fs) {
  std::multiset<Triplet> out;
  for (const auto& f : fs) out.insert(triplet(f));
  return out;
}

}  // namespace

TEST_SUITE("process-model") {

TEST_CASE("electro tech as-is fragments match the published triplets") {
  auto fragments = extract_fragments(electro_asis());
  REQUIRE(fragments.size() == 4);
  CHECK(triplet(fragments[0]) == Triplet{"start", "support material", "manual strategy"});
  CHECK(triplet(fragments[1]) ==
        Triplet{"support material", "work with material", "not demand management strategy"});
  CHECK(triplet(fragments[2]) ==
        Triplet{"work with material", "stock", "not real time production planning strategy"});
  CHECK(triplet(fragments[3]) == Triplet{"stock", "exit", "manual order processing strategy"});
  CHECK(fragments[0].id == "PF1");
  CHECK(fragments[3].id == "PF4");
  CHECK(fragments[0].strategy.polarity == Polarity::Manual);
  CHECK(fragments[1].strategy.polarity == Polarity::Negated);
}

TEST_CASE("sap pp to-be fragments include both self-loops") {
  auto fragments = extract_fragments(electro_tobe());
  REQUIRE(fragments.size() == 8);
  CHECK(triplet(fragments[5]) == Triplet{"stock product", "stock product", "reservation strategy"});
  CHECK(triplet(fragments[6]) ==
        Triplet{"stock product", "stock product", "quality inspection strategy"});
  CHECK(fragments[5].id == "PF6");
  CHECK(fragments[1].source == "support material");
  CHECK(fragments[1].source_raw == "Support material");
}

TEST_CASE("the empty model is valid and has no fragments") {
  ProcessModel m;
  m.id = "empty";
  CHECK(validate_model(m).empty());
  CHECK(extract_fragments(m).empty());
}

TEST_CASE("validation flags duplicate start places") {
  auto m = electro_asis();
  m.places[1].kind = PlaceKind::Start;
  CHECK(has_code(validate_model(m), ViolationCode::DuplicateStart));
}

TEST_CASE("validation flags orphan places") {
  auto m = electro_asis();
  m.places.push_back(place("i9", "orphan"));
  auto vs = validate_model(m);
  CHECK(has_code(vs, ViolationCode::UnreachablePlace));
  CHECK_THROWS_AS(extract_fragments(m), ValidationError);
}

TEST_CASE("validation flags a place that cannot reach the exit") {
  auto m = electro_asis();
  m.transitions.push_back(trans("t_dead", "dead end strategy", {"i1"}, {"i9"}));
  m.places.push_back(place("i9", "siding"));
  auto vs = validate_model(m);
  CHECK(has_code(vs, ViolationCode::NoPathToExit));
}

TEST_CASE("validation flags undeclared places, empty endpoints, duplicates") {
  ProcessModel m;
  m.id = "broken";
  m.places = {place("a", "alpha", PlaceKind::Start), place("b", "beta", PlaceKind::Exit),
              place("b2", "Beta ")};
  m.transitions = {trans("t1", "x", {"a"}, {"zz"}), trans("t1", "y", {"a"}, {"b"})};
  m.transitions.push_back({"t2", normalize_strategy("z"), {}, {"b"}});
  auto vs = validate_model(m);
  CHECK(has_code(vs, ViolationCode::UnknownPlace));
  CHECK(has_code(vs, ViolationCode::DuplicateId));
  CHECK(has_code(vs, ViolationCode::DuplicateLabel));
  CHECK(has_code(vs, ViolationCode::EmptyInputs));
}

TEST_CASE("validation flags repeated fragment triplets") {
  auto m = electro_asis();
  m.transitions.push_back(trans("t_dup", "manual strategy", {"i0"}, {"i1"}));
  CHECK(has_code(validate_model(m), ViolationCode::DuplicateFragment));
}

TEST_CASE("validation is deterministic") {
  auto m = electro_asis();
  m.places[1].kind = PlaceKind::Start;
  m.places.push_back(place("i9", "orphan"));
  CHECK(validate_model(m) == validate_model(m));
}

TEST_CASE("multi-endpoint transitions yield one fragment per pair") {
  ProcessModel m;
  m.id = "multi";
  m.places = {place("a", "alpha", PlaceKind::Start), place("b", "beta"), place("c", "gamma"),
              place("d", "delta", PlaceKind::Exit)};
  m.transitions = {trans("t1", "split strategy", {"a"}, {"b", "c"}),
                   trans("t2", "join strategy", {"b", "c"}, {"d"})};
  auto fragments = extract_fragments(m);
  REQUIRE(fragments.size() == 4);
  // pairs ordered by place label within each transition
  CHECK(triplet(fragments[0]) == Triplet{"alpha", "beta", "split strategy"});
  CHECK(triplet(fragments[1]) == Triplet{"alpha", "gamma", "split strategy"});
  CHECK(triplet(fragments[2]) == Triplet{"beta", "delta", "join strategy"});
  CHECK(triplet(fragments[3]) == Triplet{"gamma", "delta", "join strategy"});
}

TEST_CASE("fragment count is the sum of input-output pair counts") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto m = random_net(rng);
    std::size_t expected = 0;
    for (const auto& t : m.transitions) {
      std::set<std::string> ins(t.inputs.begin(), t.inputs.end());
      std::set<std::string> outs(t.outputs.begin(), t.outputs.end());
      expected += ins.size() * outs.size();
    }
    CHECK(extract_fragments(m).size() == expected);
  }
}

TEST_CASE("refining sop reference pf1 yields the published children") {
  auto m = geneva_sop_tobe();
  auto tree = refine(m, "PF1",
                     {normalize_strategy("product planning"), normalize_strategy("sales planning"),
                      normalize_strategy("performance management")});
  REQUIRE(tree.children.size() == 3);
  CHECK(tree.children[0].id == "PF1.1");
  CHECK(tree.children[1].id == "PF1.2");
  CHECK(tree.children[2].id == "PF1.3");
  for (const auto& child : tree.children) {
    CHECK(child.source == "order entry");
    CHECK(child.target == "requirements");
  }
  CHECK(tree.children[0].strategy.normalized_label == "product planning");
}

TEST_CASE("refining geneva mrp splits into deterministic and consumption based") {
  auto m = geneva_om_tobe();
  auto tree = refine(m, "PF2",
                     {normalize_strategy("deterministic planning strategy"),
                      normalize_strategy("consumption based strategy")});
  REQUIRE(tree.children.size() == 2);
  for (const auto& child : tree.children) {
    CHECK(child.source == "order generation");
    CHECK(child.target == "goods issue");
  }
}

TEST_CASE("refine rejects unknown parents and duplicate children") {
  auto m = geneva_sop_tobe();
  CHECK_THROWS_AS(refine(m, "PF9", {normalize_strategy("x")}), Error);
  CHECK_THROWS_AS(refine(m, "PF1", {}), Error);
  CHECK_THROWS_AS(
      refine(m, "PF1", {normalize_strategy("same"), normalize_strategy("Same ")}), Error);
}

TEST_CASE("flatten replaces the parent by its children") {
  auto m = geneva_sop_tobe();
  auto tree = refine(m, "PF3", {normalize_strategy("consolidation strategy"),
                                normalize_strategy("feedback to demand and supply")});
  auto flat = flatten(m, tree);
  auto fragments = extract_fragments(flat);
  REQUIRE(fragments.size() == 5);

  auto expected = triplets(extract_fragments(m));
  expected.erase(expected.find(Triplet{"requirements plan", "proposed plan", "integration strategy"}));
  expected.insert(Triplet{"requirements plan", "proposed plan", "consolidation strategy"});
  expected.insert(Triplet{"requirements plan", "proposed plan", "feedback to demand and supply"});
  CHECK(triplets(fragments) == expected);

  // original untouched
  CHECK(extract_fragments(m).size() == 4);
}

TEST_CASE("identity refinement flattens to an equal fragment multiset") {
  auto m = electro_tobe();
  auto original = extract_fragments(m);
  auto tree = refine(m, "PF6", {original[5].strategy});
  auto flat = flatten(m, tree);
  CHECK(triplets(extract_fragments(flat)) == triplets(original));
}

TEST_CASE("flatten rejects dangling refinement trees") {
  auto m = geneva_sop_tobe();
  RefinementTree tree;
  tree.parent = "PF9";
  tree.children = {extract_fragments(m)[0]};
  CHECK_THROWS_AS(flatten(m, tree), Error);
}

TEST_CASE("flatten-then-extract equals parent replaced by children on random chains") {
  std::mt19937 rng(23);
  for (int round = 0; round < 300; ++round) {
    std::uniform_int_distribution<int> places_dist(2, 8);
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
    std::set<std::string> used_strats;
    for (int i = 0; i + 1 < n; ++i) {
      std::string s;
      do {
        s = random_strategy(rng);
      } while (!used_strats.insert(normalize_strategy(s).canonical_label()).second);
      strategies.push_back(s);
    }
    auto m = chain_model("rnd", strategies, labels);
    auto fragments = extract_fragments(m);
    if (fragments.empty()) continue;

    std::uniform_int_distribution<int> pick(0, static_cast<int>(fragments.size()) - 1);
    const Fragment& parent = fragments[pick(rng)];
    std::uniform_int_distribution<int> child_count(1, 4);
    int k = child_count(rng);
    std::vector<Strategy> children;
    std::set<std::string> child_keys;
    for (int i = 0; i < k; ++i) {
      std::string s;
      do {
        s = random_strategy(rng);
      } while (!child_keys.insert(normalize_strategy(s).canonical_label()).second);
      children.push_back(normalize_strategy(s));
    }

    auto tree = refine(m, parent.id, children);
    for (const auto& child : tree.children) {
      CHECK(child.source == parent.source);
      CHECK(child.target == parent.target);
    }

    auto expected = triplets(fragments);
    expected.erase(expected.find(triplet(parent)));
    for (const auto& child : tree.children) expected.insert(triplet(child));
    CHECK(triplets(extract_fragments(flatten(m, tree))) == expected);
  }
}

}  // TEST_SUITE
