#include <doctest.h>

#include <random>

#include "roc/strategy.hpp"
#include "roc/violation.hpp"
#include "support/builders.hpp"

using roc::Polarity;
using roc::Strategy;
using roc::normalize_strategy;

TEST_SUITE("strategy") {

TEST_CASE("negated label") {
  Strategy s = normalize_strategy("Not demand management strategy");
  CHECK(s.normalized_label == "demand management strategy");
  CHECK(s.polarity == Polarity::Negated);
  CHECK(s.canonical_label() == "not demand management strategy");
}

TEST_CASE("manual label") {
  Strategy s = normalize_strategy("manual strategy");
  CHECK(s.normalized_label == "manual strategy");
  CHECK(s.polarity == Polarity::Manual);
}

TEST_CASE("plain label lowercases") {
  Strategy s = normalize_strategy("FIFO");
  CHECK(s.normalized_label == "fifo");
  CHECK(s.polarity == Polarity::Positive);
}

TEST_CASE("manual token must stand alone") {
  CHECK(normalize_strategy("semi-manual strategy").polarity == Polarity::Positive);
  CHECK(normalize_strategy("manual order processing strategy").polarity == Polarity::Manual);
}

TEST_CASE("negation wins over manual") {
  Strategy s = normalize_strategy("not manual strategy");
  CHECK(s.polarity == Polarity::Negated);
  CHECK(s.normalized_label == "manual strategy");
}

TEST_CASE("whitespace collapses") {
  Strategy s = normalize_strategy("  Not   Real  Time strategy ");
  CHECK(s.polarity == Polarity::Negated);
  CHECK(s.normalized_label == "real time strategy");
}

TEST_CASE("a bare 'not' is just a label") {
  CHECK(normalize_strategy("not").polarity == Polarity::Positive);
  CHECK_THROWS_AS(normalize_strategy("not   "), roc::Error);
}

TEST_CASE("empty labels are rejected") {
  CHECK_THROWS_AS(normalize_strategy(""), roc::Error);
  CHECK_THROWS_AS(normalize_strategy("   "), roc::Error);
}

TEST_CASE("normalization is a fixpoint on canonical labels") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    Strategy s = normalize_strategy(test_support::random_strategy(rng));
    Strategy again = normalize_strategy(s.canonical_label());
    CHECK(again.normalized_label == s.normalized_label);
    CHECK(again.polarity == s.polarity);
  }
}

}  // TEST_SUITE
