#pragma once

#include <string>

namespace roc {

enum class Polarity { Positive, Negated, Manual };

const char* to_string(Polarity p);

/// Lowercase, trim, and collapse internal whitespace.
std::string normalize_label(const std::string& raw);

/// State labels additionally shed one layer of surrounding parentheses,
/// so "(Stock)" and "stock" name the same state.
std::string normalize_state_label(const std::string& raw);

/// A transition strategy. The raw label is kept verbatim for display and
/// serialization; matching and set semantics go through the normalized form.
struct Strategy {
  std::string raw_label;
  std::string normalized_label;  // polarity prefix stripped
  Polarity polarity = Polarity::Positive;

  /// Polarity-preserving key: "not <label>" for negated strategies, the
  /// normalized label otherwise. Used for identity and set membership.
  std::string canonical_label() const;

  bool operator==(const Strategy& other) const {
    return normalized_label == other.normalized_label && polarity == other.polarity;
  }
  bool operator<(const Strategy& other) const {
    if (normalized_label != other.normalized_label) return normalized_label < other.normalized_label;
    return polarity < other.polarity;
  }
};

/// Builds a Strategy from a raw label.
///
/// Polarity: negated iff the label begins with "not " (case-insensitive),
/// manual iff the remaining label contains the token "manual", positive
/// otherwise. Throws Error on labels that are empty after trimming.
Strategy normalize_strategy(const std::string& raw);

}  // namespace roc
