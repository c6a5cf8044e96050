#include "roc/strategy.hpp"

#include <cctype>

#include "roc/violation.hpp"

namespace roc {

const char* to_string(Polarity p) {
  switch (p) {
    case Polarity::Positive: return "positive";
    case Polarity::Negated: return "negated";
    case Polarity::Manual: return "manual";
  }
  return "?";
}

std::string normalize_label(const std::string& raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (unsigned char c : raw) {
    if (std::isspace(c)) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

std::string normalize_state_label(const std::string& raw) {
  std::string t = normalize_label(raw);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
    t = normalize_label(t.substr(1, t.size() - 2));
  }
  return t;
}

namespace {

bool has_token(const std::string& label, const std::string& token) {
  std::size_t pos = 0;
  while (pos <= label.size()) {
    std::size_t end = label.find(' ', pos);
    if (end == std::string::npos) end = label.size();
    if (label.compare(pos, end - pos, token) == 0) return true;
    pos = end + 1;
  }
  return false;
}

}  // namespace

std::string Strategy::canonical_label() const {
  if (polarity == Polarity::Negated) return "not " + normalized_label;
  return normalized_label;
}

Strategy normalize_strategy(const std::string& raw) {
  std::string t = normalize_label(raw);
  if (t.empty()) throw Error("strategy label is empty");

  // Negation is a property of the raw label: "not" followed by whitespace.
  std::size_t start = 0;
  while (start < raw.size() && std::isspace(static_cast<unsigned char>(raw[start]))) ++start;
  std::string lowered;
  for (std::size_t i = start; i < raw.size(); ++i)
    lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(raw[i]))));
  bool negated = lowered.size() > 3 && lowered.compare(0, 3, "not") == 0 &&
                 std::isspace(static_cast<unsigned char>(lowered[3]));

  Strategy s;
  s.raw_label = raw;
  if (negated) {
    s.polarity = Polarity::Negated;
    s.normalized_label = normalize_label(lowered.substr(4));
    if (s.normalized_label.empty()) throw Error("strategy label is empty after 'not'");
  } else if (has_token(t, "manual")) {
    s.polarity = Polarity::Manual;
    s.normalized_label = t;
  } else {
    s.polarity = Polarity::Positive;
    s.normalized_label = t;
  }
  return s;
}

}  // namespace roc
