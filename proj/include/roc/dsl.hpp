#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "roc/workspace.hpp"

namespace roc::dsl {

enum class Severity { Error, Warning };

const char* to_string(Severity s);

struct ParseDiagnostic {
  Severity severity = Severity::Error;
  int line = 0;  // 1-based
  int column = 0;
  std::string message;

  bool operator==(const ParseDiagnostic&) const = default;
};

/// "file:line:col: severity: message"; the file prefix is dropped when empty.
std::string format(const ParseDiagnostic& d, const std::string& file = "");

struct ParseResult {
  Workspace workspace;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const;
};

/// Parses a .roc source. On success the workspace passes all module
/// validators; otherwise at least one error diagnostic points into the text.
/// Deterministic and order-preserving.
ParseResult parse(std::string_view text);

/// Canonical form: categories in fixed order, entries sorted by id, 2-space
/// indentation, LF line endings. parse(print(w)) is structurally equal to w,
/// and printing is byte-stable.
std::string print(const Workspace& w);

/// Structural equality, defined as equality of canonical forms.
bool structurally_equal(const Workspace& a, const Workspace& b);

}  // namespace roc::dsl
