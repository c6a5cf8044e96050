#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace roc {

enum class ViolationCode {
  // process models
  MissingStart,
  DuplicateStart,
  MissingExit,
  DuplicateExit,
  DuplicateId,
  DuplicateLabel,
  EmptyLabel,
  UnknownPlace,
  EmptyInputs,
  EmptyOutputs,
  EmptyStrategy,
  DuplicateFragment,
  UnreachablePlace,
  NoPathToExit,
  // goal graphs
  CycleDetected,
  LayeringViolation,
  RequirementUnderived,
  InvalidDetermines,
  EdgeEndpointNotNode,
  UnknownNode,
  MissingHorizon,
  InvalidHorizon,
  MissingName,
  // catalogs
  DuplicateComponent,
  EmptyProvides,
  // workspaces
  DanglingReference,
};

const char* to_string(ViolationCode code);

/// A validation finding. Violations are data, not failures: validators return
/// them in a deterministic order and leave acting on them to the caller.
struct Violation {
  ViolationCode code;
  std::string element;  // id of the offending element
  std::string message;

  bool operator==(const Violation&) const = default;
};

std::string format(const Violation& v);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by operations whose precondition is a clean validation report.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace roc
