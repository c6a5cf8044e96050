#include "roc/violation.hpp"

namespace roc {

const char* to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::MissingStart: return "MissingStart";
    case ViolationCode::DuplicateStart: return "DuplicateStart";
    case ViolationCode::MissingExit: return "MissingExit";
    case ViolationCode::DuplicateExit: return "DuplicateExit";
    case ViolationCode::DuplicateId: return "DuplicateId";
    case ViolationCode::DuplicateLabel: return "DuplicateLabel";
    case ViolationCode::EmptyLabel: return "EmptyLabel";
    case ViolationCode::UnknownPlace: return "UnknownPlace";
    case ViolationCode::EmptyInputs: return "EmptyInputs";
    case ViolationCode::EmptyOutputs: return "EmptyOutputs";
    case ViolationCode::EmptyStrategy: return "EmptyStrategy";
    case ViolationCode::DuplicateFragment: return "DuplicateFragment";
    case ViolationCode::UnreachablePlace: return "UnreachablePlace";
    case ViolationCode::NoPathToExit: return "NoPathToExit";
    case ViolationCode::CycleDetected: return "CycleDetected";
    case ViolationCode::LayeringViolation: return "LayeringViolation";
    case ViolationCode::RequirementUnderived: return "RequirementUnderived";
    case ViolationCode::InvalidDetermines: return "InvalidDetermines";
    case ViolationCode::EdgeEndpointNotNode: return "EdgeEndpointNotNode";
    case ViolationCode::UnknownNode: return "UnknownNode";
    case ViolationCode::MissingHorizon: return "MissingHorizon";
    case ViolationCode::InvalidHorizon: return "InvalidHorizon";
    case ViolationCode::MissingName: return "MissingName";
    case ViolationCode::DuplicateComponent: return "DuplicateComponent";
    case ViolationCode::EmptyProvides: return "EmptyProvides";
    case ViolationCode::DanglingReference: return "DanglingReference";
  }
  return "?";
}

std::string format(const Violation& v) {
  std::string out = to_string(v.code);
  out += "(";
  out += v.element;
  out += "): ";
  out += v.message;
  return out;
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string msg = "validation failed";
  for (const auto& v : violations) {
    msg += "\n  ";
    msg += format(v);
  }
  return msg;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(summarize(violations)), violations_(std::move(violations)) {}

}  // namespace roc
