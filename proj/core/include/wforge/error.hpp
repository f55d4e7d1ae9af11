#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wforge {

enum class ErrorKind {
  DegenerateInput,
  StructureViolation,
  DegenerateSurface,
  InvalidFamily,
  NotMinimal,
  InvalidTransform,
  NotRepresentable,
  SingularPoint,
  BranchPointProximity,
  CriticalPoint,
  EmptyMesh,
  Io,
  Domain,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace wforge
