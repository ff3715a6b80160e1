#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace voxelforge {

// All failures carry a stable category string; the CLI reports them as a
// single "error: <category>: <message>" line.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& message)
      : std::runtime_error(message), category_(std::move(category)) {}

  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

#define VOXELFORGE_DEFINE_ERROR(Name, category_literal)            \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& message)                      \
        : Error(category_literal, message) {}                      \
  }

VOXELFORGE_DEFINE_ERROR(ContractViolation, "contract-violation");
VOXELFORGE_DEFINE_ERROR(InvalidGeometryError, "invalid-geometry");
VOXELFORGE_DEFINE_ERROR(UnsupportedGeometryError, "unsupported-geometry");
VOXELFORGE_DEFINE_ERROR(DegenerateStatisticsError, "degenerate-statistics");
VOXELFORGE_DEFINE_ERROR(FormatError, "format");
VOXELFORGE_DEFINE_ERROR(UnsupportedFormatError, "unsupported-format");
VOXELFORGE_DEFINE_ERROR(ValidationError, "validation");
VOXELFORGE_DEFINE_ERROR(RangeError, "range");
VOXELFORGE_DEFINE_ERROR(InvalidPatchError, "invalid-patch");
VOXELFORGE_DEFINE_ERROR(InvalidConfigError, "invalid-config");
VOXELFORGE_DEFINE_ERROR(VersionMismatchError, "version-mismatch");
VOXELFORGE_DEFINE_ERROR(IoError, "io");
VOXELFORGE_DEFINE_ERROR(TrainingError, "training");

#undef VOXELFORGE_DEFINE_ERROR

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ContractViolation(message);
}

}  // namespace voxelforge
