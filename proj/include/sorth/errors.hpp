#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sorth {

/// Base class for all library errors. `kind()` is a stable machine-readable
/// tag; `what()` is "<kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string detail)
      : std::runtime_error(kind + ": " + detail),
        kind_(std::move(kind)),
        detail_(std::move(detail)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string kind_;
  std::string detail_;
};

#define SORTH_DEFINE_ERROR(Name)                                        \
  struct Name : Error {                                                 \
    explicit Name(const std::string& detail) : Error(#Name, detail) {} \
  }

SORTH_DEFINE_ERROR(MalformedMatrix);
SORTH_DEFINE_ERROR(NonUnitParameters);
SORTH_DEFINE_ERROR(InvalidDivision);
SORTH_DEFINE_ERROR(DimensionMismatch);
SORTH_DEFINE_ERROR(NotScattered);
SORTH_DEFINE_ERROR(MalformedSystem);
SORTH_DEFINE_ERROR(NotSemiOrthogonal);
SORTH_DEFINE_ERROR(BrokenPath);
SORTH_DEFINE_ERROR(SolutionMismatch);
SORTH_DEFINE_ERROR(TooLarge);
SORTH_DEFINE_ERROR(NotCooperative);
SORTH_DEFINE_ERROR(NotGeneratorSet);
SORTH_DEFINE_ERROR(InvalidMatrix);

#undef SORTH_DEFINE_ERROR

}  // namespace sorth
