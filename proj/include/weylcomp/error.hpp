#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weylcomp {

enum class Errc {
  DimensionMismatch,
  SingularMatrix,
  CapExceeded,
  NotNormal,
  UnknownCatalogName,
  SearchBudgetExceeded,
  NotAHomomorphism,
  MalformedRealification,
  UnsupportedType,
  IncompatibleSpec,
  DegreeExtractionFailed,
  InternalInconsistency,
  NotAdmitted,
  NuNotTwoGroup,
  NotFound,
  Parse,
};

std::string_view errc_name(Errc code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status and a diagnostic.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace weylcomp
