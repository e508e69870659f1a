#include "weylcomp/error.hpp"

namespace weylcomp {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotNormal: return "NotNormal";
    case Errc::UnknownCatalogName: return "UnknownCatalogName";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::MalformedRealification: return "MalformedRealification";
    case Errc::UnsupportedType: return "UnsupportedType";
    case Errc::IncompatibleSpec: return "IncompatibleSpec";
    case Errc::DegreeExtractionFailed: return "DegreeExtractionFailed";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::NotAdmitted: return "NotAdmitted";
    case Errc::NuNotTwoGroup: return "NuNotTwoGroup";
    case Errc::NotFound: return "NotFound";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace weylcomp
