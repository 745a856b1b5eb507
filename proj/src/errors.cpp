#include "trichow/errors.hpp"

namespace trichow {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Structural: return "Structural";
    case ErrorKind::Domain: return "Domain";
    case ErrorKind::NonRadical: return "NonRadical";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::NotZeroDim: return "NotZeroDim";
    case ErrorKind::NotLazardShape: return "NotLazardShape";
    case ErrorKind::SingularGrid: return "SingularGrid";
    case ErrorKind::GridExhausted: return "GridExhausted";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::RangeTooNarrow: return "RangeTooNarrow";
    case ErrorKind::ContradictsTheorem: return "ContradictsTheorem";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::DenominatorVanishesModP: return "DenominatorVanishesModP";
  }
  return "Unknown";
}

}  // namespace trichow
