#include "dyck/error.hpp"

namespace dyck {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::NotDyck: return "NotDyck";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NoPositivePrime: return "NoPositivePrime";
    case ErrorKind::NoNegativePrime: return "NoNegativePrime";
    case ErrorKind::NonPositiveSum: return "NonPositiveSum";
    case ErrorKind::NonUnitSum: return "NonUnitSum";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
  }
  return "Unknown";
}

}  // namespace dyck
