#ifndef DYCK_ERROR_HPP
#define DYCK_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dyck {

enum class ErrorKind {
  InvalidCharacter,
  NotBalanced,
  NotDyck,
  BoundExceeded,
  IndexOutOfRange,
  NoPositivePrime,
  NoNegativePrime,
  NonPositiveSum,
  NonUnitSum,
  OrderMismatch,
  NonzeroConstantTerm,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Domain error raised by every module. The message is a one-line lower-case
// diagnostic suitable for printing verbatim.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Offending character index, only set for InvalidCharacter.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace dyck

#endif  // DYCK_ERROR_HPP
