#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ptolemy_lab/polygon.hpp"

namespace ptolemy_lab {

enum class ErrorCode {
  parse_error,
  not_crossing,
  not_ext_projective,
  not_ext_injective,
  precondition_violation,
  size_limit,
  bind_failure,
};

/// Machine-readable name used on the wire, e.g. "NOT_EXT_PROJECTIVE".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<Diagonal> witness = std::nullopt)
      : std::runtime_error(message), code_(code), witness_(witness) {}

  ErrorCode code() const noexcept { return code_; }

  // A member diagonal that explains the failure (e.g. one crossing the
  // requested diagonal), when there is one.
  const std::optional<Diagonal>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::optional<Diagonal> witness_;
};

}  // namespace ptolemy_lab
