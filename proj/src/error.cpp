#include "ptolemy_lab/error.hpp"

namespace ptolemy_lab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error:
      return "PARSE_ERROR";
    case ErrorCode::not_crossing:
      return "NOT_CROSSING";
    case ErrorCode::not_ext_projective:
      return "NOT_EXT_PROJECTIVE";
    case ErrorCode::not_ext_injective:
      return "NOT_EXT_INJECTIVE";
    case ErrorCode::precondition_violation:
      return "PRECONDITION_VIOLATION";
    case ErrorCode::size_limit:
      return "SIZE_LIMIT";
    case ErrorCode::bind_failure:
      return "BIND_FAILURE";
  }
  return "UNKNOWN";
}

}  // namespace ptolemy_lab
