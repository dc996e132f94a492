#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fuglede {

enum class ErrorCode {
  invalid_argument,
  empty_interval,
  empty_set,
  hypothesis,   // a precondition from the underlying theory fails
  not_z_tiling,
  window,
  circle_too_close,
  inconclusive,
  parse,
  unknown_name,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  /// Position of the offending element, when the error refers to one.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace fuglede
