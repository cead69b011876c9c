#pragma once

#include <stdexcept>
#include <string>

namespace alignrepair {

enum class ErrorKind {
  undeclared_class,
  duplicate_class,
  subclass_cycle,
  self_disjoint,
  incoherent_input,
  dangling_mapping,
  unknown_class,
  duplicate_mapping,
  invalid_confidence,
  syntax,
  enumeration_cap,
  hitting_set_cap,
  empty_cluster,
  invalid_argument,
  io,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers and tests
/// can distinguish rejection reasons without matching message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace alignrepair
