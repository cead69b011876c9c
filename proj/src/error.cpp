#include "alignrepair/error.hpp"

namespace alignrepair {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::undeclared_class: return "undeclared_class";
    case ErrorKind::duplicate_class: return "duplicate_class";
    case ErrorKind::subclass_cycle: return "subclass_cycle";
    case ErrorKind::self_disjoint: return "self_disjoint";
    case ErrorKind::incoherent_input: return "incoherent_input";
    case ErrorKind::dangling_mapping: return "dangling_mapping";
    case ErrorKind::unknown_class: return "unknown_class";
    case ErrorKind::duplicate_mapping: return "duplicate_mapping";
    case ErrorKind::invalid_confidence: return "invalid_confidence";
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::enumeration_cap: return "enumeration_cap";
    case ErrorKind::hitting_set_cap: return "hitting_set_cap";
    case ErrorKind::empty_cluster: return "empty_cluster";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::io: return "io";
  }
  return "unknown";
}

}  // namespace alignrepair
