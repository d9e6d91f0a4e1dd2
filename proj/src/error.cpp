#include "pcg/error.hpp"

namespace pcg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::LabelMismatch: return "LabelMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace pcg
