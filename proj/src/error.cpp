#include "fatgraph/error.hpp"

namespace fg {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::MultipleBoundaryCycles: return "MultipleBoundaryCycles";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::BadValence: return "BadValence";
    case ErrorKind::MalformedPermutation: return "MalformedPermutation";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::TailEdge: return "TailEdge";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::NotTrivalent: return "NotTrivalent";
    case ErrorKind::InvalidInputs: return "InvalidInputs";
    case ErrorKind::SameEdge: return "SameEdge";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotInQ: return "NotInQ";
    case ErrorKind::SingularGram: return "SingularGram";
    case ErrorKind::OddCornerCount: return "OddCornerCount";
    case ErrorKind::GenusTooLarge: return "GenusTooLarge";
    case ErrorKind::FlipFailed: return "FlipFailed";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace fg
