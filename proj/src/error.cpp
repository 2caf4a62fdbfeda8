#include "rigidity/error.hpp"

namespace rigidity {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kLoopEdge: return "LoopEdge";
    case Errc::kUnknownEdge: return "UnknownEdge";
    case Errc::kDuplicateInsert: return "DuplicateInsert";
    case Errc::kSizeMismatch: return "SizeMismatch";
    case Errc::kKOutOfRange: return "KOutOfRange";
    case Errc::kInvalidSide: return "InvalidSide";
    case Errc::kBadGrid: return "BadGrid";
    case Errc::kParse: return "ParseError";
  }
  return "Unknown";
}

}  // namespace rigidity
