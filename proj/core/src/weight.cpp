#include "k4steiner/weight.hpp"

#include <cassert>
#include <ostream>

#include "k4steiner/error.hpp"

namespace k4st {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDisconnectedInput: return "DisconnectedInput";
    case ErrorCode::kHasCutVertex: return "HasCutVertex";
    case ErrorCode::kNeitherEndpointCovered: return "NeitherEndpointCovered";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kTooManyVirtualEdges: return "TooManyVirtualEdges";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kPatternViolation: return "PatternViolation";
    case ErrorCode::kAcyclic: return "Acyclic";
    case ErrorCode::kNotThreeConnected: return "NotThreeConnected";
    case ErrorCode::kMinorFound: return "MinorFound";
    case ErrorCode::kInconsistentTrace: return "InconsistentTrace";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

std::string Weight::to_string() const {
  return is_finite() ? std::to_string(value_) : std::string("inf");
}

std::ostream& operator<<(std::ostream& os, Weight w) { return os << w.to_string(); }

Weight rebalance(Weight total, Weight minus_a, Weight minus_b, Weight plus) {
  assert(total.is_finite() && minus_a.is_finite() && minus_b.is_finite());
  const Weight::Rep base = total.value() - minus_a.value() - minus_b.value();
  assert(base >= 0);
  return Weight(base) + plus;
}

}  // namespace k4st
