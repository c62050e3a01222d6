#include "coxchar/error.hpp"

namespace coxchar {

const char* to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::range: return "range";
  case ErrorCode::parse: return "parse";
  case ErrorCode::budget: return "budget";
  case ErrorCode::not_comparable: return "not-comparable";
  case ErrorCode::unclassifiable: return "unclassifiable";
  case ErrorCode::interior_condition: return "interior-condition";
  case ErrorCode::model_mismatch: return "model-mismatch";
  case ErrorCode::non_lattice: return "non-lattice";
  case ErrorCode::verification: return "verification";
  }
  return "unknown";
}

} // namespace coxchar
