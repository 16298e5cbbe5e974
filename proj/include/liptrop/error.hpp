#pragma once

#include <stdexcept>
#include <string>

namespace liptrop {

enum class Errc {
  overflow,
  division_by_zero,
  parse_error,
  // group-core
  not_associative,
  no_identity,
  missing_inverse,
  out_of_range_entry,
  unsupported_family,
  order_too_large,
  // metric-core
  invalid_weights,
  not_generating,
  not_symmetric_weights,
  not_bi_invariant,
  invalid_metric,
  carrier_mismatch,
  not_isometric,
  // lip-monoid / rn-star
  context_mismatch,
  cone_mismatch,
  not_lip1,
  negative_cap,
  unsupported_cone,
  identity_not_first,
};

const char* errc_name(Errc code);

/// Every failure carries a code plus a message naming the failing witness.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::overflow: return "Overflow";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::parse_error: return "ParseError";
    case Errc::not_associative: return "NotAssociative";
    case Errc::no_identity: return "NoIdentity";
    case Errc::missing_inverse: return "MissingInverse";
    case Errc::out_of_range_entry: return "OutOfRangeEntry";
    case Errc::unsupported_family: return "UnsupportedFamily";
    case Errc::order_too_large: return "OrderTooLarge";
    case Errc::invalid_weights: return "InvalidWeights";
    case Errc::not_generating: return "NotGenerating";
    case Errc::not_symmetric_weights: return "NotSymmetricWeights";
    case Errc::not_bi_invariant: return "NotBiInvariant";
    case Errc::invalid_metric: return "InvalidMetric";
    case Errc::carrier_mismatch: return "CarrierMismatch";
    case Errc::not_isometric: return "NotIsometric";
    case Errc::context_mismatch: return "ContextMismatch";
    case Errc::cone_mismatch: return "ConeMismatch";
    case Errc::not_lip1: return "NotLip1";
    case Errc::negative_cap: return "NegativeCap";
    case Errc::unsupported_cone: return "UnsupportedCone";
    case Errc::identity_not_first: return "IdentityNotFirst";
  }
  return "UnknownError";
}

}  // namespace liptrop
