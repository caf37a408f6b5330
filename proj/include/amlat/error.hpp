#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace amlat {

enum class errc {
  singular_basis,
  singular_matrix,
  invalid_prime,
  not_a_ring,
  not_integral,
  not_full_rank,
  internal_non_square_discriminant,
  maximalization_failed,
  order_mismatch,
  not_two_sided,
  inverse_verification_failed,
  not_ramified,
  non_positive_alpha,
  discriminant_formula_mismatch,
  dual_mismatch,
  ramification_check_failed,
  beta_verification_failed,
  no_plan_found,
  hilbert_inconsistency,
  parse_error,
  internal_check_failed,
};

constexpr std::string_view to_string(errc e) {
  switch (e) {
    case errc::singular_basis: return "SingularBasis";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::invalid_prime: return "InvalidPrime";
    case errc::not_a_ring: return "NotARing";
    case errc::not_integral: return "NotIntegral";
    case errc::not_full_rank: return "NotFullRank";
    case errc::internal_non_square_discriminant: return "InternalNonSquareDiscriminant";
    case errc::maximalization_failed: return "MaximalizationFailed";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::not_two_sided: return "NotTwoSided";
    case errc::inverse_verification_failed: return "InverseVerificationFailed";
    case errc::not_ramified: return "NotRamified";
    case errc::non_positive_alpha: return "NonPositiveAlpha";
    case errc::discriminant_formula_mismatch: return "DiscriminantFormulaMismatch";
    case errc::dual_mismatch: return "DualMismatch";
    case errc::ramification_check_failed: return "RamificationCheckFailed";
    case errc::beta_verification_failed: return "BetaVerificationFailed";
    case errc::no_plan_found: return "NoPlanFound";
    case errc::hilbert_inconsistency: return "HilbertInconsistency";
    case errc::parse_error: return "ParseError";
    case errc::internal_check_failed: return "InternalCheckFailed";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the errc kinds above.
class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

  errc kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  errc kind_;
  std::string detail_;
};

}  // namespace amlat
