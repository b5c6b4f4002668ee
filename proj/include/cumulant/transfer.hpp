#pragma once

#include <optional>
#include <vector>

#include "cumulant/errors.hpp"
#include "cumulant/graded_algebra.hpp"
#include "cumulant/morphisms.hpp"
#include "cumulant/report.hpp"

namespace cumulant {

/// A deformation retract of (A, ∂) onto a subcomplex (C, ∂_C): I∘i = id_C
/// and ∂s + s∂ = i∘I - id_A. C is a bare graded space; no product on C is
/// ever consulted.
struct RetractData {
  Algebra algebra;
  SpacePtr complex;
  LinearMap differential;          ///< ∂ on A, degree -1
  LinearMap complex_differential;  ///< ∂_C on C, degree -1
  LinearMap inclusion;             ///< i: C -> A
  LinearMap projection;            ///< I: A -> C
  LinearMap homotopy;              ///< s on A, degree +1

  /// C = A, i = I = id, s = 0, ∂_C = ∂.
  static RetractData trivial(const Algebra& algebra, const LinearMap& differential);
};

/// Checks the five retract identities plus ∂² = 0 and ∂_C² = 0, each with a
/// generator witness on failure. Throws MismatchError if a map acts between
/// the wrong spaces or has the wrong degree.
std::vector<CheckReport> validate_retract(const RetractData& retract);

struct TransferInput {
  RetractData retract;
  TaylorFamily d_infinity;  ///< coderivation data on SC, degree -1
  TaylorFamily iota;        ///< comorphism data SC -> SA, arity 1 = i
};

/// Checks the hypotheses on ∂∞ and ι up to the cap: ι¹ = i, the ∂∞
/// extension is a square-zero coderivation, ι̂ is a comorphism intertwining
/// ∂̂∞ with d̃ = τ̃⁻¹∘d∘τ̃, and ι̂ is injective on F_cap.
std::vector<CheckReport> validate_transfer_input(const TransferInput& input, int cap);

struct InducedBijection {
  TabulatedMap map;                     ///< Ĩ∘τ̃∘ι̂ on SC
  std::optional<TabulatedMap> inverse;  ///< present when map is unitriangular
  TaylorFamily family;
  std::vector<CheckReport> hypotheses;    ///< retract and transfer-input checks
  std::vector<CheckReport> certificates;  ///< identity on F₁, comorphism, intertwining, invertible

  bool certified() const { return all_passed(hypotheses) && all_passed(certificates); }
};

/// Computes Ĩ∘τ̃∘ι̂ and runs every hypothesis check and certificate,
/// whether or not they pass.
InducedBijection certify_induced_bijection(const TransferInput& input, int cap);

class TransferError : public Error {
 public:
  TransferError(const std::string& message, InducedBijection result)
      : Error(message), result_(std::move(result)) {}
  const InducedBijection& result() const noexcept { return result_; }

 private:
  InducedBijection result_;
};

/// As certify_induced_bijection, but throws TransferError when any
/// hypothesis or certificate fails.
InducedBijection induced_cumulant_bijection(const TransferInput& input, int cap);

/// Solves for the arity-n Taylor coefficient of ι making ι̂∘∂̂∞ = d̃∘ι̂ hold
/// on weight-n monomials, given ι's lower arities and ∂∞. Returns one
/// particular solution (free coordinates zero), or nullopt if none exists.
std::optional<TaylorTable> solve_iota_arity(const TransferInput& input, int arity);

}  // namespace cumulant
