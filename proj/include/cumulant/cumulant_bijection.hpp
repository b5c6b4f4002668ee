#pragma once

#include "cumulant/graded_algebra.hpp"
#include "cumulant/morphisms.hpp"
#include "cumulant/symmetric_coalgebra.hpp"

namespace cumulant {

/// τ(x₁∧…∧xₙ) = x₁x₂…xₙ, folded left to right over the canonical factor order.
Vector tau(const Algebra& algebra, const Monomial& m);

/// τ̃ by set partitions: Σ_P ε(P) ∧_{B∈P} τ(x_B), one term per unordered
/// partition with coefficient 1.
SElement tau_tilde(const Algebra& algebra, const SymmetricCoalgebra& coalgebra, const Monomial& m);
SElement tau_tilde(const Algebra& algebra, const SymmetricCoalgebra& coalgebra, const SElement& v);

/// τ̃ by the lifting series τ + τ∧τ∘Δ + τ^∧3∘Δ² + …, each Δ^{k-1} term
/// reassembled over ordered k-tuples and divided by k!. Used as an
/// independent cross-check of tau_tilde.
SElement tau_tilde_series(const Algebra& algebra, const SymmetricCoalgebra& coalgebra, const Monomial& m);

/// An algebra with its cumulant bijection and inverse tabulated up to a cap.
/// Immutable once built; safe to share between threads.
class CumulantContext {
 public:
  CumulantContext(Algebra algebra, int cap);

  const Algebra& algebra() const noexcept { return algebra_; }
  const SpacePtr& space() const noexcept { return algebra_.space(); }
  const SymmetricCoalgebra& coalgebra() const noexcept { return coalgebra_; }
  int cap() const noexcept { return coalgebra_.cap(); }

  const TabulatedMap& forward() const noexcept { return forward_; }
  const TabulatedMap& inverse() const noexcept { return inverse_; }

  SElement apply(const SElement& v) const { return forward_.apply(v); }
  SElement apply_inverse(const SElement& v) const { return inverse_.apply(v); }

 private:
  Algebra algebra_;
  SymmetricCoalgebra coalgebra_;
  TabulatedMap forward_;
  TabulatedMap inverse_;
};

enum class Direction {
  kPush,  ///< τ̃_B ∘ M ∘ τ̃_A⁻¹
  kPull,  ///< τ̃_B⁻¹ ∘ M ∘ τ̃_A
};

/// Conjugates M: SA -> SB by the cumulant bijections of source and target.
TabulatedMap conjugate(const TabulatedMap& map, const CumulantContext& source, const CumulantContext& target,
                       Direction direction);
TabulatedMap conjugate(const TabulatedMap& map, const CumulantContext& context, Direction direction);

/// gⁿ: arity-n Taylor coefficient of τ̃_B⁻¹ ∘ F ∘ τ̃_A, F the coalgebra
/// extension of a degree-0 linear map f: A -> B.
TaylorTable homomorphism_defect(const LinearMap& f, const CumulantContext& source, const CumulantContext& target,
                                int n);
/// g¹..g^cap as one family.
TaylorFamily homomorphism_defects(const LinearMap& f, const CumulantContext& source, const CumulantContext& target);

/// hⁿ: arity-n Taylor coefficient of τ̃⁻¹ ∘ D ∘ τ̃, D the coderivation
/// extension of d: A -> A (any degree).
TaylorTable derivation_defect(const LinearMap& d, const CumulantContext& context, int n);
TaylorFamily derivation_defects(const LinearMap& d, const CumulantContext& context);

/// True when every arity >= 2 table is empty.
bool vanishes_above_arity_one(const TaylorFamily& family);

/// τ_B ∘ X = m ∘ τ_A on every canonical monomial up to the cap.
CheckReport check_intertwines_tau(const TabulatedMap& map, const CumulantContext& source,
                                  const CumulantContext& target, const LinearMap& m);

}  // namespace cumulant
