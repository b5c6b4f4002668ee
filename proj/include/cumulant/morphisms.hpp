#pragma once

#include <functional>
#include <map>
#include <optional>

#include "cumulant/graded_algebra.hpp"
#include "cumulant/report.hpp"
#include "cumulant/symmetric_coalgebra.hpp"

namespace cumulant {

/// Values of one symmetric multilinear map ∧ⁿA → B on canonical monomials.
using TaylorTable = std::map<Monomial, Vector>;

/// Taylor coefficients of a coderivation or coalgebra map: arity n -> table.
/// Values on permuted arguments follow from the Koszul sign of the
/// permutation, so only canonical monomials are stored.
struct TaylorFamily {
  SpacePtr source;
  SpacePtr target;
  int degree = 0;
  std::map<int, TaylorTable> arities;

  /// Arity-1 family of a linear map.
  static TaylorFamily from_linear_map(const LinearMap& map);

  const Vector& value(const Monomial& m) const;
  void set(const Monomial& m, Vector value);
  int max_arity() const;
  /// Copy with the given arity removed.
  TaylorFamily without_arity(int n) const;
  /// Throws ValidationError if an entry is not homogeneous of degree deg(m) + degree.
  void validate() const;

  friend bool operator==(const TaylorFamily& a, const TaylorFamily& b);
};

/// A weight-respecting linear map SA -> SB stored extensionally: its value
/// on every canonical monomial up to the cap.
class TabulatedMap {
 public:
  using Table = std::map<Monomial, SElement>;

  TabulatedMap(SpacePtr source, SpacePtr target, int degree, int cap, Table table);

  static TabulatedMap tabulate(const SymmetricCoalgebra& source, SpacePtr target, int degree,
                               const std::function<SElement(const Monomial&)>& value);
  static TabulatedMap identity(const SymmetricCoalgebra& coalgebra);
  static TabulatedMap zero(SpacePtr source, SpacePtr target, int degree, int cap);

  const SpacePtr& source() const noexcept { return source_; }
  const SpacePtr& target() const noexcept { return target_; }
  int degree() const noexcept { return degree_; }
  int cap() const noexcept { return cap_; }
  const Table& table() const noexcept { return table_; }

  SymmetricCoalgebra source_coalgebra() const { return {source_, cap_}; }
  SymmetricCoalgebra target_coalgebra() const { return {target_, cap_}; }

  /// Value on a canonical monomial; zero if the monomial maps to zero.
  const SElement& at(const Monomial& m) const;
  SElement apply(const SElement& v) const;

 private:
  SpacePtr source_;
  SpacePtr target_;
  int degree_;
  int cap_;
  Table table_;
};

/// outer ∘ inner.
TabulatedMap compose(const TabulatedMap& outer, const TabulatedMap& inner);
TabulatedMap operator+(const TabulatedMap& a, const TabulatedMap& b);
TabulatedMap operator-(const TabulatedMap& a, const TabulatedMap& b);
TabulatedMap operator*(const Scalar& s, const TabulatedMap& m);

/// Graded commutator a∘b - (-1)^{|a||b|} b∘a.
TabulatedMap bracket(const TabulatedMap& a, const TabulatedMap& b);

/// First canonical monomial (in Monomial order) where the maps disagree.
std::optional<Monomial> first_difference(const TabulatedMap& a, const TabulatedMap& b);

/// Exact equality report with a witness on failure.
CheckReport compare_maps(std::string name, const TabulatedMap& a, const TabulatedMap& b);

/// Σ over set partitions P of m's positions of ε(P) ∧_{B∈P} block(x_B). The
/// block values live in target; blocks are wedged in order of their minima.
SElement sum_over_partitions(const SymmetricCoalgebra& source, const SymmetricCoalgebra& target, const Monomial& m,
                             const std::function<Vector(const Monomial&)>& block);

/// D(x₁∧…∧xₙ) = Σ_k Σ_{|I|=k} ε · Dᵏ(x_I) ∧ x_{I^c}, the subset I shuffled to
/// the front. Requires source == target.
TabulatedMap extend_coderivation(const TaylorFamily& family, int cap);

/// G(x₁∧…∧xₙ) = Σ_partitions ε · ∧_B G^{|B|}(x_B). Requires degree 0.
TabulatedMap extend_coalgebra_map(const TaylorFamily& family, int cap);

/// π∘M restricted to canonical weight-n monomials (zero values omitted).
TaylorTable taylor_extract(const TabulatedMap& map, int n);
/// All arities 1..cap.
TaylorFamily taylor_family(const TabulatedMap& map);

/// Δ∘G = (G⊗G)∘Δ on every canonical monomial up to the cap.
CheckReport check_comorphism(const TabulatedMap& map);
/// Δ∘D = (D⊗1 + 1⊗D)∘Δ with (1⊗D)(a⊗b) = (-1)^{|D||a|} a⊗D(b).
CheckReport check_coderivation(const TabulatedMap& map);

/// Checks T(w) - w ∈ F_{weight(w)-1} for every canonical monomial.
CheckReport check_unitriangular(const TabulatedMap& map);

/// Inverse of a unitriangular endomorphism by weight-ascending recursion
/// T⁻¹(w) = w - T⁻¹(T(w) - w). Throws ValidationError with the first
/// non-triangular monomial.
TabulatedMap triangular_inverse(const TabulatedMap& map);

}  // namespace cumulant
