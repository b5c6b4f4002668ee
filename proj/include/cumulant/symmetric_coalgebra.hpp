#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cumulant/combinatorics.hpp"
#include "cumulant/graded_algebra.hpp"
#include "cumulant/linear_combination.hpp"

namespace cumulant {

/// Canonical wedge monomial x_{i1} ∧ ... ∧ x_{in}: indices non-decreasing,
/// odd-degree indices never repeated. Ordered by weight, then lexicographically.
struct Monomial {
  std::vector<int> factors;

  int weight() const noexcept { return static_cast<int>(factors.size()); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.factors.size() <=> b.factors.size(); c != 0) return c;
    return a.factors <=> b.factors;
  }
};

using SElement = LinearCombination<Monomial>;
using TensorPair = std::pair<Monomial, Monomial>;
using TensorPairSum = LinearCombination<TensorPair>;
using TensorTuple = std::vector<Monomial>;
using TensorTupleSum = LinearCombination<TensorTuple>;

/// Sign of rearranging items with the given degrees so that position k of
/// the result holds item permutation[k]: one factor (-1)^{d_i d_j} per
/// inverted pair. Throws MismatchError if permutation is not a bijection.
int koszul_sign(std::span<const int> degrees, std::span<const int> permutation);

/// Sorts a factor list into a canonical monomial with its Koszul sign.
/// nullopt when an odd-degree generator repeats (the product is zero).
std::optional<std::pair<Monomial, int>> normalize_monomial(std::span<const int> factors, const GradedSpace& space);

int monomial_degree(const GradedSpace& space, const Monomial& m);

/// Human-readable rendering such as "a∧b".
std::string render(const GradedSpace& space, const Monomial& m);
std::vector<std::string> factor_names(const GradedSpace& space, const Monomial& m);

/// Factors of m at the given (sorted) positions; canonical automatically.
Monomial sub_monomial(const Monomial& m, std::span<const int> positions);

/// Koszul sign of reordering m's factors as the concatenation of blocks.
int block_sign(const GradedSpace& space, const Monomial& m, const Blocks& blocks);

struct WedgeResult {
  SElement value;
  bool overflow = false;  ///< terms above the weight cap were dropped
};

/// SA = ⊕ ∧ⁿA truncated at a weight cap, over a graded space. Only the
/// basis degrees are used; no product is needed.
class SymmetricCoalgebra {
 public:
  static constexpr int kDefaultCap = 6;

  SymmetricCoalgebra(SpacePtr space, int cap);

  const SpacePtr& space() const noexcept { return space_; }
  int cap() const noexcept { return cap_; }
  int degree(const Monomial& m) const { return monomial_degree(*space_, m); }

  /// All canonical monomials of one weight, in Monomial order.
  std::vector<Monomial> monomials(int weight) const;
  /// All canonical monomials with 1 <= weight <= cap.
  std::vector<Monomial> monomials() const;

  /// Reduced coproduct: ordered pairs of complementary nonempty position
  /// subsets, each signed by the shuffle that moves the first subset left.
  TensorPairSum coproduct(const Monomial& m) const;
  TensorPairSum coproduct(const SElement& v) const;

  /// Δ^{k-1}(m) as signed k-tuples; k = 1 gives (m) itself.
  TensorTupleSum iterated_coproduct(const Monomial& m, int k) const;

  /// ∧ⁿA component of v.
  static SElement weight_project(const SElement& v, int n);
  /// Weight-one component as an element of the underlying space.
  static Vector linear_part(const SElement& v);
  static SElement embed(const Vector& v);
  /// Largest weight present; 0 for the zero element.
  static int max_weight(const SElement& v);

  WedgeResult wedge(const SElement& u, const SElement& v) const;

  /// Expands f_1 ∧ f_2 ∧ ... ∧ f_k for elements of the underlying space,
  /// scaled by coeff, into out. Result weight is k; callers keep k <= cap.
  void wedge_vectors(std::span<const Vector* const> factors, const Scalar& coeff, SElement& out) const;

  /// Throws MismatchError if v has a term above the cap or an invalid index.
  void check_element(const SElement& v) const;

 private:
  SpacePtr space_;
  int cap_;
};

/// Tensor product of two elements: Σ a_i b_j (l_i ⊗ r_j).
TensorPairSum tensor(const SElement& left, const SElement& right, const Scalar& coeff = Scalar(1));

}  // namespace cumulant
