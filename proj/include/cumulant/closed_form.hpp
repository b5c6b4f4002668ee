#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cumulant/graded_algebra.hpp"
#include "cumulant/morphisms.hpp"

namespace cumulant {

/// A multilinear expression in letters x, y, z, w and one linear map f,
/// e.g. "f(xyz)-f(xy)f(z)-f(yz)f(x)-f(zx)f(y)+2f(x)f(y)f(z)". Every term uses
/// each letter exactly once. Evaluation applies the Koszul rule: the sign of
/// the letter rearrangement, and (-1)^{|f||p|} whenever f is applied after
/// letters of total degree p.
class ClosedForm {
 public:
  struct Factor {
    bool applied = false;  ///< f(letters) rather than bare letters
    std::vector<int> letters;
  };
  struct Term {
    Scalar coeff;
    std::vector<Factor> factors;
  };

  /// Throws SchemaError on malformed text.
  static ClosedForm parse(std::string_view text);

  int arity() const noexcept { return arity_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const std::string& text() const noexcept { return text_; }

  /// Value at letters = the given generators of source. Bare letters need
  /// source and target to be the same algebra.
  Vector evaluate(const Algebra& source, const Algebra& target, const LinearMap& f, std::span<const int> args) const;

 private:
  std::string text_;
  int arity_ = 0;
  std::vector<Term> terms_;
};

struct ClosedFormMismatch {
  Monomial monomial;
  Vector computed;
  Vector closed_form;
};

struct ClosedFormComparison {
  ClosedFormComparison() = default;
  explicit ClosedFormComparison(std::string text) : expression(std::move(text)) {}

  std::string expression;
  int checked = 0;
  std::vector<ClosedFormMismatch> mismatches;

  bool agrees() const noexcept { return mismatches.empty(); }
};

/// Compares a computed arity-n table with the expression on every canonical
/// monomial of that weight.
ClosedFormComparison compare_closed_form(const ClosedForm& form, const TaylorTable& computed, const Algebra& source,
                                         const Algebra& target, const LinearMap& f, int cap);

}  // namespace cumulant
