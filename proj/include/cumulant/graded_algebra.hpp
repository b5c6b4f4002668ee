#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cumulant/linear_combination.hpp"
#include "cumulant/scalar.hpp"

namespace cumulant {

inline bool is_odd(int degree) noexcept { return degree % 2 != 0; }

/// (-1)^(p*q), as an int.
inline int koszul_factor(int p, int q) noexcept { return is_odd(p) && is_odd(q) ? -1 : 1; }

struct Generator {
  std::string name;
  int degree = 0;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A finite graded basis. Carries no product; used on its own for chain
/// complexes and as the carrier of an Algebra.
class GradedSpace {
 public:
  explicit GradedSpace(std::vector<Generator> generators, std::string label = {});

  int size() const noexcept { return static_cast<int>(generators_.size()); }
  int degree(int index) const { return generators_.at(index).degree; }
  bool odd(int index) const { return is_odd(degree(index)); }
  const std::string& name(int index) const { return generators_.at(index).name; }
  const std::string& label() const noexcept { return label_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }

  std::optional<int> find(const std::string& name) const;
  /// Like find, but throws SchemaError naming the space on a miss.
  int index(const std::string& name) const;

  /// Same generator names and degrees; labels are ignored.
  friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.generators_ == b.generators_; }

 private:
  std::vector<Generator> generators_;
  std::map<std::string, int> by_name_;
  std::string label_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

SpacePtr make_space(std::vector<Generator> generators, std::string label = {});

/// Pointer identity or structural equality.
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// An element of a graded space, keyed by generator index.
using Vector = LinearCombination<int>;

inline Vector basis_vector(int index) { return Vector(index, Scalar(1)); }

/// Degree of a homogeneous nonzero vector; nullopt for zero or mixed degree.
std::optional<int> homogeneous_degree(const GradedSpace& space, const Vector& v);

/// Throws MismatchError if any index of v falls outside the space.
void check_indices(const GradedSpace& space, const Vector& v);

using ProductTable = std::map<std::pair<int, int>, Vector>;

/// Finite-dimensional graded commutative associative algebra over Q,
/// given by structure constants on basis pairs. Not necessarily unital.
/// Instances are only produced by build(), which validates every axiom.
class Algebra {
 public:
  /// Checks degree homogeneity, graded commutativity on basis pairs, and
  /// associativity on all basis triples. Throws ValidationError naming the
  /// offending pair or triple.
  static Algebra build(SpacePtr space, ProductTable table);

  const SpacePtr& space() const noexcept { return space_; }
  int dimension() const noexcept { return space_->size(); }

  const Vector& basis_product(int i, int j) const;
  Vector multiply(const Vector& u, const Vector& v) const;
  const ProductTable& table() const noexcept { return *table_; }

 private:
  Algebra(SpacePtr space, std::shared_ptr<const ProductTable> table)
      : space_(std::move(space)), table_(std::move(table)) {}

  SpacePtr space_;
  std::shared_ptr<const ProductTable> table_;
};

Vector multiply(const Algebra& algebra, const Vector& u, const Vector& v);

/// Homogeneous linear map between graded spaces, stored by columns.
class LinearMap {
 public:
  /// Validates that every column is homogeneous of degree deg(source gen) + degree.
  static LinearMap build(SpacePtr source, SpacePtr target, int degree, std::map<int, Vector> columns);

  static LinearMap identity(const SpacePtr& space);
  static LinearMap zero(SpacePtr source, SpacePtr target, int degree);

  const SpacePtr& source() const noexcept { return source_; }
  const SpacePtr& target() const noexcept { return target_; }
  int degree() const noexcept { return degree_; }
  const std::map<int, Vector>& columns() const noexcept { return columns_; }
  const Vector& column(int index) const;

  Vector apply(const Vector& v) const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);

 private:
  LinearMap(SpacePtr source, SpacePtr target, int degree, std::map<int, Vector> columns)
      : source_(std::move(source)), target_(std::move(target)), degree_(degree), columns_(std::move(columns)) {}

  SpacePtr source_;
  SpacePtr target_;
  int degree_ = 0;
  std::map<int, Vector> columns_;
};

Vector apply_linear(const LinearMap& map, const Vector& v);

/// outer ∘ inner.
LinearMap compose(const LinearMap& outer, const LinearMap& inner);
LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);
LinearMap operator*(const Scalar& s, const LinearMap& m);

/// Graded commutator a∘b - (-1)^{|a||b|} b∘a of endomorphisms.
LinearMap commutator(const LinearMap& a, const LinearMap& b);

/// First basis index where the two maps differ, if any.
std::optional<int> first_difference(const LinearMap& a, const LinearMap& b);

}  // namespace cumulant
