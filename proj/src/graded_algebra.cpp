#include "cumulant/graded_algebra.hpp"

#include <sstream>

#include "cumulant/errors.hpp"

namespace cumulant {

GradedSpace::GradedSpace(std::vector<Generator> generators, std::string label)
    : generators_(std::move(generators)), label_(std::move(label)) {
  for (int i = 0; i < size(); ++i) {
    const auto& name = generators_[i].name;
    if (name.empty()) throw SchemaError("generator " + std::to_string(i) + " has an empty name");
    if (!by_name_.emplace(name, i).second) throw SchemaError("duplicate generator name '" + name + "'");
  }
}

std::optional<int> GradedSpace::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

int GradedSpace::index(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw SchemaError("unknown generator '" + name + "'" + (label_.empty() ? "" : " in '" + label_ + "'"));
}

SpacePtr make_space(std::vector<Generator> generators, std::string label) {
  return std::make_shared<const GradedSpace>(std::move(generators), std::move(label));
}

bool same_space(const SpacePtr& a, const SpacePtr& b) { return a == b || (a && b && *a == *b); }

std::optional<int> homogeneous_degree(const GradedSpace& space, const Vector& v) {
  std::optional<int> degree;
  for (const auto& [index, coeff] : v) {
    const int d = space.degree(index);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

void check_indices(const GradedSpace& space, const Vector& v) {
  for (const auto& [index, coeff] : v) {
    if (index < 0 || index >= space.size()) {
      throw MismatchError("generator index " + std::to_string(index) + " out of range for a space of dimension " +
                          std::to_string(space.size()));
    }
  }
}

namespace {

const Vector kZero;

std::string pair_name(const GradedSpace& s, int i, int j) {
  return "(" + s.name(i) + "," + s.name(j) + ")";
}

}  // namespace

Algebra Algebra::build(SpacePtr space, ProductTable table) {
  const GradedSpace& s = *space;
  const int n = s.size();
  for (auto it = table.begin(); it != table.end();) {
    const auto [i, j] = it->first;
    if (i < 0 || j < 0 || i >= n || j >= n) throw MismatchError("product table index out of range");
    check_indices(s, it->second);
    if (it->second.is_zero()) {
      it = table.erase(it);
      continue;
    }
    const auto degree = homogeneous_degree(s, it->second);
    if (!degree || *degree != s.degree(i) + s.degree(j)) {
      throw ValidationError("product " + s.name(i) + "*" + s.name(j) + " is not homogeneous of degree " +
                                std::to_string(s.degree(i) + s.degree(j)),
                            pair_name(s, i, j));
    }
    ++it;
  }

  auto lookup = [&](int i, int j) -> const Vector& {
    auto it = table.find({i, j});
    return it == table.end() ? kZero : it->second;
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Vector reflected = lookup(j, i);
      reflected *= Scalar(koszul_factor(s.degree(i), s.degree(j)));
      if (!(lookup(i, j) == reflected)) {
        throw ValidationError("graded commutativity fails on pair " + pair_name(s, i, j), pair_name(s, i, j));
      }
    }
  }

  auto shared = std::make_shared<const ProductTable>(std::move(table));
  Algebra algebra(std::move(space), shared);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Vector& ij = algebra.basis_product(i, j);
      for (int k = 0; k < n; ++k) {
        const Vector left = algebra.multiply(ij, basis_vector(k));
        const Vector right = algebra.multiply(basis_vector(i), algebra.basis_product(j, k));
        if (!(left == right)) {
          const std::string triple = "(" + s.name(i) + "," + s.name(j) + "," + s.name(k) + ")";
          throw ValidationError("associativity fails on triple " + triple, triple);
        }
      }
    }
  }
  return algebra;
}

const Vector& Algebra::basis_product(int i, int j) const {
  auto it = table_->find({i, j});
  return it == table_->end() ? kZero : it->second;
}

Vector Algebra::multiply(const Vector& u, const Vector& v) const {
  check_indices(*space_, u);
  check_indices(*space_, v);
  Vector out;
  for (const auto& [i, a] : u) {
    for (const auto& [j, b] : v) out.add_scaled(basis_product(i, j), a * b);
  }
  return out;
}

Vector multiply(const Algebra& algebra, const Vector& u, const Vector& v) { return algebra.multiply(u, v); }

LinearMap LinearMap::build(SpacePtr source, SpacePtr target, int degree, std::map<int, Vector> columns) {
  for (auto it = columns.begin(); it != columns.end();) {
    const int i = it->first;
    if (i < 0 || i >= source->size()) throw MismatchError("linear map column index out of range");
    check_indices(*target, it->second);
    if (it->second.is_zero()) {
      it = columns.erase(it);
      continue;
    }
    const auto d = homogeneous_degree(*target, it->second);
    if (!d || *d != source->degree(i) + degree) {
      throw ValidationError("image of '" + source->name(i) + "' is not homogeneous of degree " +
                                std::to_string(source->degree(i) + degree),
                            source->name(i));
    }
    ++it;
  }
  return LinearMap(std::move(source), std::move(target), degree, std::move(columns));
}

LinearMap LinearMap::identity(const SpacePtr& space) {
  std::map<int, Vector> columns;
  for (int i = 0; i < space->size(); ++i) columns.emplace(i, basis_vector(i));
  return LinearMap(space, space, 0, std::move(columns));
}

LinearMap LinearMap::zero(SpacePtr source, SpacePtr target, int degree) {
  return LinearMap(std::move(source), std::move(target), degree, {});
}

const Vector& LinearMap::column(int index) const {
  auto it = columns_.find(index);
  return it == columns_.end() ? kZero : it->second;
}

Vector LinearMap::apply(const Vector& v) const {
  check_indices(*source_, v);
  Vector out;
  for (const auto& [i, c] : v) out.add_scaled(column(i), c);
  return out;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return same_space(a.source_, b.source_) && same_space(a.target_, b.target_) && a.degree_ == b.degree_ &&
         a.columns_ == b.columns_;
}

Vector apply_linear(const LinearMap& map, const Vector& v) { return map.apply(v); }

namespace {

void require_compatible(const LinearMap& a, const LinearMap& b) {
  if (!same_space(a.source(), b.source()) || !same_space(a.target(), b.target())) {
    throw MismatchError("linear maps act between different spaces");
  }
}

LinearMap combine(const LinearMap& a, const LinearMap& b, const Scalar& sign) {
  require_compatible(a, b);
  std::map<int, Vector> columns = a.columns();
  for (const auto& [i, col] : b.columns()) columns[i].add_scaled(col, sign);
  // Mixed degrees are only legal when one side is zero.
  const int degree = a.columns().empty() ? b.degree() : a.degree();
  return LinearMap::build(a.source(), a.target(), degree, std::move(columns));
}

}  // namespace

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  if (!same_space(inner.target(), outer.source())) throw MismatchError("cannot compose: spaces do not match");
  std::map<int, Vector> columns;
  for (const auto& [i, col] : inner.columns()) columns.emplace(i, outer.apply(col));
  return LinearMap::build(inner.source(), outer.target(), inner.degree() + outer.degree(), std::move(columns));
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) { return combine(a, b, Scalar(1)); }
LinearMap operator-(const LinearMap& a, const LinearMap& b) { return combine(a, b, Scalar(-1)); }

LinearMap operator*(const Scalar& s, const LinearMap& m) {
  std::map<int, Vector> columns;
  for (const auto& [i, col] : m.columns()) columns.emplace(i, s * col);
  return LinearMap::build(m.source(), m.target(), m.degree(), std::move(columns));
}

LinearMap commutator(const LinearMap& a, const LinearMap& b) {
  return compose(a, b) - Scalar(koszul_factor(a.degree(), b.degree())) * compose(b, a);
}

std::optional<int> first_difference(const LinearMap& a, const LinearMap& b) {
  require_compatible(a, b);
  for (int i = 0; i < a.source()->size(); ++i) {
    if (!(a.column(i) == b.column(i))) return i;
  }
  return std::nullopt;
}

}  // namespace cumulant
