#include "cumulant/probability.hpp"

#include "cumulant/combinatorics.hpp"
#include "cumulant/cumulant_bijection.hpp"
#include "cumulant/errors.hpp"

namespace cumulant {

Algebra truncated_polynomial_algebra(int top_power, const std::string& variable) {
  if (top_power < 1) throw MismatchError("truncated polynomial algebra needs at least one power");
  std::vector<Generator> generators;
  for (int k = 1; k <= top_power; ++k) generators.push_back({variable + std::to_string(k), 0});
  ProductTable table;
  for (int i = 1; i <= top_power; ++i) {
    for (int j = 1; i + j <= top_power; ++j) table.emplace(std::pair{i - 1, j - 1}, basis_vector(i + j - 1));
  }
  return Algebra::build(make_space(std::move(generators), "P" + std::to_string(top_power)), std::move(table));
}

Algebra point_algebra() {
  ProductTable table;
  table.emplace(std::pair{0, 0}, basis_vector(0));
  return Algebra::build(make_space({{"1", 0}}, "B"), std::move(table));
}

LinearMap expectation(const Algebra& polynomials, const Algebra& point, std::span<const Scalar> moments) {
  if (static_cast<int>(moments.size()) < polynomials.dimension()) {
    throw MismatchError("expectation needs one moment per basis power");
  }
  std::map<int, Vector> columns;
  for (int k = 0; k < polynomials.dimension(); ++k) columns.emplace(k, Vector(0, moments[k]));
  return LinearMap::build(polynomials.space(), point.space(), 0, std::move(columns));
}

std::vector<Scalar> cumulants_from_moments(std::span<const Scalar> moments, int n) {
  if (n < 1 || n > static_cast<int>(moments.size())) {
    throw MismatchError("cumulant order " + std::to_string(n) + " outside 1.." + std::to_string(moments.size()));
  }
  const Algebra polynomials = truncated_polynomial_algebra(n);
  const Algebra point = point_algebra();
  const LinearMap f = expectation(polynomials, point, moments.first(n));
  const CumulantContext source(polynomials, n);
  const CumulantContext target(point, n);
  const TaylorFamily defects = homomorphism_defects(f, source, target);

  std::vector<Scalar> kappa;
  for (int j = 1; j <= n; ++j) {
    const Monomial diagonal{std::vector<int>(j, 0)};
    kappa.push_back(defects.value(diagonal).coefficient(0));
  }
  return kappa;
}

std::vector<Scalar> oracle_cumulants(std::span<const Scalar> moments, int n) {
  if (n < 1 || n > static_cast<int>(moments.size())) {
    throw MismatchError("cumulant order " + std::to_string(n) + " outside 1.." + std::to_string(moments.size()));
  }
  std::vector<Scalar> kappa;
  for (int order = 1; order <= n; ++order) {
    Scalar k = moments[order - 1];
    for (int j = 1; j < order; ++j) {
      k -= Scalar(static_cast<unsigned long>(binomial(order - 1, j - 1))) * kappa[j - 1] * moments[order - j - 1];
    }
    kappa.push_back(k);
  }
  return kappa;
}

}  // namespace cumulant
