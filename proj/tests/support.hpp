#pragma once

#include <random>
#include <string>
#include <vector>

#include "cumulant/cumulant_bijection.hpp"
#include "cumulant/graded_algebra.hpp"
#include "cumulant/io.hpp"
#include "cumulant/linalg.hpp"
#include "cumulant/morphisms.hpp"
#include "cumulant/symmetric_coalgebra.hpp"
#include "cumulant/transfer.hpp"

namespace cumulant::testing {

inline std::string fixture(const std::string& name) { return std::string(CUMULANT_FIXTURE_DIR) + "/" + name; }

inline io::Json load(const std::string& name) { return io::read_json_file(fixture(name)); }

inline Algebra load_algebra(const std::string& name) { return io::parse_algebra(load(name)); }

inline Monomial mono(std::initializer_list<int> factors) { return Monomial{std::vector<int>(factors)}; }

inline Vector vec(std::initializer_list<std::pair<int, int>> terms) {
  Vector v;
  for (auto [index, coeff] : terms) v.add(index, Scalar(coeff));
  return v;
}

/// E2: a, b in degree 1, g in degree 2, ab = g.
inline Algebra e2() { return load_algebra("e2.json"); }
inline Algebra p8() { return load_algebra("p8.json"); }

inline RetractData k2_retract() { return io::parse_retract(load("k2_retract.json")); }
inline TransferInput k2_transfer() { return io::parse_transfer(load("k2_transfer.json")); }

/// Three-dimensional seeds, each a small nilpotent graded commutative algebra.
inline std::vector<std::pair<std::vector<Generator>, ProductTable>> seed_algebras() {
  std::vector<std::pair<std::vector<Generator>, ProductTable>> seeds;
  // x1, x2, x3 with xi xj = x(i+j)
  seeds.push_back({{{"x1", 0}, {"x2", 0}, {"x3", 0}},
                   {{{0, 0}, basis_vector(1)}, {{0, 1}, basis_vector(2)}, {{1, 0}, basis_vector(2)}}});
  // exterior pair a, b with ab = g
  seeds.push_back({{{"a", 1}, {"b", 1}, {"g", 2}},
                   {{{0, 1}, basis_vector(2)}, {{1, 0}, Scalar(-1) * basis_vector(2)}}});
  // even x acting on odd y: xy = z
  seeds.push_back({{{"x", 0}, {"y", 1}, {"z", 1}}, {{{0, 1}, basis_vector(2)}, {{1, 0}, basis_vector(2)}}});
  // negative degrees: u(-1), v(0), w(-1), vu = w
  seeds.push_back({{{"u", -1}, {"v", 0}, {"w", -1}}, {{{1, 0}, basis_vector(2)}, {{0, 1}, basis_vector(2)}}});
  // two even generators of degree 2 with a single product
  seeds.push_back({{{"p", 2}, {"q", 2}, {"r", 4}},
                   {{{0, 1}, basis_vector(2)}, {{1, 0}, basis_vector(2)}, {{0, 0}, basis_vector(2)}}});
  return seeds;
}

inline Scalar small_scalar(std::mt19937& rng, int bound = 2) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  return Scalar(dist(rng));
}

/// Random invertible change of basis preserving degrees.
inline linalg::Matrix random_graded_basis_change(const GradedSpace& space, std::mt19937& rng) {
  const int n = space.size();
  for (;;) {
    linalg::Matrix p(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (space.degree(i) == space.degree(j)) p.set(i, j, small_scalar(rng));
      }
    }
    if (linalg::inverse(p)) return p;
  }
}

/// A seed algebra rewritten in a random degree-preserving basis; validated by Algebra::build.
inline Algebra random_algebra(std::mt19937& rng) {
  auto seeds = seed_algebras();
  std::uniform_int_distribution<int> pick(0, static_cast<int>(seeds.size()) - 1);
  auto [generators, table] = seeds[pick(rng)];
  for (auto& g : generators) g.name += "'";
  const SpacePtr space = make_space(generators, "R");
  const Algebra seed = Algebra::build(space, table);

  const linalg::Matrix p = random_graded_basis_change(*space, rng);
  const linalg::Matrix q = *linalg::inverse(p);
  const int n = space->size();
  auto column = [&](int i) {
    Vector v;
    for (int j = 0; j < n; ++j) v.add(j, p.get(j, i));
    return v;
  };
  ProductTable next;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Vector old = seed.multiply(column(i), column(k));
      Vector value;
      for (const auto& [j, coeff] : old) {
        for (int r = 0; r < n; ++r) value.add(r, q.get(r, j) * coeff);
      }
      if (!value.is_zero()) next[{i, k}] = value;
    }
  }
  return Algebra::build(space, next);
}

/// Random homogeneous linear map of the given degree.
inline LinearMap random_linear_map(const SpacePtr& source, const SpacePtr& target, int degree, std::mt19937& rng) {
  std::map<int, Vector> columns;
  for (int i = 0; i < source->size(); ++i) {
    Vector v;
    for (int j = 0; j < target->size(); ++j) {
      if (target->degree(j) == source->degree(i) + degree) v.add(j, small_scalar(rng));
    }
    if (!v.is_zero()) columns[i] = v;
  }
  return LinearMap::build(source, target, degree, columns);
}

/// Random Taylor family with arities 1..max_arity.
inline TaylorFamily random_family(const SpacePtr& source, const SpacePtr& target, int degree, int max_arity,
                                  std::mt19937& rng) {
  TaylorFamily family{source, target, degree, {}};
  const SymmetricCoalgebra coalgebra(source, max_arity);
  for (int n = 1; n <= max_arity; ++n) {
    for (const Monomial& m : coalgebra.monomials(n)) {
      Vector v;
      for (int j = 0; j < target->size(); ++j) {
        if (target->degree(j) == coalgebra.degree(m) + degree) v.add(j, small_scalar(rng));
      }
      family.set(m, v);
    }
  }
  return family;
}

}  // namespace cumulant::testing
