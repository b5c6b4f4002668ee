#include "cumulant/cumulant_bijection.hpp"

#include "cumulant/errors.hpp"

namespace cumulant {

Vector tau(const Algebra& algebra, const Monomial& m) {
  if (m.factors.empty()) throw MismatchError("tau of an empty monomial");
  Vector product = basis_vector(m.factors.front());
  for (std::size_t i = 1; i < m.factors.size() && !product.is_zero(); ++i) {
    product = algebra.multiply(product, basis_vector(m.factors[i]));
  }
  return product;
}

namespace {

Vector tau_of(const Algebra& algebra, const SElement& v) {
  Vector out;
  for (const auto& [m, c] : v) out.add_scaled(tau(algebra, m), c);
  return out;
}

void require_algebra_space(const Algebra& algebra, const SymmetricCoalgebra& coalgebra) {
  if (!same_space(algebra.space(), coalgebra.space())) throw MismatchError("coalgebra is not over this algebra");
}

}  // namespace

SElement tau_tilde(const Algebra& algebra, const SymmetricCoalgebra& coalgebra, const Monomial& m) {
  require_algebra_space(algebra, coalgebra);
  return sum_over_partitions(coalgebra, coalgebra, m, [&](const Monomial& b) { return tau(algebra, b); });
}

SElement tau_tilde(const Algebra& algebra, const SymmetricCoalgebra& coalgebra, const SElement& v) {
  SElement out;
  for (const auto& [m, c] : v) out.add_scaled(tau_tilde(algebra, coalgebra, m), c);
  return out;
}

SElement tau_tilde_series(const Algebra& algebra, const SymmetricCoalgebra& coalgebra, const Monomial& m) {
  require_algebra_space(algebra, coalgebra);
  SElement out;
  std::vector<Vector> values;
  std::vector<const Vector*> pointers;
  for (int k = 1; k <= m.weight(); ++k) {
    const Scalar reassembly(1, factorial(k));
    for (const auto& [tuple, c] : coalgebra.iterated_coproduct(m, k)) {
      values.clear();
      pointers.clear();
      for (const auto& part : tuple) values.push_back(tau(algebra, part));
      for (const auto& v : values) pointers.push_back(&v);
      coalgebra.wedge_vectors(pointers, c * reassembly, out);
    }
  }
  return out;
}

CumulantContext::CumulantContext(Algebra algebra, int cap)
    : algebra_(std::move(algebra)),
      coalgebra_(algebra_.space(), cap),
      forward_(TabulatedMap::zero(algebra_.space(), algebra_.space(), 0, cap)),
      inverse_(forward_) {
  std::map<Monomial, Vector> products;
  auto block = [&](const Monomial& b) -> Vector {
    auto it = products.find(b);
    if (it == products.end()) it = products.emplace(b, tau(algebra_, b)).first;
    return it->second;
  };
  forward_ = TabulatedMap::tabulate(coalgebra_, algebra_.space(), 0, [&](const Monomial& m) {
    return sum_over_partitions(coalgebra_, coalgebra_, m, block);
  });
  inverse_ = triangular_inverse(forward_);
}

TabulatedMap conjugate(const TabulatedMap& map, const CumulantContext& source, const CumulantContext& target,
                       Direction direction) {
  if (!same_space(map.source(), source.space()) || !same_space(map.target(), target.space())) {
    throw MismatchError("conjugate: map does not act between the given algebras");
  }
  if (direction == Direction::kPush) return compose(target.forward(), compose(map, source.inverse()));
  return compose(target.inverse(), compose(map, source.forward()));
}

TabulatedMap conjugate(const TabulatedMap& map, const CumulantContext& context, Direction direction) {
  return conjugate(map, context, context, direction);
}

TaylorTable homomorphism_defect(const LinearMap& f, const CumulantContext& source, const CumulantContext& target,
                                int n) {
  if (n < 1 || n > source.cap()) throw MismatchError("defect arity outside 1..cap");
  const TabulatedMap extension = extend_coalgebra_map(TaylorFamily::from_linear_map(f), source.cap());
  return taylor_extract(conjugate(extension, source, target, Direction::kPull), n);
}

TaylorFamily homomorphism_defects(const LinearMap& f, const CumulantContext& source, const CumulantContext& target) {
  const TabulatedMap extension = extend_coalgebra_map(TaylorFamily::from_linear_map(f), source.cap());
  return taylor_family(conjugate(extension, source, target, Direction::kPull));
}

TaylorTable derivation_defect(const LinearMap& d, const CumulantContext& context, int n) {
  if (n < 1 || n > context.cap()) throw MismatchError("defect arity outside 1..cap");
  const TabulatedMap extension = extend_coderivation(TaylorFamily::from_linear_map(d), context.cap());
  return taylor_extract(conjugate(extension, context, Direction::kPull), n);
}

TaylorFamily derivation_defects(const LinearMap& d, const CumulantContext& context) {
  const TabulatedMap extension = extend_coderivation(TaylorFamily::from_linear_map(d), context.cap());
  return taylor_family(conjugate(extension, context, Direction::kPull));
}

bool vanishes_above_arity_one(const TaylorFamily& family) {
  for (const auto& [n, table] : family.arities) {
    if (n >= 2 && !table.empty()) return false;
  }
  return true;
}

CheckReport check_intertwines_tau(const TabulatedMap& map, const CumulantContext& source,
                                  const CumulantContext& target, const LinearMap& m) {
  CheckReport report{"intertwines_tau"};
  for (const auto& w : source.coalgebra().monomials()) {
    ++report.checked;
    if (!(tau_of(target.algebra(), map.at(w)) == m.apply(tau(source.algebra(), w)))) {
      report.passed = false;
      report.witness = factor_names(*source.space(), w);
      report.detail = "τ∘X differs from m∘τ on " + render(*source.space(), w);
      break;
    }
  }
  return report;
}

}  // namespace cumulant
