#include "cumulant/transfer.hpp"

#include "cumulant/cumulant_bijection.hpp"
#include "cumulant/linalg.hpp"

namespace cumulant {

namespace {

CheckReport compare_linear(std::string name, const LinearMap& a, const LinearMap& b) {
  CheckReport report{std::move(name)};
  report.checked = a.source()->size();
  if (auto i = first_difference(a, b)) {
    report.passed = false;
    report.witness = {a.source()->name(*i)};
    report.detail = "identity fails on generator " + a.source()->name(*i);
  }
  return report;
}

void require_map(const LinearMap& m, const SpacePtr& source, const SpacePtr& target, int degree, const char* what) {
  if (!same_space(m.source(), source) || !same_space(m.target(), target)) {
    throw MismatchError(std::string(what) + " acts between the wrong spaces");
  }
  if (m.degree() != degree) {
    throw MismatchError(std::string(what) + " must have degree " + std::to_string(degree) + ", got " +
                        std::to_string(m.degree()));
  }
}

/// d̃ = τ̃⁻¹ ∘ D ∘ τ̃ on SA.
TabulatedMap conjugated_differential(const CumulantContext& context, const LinearMap& differential) {
  const TabulatedMap bare = extend_coderivation(TaylorFamily::from_linear_map(differential), context.cap());
  return conjugate(bare, context, Direction::kPull);
}

CheckReport injectivity(const TabulatedMap& map) {
  CheckReport report{"iota_injective"};
  const auto sources = map.source_coalgebra().monomials();
  const auto targets = map.target_coalgebra().monomials();
  std::map<Monomial, int> row_of;
  for (const auto& m : targets) row_of.emplace(m, static_cast<int>(row_of.size()));
  linalg::Matrix matrix(static_cast<int>(targets.size()), static_cast<int>(sources.size()));
  for (int c = 0; c < static_cast<int>(sources.size()); ++c) {
    for (const auto& [m, v] : map.at(sources[c])) matrix.set(row_of.at(m), c, v);
  }
  report.checked = static_cast<int>(sources.size());
  const int r = linalg::rank(std::move(matrix));
  if (r < report.checked) {
    report.passed = false;
    report.detail = "rank " + std::to_string(r) + " < " + std::to_string(report.checked);
  }
  return report;
}

}  // namespace

RetractData RetractData::trivial(const Algebra& algebra, const LinearMap& differential) {
  const SpacePtr& space = algebra.space();
  return RetractData{algebra,
                     space,
                     differential,
                     differential,
                     LinearMap::identity(space),
                     LinearMap::identity(space),
                     LinearMap::zero(space, space, 1)};
}

std::vector<CheckReport> validate_retract(const RetractData& r) {
  const SpacePtr& a = r.algebra.space();
  const SpacePtr& c = r.complex;
  require_map(r.differential, a, a, -1, "differential");
  require_map(r.complex_differential, c, c, -1, "complex differential");
  require_map(r.inclusion, c, a, 0, "inclusion");
  require_map(r.projection, a, c, 0, "projection");
  require_map(r.homotopy, a, a, 1, "homotopy");

  std::vector<CheckReport> reports;
  reports.push_back(compare_linear("projection_after_inclusion", compose(r.projection, r.inclusion),
                                   LinearMap::identity(c)));
  reports.push_back(compare_linear("inclusion_chain_map", compose(r.inclusion, r.complex_differential),
                                   compose(r.differential, r.inclusion)));
  reports.push_back(compare_linear("projection_chain_map", compose(r.complex_differential, r.projection),
                                   compose(r.projection, r.differential)));
  reports.push_back(compare_linear("homotopy",
                                   compose(r.differential, r.homotopy) + compose(r.homotopy, r.differential),
                                   compose(r.inclusion, r.projection) - LinearMap::identity(a)));
  reports.push_back(compare_linear("differential_square_zero", compose(r.differential, r.differential),
                                   LinearMap::zero(a, a, -2)));
  reports.push_back(compare_linear("complex_differential_square_zero",
                                   compose(r.complex_differential, r.complex_differential),
                                   LinearMap::zero(c, c, -2)));
  return reports;
}

std::vector<CheckReport> validate_transfer_input(const TransferInput& input, int cap) {
  const RetractData& r = input.retract;
  const SpacePtr& a = r.algebra.space();
  const SpacePtr& c = r.complex;
  if (!same_space(input.d_infinity.source, c) || !same_space(input.d_infinity.target, c)) {
    throw MismatchError("d_infinity must act on the complex");
  }
  if (!same_space(input.iota.source, c) || !same_space(input.iota.target, a)) {
    throw MismatchError("iota must map the complex into the algebra");
  }
  std::vector<CheckReport> reports;

  CheckReport degrees{"degrees"};
  if (input.d_infinity.degree != -1 || input.iota.degree != 0) {
    degrees.passed = false;
    degrees.detail = "d_infinity must have degree -1 and iota degree 0";
    reports.push_back(degrees);
    return reports;
  }
  reports.push_back(degrees);

  CheckReport extends{"iota_extends_inclusion"};
  const TaylorFamily linear = TaylorFamily::from_linear_map(r.inclusion);
  for (int g = 0; g < c->size(); ++g) {
    ++extends.checked;
    const Monomial m{{g}};
    if (!(input.iota.value(m) == linear.value(m))) {
      extends.passed = false;
      extends.witness = {c->name(g)};
      extends.detail = "arity-1 part of iota differs from the inclusion on " + c->name(g);
      break;
    }
  }
  reports.push_back(extends);

  const TabulatedMap d_inf = extend_coderivation(input.d_infinity, cap);
  const TabulatedMap iota = extend_coalgebra_map(input.iota, cap);
  const CumulantContext context(r.algebra, cap);
  const TabulatedMap d_tilde = conjugated_differential(context, r.differential);

  CheckReport coder = check_coderivation(d_inf);
  coder.name = "d_infinity_coderivation";
  reports.push_back(coder);
  reports.push_back(compare_maps("d_infinity_square_zero", compose(d_inf, d_inf), TabulatedMap::zero(c, c, -2, cap)));
  CheckReport comor = check_comorphism(iota);
  comor.name = "iota_comorphism";
  reports.push_back(comor);
  reports.push_back(compare_maps("iota_dg_comorphism", compose(iota, d_inf), compose(d_tilde, iota)));
  reports.push_back(injectivity(iota));
  return reports;
}

InducedBijection certify_induced_bijection(const TransferInput& input, int cap) {
  const RetractData& r = input.retract;
  const SpacePtr& c = r.complex;
  std::vector<CheckReport> hypotheses = validate_retract(r);
  for (auto& report : validate_transfer_input(input, cap)) hypotheses.push_back(std::move(report));

  const CumulantContext context(r.algebra, cap);
  const TabulatedMap iota = extend_coalgebra_map(input.iota, cap);
  const TabulatedMap project = extend_coalgebra_map(TaylorFamily::from_linear_map(r.projection), cap);
  TabulatedMap induced = compose(project, compose(context.forward(), iota));

  std::vector<CheckReport> certificates;

  CheckReport linear{"identity_on_F1"};
  for (int g = 0; g < c->size(); ++g) {
    ++linear.checked;
    const Monomial m{{g}};
    if (!(induced.at(m) == SElement(m, Scalar(1)))) {
      linear.passed = false;
      linear.witness = {c->name(g)};
      linear.detail = "induced map is not the identity on " + c->name(g);
      break;
    }
  }
  certificates.push_back(linear);
  certificates.push_back(check_comorphism(induced));

  const TabulatedMap d_c = extend_coderivation(TaylorFamily::from_linear_map(r.complex_differential), cap);
  const TabulatedMap d_inf = extend_coderivation(input.d_infinity, cap);
  certificates.push_back(compare_maps("intertwines_differentials", compose(d_c, induced), compose(induced, d_inf)));

  std::optional<TabulatedMap> inverse;
  CheckReport invertible = check_unitriangular(induced);
  invertible.name = "invertible";
  if (invertible.passed) {
    inverse = triangular_inverse(induced);
    const TabulatedMap id = TabulatedMap::identity(induced.source_coalgebra());
    const CheckReport left = compare_maps("inverse_left", compose(*inverse, induced), id);
    const CheckReport right = compare_maps("inverse_right", compose(induced, *inverse), id);
    if (!left.passed || !right.passed) {
      invertible.passed = false;
      invertible.witness = left.passed ? right.witness : left.witness;
      invertible.detail = "triangular inverse does not invert the map";
    }
  }
  certificates.push_back(invertible);

  TaylorFamily family = taylor_family(induced);
  return InducedBijection{std::move(induced), std::move(inverse), std::move(family), std::move(hypotheses),
                          std::move(certificates)};
}

InducedBijection induced_cumulant_bijection(const TransferInput& input, int cap) {
  InducedBijection result = certify_induced_bijection(input, cap);
  if (!result.certified()) {
    std::string failed;
    for (const auto* list : {&result.hypotheses, &result.certificates}) {
      for (const auto& report : *list) {
        if (!report.passed) failed += (failed.empty() ? "" : ", ") + report.name;
      }
    }
    throw TransferError("induced cumulant bijection not certified: " + failed, std::move(result));
  }
  return result;
}

std::optional<TaylorTable> solve_iota_arity(const TransferInput& input, int arity) {
  const RetractData& r = input.retract;
  const SpacePtr& a = r.algebra.space();
  const SpacePtr& c = r.complex;
  const SymmetricCoalgebra complex_coalgebra(c, arity);
  const auto targets = complex_coalgebra.monomials(arity);

  const CumulantContext context(r.algebra, arity);
  const TabulatedMap d_tilde = conjugated_differential(context, r.differential);
  const TabulatedMap d_inf = extend_coderivation(input.d_infinity, arity);

  TaylorFamily base = input.iota.without_arity(arity);
  // Weight-one part of ι̂∘∂̂∞ - d̃∘ι̂ on every weight-n monomial, flattened.
  auto residual = [&](const TaylorFamily& family) {
    const TabulatedMap iota = extend_coalgebra_map(family, arity);
    const TabulatedMap defect = compose(iota, d_inf) - compose(d_tilde, iota);
    std::vector<Scalar> out(targets.size() * a->size(), Scalar(0));
    for (std::size_t t = 0; t < targets.size(); ++t) {
      for (const auto& [g, v] : SymmetricCoalgebra::linear_part(defect.at(targets[t]))) out[t * a->size() + g] = v;
    }
    return out;
  };

  struct Unknown {
    Monomial monomial;
    int generator;
  };
  std::vector<Unknown> unknowns;
  for (const auto& m : targets) {
    const int degree = monomial_degree(*c, m) + input.iota.degree;
    for (int g = 0; g < a->size(); ++g) {
      if (a->degree(g) == degree) unknowns.push_back({m, g});
    }
  }

  const std::vector<Scalar> r0 = residual(base);
  linalg::Matrix system(static_cast<int>(r0.size()), static_cast<int>(unknowns.size()));
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    TaylorFamily probe = base;
    probe.set(unknowns[k].monomial, basis_vector(unknowns[k].generator));
    const std::vector<Scalar> rk = residual(probe);
    for (std::size_t i = 0; i < rk.size(); ++i) system.set(static_cast<int>(i), static_cast<int>(k), rk[i] - r0[i]);
  }
  std::vector<Scalar> rhs(r0.size());
  for (std::size_t i = 0; i < r0.size(); ++i) rhs[i] = -r0[i];
  const auto solution = linalg::solve(system, rhs);
  if (!solution) return std::nullopt;

  TaylorTable table;
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    if (sgn((*solution)[k]) == 0) continue;
    table[unknowns[k].monomial].add(unknowns[k].generator, (*solution)[k]);
  }
  return table;
}

}  // namespace cumulant
