#include "cumulant/morphisms.hpp"

#include "cumulant/errors.hpp"

namespace cumulant {

namespace {

const Vector kZeroVector;
const SElement kZeroElement;

void require_same(const SpacePtr& a, const SpacePtr& b, const char* what) {
  if (!same_space(a, b)) throw MismatchError(std::string(what) + ": presentations differ");
}

}  // namespace

// ---------------------------------------------------------------------------
// TaylorFamily

TaylorFamily TaylorFamily::from_linear_map(const LinearMap& map) {
  TaylorFamily family{map.source(), map.target(), map.degree(), {}};
  for (const auto& [i, col] : map.columns()) family.set(Monomial{{i}}, col);
  return family;
}

const Vector& TaylorFamily::value(const Monomial& m) const {
  auto arity = arities.find(m.weight());
  if (arity == arities.end()) return kZeroVector;
  auto it = arity->second.find(m);
  return it == arity->second.end() ? kZeroVector : it->second;
}

void TaylorFamily::set(const Monomial& m, Vector v) {
  if (v.is_zero()) {
    auto arity = arities.find(m.weight());
    if (arity != arities.end()) {
      arity->second.erase(m);
      if (arity->second.empty()) arities.erase(arity);
    }
    return;
  }
  arities[m.weight()][m] = std::move(v);
}

int TaylorFamily::max_arity() const { return arities.empty() ? 0 : arities.rbegin()->first; }

TaylorFamily TaylorFamily::without_arity(int n) const {
  TaylorFamily copy = *this;
  copy.arities.erase(n);
  return copy;
}

void TaylorFamily::validate() const {
  for (const auto& [n, table] : arities) {
    for (const auto& [m, v] : table) {
      if (m.weight() != n) throw ValidationError("Taylor table entry stored under the wrong arity", render(*source, m));
      check_indices(*target, v);
      const auto d = homogeneous_degree(*target, v);
      if (d && *d == monomial_degree(*source, m) + degree) continue;
      throw ValidationError("Taylor coefficient on " + render(*source, m) + " is not homogeneous of degree " +
                                std::to_string(monomial_degree(*source, m) + degree),
                            render(*source, m));
    }
  }
}

bool operator==(const TaylorFamily& a, const TaylorFamily& b) {
  return same_space(a.source, b.source) && same_space(a.target, b.target) && a.degree == b.degree &&
         a.arities == b.arities;
}

// ---------------------------------------------------------------------------
// TabulatedMap

TabulatedMap::TabulatedMap(SpacePtr source, SpacePtr target, int degree, int cap, Table table)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree), cap_(cap), table_(std::move(table)) {
  for (auto it = table_.begin(); it != table_.end();) {
    it = it->second.is_zero() ? table_.erase(it) : std::next(it);
  }
}

TabulatedMap TabulatedMap::tabulate(const SymmetricCoalgebra& source, SpacePtr target, int degree,
                                    const std::function<SElement(const Monomial&)>& value) {
  Table table;
  for (const auto& m : source.monomials()) {
    SElement v = value(m);
    if (!v.is_zero()) table.emplace(m, std::move(v));
  }
  return TabulatedMap(source.space(), std::move(target), degree, source.cap(), std::move(table));
}

TabulatedMap TabulatedMap::identity(const SymmetricCoalgebra& coalgebra) {
  return tabulate(coalgebra, coalgebra.space(), 0, [](const Monomial& m) { return SElement(m, Scalar(1)); });
}

TabulatedMap TabulatedMap::zero(SpacePtr source, SpacePtr target, int degree, int cap) {
  return TabulatedMap(std::move(source), std::move(target), degree, cap, {});
}

const SElement& TabulatedMap::at(const Monomial& m) const {
  auto it = table_.find(m);
  return it == table_.end() ? kZeroElement : it->second;
}

SElement TabulatedMap::apply(const SElement& v) const {
  SElement out;
  for (const auto& [m, c] : v) {
    if (m.weight() < 1 || m.weight() > cap_) {
      throw MismatchError("argument of weight " + std::to_string(m.weight()) + " exceeds the cap " +
                          std::to_string(cap_));
    }
    out.add_scaled(at(m), c);
  }
  return out;
}

TabulatedMap compose(const TabulatedMap& outer, const TabulatedMap& inner) {
  require_same(inner.target(), outer.source(), "compose");
  if (inner.cap() != outer.cap()) throw MismatchError("compose: weight caps differ");
  TabulatedMap::Table table;
  for (const auto& [m, v] : inner.table()) table.emplace(m, outer.apply(v));
  return TabulatedMap(inner.source(), outer.target(), inner.degree() + outer.degree(), inner.cap(), std::move(table));
}

namespace {

TabulatedMap combine(const TabulatedMap& a, const TabulatedMap& b, const Scalar& sign) {
  require_same(a.source(), b.source(), "sum");
  require_same(a.target(), b.target(), "sum");
  if (a.cap() != b.cap()) throw MismatchError("sum: weight caps differ");
  if (a.degree() != b.degree() && !a.table().empty() && !b.table().empty()) {
    throw MismatchError("sum: operator degrees differ");
  }
  TabulatedMap::Table table = a.table();
  for (const auto& [m, v] : b.table()) table[m].add_scaled(v, sign);
  return TabulatedMap(a.source(), a.target(), a.table().empty() ? b.degree() : a.degree(), a.cap(), std::move(table));
}

}  // namespace

TabulatedMap operator+(const TabulatedMap& a, const TabulatedMap& b) { return combine(a, b, Scalar(1)); }
TabulatedMap operator-(const TabulatedMap& a, const TabulatedMap& b) { return combine(a, b, Scalar(-1)); }

TabulatedMap operator*(const Scalar& s, const TabulatedMap& m) {
  TabulatedMap::Table table;
  for (const auto& [k, v] : m.table()) table.emplace(k, s * v);
  return TabulatedMap(m.source(), m.target(), m.degree(), m.cap(), std::move(table));
}

TabulatedMap bracket(const TabulatedMap& a, const TabulatedMap& b) {
  TabulatedMap ab = compose(a, b);
  TabulatedMap ba = compose(b, a);
  TabulatedMap out = ab - Scalar(koszul_factor(a.degree(), b.degree())) * ba;
  return TabulatedMap(out.source(), out.target(), a.degree() + b.degree(), out.cap(), out.table());
}

std::optional<Monomial> first_difference(const TabulatedMap& a, const TabulatedMap& b) {
  require_same(a.source(), b.source(), "compare");
  require_same(a.target(), b.target(), "compare");
  auto ia = a.table().begin();
  auto ib = b.table().begin();
  while (ia != a.table().end() || ib != b.table().end()) {
    if (ib == b.table().end() || (ia != a.table().end() && ia->first < ib->first)) return ia->first;
    if (ia == a.table().end() || ib->first < ia->first) return ib->first;
    if (!(ia->second == ib->second)) return ia->first;
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

CheckReport compare_maps(std::string name, const TabulatedMap& a, const TabulatedMap& b) {
  CheckReport report{std::move(name)};
  report.checked = static_cast<int>(a.source_coalgebra().monomials().size());
  if (auto w = first_difference(a, b)) {
    report.passed = false;
    report.witness = factor_names(*a.source(), *w);
    report.detail = "maps differ on " + render(*a.source(), *w);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Extensions

SElement sum_over_partitions(const SymmetricCoalgebra& source, const SymmetricCoalgebra& target, const Monomial& m,
                             const std::function<Vector(const Monomial&)>& block) {
  SElement out;
  std::vector<Vector> values;
  std::vector<const Vector*> pointers;
  for_each_set_partition(m.weight(), [&](const Blocks& blocks) {
    values.clear();
    for (const auto& b : blocks) {
      values.push_back(block(sub_monomial(m, b)));
      if (values.back().is_zero()) return;
    }
    pointers.clear();
    for (const auto& v : values) pointers.push_back(&v);
    const int sign = block_sign(*source.space(), m, blocks);
    target.wedge_vectors(pointers, Scalar(sign), out);
  });
  return out;
}

TabulatedMap extend_coderivation(const TaylorFamily& family, int cap) {
  require_same(family.source, family.target, "extend_coderivation");
  const SymmetricCoalgebra coalgebra(family.source, cap);
  const GradedSpace& space = *family.source;
  const int top = family.max_arity();
  return TabulatedMap::tabulate(coalgebra, family.target, family.degree, [&](const Monomial& m) {
    SElement out;
    const int n = m.weight();
    Blocks split(2);
    std::vector<int> factors;
    for (int k = 1; k <= std::min(n, top); ++k) {
      for_each_subset(n, k, [&](const std::vector<int>& chosen) {
        const Vector& value = family.value(sub_monomial(m, chosen));
        if (value.is_zero()) return;
        split[0] = chosen;
        split[1].clear();
        for (int p = 0, c = 0; p < n; ++p) {
          if (c < k && chosen[c] == p) {
            ++c;
          } else {
            split[1].push_back(p);
          }
        }
        const int sign = block_sign(space, m, split);
        for (const auto& [g, coeff] : value) {
          factors.assign(1, g);
          for (int p : split[1]) factors.push_back(m.factors[p]);
          if (auto normal = normalize_monomial(factors, space)) {
            out.add(normal->first, coeff * (sign * normal->second));
          }
        }
      });
    }
    return out;
  });
}

TabulatedMap extend_coalgebra_map(const TaylorFamily& family, int cap) {
  if (family.degree != 0) {
    throw MismatchError("extend_coalgebra_map: coalgebra maps need operator degree 0, got " +
                        std::to_string(family.degree));
  }
  const SymmetricCoalgebra source(family.source, cap);
  const SymmetricCoalgebra target(family.target, cap);
  return TabulatedMap::tabulate(source, family.target, 0, [&](const Monomial& m) {
    return sum_over_partitions(source, target, m, [&](const Monomial& b) { return family.value(b); });
  });
}

TaylorTable taylor_extract(const TabulatedMap& map, int n) {
  TaylorTable table;
  for (const auto& m : map.source_coalgebra().monomials(n)) {
    Vector v = SymmetricCoalgebra::linear_part(map.at(m));
    if (!v.is_zero()) table.emplace(m, std::move(v));
  }
  return table;
}

TaylorFamily taylor_family(const TabulatedMap& map) {
  TaylorFamily family{map.source(), map.target(), map.degree(), {}};
  for (int n = 1; n <= map.cap(); ++n) {
    auto table = taylor_extract(map, n);
    if (!table.empty()) family.arities.emplace(n, std::move(table));
  }
  return family;
}

// ---------------------------------------------------------------------------
// Checkers

namespace {

CheckReport run_law(std::string name, const TabulatedMap& map,
                    const std::function<TensorPairSum(const Monomial&)>& lhs,
                    const std::function<TensorPairSum(const Monomial&)>& rhs) {
  CheckReport report{std::move(name)};
  for (const auto& m : map.source_coalgebra().monomials()) {
    ++report.checked;
    if (!(lhs(m) == rhs(m))) {
      report.passed = false;
      report.witness = factor_names(*map.source(), m);
      report.detail = "law fails on " + render(*map.source(), m);
      break;
    }
  }
  return report;
}

}  // namespace

CheckReport check_comorphism(const TabulatedMap& map) {
  const SymmetricCoalgebra source = map.source_coalgebra();
  const SymmetricCoalgebra target = map.target_coalgebra();
  const GradedSpace& space = *map.source();
  return run_law(
      "comorphism", map, [&](const Monomial& m) { return target.coproduct(map.at(m)); },
      [&](const Monomial& m) {
        TensorPairSum out;
        for (const auto& [pair, c] : source.coproduct(m)) {
          const int sign = koszul_factor(map.degree(), monomial_degree(space, pair.first));
          out += tensor(map.at(pair.first), map.at(pair.second), c * sign);
        }
        return out;
      });
}

CheckReport check_coderivation(const TabulatedMap& map) {
  require_same(map.source(), map.target(), "check_coderivation");
  const SymmetricCoalgebra coalgebra = map.source_coalgebra();
  const GradedSpace& space = *map.source();
  return run_law(
      "coderivation", map, [&](const Monomial& m) { return coalgebra.coproduct(map.at(m)); },
      [&](const Monomial& m) {
        TensorPairSum out;
        for (const auto& [pair, c] : coalgebra.coproduct(m)) {
          out += tensor(map.at(pair.first), SElement(pair.second, Scalar(1)), c);
          const int sign = koszul_factor(map.degree(), monomial_degree(space, pair.first));
          out += tensor(SElement(pair.first, Scalar(1)), map.at(pair.second), c * sign);
        }
        return out;
      });
}

CheckReport check_unitriangular(const TabulatedMap& map) {
  CheckReport report{"unitriangular"};
  if (!same_space(map.source(), map.target()) || map.degree() != 0) {
    report.passed = false;
    report.detail = "not a degree-0 endomorphism";
    return report;
  }
  for (const auto& m : map.source_coalgebra().monomials()) {
    ++report.checked;
    SElement rest = map.at(m) - SElement(m, Scalar(1));
    if (SymmetricCoalgebra::max_weight(rest) >= m.weight()) {
      report.passed = false;
      report.witness = factor_names(*map.source(), m);
      report.detail = "leading term is not the identity on " + render(*map.source(), m);
      break;
    }
  }
  return report;
}

TabulatedMap triangular_inverse(const TabulatedMap& map) {
  const CheckReport triangular = check_unitriangular(map);
  if (!triangular.passed) {
    std::string witness;
    for (const auto& name : triangular.witness) witness += (witness.empty() ? "" : "∧") + name;
    throw ValidationError(triangular.detail, witness);
  }
  TabulatedMap::Table inverse;
  auto apply_inverse = [&](const SElement& v) {
    SElement out;
    for (const auto& [m, c] : v) {
      auto it = inverse.find(m);
      if (it != inverse.end()) out.add_scaled(it->second, c);
    }
    return out;
  };
  // Monomial order is weight-first, so lower weights are always ready.
  for (const auto& m : map.source_coalgebra().monomials()) {
    SElement value(m, Scalar(1));
    value -= apply_inverse(map.at(m) - SElement(m, Scalar(1)));
    inverse.emplace(m, std::move(value));
  }
  return TabulatedMap(map.source(), map.target(), 0, map.cap(), std::move(inverse));
}

}  // namespace cumulant
