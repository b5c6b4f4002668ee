#include "cumulant/symmetric_coalgebra.hpp"

#include <algorithm>
#include <numeric>

#include "cumulant/errors.hpp"

namespace cumulant {

int koszul_sign(std::span<const int> degrees, std::span<const int> permutation) {
  const auto n = permutation.size();
  if (degrees.size() != n) throw MismatchError("koszul_sign: permutation and degree list differ in length");
  std::vector<bool> seen(n, false);
  for (int p : permutation) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[p]) {
      throw MismatchError("koszul_sign: not a permutation of 0..n-1");
    }
    seen[p] = true;
  }
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (!is_odd(degrees[permutation[k]])) continue;
    for (std::size_t l = k + 1; l < n; ++l) {
      if (permutation[k] > permutation[l] && is_odd(degrees[permutation[l]])) sign = -sign;
    }
  }
  return sign;
}

std::optional<std::pair<Monomial, int>> normalize_monomial(std::span<const int> factors, const GradedSpace& space) {
  const int n = static_cast<int>(factors.size());
  std::vector<int> degrees(n);
  for (int i = 0; i < n; ++i) {
    if (factors[i] < 0 || factors[i] >= space.size()) throw MismatchError("monomial factor index out of range");
    degrees[i] = space.degree(factors[i]);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return factors[a] < factors[b]; });

  Monomial m;
  m.factors.reserve(n);
  for (int p : order) {
    const int g = factors[p];
    if (!m.factors.empty() && m.factors.back() == g && space.odd(g)) return std::nullopt;
    m.factors.push_back(g);
  }
  return std::pair{std::move(m), koszul_sign(degrees, order)};
}

int monomial_degree(const GradedSpace& space, const Monomial& m) {
  int d = 0;
  for (int g : m.factors) d += space.degree(g);
  return d;
}

std::vector<std::string> factor_names(const GradedSpace& space, const Monomial& m) {
  std::vector<std::string> names;
  names.reserve(m.factors.size());
  for (int g : m.factors) names.push_back(space.name(g));
  return names;
}

std::string render(const GradedSpace& space, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.factors.size(); ++i) {
    if (i) out += "∧";
    out += space.name(m.factors[i]);
  }
  return out;
}

Monomial sub_monomial(const Monomial& m, std::span<const int> positions) {
  Monomial out;
  out.factors.reserve(positions.size());
  for (int p : positions) out.factors.push_back(m.factors[p]);
  return out;
}

int block_sign(const GradedSpace& space, const Monomial& m, const Blocks& blocks) {
  std::vector<int> degrees(m.factors.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) degrees[i] = space.degree(m.factors[i]);
  std::vector<int> order;
  order.reserve(degrees.size());
  for (const auto& block : blocks) order.insert(order.end(), block.begin(), block.end());
  return koszul_sign(degrees, order);
}

SymmetricCoalgebra::SymmetricCoalgebra(SpacePtr space, int cap) : space_(std::move(space)), cap_(cap) {
  if (!space_) throw MismatchError("symmetric coalgebra needs a space");
  if (cap_ < 1) throw MismatchError("weight cap must be at least 1");
}

std::vector<Monomial> SymmetricCoalgebra::monomials(int weight) const {
  std::vector<Monomial> out;
  if (weight < 1) return out;
  Monomial current;
  const int n = space_->size();
  auto rec = [&](auto&& self, int start) -> void {
    if (current.weight() == weight) {
      out.push_back(current);
      return;
    }
    for (int g = start; g < n; ++g) {
      current.factors.push_back(g);
      self(self, space_->odd(g) ? g + 1 : g);
      current.factors.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Monomial> SymmetricCoalgebra::monomials() const {
  std::vector<Monomial> out;
  for (int w = 1; w <= cap_; ++w) {
    auto layer = monomials(w);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

TensorPairSum SymmetricCoalgebra::coproduct(const Monomial& m) const {
  TensorPairSum out;
  const int n = m.weight();
  if (n < 2) return out;
  if (n > 30) throw MismatchError("monomial weight too large for coproduct enumeration");
  Blocks split(2);
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    split[0].clear();
    split[1].clear();
    for (int p = 0; p < n; ++p) split[(mask >> p) & 1u ? 0 : 1].push_back(p);
    const int sign = block_sign(*space_, m, split);
    out.add({sub_monomial(m, split[0]), sub_monomial(m, split[1])}, Scalar(sign));
  }
  return out;
}

TensorPairSum SymmetricCoalgebra::coproduct(const SElement& v) const {
  TensorPairSum out;
  for (const auto& [m, c] : v) out.add_scaled(coproduct(m), c);
  return out;
}

TensorTupleSum SymmetricCoalgebra::iterated_coproduct(const Monomial& m, int k) const {
  if (k < 1 || k > m.weight()) {
    throw MismatchError("iterated_coproduct: k=" + std::to_string(k) + " outside 1.." + std::to_string(m.weight()));
  }
  TensorTupleSum current(TensorTuple{m}, Scalar(1));
  for (int step = 1; step < k; ++step) {
    TensorTupleSum next;
    for (const auto& [tuple, c] : current) {
      for (const auto& [pair, s] : coproduct(tuple.back())) {
        TensorTuple extended(tuple.begin(), tuple.end() - 1);
        extended.push_back(pair.first);
        extended.push_back(pair.second);
        next.add(extended, c * s);
      }
    }
    current = std::move(next);
  }
  return current;
}

SElement SymmetricCoalgebra::weight_project(const SElement& v, int n) {
  SElement out;
  for (const auto& [m, c] : v) {
    if (m.weight() == n) out.add(m, c);
  }
  return out;
}

Vector SymmetricCoalgebra::linear_part(const SElement& v) {
  Vector out;
  for (const auto& [m, c] : v) {
    if (m.weight() == 1) out.add(m.factors.front(), c);
  }
  return out;
}

SElement SymmetricCoalgebra::embed(const Vector& v) {
  SElement out;
  for (const auto& [g, c] : v) out.add(Monomial{{g}}, c);
  return out;
}

int SymmetricCoalgebra::max_weight(const SElement& v) {
  int w = 0;
  for (const auto& [m, c] : v) w = std::max(w, m.weight());
  return w;
}

WedgeResult SymmetricCoalgebra::wedge(const SElement& u, const SElement& v) const {
  WedgeResult result;
  std::vector<int> factors;
  for (const auto& [a, ca] : u) {
    for (const auto& [b, cb] : v) {
      if (a.weight() + b.weight() > cap_) {
        result.overflow = true;
        continue;
      }
      factors = a.factors;
      factors.insert(factors.end(), b.factors.begin(), b.factors.end());
      if (auto normal = normalize_monomial(factors, *space_)) {
        result.value.add(normal->first, ca * cb * normal->second);
      }
    }
  }
  return result;
}

void SymmetricCoalgebra::wedge_vectors(std::span<const Vector* const> factors, const Scalar& coeff,
                                       SElement& out) const {
  const std::size_t k = factors.size();
  for (const Vector* f : factors) {
    if (f->is_zero()) return;
  }
  std::vector<int> chosen(k);
  auto rec = [&](auto&& self, std::size_t i, const Scalar& c) -> void {
    if (i == k) {
      if (auto normal = normalize_monomial(chosen, *space_)) out.add(normal->first, c * normal->second);
      return;
    }
    for (const auto& [g, a] : *factors[i]) {
      chosen[i] = g;
      self(self, i + 1, c * a);
    }
  };
  rec(rec, 0, coeff);
}

void SymmetricCoalgebra::check_element(const SElement& v) const {
  for (const auto& [m, c] : v) {
    if (m.weight() < 1 || m.weight() > cap_) {
      throw MismatchError("element has a term of weight " + std::to_string(m.weight()) + " outside 1.." +
                          std::to_string(cap_));
    }
    for (int g : m.factors) {
      if (g < 0 || g >= space_->size()) throw MismatchError("element refers to a generator outside the space");
    }
  }
}

TensorPairSum tensor(const SElement& left, const SElement& right, const Scalar& coeff) {
  TensorPairSum out;
  for (const auto& [l, a] : left) {
    for (const auto& [r, b] : right) out.add({l, r}, coeff * a * b);
  }
  return out;
}

}  // namespace cumulant
