#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "cumulant/scalar.hpp"

namespace cumulant {

/// Sparse formal linear combination over an ordered key set. Zero
/// coefficients are never stored, so structural equality is value equality.
template <class Key>
class LinearCombination {
 public:
  using Terms = std::map<Key, Scalar>;
  using const_iterator = typename Terms::const_iterator;

  LinearCombination() = default;
  LinearCombination(const Key& key, const Scalar& coeff) { add(key, coeff); }

  void add(const Key& key, const Scalar& coeff) {
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, coeff);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, -coeff);
    return *this;
  }
  LinearCombination& operator*=(const Scalar& factor) {
    if (sgn(factor) == 0) {
      terms_.clear();
    } else {
      for (auto& [key, coeff] : terms_) coeff *= factor;
    }
    return *this;
  }

  /// Adds factor * other without materialising the scaled copy.
  void add_scaled(const LinearCombination& other, const Scalar& factor) {
    if (sgn(factor) == 0) return;
    for (const auto& [key, coeff] : other.terms_) add(key, coeff * factor);
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const Scalar& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Scalar(-1); }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

  bool empty() const noexcept { return terms_.empty(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const noexcept { return terms_.begin(); }
  const_iterator end() const noexcept { return terms_.end(); }
  const Terms& terms() const noexcept { return terms_; }

 private:
  Terms terms_;
};

}  // namespace cumulant
