#pragma once

#include <map>
#include <utility>

#include "superw/scalar.hpp"

namespace superw {

/// Finite formal sum of keys with nonzero rational coefficients.
///
/// The map never stores a zero coefficient, so two combinations are equal
/// exactly when their maps are equal and the zero element is the empty map.
template <typename Key>
class LinearCombination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Scalar>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;

  static LinearCombination term(Key key, Scalar coeff = Scalar(1)) {
    LinearCombination result;
    result.add(std::move(key), coeff);
    return result;
  }

  void add(const Key& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(Key&& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += factor * other
  void add_scaled(const LinearCombination& other, const Scalar& factor) {
    if (factor == 0) return;
    for (const auto& [key, coeff] : other.terms_) add(key, coeff * factor);
  }

  Scalar coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, coeff);
    return *this;
  }

  LinearCombination& operator-=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add(key, -coeff);
    return *this;
  }

  LinearCombination& operator*=(const Scalar& factor) {
    if (factor == 0) {
      terms_.clear();
    } else {
      for (auto& entry : terms_) entry.second *= factor;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Scalar& s) { return a *= s; }
  friend LinearCombination operator*(const Scalar& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Scalar(-1); }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  map_type terms_;
};

}  // namespace superw
