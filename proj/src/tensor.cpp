#include "superw/tensor.hpp"

#include <stdexcept>

namespace superw {

TensorPowerAlgebra::TensorPowerAlgebra(std::shared_ptr<const EnvelopingAlgebra> factor, std::size_t factors)
    : factor_(std::move(factor)), factors_(factors) {
  if (factors_ == 0) throw std::invalid_argument("TensorPowerAlgebra: need at least one factor");
}

TensorElement TensorPowerAlgebra::one() const { return scalar(Scalar(1)); }

TensorElement TensorPowerAlgebra::scalar(const Scalar& c) const {
  return TensorElement::term(TensorMonomial(factors_), c);
}

TensorElement TensorPowerAlgebra::embed(std::size_t position, const UEAElement& x) const {
  if (position >= factors_) throw std::out_of_range("TensorPowerAlgebra::embed: bad position");
  TensorElement result;
  for (const auto& [mono, coeff] : x) {
    TensorMonomial t(factors_);
    t[position] = mono;
    result.add(std::move(t), coeff);
  }
  return result;
}

Parity TensorPowerAlgebra::parity(const TensorMonomial& m) const {
  Parity p = Parity::even;
  for (const auto& f : m) p += factor_->parity(f);
  return p;
}

std::optional<Parity> TensorPowerAlgebra::parity(const TensorElement& x) const {
  std::optional<Parity> seen;
  for (const auto& entry : x) {
    Parity p = parity(entry.first);
    if (seen && *seen != p) return std::nullopt;
    seen = p;
  }
  return seen.value_or(Parity::even);
}

std::size_t TensorPowerAlgebra::length(const TensorMonomial& m) {
  std::size_t n = 0;
  for (const auto& f : m) n += f.size();
  return n;
}

void TensorPowerAlgebra::check_shape(const TensorElement& x) const {
  for (const auto& entry : x)
    if (entry.first.size() != factors_)
      throw std::invalid_argument("tensor element has the wrong number of factors");
}

TensorElement TensorPowerAlgebra::multiply(const TensorElement& x, const TensorElement& y) const {
  check_shape(x);
  check_shape(y);
  TensorElement result;
  std::vector<Parity> xp(factors_), yp(factors_);
  for (const auto& [mx, cx] : x) {
    for (std::size_t s = 0; s < factors_; ++s) xp[s] = factor_->parity(mx[s]);
    for (const auto& [my, cy] : y) {
      for (std::size_t s = 0; s < factors_; ++s) yp[s] = factor_->parity(my[s]);
      // y_s moves past x_t for every t > s
      int sign = 1;
      Parity passed = Parity::even;
      for (std::size_t s = factors_; s-- > 0;) {
        sign *= koszul_sign(passed, yp[s]);
        passed += xp[s];
      }
      TensorElement partial = TensorElement::term(TensorMonomial(), cx * cy * sign);
      for (std::size_t s = 0; s < factors_; ++s) {
        UEAElement product = factor_->multiply(mx[s], my[s]);
        TensorElement next;
        for (const auto& [head, ch] : partial) {
          for (const auto& [mono, cm] : product) {
            TensorMonomial grown = head;
            grown.push_back(mono);
            next.add(std::move(grown), ch * cm);
          }
        }
        partial = std::move(next);
        if (partial.is_zero()) break;
      }
      result += partial;
    }
  }
  return result;
}

TensorElement TensorPowerAlgebra::supercommutator(const TensorElement& x, const TensorElement& y) const {
  auto px = parity(x), py = parity(y);
  if (!px || !py) throw std::invalid_argument("supercommutator: inhomogeneous argument");
  TensorElement result = multiply(x, y);
  result.add_scaled(multiply(y, x), Scalar(-koszul_sign(*px, *py)));
  return result;
}

}  // namespace superw
