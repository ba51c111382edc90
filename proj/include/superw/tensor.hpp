#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "superw/enveloping.hpp"

namespace superw {

/// One PBW monomial per tensor factor.
using TensorMonomial = std::vector<PBWMonomial>;

using TensorElement = LinearCombination<TensorMonomial>;

/// U(a)^{(x) l} with the Koszul sign rule
/// (x_1 (x) ... (x) x_l)(y_1 (x) ... (x) y_l)
///   = (-1)^{sum_{s<t} |x_t||y_s|} x_1 y_1 (x) ... (x) x_l y_l.
class TensorPowerAlgebra {
 public:
  TensorPowerAlgebra(std::shared_ptr<const EnvelopingAlgebra> factor, std::size_t factors);

  const EnvelopingAlgebra& factor() const { return *factor_; }
  std::size_t factors() const { return factors_; }

  TensorElement one() const;
  TensorElement scalar(const Scalar& c) const;
  /// 1^{(x)(s)} (x) x (x) 1^{(x)(l-s-1)}, with s zero-based.
  TensorElement embed(std::size_t position, const UEAElement& x) const;

  /// Throws std::invalid_argument if an operand has the wrong factor count.
  TensorElement multiply(const TensorElement& x, const TensorElement& y) const;
  TensorElement supercommutator(const TensorElement& x, const TensorElement& y) const;

  Parity parity(const TensorMonomial& m) const;
  std::optional<Parity> parity(const TensorElement& x) const;

  /// Total number of letters in a tensor monomial.
  static std::size_t length(const TensorMonomial& m);

 private:
  void check_shape(const TensorElement& x) const;

  std::shared_ptr<const EnvelopingAlgebra> factor_;
  std::size_t factors_;
};

}  // namespace superw
