#pragma once

#include <memory>
#include <vector>

#include "superw/lie_superalgebra.hpp"

namespace superw {

/// gl_{M|N} realised on an IndexUniverse, with basis the matrix units.
/// Generator ids are row * size + col.
class GeneralLinear {
 public:
  explicit GeneralLinear(IndexUniverse universe);

  const IndexUniverse& universe() const { return universe_; }
  std::shared_ptr<const LieSuperalgebra> lie_ptr() const { return lie_; }
  const LieSuperalgebra& lie() const { return *lie_; }
  std::size_t rank() const { return universe_.size(); }
  std::size_t dimension() const { return rank() * rank(); }

  GenId generator(std::size_t row, std::size_t col) const;
  /// Validates that the element belongs to this universe.
  GenId generator(const BasisElement& x) const;
  BasisElement basis(GenId g) const;
  std::size_t row_of(GenId g) const { return g / rank(); }
  std::size_t col_of(GenId g) const { return g % rank(); }

  /// [e_{ab}, e_{cd}] = d_{bc} e_{ad} - (-1)^{(|a|+|b|)(|c|+|d|)} d_{ad} e_{cb}.
  /// Throws std::invalid_argument when an index is foreign to this universe.
  LieElement bracket_basis(const BasisElement& x, const BasisElement& y) const;

  /// Supertrace form (x, y) = str(xy); on matrix units (-1)^{|a|} d_{bc} d_{ad}.
  Scalar str_form(const LieElement& x, const LieElement& y) const;

  /// Killing form str(ad x o ad y) computed from the adjoint action on the basis.
  Scalar killing_form(const LieElement& x, const LieElement& y) const;

  LieElement identity() const;

 private:
  IndexUniverse universe_;
  std::shared_ptr<const LieSuperalgebra> lie_;
};

/// Structure constants of gl on the given universe.
std::shared_ptr<const LieSuperalgebra> make_general_linear(const IndexUniverse& universe);

/// Direct sum of `copies` copies of `summand`; generator s*dim + g is g in copy s.
std::shared_ptr<const LieSuperalgebra> make_direct_sum(const LieSuperalgebra& summand,
                                                       std::size_t copies);

/// Gram matrix of a bilinear form over the full gl basis.
std::vector<std::vector<Scalar>> gram_matrix(
    const GeneralLinear& gl, Scalar (GeneralLinear::*form)(const LieElement&, const LieElement&) const);

}  // namespace superw
