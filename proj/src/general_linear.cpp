#include "superw/general_linear.hpp"

#include <stdexcept>

namespace superw {

std::shared_ptr<const LieSuperalgebra> make_general_linear(const IndexUniverse& universe) {
  const std::size_t d = universe.size();
  std::vector<Parity> parities;
  std::vector<MatrixUnitLabel> labels;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      parities.push_back(universe.parity(a) + universe.parity(b));
      labels.push_back({universe.label(a), universe.label(b)});
    }
  }
  auto rule = [d, &parities](GenId x, GenId y) {
    const std::size_t a = x / d, b = x % d, c = y / d, e = y % d;
    std::vector<StructureTerm> terms;
    if (b == c) terms.push_back({static_cast<GenId>(a * d + e), 1});
    if (a == e) {
      std::int64_t coeff = -koszul_sign(parities[x], parities[y]);
      GenId target = static_cast<GenId>(c * d + b);
      if (!terms.empty() && terms.front().gen == target) {
        terms.front().coeff += coeff;
      } else {
        terms.push_back({target, coeff});
      }
    }
    return terms;
  };
  return std::make_shared<const LieSuperalgebra>(parities, std::move(labels), rule);
}

std::shared_ptr<const LieSuperalgebra> make_direct_sum(const LieSuperalgebra& summand,
                                                       std::size_t copies) {
  const std::size_t d = summand.dimension();
  std::vector<Parity> parities;
  std::vector<MatrixUnitLabel> labels;
  for (std::size_t s = 0; s < copies; ++s) {
    for (GenId g = 0; g < d; ++g) {
      parities.push_back(summand.parity(g));
      const auto& l = summand.label(g);
      const std::string tag = "[" + std::to_string(s + 1) + "]";
      labels.push_back({l.row + tag, l.col + tag});
    }
  }
  auto rule = [d, &summand](GenId x, GenId y) {
    std::vector<StructureTerm> terms;
    if (x / d != y / d) return terms;
    const GenId base = static_cast<GenId>((x / d) * d);
    for (const auto& t : summand.bracket(x % d, y % d)) terms.push_back({base + t.gen, t.coeff});
    return terms;
  };
  return std::make_shared<const LieSuperalgebra>(std::move(parities), std::move(labels), rule);
}

GeneralLinear::GeneralLinear(IndexUniverse universe)
    : universe_(std::move(universe)), lie_(make_general_linear(universe_)) {}

GenId GeneralLinear::generator(std::size_t row, std::size_t col) const {
  if (row >= rank() || col >= rank()) throw std::out_of_range("gl index out of range");
  return static_cast<GenId>(row * rank() + col);
}

GenId GeneralLinear::generator(const BasisElement& x) const {
  for (const GradedIndex& idx : {x.row, x.col}) {
    if (idx.ordinal >= rank() || universe_.parity(idx.ordinal) != idx.parity)
      throw std::invalid_argument("basis element does not belong to this index universe");
  }
  return generator(x.row.ordinal, x.col.ordinal);
}

BasisElement GeneralLinear::basis(GenId g) const {
  const std::size_t a = row_of(g), b = col_of(g);
  return {{a, universe_.parity(a)}, {b, universe_.parity(b)}};
}

LieElement GeneralLinear::bracket_basis(const BasisElement& x, const BasisElement& y) const {
  LieElement result;
  for (const auto& t : lie_->bracket(generator(x), generator(y))) result.add(t.gen, t.coeff);
  return result;
}

Scalar GeneralLinear::str_form(const LieElement& x, const LieElement& y) const {
  Scalar total = 0;
  for (const auto& [gx, cx] : x) {
    const std::size_t a = row_of(gx), b = col_of(gx);
    // only e_{ba} pairs nontrivially with e_{ab}
    const Scalar cy = y.coefficient(generator(b, a));
    if (cy != 0) total += cx * cy * parity_sign(universe_.parity(a));
  }
  return total;
}

Scalar GeneralLinear::killing_form(const LieElement& x, const LieElement& y) const {
  Scalar total = 0;
  for (GenId g = 0; g < dimension(); ++g) {
    LieElement basis_vector = LieElement::term(g);
    LieElement image = lie_->bracket(x, lie_->bracket(y, basis_vector));
    Scalar diag = image.coefficient(g);
    if (diag != 0) total += diag * parity_sign(lie_->parity(g));
  }
  return total;
}

LieElement GeneralLinear::identity() const {
  LieElement result;
  for (std::size_t a = 0; a < rank(); ++a) result.add(generator(a, a), 1);
  return result;
}

std::vector<std::vector<Scalar>> gram_matrix(
    const GeneralLinear& gl,
    Scalar (GeneralLinear::*form)(const LieElement&, const LieElement&) const) {
  const std::size_t d = gl.dimension();
  std::vector<std::vector<Scalar>> gram(d, std::vector<Scalar>(d));
  for (GenId x = 0; x < d; ++x)
    for (GenId y = 0; y < d; ++y)
      gram[x][y] = (gl.*form)(LieElement::term(x), LieElement::term(y));
  return gram;
}

}  // namespace superw
