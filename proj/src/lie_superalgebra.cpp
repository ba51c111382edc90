#include "superw/lie_superalgebra.hpp"

#include <stdexcept>

namespace superw {

LieSuperalgebra::LieSuperalgebra(std::vector<Parity> parities, std::vector<MatrixUnitLabel> labels,
                                 const BracketRule& rule)
    : parities_(std::move(parities)), labels_(std::move(labels)) {
  if (labels_.size() != parities_.size())
    throw std::invalid_argument("LieSuperalgebra: label count does not match dimension");
  const std::size_t dim = parities_.size();
  offsets_.reserve(dim * dim + 1);
  offsets_.push_back(0);
  for (GenId x = 0; x < dim; ++x) {
    for (GenId y = 0; y < dim; ++y) {
      for (const auto& term : rule(x, y))
        if (term.coeff != 0) table_.push_back(term);
      offsets_.push_back(table_.size());
    }
  }
}

std::span<const StructureTerm> LieSuperalgebra::bracket(GenId x, GenId y) const {
  const std::size_t cell = static_cast<std::size_t>(x) * dimension() + y;
  return {table_.data() + offsets_.at(cell), offsets_[cell + 1] - offsets_[cell]};
}

LieElement LieSuperalgebra::bracket(const LieElement& x, const LieElement& y) const {
  LieElement result;
  for (const auto& [gx, cx] : x)
    for (const auto& [gy, cy] : y)
      for (const auto& term : bracket(gx, gy)) result.add(term.gen, cx * cy * term.coeff);
  return result;
}

std::optional<Parity> LieSuperalgebra::parity(const LieElement& x) const {
  std::optional<Parity> seen;
  for (const auto& entry : x) {
    Parity p = parity(entry.first);
    if (seen && *seen != p) return std::nullopt;
    seen = p;
  }
  return seen.value_or(Parity::even);
}

IndexUniverse::IndexUniverse(std::vector<Parity> parities, std::vector<std::string> labels)
    : parities_(std::move(parities)), labels_(std::move(labels)) {
  if (labels_.size() != parities_.size())
    throw std::invalid_argument("IndexUniverse: label count does not match size");
}

IndexUniverse IndexUniverse::numbered(std::vector<Parity> parities) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < parities.size(); ++i) labels.push_back(std::to_string(i + 1));
  return IndexUniverse(std::move(parities), std::move(labels));
}

std::optional<std::size_t> IndexUniverse::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

}  // namespace superw
