#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "superw/linear_combination.hpp"
#include "superw/parity.hpp"

namespace superw {

using GenId = std::uint32_t;

/// Element of a Lie superalgebra in its generator basis.
using LieElement = LinearCombination<GenId>;

struct StructureTerm {
  GenId gen;
  std::int64_t coeff;
};

/// Display label of a basis element that is a matrix unit e_{row,col}.
struct MatrixUnitLabel {
  std::string row;
  std::string col;
};

/// Finite-dimensional Lie superalgebra given by a homogeneous basis and
/// integer structure constants [x_a, x_b] = sum_c f_{ab}^c x_c.
class LieSuperalgebra {
 public:
  using BracketRule = std::function<std::vector<StructureTerm>(GenId, GenId)>;

  LieSuperalgebra(std::vector<Parity> parities, std::vector<MatrixUnitLabel> labels,
                  const BracketRule& rule);

  std::size_t dimension() const { return parities_.size(); }
  Parity parity(GenId g) const { return parities_.at(g); }
  const MatrixUnitLabel& label(GenId g) const { return labels_.at(g); }

  std::span<const StructureTerm> bracket(GenId x, GenId y) const;

  /// Bilinear extension of the basis bracket. Both arguments must be homogeneous.
  LieElement bracket(const LieElement& x, const LieElement& y) const;

  /// Parity of a homogeneous element; nullopt if inhomogeneous. Zero is even.
  std::optional<Parity> parity(const LieElement& x) const;

 private:
  std::vector<Parity> parities_;
  std::vector<MatrixUnitLabel> labels_;
  std::vector<std::size_t> offsets_;
  std::vector<StructureTerm> table_;
};

/// Totally ordered set of parity-graded indices {0, ..., size-1}.
class IndexUniverse {
 public:
  IndexUniverse(std::vector<Parity> parities, std::vector<std::string> labels);

  /// Indices labelled "1", "2", ... with the given parities.
  static IndexUniverse numbered(std::vector<Parity> parities);

  std::size_t size() const { return parities_.size(); }
  Parity parity(std::size_t i) const { return parities_.at(i); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<Parity>& parities() const { return parities_; }

  /// Position of a label, or nullopt.
  std::optional<std::size_t> find(const std::string& label) const;

  friend bool operator==(const IndexUniverse&, const IndexUniverse&) = default;

 private:
  std::vector<Parity> parities_;
  std::vector<std::string> labels_;
};

struct GradedIndex {
  std::size_t ordinal;
  Parity parity;
  friend bool operator==(const GradedIndex&, const GradedIndex&) = default;
};

/// Matrix unit e_{row,col}.
struct BasisElement {
  GradedIndex row;
  GradedIndex col;
  Parity parity() const { return row.parity + col.parity; }
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

}  // namespace superw
