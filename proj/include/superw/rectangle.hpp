#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "superw/lie_superalgebra.hpp"
#include "superw/parity.hpp"

namespace superw {

enum class RowSymbol { delta, epsilon };

/// Word of m deltas and n epsilons; row i is even iff its symbol is delta.
/// Rows are numbered from 1.
class EpsilonDeltaSequence {
 public:
  explicit EpsilonDeltaSequence(std::vector<RowSymbol> symbols);

  /// Accepts ASCII "d"/"e" or the Greek letters δ/ε, e.g. "dedee" or "δεδεε".
  static EpsilonDeltaSequence parse(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  std::size_t m() const;
  std::size_t n() const;
  RowSymbol symbol(std::size_t row) const { return symbols_.at(row - 1); }
  Parity parity(std::size_t row) const;
  std::vector<Parity> parities() const;
  /// ASCII form, e.g. "dedee".
  std::string str() const;

  friend bool operator==(const EpsilonDeltaSequence&, const EpsilonDeltaSequence&) = default;

 private:
  std::vector<RowSymbol> symbols_;
};

/// Element of J = {~1 < ... < ~M < 1 < ... < N}; barred boxes are even.
struct BoxIndex {
  bool barred;
  std::size_t ordinal;
  Parity parity() const { return barred ? Parity::even : Parity::odd; }
  /// "~k" for barred boxes, "k" otherwise.
  std::string label() const;
  friend bool operator==(const BoxIndex&, const BoxIndex&) = default;
};

/// An (m,n)-colored rectangle of height m+n and base l. Rows and columns are
/// numbered from 1; boxes are addressed by their zero-based position in J.
class ColoredRectangle {
 public:
  /// Throws std::invalid_argument if `b` does not have m deltas and n
  /// epsilons, or if l = 0 or m + n = 0.
  static ColoredRectangle build(std::size_t m, std::size_t n, std::size_t ell,
                                const EpsilonDeltaSequence& b);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t ell() const { return ell_; }
  std::size_t height() const { return m_ + n_; }
  std::size_t even_boxes() const { return m_ * ell_; }
  std::size_t odd_boxes() const { return n_ * ell_; }
  std::size_t box_count() const { return boxes_.size(); }
  const EpsilonDeltaSequence& sequence() const { return sequence_; }

  /// Position in J of the box in row i, column a (the i*a of the text).
  std::size_t box(std::size_t row, std::size_t col) const;
  BoxIndex box_index(std::size_t j) const { return boxes_.at(j); }
  std::size_t position(const BoxIndex& box) const;
  std::size_t row(std::size_t j) const { return rows_.at(j); }
  std::size_t col(std::size_t j) const { return cols_.at(j); }
  /// x-coordinate of the box centre with unit boxes of width 2: 2 col - l - 1.
  int tilde_col(std::size_t j) const;
  Parity parity(std::size_t j) const { return boxes_.at(j).parity(); }
  Parity row_parity(std::size_t row) const { return sequence_.parity(row); }

  IndexUniverse universe() const;

 private:
  ColoredRectangle(std::size_t m, std::size_t n, std::size_t ell, EpsilonDeltaSequence b);

  std::size_t m_, n_, ell_;
  EpsilonDeltaSequence sequence_;
  std::vector<BoxIndex> boxes_;
  std::vector<std::size_t> rows_, cols_;
  std::vector<std::size_t> grid_;  // (row-1)*ell + (col-1) -> position
};

}  // namespace superw
