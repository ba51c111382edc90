#include "superw/rectangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace superw {

EpsilonDeltaSequence::EpsilonDeltaSequence(std::vector<RowSymbol> symbols) : symbols_(std::move(symbols)) {}

EpsilonDeltaSequence EpsilonDeltaSequence::parse(std::string_view text) {
  static constexpr std::string_view kDelta = "\xCE\xB4";    // δ
  static constexpr std::string_view kEpsilon = "\xCE\xB5";  // ε
  std::vector<RowSymbol> symbols;
  for (std::size_t k = 0; k < text.size();) {
    if (text[k] == 'd' || text[k] == 'D') {
      symbols.push_back(RowSymbol::delta);
      ++k;
    } else if (text[k] == 'e' || text[k] == 'E') {
      symbols.push_back(RowSymbol::epsilon);
      ++k;
    } else if (text.substr(k, 2) == kDelta) {
      symbols.push_back(RowSymbol::delta);
      k += 2;
    } else if (text.substr(k, 2) == kEpsilon) {
      symbols.push_back(RowSymbol::epsilon);
      k += 2;
    } else {
      throw std::invalid_argument("epsilon-delta sequence may only contain d/e: " + std::string(text));
    }
  }
  return EpsilonDeltaSequence(std::move(symbols));
}

std::size_t EpsilonDeltaSequence::m() const {
  return static_cast<std::size_t>(std::count(symbols_.begin(), symbols_.end(), RowSymbol::delta));
}

std::size_t EpsilonDeltaSequence::n() const { return size() - m(); }

Parity EpsilonDeltaSequence::parity(std::size_t row) const {
  return symbol(row) == RowSymbol::delta ? Parity::even : Parity::odd;
}

std::vector<Parity> EpsilonDeltaSequence::parities() const {
  std::vector<Parity> out;
  for (std::size_t i = 1; i <= size(); ++i) out.push_back(parity(i));
  return out;
}

std::string EpsilonDeltaSequence::str() const {
  std::string out;
  for (RowSymbol s : symbols_) out.push_back(s == RowSymbol::delta ? 'd' : 'e');
  return out;
}

std::string BoxIndex::label() const { return (barred ? "~" : "") + std::to_string(ordinal); }

ColoredRectangle ColoredRectangle::build(std::size_t m, std::size_t n, std::size_t ell,
                                         const EpsilonDeltaSequence& b) {
  if (b.m() != m || b.n() != n)
    throw std::invalid_argument("sequence '" + b.str() + "' does not have " + std::to_string(m) +
                                " d's and " + std::to_string(n) + " e's");
  if (ell == 0) throw std::invalid_argument("rectangle base must be positive");
  if (m + n == 0) throw std::invalid_argument("rectangle height must be positive");
  return ColoredRectangle(m, n, ell, b);
}

ColoredRectangle::ColoredRectangle(std::size_t m, std::size_t n, std::size_t ell, EpsilonDeltaSequence b)
    : m_(m), n_(n), ell_(ell), sequence_(std::move(b)) {
  const std::size_t height = m + n;
  const std::size_t even_total = m * ell;
  grid_.assign(height * ell, 0);
  boxes_.resize(height * ell);
  rows_.resize(height * ell);
  cols_.resize(height * ell);
  // down each column, columns left to right, separately for each color
  std::size_t next_barred = 0, next_unbarred = 0;
  for (std::size_t c = 1; c <= ell; ++c) {
    for (std::size_t i = 1; i <= height; ++i) {
      std::size_t j;
      if (sequence_.symbol(i) == RowSymbol::delta) {
        j = next_barred++;
        boxes_[j] = {true, j + 1};
      } else {
        j = even_total + next_unbarred++;
        boxes_[j] = {false, j - even_total + 1};
      }
      rows_[j] = i;
      cols_[j] = c;
      grid_[(i - 1) * ell + (c - 1)] = j;
    }
  }
}

std::size_t ColoredRectangle::box(std::size_t row, std::size_t col) const {
  if (row < 1 || row > height() || col < 1 || col > ell_) throw std::out_of_range("box outside rectangle");
  return grid_[(row - 1) * ell_ + (col - 1)];
}

std::size_t ColoredRectangle::position(const BoxIndex& b) const {
  const std::size_t limit = b.barred ? even_boxes() : odd_boxes();
  if (b.ordinal < 1 || b.ordinal > limit) throw std::out_of_range("box index outside J");
  return b.barred ? b.ordinal - 1 : even_boxes() + b.ordinal - 1;
}

int ColoredRectangle::tilde_col(std::size_t j) const {
  return 2 * static_cast<int>(col(j)) - static_cast<int>(ell_) - 1;
}

IndexUniverse ColoredRectangle::universe() const {
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  for (const auto& b : boxes_) {
    parities.push_back(b.parity());
    labels.push_back(b.label());
  }
  return IndexUniverse(std::move(parities), std::move(labels));
}

}  // namespace superw
