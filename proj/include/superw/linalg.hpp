#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <vector>

#include "superw/linear_combination.hpp"

namespace superw {

using DenseMatrix = std::vector<std::vector<Scalar>>;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination. The
/// argument is consumed as scratch space.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> rows);

/// Rank of a rational matrix; rows are scaled to integers first.
std::size_t matrix_rank(const DenseMatrix& m);

DenseMatrix matrix_multiply(const DenseMatrix& a, const DenseMatrix& b);
bool is_zero_matrix(const DenseMatrix& m);

/// Dimension of the span of `elements` in the coordinate system given by
/// their keys.
template <typename Key>
std::size_t span_rank(std::span<const LinearCombination<Key>> elements) {
  std::map<Key, std::size_t> column;
  for (const auto& x : elements)
    for (const auto& entry : x) column.try_emplace(entry.first, 0);
  std::size_t next = 0;
  for (auto& entry : column) entry.second = next++;

  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(elements.size());
  for (const auto& x : elements) {
    if (x.is_zero()) continue;
    mpz_class denom_lcm = 1;
    for (const auto& entry : x) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                                        entry.second.get_den_mpz_t());
    std::vector<mpz_class> row(column.size(), 0);
    for (const auto& entry : x) {
      mpz_class value = entry.second.get_num() * (denom_lcm / entry.second.get_den());
      row[column[entry.first]] = value;
    }
    rows.push_back(std::move(row));
  }
  return bareiss_rank(std::move(rows));
}

template <typename Key>
std::size_t span_rank(const std::vector<LinearCombination<Key>>& elements) {
  return span_rank(std::span<const LinearCombination<Key>>(elements));
}

}  // namespace superw
