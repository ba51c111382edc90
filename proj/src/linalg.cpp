#include "superw/linalg.hpp"

#include <stdexcept>

namespace superw {

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const mpz_class& p = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const mpz_class factor = rows[r][col];
      for (std::size_t c = col + 1; c < ncols; ++c) {
        mpz_class v = p * rows[r][c] - factor * rows[rank][c];
        mpz_divexact(rows[r][c].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      rows[r][col] = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

std::size_t matrix_rank(const DenseMatrix& m) {
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& row : m) {
    mpz_class denom = 1;
    for (const auto& v : row) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> scaled;
    scaled.reserve(row.size());
    for (const auto& v : row) scaled.push_back(v.get_num() * (denom / v.get_den()));
    rows.push_back(std::move(scaled));
  }
  return bareiss_rank(std::move(rows));
}

DenseMatrix matrix_multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = a.front().size();
  if (b.size() != inner) throw std::invalid_argument("matrix_multiply: shape mismatch");
  const std::size_t cols = b.empty() ? 0 : b.front().size();
  DenseMatrix c(a.size(), std::vector<Scalar>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool is_zero_matrix(const DenseMatrix& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

}  // namespace superw
