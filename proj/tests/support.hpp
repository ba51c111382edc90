#pragma once

// Random generators and independent reference implementations for the tests.

#include <random>
#include <vector>

#include "superw/enveloping.hpp"
#include "superw/general_linear.hpp"
#include "superw/linalg.hpp"
#include "superw/tensor.hpp"

namespace superw::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::vector<Parity> random_parities(Rng& rng, std::size_t min_size, std::size_t max_size) {
  const std::size_t size = static_cast<std::size_t>(uniform(rng, static_cast<int>(min_size), static_cast<int>(max_size)));
  std::vector<Parity> out(size);
  for (auto& p : out) p = uniform(rng, 0, 1) ? Parity::odd : Parity::even;
  return out;
}

inline Scalar random_coefficient(Rng& rng) {
  int v = 0;
  while (v == 0) v = uniform(rng, -3, 3);
  return v;
}

/// Homogeneous Lie element with up to `terms` basis terms of parity `p`;
/// zero when no basis element has that parity.
inline LieElement random_lie(Rng& rng, const LieSuperalgebra& lie, Parity p, int terms = 3) {
  std::vector<GenId> pool;
  for (GenId g = 0; g < lie.dimension(); ++g)
    if (lie.parity(g) == p) pool.push_back(g);
  LieElement x;
  if (pool.empty()) return x;
  for (int t = uniform(rng, 1, terms); t > 0; --t)
    x.add(pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))], random_coefficient(rng));
  return x;
}

/// Random word of generator ids.
inline std::vector<GenId> random_word(Rng& rng, std::size_t dimension, int max_length) {
  std::vector<GenId> word(static_cast<std::size_t>(uniform(rng, 0, max_length)));
  for (auto& g : word) g = static_cast<GenId>(uniform(rng, 0, static_cast<int>(dimension) - 1));
  return word;
}

inline Parity word_parity(const LieSuperalgebra& lie, const std::vector<GenId>& word) {
  Parity p = Parity::even;
  for (GenId g : word) p += lie.parity(g);
  return p;
}

/// Homogeneous element of U(g) of parity `p`: a combination of normal forms
/// of random words of length <= max_length.
inline UEAElement random_uea(Rng& rng, const EnvelopingAlgebra& u, Parity p, int terms = 3, int max_length = 3) {
  UEAElement x;
  int added = 0;
  for (int attempts = 0; added < terms && attempts < 200; ++attempts) {
    auto word = random_word(rng, u.lie().dimension(), max_length);
    if (word_parity(u.lie(), word) != p) continue;
    x.add_scaled(u.normal_form(word), random_coefficient(rng));
    ++added;
  }
  return x;
}

inline Parity random_parity(Rng& rng) { return uniform(rng, 0, 1) ? Parity::odd : Parity::even; }

/// Homogeneous tensor element: combination of products of embedded random
/// factors whose parities add up to `p`.
inline TensorElement random_tensor(Rng& rng, const TensorPowerAlgebra& t, Parity p, int terms = 2) {
  TensorElement x;
  for (int k = 0; k < terms; ++k) {
    TensorElement term = t.one();
    Parity acc = Parity::even;
    for (std::size_t s = 0; s < t.factors(); ++s) {
      Parity q = s + 1 == t.factors() ? acc + p : random_parity(rng);
      acc += q;
      term = t.multiply(term, t.embed(s, random_uea(rng, t.factor(), q, 2, 2)));
    }
    x.add_scaled(term, random_coefficient(rng));
  }
  return x;
}

// ---------------------------------------------------------------------------
// Reference implementations

/// Dense matrix of a gl element.
inline DenseMatrix dense(const GeneralLinear& gl, const LieElement& x) {
  DenseMatrix m(gl.rank(), std::vector<Scalar>(gl.rank(), 0));
  for (const auto& [g, c] : x) m[gl.row_of(g)][gl.col_of(g)] += c;
  return m;
}

inline LieElement from_dense(const GeneralLinear& gl, const DenseMatrix& m) {
  LieElement x;
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = 0; b < m.size(); ++b) x.add(gl.generator(a, b), m[a][b]);
  return x;
}

inline DenseMatrix product(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size();
  DenseMatrix c(n, std::vector<Scalar>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

/// XY - (-1)^{|X||Y|} YX for homogeneous supermatrices.
inline DenseMatrix super_commutator(const DenseMatrix& x, const DenseMatrix& y, Parity px, Parity py) {
  DenseMatrix xy = product(x, y), yx = product(y, x);
  const int sign = koszul_sign(px, py);
  for (std::size_t i = 0; i < xy.size(); ++i)
    for (std::size_t j = 0; j < xy.size(); ++j) xy[i][j] -= sign * yx[i][j];
  return xy;
}

inline Scalar supertrace(const DenseMatrix& x, const std::vector<Parity>& parities) {
  Scalar s = 0;
  for (std::size_t a = 0; a < x.size(); ++a) s += parity_sign(parities[a]) * x[a][a];
  return s;
}

/// Rank by plain Gaussian elimination over the rationals.
inline std::size_t rational_rank(DenseMatrix m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Scalar f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Coordinates of a family of linear combinations in a common basis.
template <typename Key>
DenseMatrix coordinates(const std::vector<LinearCombination<Key>>& xs) {
  std::map<Key, std::size_t> column;
  for (const auto& x : xs)
    for (const auto& entry : x) column.emplace(entry.first, 0);
  std::size_t next = 0;
  for (auto& entry : column) entry.second = next++;
  DenseMatrix m(xs.size(), std::vector<Scalar>(column.size(), 0));
  for (std::size_t r = 0; r < xs.size(); ++r)
    for (const auto& entry : xs[r]) m[r][column[entry.first]] = entry.second;
  return m;
}

/// U(g^{(+) l}) in the order (copy, generator); isomorphic to U(g)^{(x) l}
/// with the Koszul sign rule.
struct DirectSumModel {
  std::shared_ptr<const EnvelopingAlgebra> algebra;
  std::size_t dimension;

  DirectSumModel(const LieSuperalgebra& summand, std::size_t copies)
      : algebra(std::make_shared<EnvelopingAlgebra>(make_direct_sum(summand, copies),
                                                    GeneratorOrder::natural(summand.dimension() * copies))),
        dimension(summand.dimension()) {}

  /// Requires the factor algebra to use the natural order.
  UEAElement from_tensor(const TensorElement& x) const {
    UEAElement out;
    for (const auto& [mono, c] : x) {
      PBWMonomial joined;
      for (std::size_t s = 0; s < mono.size(); ++s)
        for (Letter l : mono[s]) joined.push_back(static_cast<Letter>(s * dimension + l));
      out.add(std::move(joined), c);
    }
    return out;
  }
};

}  // namespace superw::testing
