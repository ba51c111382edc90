#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "superw/lie_superalgebra.hpp"

namespace superw {

/// Position of a generator in a GeneratorOrder.
using Letter = std::uint16_t;

/// Weakly increasing sequence of letters; odd letters appear at most once.
using PBWMonomial = std::vector<Letter>;

using UEAElement = LinearCombination<PBWMonomial>;

/// Strict total order on the generators of a Lie superalgebra.
class GeneratorOrder {
 public:
  /// `ascending` lists every generator id exactly once, smallest first.
  explicit GeneratorOrder(std::vector<GenId> ascending);

  static GeneratorOrder natural(std::size_t dimension);

  /// Sorts generators by `key(g)` (ties broken by id).
  template <typename KeyFn>
  static GeneratorOrder by_key(std::size_t dimension, KeyFn key);

  std::size_t size() const { return ascending_.size(); }
  Letter letter(GenId g) const { return rank_.at(g); }
  GenId generator(Letter l) const { return ascending_.at(l); }
  const std::vector<GenId>& ascending() const { return ascending_; }

 private:
  std::vector<GenId> ascending_;
  std::vector<Letter> rank_;
};

enum class RewriteStrategy {
  /// Memoised insertion of letters into already ordered monomials.
  insertion,
  /// Plain word rewriting at the leftmost out-of-order adjacent pair.
  leftmost_descent,
  /// Plain word rewriting at the rightmost out-of-order adjacent pair.
  rightmost_descent,
};

/// Universal enveloping superalgebra U(g) with elements kept in PBW normal
/// form for a fixed GeneratorOrder.
///
/// Immutable apart from an internal product cache, which is guarded; an
/// instance may be shared between threads.
class EnvelopingAlgebra {
 public:
  EnvelopingAlgebra(std::shared_ptr<const LieSuperalgebra> lie, GeneratorOrder order);
  ~EnvelopingAlgebra();
  EnvelopingAlgebra(EnvelopingAlgebra&&) noexcept;
  EnvelopingAlgebra& operator=(EnvelopingAlgebra&&) noexcept;

  const LieSuperalgebra& lie() const { return *lie_; }
  const GeneratorOrder& order() const { return order_; }

  UEAElement one() const { return scalar(Scalar(1)); }
  UEAElement scalar(const Scalar& c) const;
  UEAElement generator(GenId g, const Scalar& c = Scalar(1)) const;
  UEAElement embed(const LieElement& x) const;

  /// Normal form of the product of the generators in `word`, left to right.
  UEAElement normal_form(std::span<const GenId> word,
                         RewriteStrategy strategy = RewriteStrategy::insertion) const;

  UEAElement multiply(const UEAElement& x, const UEAElement& y) const;
  UEAElement multiply(const PBWMonomial& x, const PBWMonomial& y) const;

  /// xy - (-1)^{|x||y|} yx. Throws std::invalid_argument on inhomogeneous input.
  UEAElement supercommutator(const UEAElement& x, const UEAElement& y) const;

  Parity parity(const PBWMonomial& m) const;
  std::optional<Parity> parity(const UEAElement& x) const;

  /// Generator ids of the letters of `m`, in order.
  std::vector<GenId> generators(const PBWMonomial& m) const;
  PBWMonomial monomial(std::span<const GenId> sorted_generators) const;

  /// Number of cached (letter, monomial) products; diagnostic only.
  std::size_t cache_size() const;

 private:
  struct Cache;

  const UEAElement& left_multiply(Letter x, const PBWMonomial& m) const;
  UEAElement left_multiply(Letter x, const UEAElement& y) const;
  UEAElement rewrite(std::span<const GenId> word, bool leftmost) const;

  std::shared_ptr<const LieSuperalgebra> lie_;
  GeneratorOrder order_;
  std::unique_ptr<Cache> cache_;
};

template <typename KeyFn>
GeneratorOrder GeneratorOrder::by_key(std::size_t dimension, KeyFn key) {
  std::vector<GenId> ids(dimension);
  for (std::size_t i = 0; i < dimension; ++i) ids[i] = static_cast<GenId>(i);
  std::stable_sort(ids.begin(), ids.end(), [&](GenId a, GenId b) { return key(a) < key(b); });
  return GeneratorOrder(std::move(ids));
}

}  // namespace superw
