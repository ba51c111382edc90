#include "superw/enveloping.hpp"

#include <limits>
#include <stdexcept>

namespace superw {

GeneratorOrder::GeneratorOrder(std::vector<GenId> ascending) : ascending_(std::move(ascending)) {
  if (ascending_.size() > std::numeric_limits<Letter>::max())
    throw std::invalid_argument("GeneratorOrder: too many generators");
  constexpr Letter unset = std::numeric_limits<Letter>::max();
  rank_.assign(ascending_.size(), unset);
  for (std::size_t i = 0; i < ascending_.size(); ++i) {
    GenId g = ascending_[i];
    if (g >= ascending_.size() || rank_[g] != unset)
      throw std::invalid_argument("GeneratorOrder: not a permutation of the generators");
    rank_[g] = static_cast<Letter>(i);
  }
}

GeneratorOrder GeneratorOrder::natural(std::size_t dimension) {
  std::vector<GenId> ids(dimension);
  for (std::size_t i = 0; i < dimension; ++i) ids[i] = static_cast<GenId>(i);
  return GeneratorOrder(std::move(ids));
}

namespace {

struct MonomialHash {
  std::size_t operator()(const PBWMonomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Letter l : m) {
      h ^= l;
      h *= 0x100000001b3ULL;
    }
    return h ^ m.size();
  }
};

}  // namespace

struct EnvelopingAlgebra::Cache {
  mutable std::mutex mutex;
  // key: the letter followed by the monomial it multiplies from the left
  std::unordered_map<PBWMonomial, UEAElement, MonomialHash> products;
};

EnvelopingAlgebra::EnvelopingAlgebra(std::shared_ptr<const LieSuperalgebra> lie, GeneratorOrder order)
    : lie_(std::move(lie)), order_(std::move(order)), cache_(std::make_unique<Cache>()) {
  if (order_.size() != lie_->dimension())
    throw std::invalid_argument("EnvelopingAlgebra: order does not cover the generators");
}

EnvelopingAlgebra::~EnvelopingAlgebra() = default;
EnvelopingAlgebra::EnvelopingAlgebra(EnvelopingAlgebra&&) noexcept = default;
EnvelopingAlgebra& EnvelopingAlgebra::operator=(EnvelopingAlgebra&&) noexcept = default;

UEAElement EnvelopingAlgebra::scalar(const Scalar& c) const { return UEAElement::term({}, c); }

UEAElement EnvelopingAlgebra::generator(GenId g, const Scalar& c) const {
  return UEAElement::term({order_.letter(g)}, c);
}

UEAElement EnvelopingAlgebra::embed(const LieElement& x) const {
  UEAElement result;
  for (const auto& [g, c] : x) result.add(PBWMonomial{order_.letter(g)}, c);
  return result;
}

Parity EnvelopingAlgebra::parity(const PBWMonomial& m) const {
  Parity p = Parity::even;
  for (Letter l : m) p += lie_->parity(order_.generator(l));
  return p;
}

std::optional<Parity> EnvelopingAlgebra::parity(const UEAElement& x) const {
  std::optional<Parity> seen;
  for (const auto& entry : x) {
    Parity p = parity(entry.first);
    if (seen && *seen != p) return std::nullopt;
    seen = p;
  }
  return seen.value_or(Parity::even);
}

std::vector<GenId> EnvelopingAlgebra::generators(const PBWMonomial& m) const {
  std::vector<GenId> out;
  out.reserve(m.size());
  for (Letter l : m) out.push_back(order_.generator(l));
  return out;
}

PBWMonomial EnvelopingAlgebra::monomial(std::span<const GenId> sorted_generators) const {
  PBWMonomial m;
  for (GenId g : sorted_generators) {
    Letter l = order_.letter(g);
    if (!m.empty() && (l < m.back() || (l == m.back() && is_odd(lie_->parity(g)))))
      throw std::invalid_argument("generators are not in PBW order");
    m.push_back(l);
  }
  return m;
}

std::size_t EnvelopingAlgebra::cache_size() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->products.size();
}

// x * (y m') with x > y:  x y m' = (-1)^{|x||y|} y (x m') + [x,y] m'.
// x * (x m') with x odd:  x x m' = 1/2 [x,x] m'.
const UEAElement& EnvelopingAlgebra::left_multiply(Letter x, const PBWMonomial& m) const {
  PBWMonomial key;
  key.reserve(m.size() + 1);
  key.push_back(x);
  key.insert(key.end(), m.begin(), m.end());
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->products.find(key);
    if (it != cache_->products.end()) return it->second;
  }

  UEAElement result;
  const GenId gx = order_.generator(x);
  if (m.empty() || x < m.front()) {
    result.add(key, 1);
  } else if (x == m.front()) {
    if (!is_odd(lie_->parity(gx))) {
      result.add(key, 1);
    } else {
      PBWMonomial rest(m.begin() + 1, m.end());
      for (const auto& t : lie_->bracket(gx, gx))
        result.add_scaled(left_multiply(order_.letter(t.gen), rest), Scalar(t.coeff) / 2);
    }
  } else {
    const Letter y = m.front();
    const GenId gy = order_.generator(y);
    PBWMonomial rest(m.begin() + 1, m.end());
    const int sign = koszul_sign(lie_->parity(gx), lie_->parity(gy));
    const UEAElement& moved = left_multiply(x, rest);
    for (const auto& [mono, coeff] : moved)
      result.add_scaled(left_multiply(y, mono), coeff * sign);
    for (const auto& t : lie_->bracket(gx, gy))
      result.add_scaled(left_multiply(order_.letter(t.gen), rest), Scalar(t.coeff));
  }

  std::lock_guard lock(cache_->mutex);
  return cache_->products.try_emplace(std::move(key), std::move(result)).first->second;
}

UEAElement EnvelopingAlgebra::left_multiply(Letter x, const UEAElement& y) const {
  UEAElement result;
  for (const auto& [mono, coeff] : y) result.add_scaled(left_multiply(x, mono), coeff);
  return result;
}

UEAElement EnvelopingAlgebra::multiply(const PBWMonomial& x, const PBWMonomial& y) const {
  if (x.empty()) return UEAElement::term(y);
  if (x.size() == 1) return left_multiply(x.front(), y);
  UEAElement current = UEAElement::term(y);
  for (auto it = x.rbegin(); it != x.rend(); ++it) current = left_multiply(*it, current);
  return current;
}

UEAElement EnvelopingAlgebra::multiply(const UEAElement& x, const UEAElement& y) const {
  UEAElement result;
  if (x.is_zero() || y.is_zero()) return result;
  for (const auto& [mx, cx] : x) {
    UEAElement current = y;
    for (auto it = mx.rbegin(); it != mx.rend(); ++it) current = left_multiply(*it, current);
    result.add_scaled(current, cx);
  }
  return result;
}

UEAElement EnvelopingAlgebra::supercommutator(const UEAElement& x, const UEAElement& y) const {
  auto px = parity(x), py = parity(y);
  if (!px || !py) throw std::invalid_argument("supercommutator: inhomogeneous argument");
  UEAElement result = multiply(x, y);
  result.add_scaled(multiply(y, x), Scalar(-koszul_sign(*px, *py)));
  return result;
}

UEAElement EnvelopingAlgebra::normal_form(std::span<const GenId> word, RewriteStrategy strategy) const {
  for (GenId g : word)
    if (g >= lie_->dimension()) throw std::out_of_range("normal_form: unknown generator");
  switch (strategy) {
    case RewriteStrategy::insertion: {
      UEAElement current = one();
      for (auto it = word.rbegin(); it != word.rend(); ++it)
        current = left_multiply(order_.letter(*it), current);
      return current;
    }
    case RewriteStrategy::leftmost_descent:
      return rewrite(word, true);
    case RewriteStrategy::rightmost_descent:
      return rewrite(word, false);
  }
  throw std::logic_error("normal_form: unknown strategy");
}

// Uncached rewriting on unsorted words; kept independent of left_multiply.
UEAElement EnvelopingAlgebra::rewrite(std::span<const GenId> word, bool leftmost) const {
  using Word = std::vector<Letter>;
  LinearCombination<Word> pending;
  Word start;
  for (GenId g : word) start.push_back(order_.letter(g));
  pending.add(std::move(start), 1);

  UEAElement done;
  while (!pending.is_zero()) {
    auto node = pending.terms().begin();
    Word w = node->first;
    Scalar c = node->second;
    LinearCombination<Word> single = LinearCombination<Word>::term(w, c);
    pending -= single;

    std::optional<std::size_t> at;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      const bool odd_square = w[k] == w[k + 1] && is_odd(lie_->parity(order_.generator(w[k])));
      if (w[k] > w[k + 1] || odd_square) {
        at = k;
        if (leftmost) break;
      }
    }
    if (!at) {
      done.add(w, c);
      continue;
    }
    const std::size_t k = *at;
    const GenId gx = order_.generator(w[k]), gy = order_.generator(w[k + 1]);
    auto splice = [&](std::span<const StructureTerm> terms, const Scalar& factor) {
      for (const auto& t : terms) {
        Word next(w.begin(), w.begin() + k);
        next.push_back(order_.letter(t.gen));
        next.insert(next.end(), w.begin() + k + 2, w.end());
        pending.add(std::move(next), c * factor * t.coeff);
      }
    };
    if (w[k] == w[k + 1]) {
      splice(lie_->bracket(gx, gx), Scalar(1) / 2);
    } else {
      Word swapped = w;
      std::swap(swapped[k], swapped[k + 1]);
      pending.add(std::move(swapped), c * koszul_sign(lie_->parity(gx), lie_->parity(gy)));
      splice(lie_->bracket(gx, gy), Scalar(1));
    }
  }
  return done;
}

}  // namespace superw
