#include "superw/yangian.hpp"

#include <stdexcept>

#include "superw/linalg.hpp"

namespace superw {

std::vector<Supermonomial> supermonomials(const std::vector<Parity>& row_parity, std::size_t ell, std::size_t d) {
  const std::size_t R = row_parity.size();
  std::vector<YangianSymbol> symbols;
  for (std::size_t r = 1; r <= ell; ++r)
    for (std::size_t i = 1; i <= R; ++i)
      for (std::size_t j = 1; j <= R; ++j) symbols.push_back({i, j, r});

  std::vector<Supermonomial> out;
  Supermonomial current;
  auto extend = [&](auto&& self, std::size_t first, std::size_t budget) -> void {
    out.push_back(current);
    for (std::size_t idx = first; idx < symbols.size(); ++idx) {
      const YangianSymbol& sym = symbols[idx];
      if (sym.r > budget) break;
      const bool odd = is_odd(row_parity[sym.i - 1] + row_parity[sym.j - 1]);
      current.push_back(sym);
      self(self, odd ? idx + 1 : idx, budget - sym.r);
      current.pop_back();
    }
  };
  extend(extend, 0, d);
  return out;
}

TruncatedYangian::TruncatedYangian(EpsilonDeltaSequence b, std::size_t ell)
    : b_(std::move(b)),
      ell_(ell),
      gl_(IndexUniverse::numbered(b_.parities())),
      uea_(std::make_shared<const EnvelopingAlgebra>(gl_.lie_ptr(), GeneratorOrder::natural(gl_.dimension()))),
      tensor_(uea_, ell == 0 ? 1 : ell),
      kappa_(b_.size(), ell) {
  if (ell_ == 0) throw std::invalid_argument("TruncatedYangian: level must be at least 1");
  if (b_.size() == 0) throw std::invalid_argument("TruncatedYangian: empty epsilon-delta sequence");
  for (std::size_t i = 1; i <= rows(); ++i)
    for (std::size_t j = 1; j <= rows(); ++j)
      for (std::size_t r = 0; r <= ell_; ++r) kappa_.set(i, j, r, kappa_image(i, j, r));
}

UEAElement TruncatedYangian::ev_image(std::size_t i, std::size_t j, std::size_t r) const {
  if (r == 0) return i == j ? uea_->one() : UEAElement();
  if (r == 1) return uea_->generator(generator(i, j), parity_sign(row_parity(i)));
  return {};
}

TensorElement TruncatedYangian::kappa_image(std::size_t i, std::size_t j, std::size_t r) const {
  if (r == 0) return i == j ? tensor_.one() : TensorElement();
  TensorElement result;
  const std::size_t R = rows();
  std::vector<std::size_t> positions(r), path(r + 1);
  path.front() = i;
  path.back() = j;
  // positions s_1 < ... < s_r and intermediate rows i_1..i_{r-1}
  auto over_rows = [&](auto&& self, std::size_t t) -> void {
    if (t == r) {
      int sign = 1;
      for (std::size_t q = 0; q < r; ++q) sign *= parity_sign(row_parity(path[q]));
      TensorElement term = tensor_.scalar(sign);
      for (std::size_t q = 0; q < r; ++q)
        term = tensor_.multiply(term, tensor_.embed(positions[q], uea_->generator(generator(path[q], path[q + 1]))));
      result += term;
      return;
    }
    for (std::size_t k = 1; k <= R; ++k) {
      path[t] = k;
      self(self, t + 1);
    }
  };
  auto over_positions = [&](auto&& self, std::size_t t, std::size_t next) -> void {
    if (t == r) {
      over_rows(over_rows, 1);
      return;
    }
    for (std::size_t s = next; s + (r - t) <= ell_; ++s) {
      positions[t] = s;
      self(self, t + 1, s + 1);
    }
  };
  over_positions(over_positions, 0, 0);
  return result;
}

TensorElement TruncatedYangian::kappa_recursion(const TruncatedYangian& full, const TruncatedYangian& lower,
                                                std::size_t i, std::size_t j, std::size_t r) {
  if (lower.ell() + 1 != full.ell() || !(lower.sequence() == full.sequence()))
    throw std::invalid_argument("kappa_recursion: lower Yangian must have the same sequence and level l-1");
  TensorElement result;
  for (std::size_t s = 0; s <= r; ++s) {
    for (std::size_t k = 1; k <= full.rows(); ++k) {
      const UEAElement left = full.ev_image(i, k, r - s);
      if (left.is_zero()) continue;
      const TensorElement right = lower.kappa_image(k, j, s);
      for (const auto& [lm, lc] : left) {
        for (const auto& [rm, rc] : right) {
          TensorMonomial joined;
          joined.reserve(full.ell());
          joined.push_back(lm);
          joined.insert(joined.end(), rm.begin(), rm.end());
          result.add(std::move(joined), lc * rc);
        }
      }
    }
  }
  return result;
}

bool TruncatedYangian::kappa_recursion_check(const TruncatedYangian& full, const TruncatedYangian& lower,
                                             std::size_t i, std::size_t j, std::size_t r) {
  return full.kappa_image(i, j, r) == kappa_recursion(full, lower, i, j, r);
}

bool TruncatedYangian::rtt_check(std::size_t i, std::size_t j, std::size_t h, std::size_t k, std::size_t r,
                                 std::size_t s) const {
  if (r < 1 || s < 1 || r > ell_ || s > ell_) throw std::out_of_range("rtt_check: need 1 <= r, s <= l");
  RttEvaluator<TensorPowerAlgebra, TensorElement> eval(tensor_, kappa_, b_.parities());
  return eval.lhs(i, j, h, k, r, s) == eval.rhs(i, j, h, k, r, s);
}

CheckResult TruncatedYangian::rtt_sweep(std::size_t jobs) const {
  return superw::rtt_sweep("kappa-rtt", tensor_, kappa_, b_.parities(), jobs,
                           [this](const TensorElement& x) { return dump(x); });
}

std::uint64_t TruncatedYangian::pbw_count(std::size_t d) const {
  return supermonomials(b_.parities(), ell_, d).size();
}

std::size_t TruncatedYangian::image_rank(std::size_t d) const {
  return span_rank(supermonomial_images(tensor_, kappa_, supermonomials(b_.parities(), ell_, d)));
}

}  // namespace superw
