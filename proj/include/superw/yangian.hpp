#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <tuple>
#include <memory>
#include <vector>

#include "superw/enveloping.hpp"
#include "superw/general_linear.hpp"
#include "superw/rectangle.hpp"
#include "superw/report.hpp"
#include "superw/sweep.hpp"
#include "superw/tensor.hpp"

namespace superw {

/// The symbol t^{(r)}_{ij}; rows are numbered from 1.
struct YangianSymbol {
  std::size_t i, j, r;
  friend auto operator<=>(const YangianSymbol& a, const YangianSymbol& b) {
    return std::tie(a.r, a.i, a.j) <=> std::tie(b.r, b.i, b.j);
  }
  friend bool operator==(const YangianSymbol&, const YangianSymbol&) = default;
};

using Supermonomial = std::vector<YangianSymbol>;

/// Ordered supermonomials in t^{(r)}_{ij}, 1 <= r <= ell, of total degree at
/// most d (deg t^{(r)} = r). Symbols are ordered lexicographically by
/// (r, i, j); a symbol is odd when |i| + |j| is, and odd symbols occur at most
/// once. The list is in depth-first order, so every proper prefix of a
/// monomial appears before it.
std::vector<Supermonomial> supermonomials(const std::vector<Parity>& row_parity, std::size_t ell, std::size_t d);

/// Images of supermonomials(...) under the generator table, as ordered
/// products in `algebra`.
template <typename Algebra, typename Element>
std::vector<Element> supermonomial_images(const Algebra& algebra, const GeneratorTable<Element>& table,
                                          const std::vector<Supermonomial>& monomials) {
  std::map<Supermonomial, std::size_t> seen;
  std::vector<Element> images;
  images.reserve(monomials.size());
  for (const auto& mono : monomials) {
    if (mono.empty()) {
      images.push_back(algebra.one());
    } else {
      const Supermonomial prefix(mono.begin(), mono.end() - 1);
      const YangianSymbol& last = mono.back();
      images.push_back(algebra.multiply(images.at(seen.at(prefix)), table.at(last.i, last.j, last.r)));
    }
    seen.emplace(mono, images.size() - 1);
  }
  return images;
}

/// Y^l_{m|n} realised as the image of kappa_l in U(gl_{m|n})^{(x) l}.
class TruncatedYangian {
 public:
  /// Throws std::invalid_argument if ell = 0 or b is empty.
  TruncatedYangian(EpsilonDeltaSequence b, std::size_t ell);

  std::size_t m() const { return b_.m(); }
  std::size_t n() const { return b_.n(); }
  std::size_t rows() const { return b_.size(); }
  std::size_t ell() const { return ell_; }
  const EpsilonDeltaSequence& sequence() const { return b_; }
  Parity row_parity(std::size_t i) const { return b_.parity(i); }

  const GeneralLinear& gl() const { return gl_; }
  const EnvelopingAlgebra& enveloping() const { return *uea_; }
  const TensorPowerAlgebra& tensor() const { return tensor_; }

  /// e_{ij} of gl_{m|n}, rows numbered from 1.
  GenId generator(std::size_t i, std::size_t j) const { return gl_.generator(i - 1, j - 1); }

  /// Coefficient of u^{-r} in delta_ij + (-1)^{|i|} e_{ij} u^{-1}.
  UEAElement ev_image(std::size_t i, std::size_t j, std::size_t r) const;

  /// kappa_l(t^{(r)}_{ij}) from the closed sum over positions
  /// 1 <= s_1 < ... < s_r <= l and intermediate rows.
  TensorElement kappa_image(std::size_t i, std::size_t j, std::size_t r) const;

  /// Cached kappa images for 0 <= r <= l.
  const GeneratorTable<TensorElement>& kappa_table() const { return kappa_; }

  /// Compares kappa_image(i,j,r) with sum_{s,k} ev(t^{(r-s)}_{ik}) (x) kappa_{l-1}(t^{(s)}_{kj}),
  /// `lower` being the same Yangian at level l-1.
  static bool kappa_recursion_check(const TruncatedYangian& full, const TruncatedYangian& lower, std::size_t i,
                                    std::size_t j, std::size_t r);

  /// Right side of the recursion above.
  static TensorElement kappa_recursion(const TruncatedYangian& full, const TruncatedYangian& lower, std::size_t i,
                                       std::size_t j, std::size_t r);

  /// RTT relation for one index tuple with 1 <= r, s <= l.
  bool rtt_check(std::size_t i, std::size_t j, std::size_t h, std::size_t k, std::size_t r, std::size_t s) const;

  /// rtt_check over all (m+n)^4 l^2 tuples.
  CheckResult rtt_sweep(std::size_t jobs = 1) const;

  /// Number of ordered supermonomials of degree <= d.
  std::uint64_t pbw_count(std::size_t d) const;

  /// Rank of the kappa images of the degree <= d supermonomials.
  std::size_t image_rank(std::size_t d) const;
  bool independence_check(std::size_t d) const { return image_rank(d) == pbw_count(d); }

  json dump(const TensorElement& x) const { return to_json(x, tensor_); }

 private:
  EpsilonDeltaSequence b_;
  std::size_t ell_;
  GeneralLinear gl_;
  std::shared_ptr<const EnvelopingAlgebra> uea_;
  TensorPowerAlgebra tensor_;
  GeneratorTable<TensorElement> kappa_;
};

}  // namespace superw
