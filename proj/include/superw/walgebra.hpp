#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "superw/rectangle_algebra.hpp"
#include "superw/report.hpp"
#include "superw/sweep.hpp"
#include "superw/yangian.hpp"

namespace superw {

/// rho_r = -(l - r)(m - n) for 1 <= r <= l.
Scalar rho(std::size_t r, std::size_t m, std::size_t n, std::size_t ell);

/// The matrix unit E_{a,b} of Mat_l as a letter of T(Mat_l); 1-based.
struct MatLetter {
  std::size_t a, b;
  friend auto operator<=>(const MatLetter&, const MatLetter&) = default;
};
using MatWord = std::vector<MatLetter>;

/// u^power times a word.
struct MatTerm {
  std::size_t power;
  MatWord word;
  friend auto operator<=>(const MatTerm&, const MatTerm&) = default;
};

/// Element of T(Mat_l)[u].
using MatWordPoly = LinearCombination<MatTerm>;
using MatWordMatrix = std::vector<std::vector<MatWordPoly>>;

MatWordPoly mat_scalar(const Scalar& c);
MatWordPoly mat_u();
MatWordPoly mat_letter(std::size_t a, std::size_t b);
/// Concatenation product; u is central.
MatWordPoly mat_multiply(const MatWordPoly& x, const MatWordPoly& y);

/// Upper Hessenberg matrix with u + E_{c,c} + rho_c on the diagonal,
/// E_{c,d} above it, 1 on the subdiagonal and 0 below.
MatWordMatrix a_matrix(std::size_t m, std::size_t n, std::size_t ell);
/// Rows and columns p..q (1-based, inclusive).
MatWordMatrix submatrix(const MatWordMatrix& a, std::size_t p, std::size_t q);
/// sum_tau sgn(tau) a_{1,tau(1)} ... a_{k,tau(k)}. Throws std::invalid_argument
/// for a non-square matrix.
MatWordPoly rdet(const MatWordMatrix& a);

/// Coefficients of a polynomial in u, lowest degree first.
using UPolynomial = std::vector<UEAElement>;

/// U(p) side of the correspondence for one colored rectangle: the shifted
/// matrix units, the generators t^{(r)}_{ij}, the map mu into U(gl_{m|n})^{(x) l}
/// and the checks that tie them to the truncated Yangian.
class WAlgebra {
 public:
  explicit WAlgebra(ColoredRectangle rectangle);

  const RectangleAlgebra& rectangle_algebra() const { return rect_; }
  const ColoredRectangle& rectangle() const { return rect_.rectangle(); }
  const EnvelopingAlgebra& enveloping() const { return rect_.enveloping(); }
  std::size_t rows() const { return rectangle().height(); }
  std::size_t ell() const { return rectangle().ell(); }
  Parity row_parity(std::size_t i) const { return rectangle().row_parity(i); }
  Scalar rho(std::size_t r) const;

  /// (-1)^{col(b)-col(a)} (e_{a,b} + delta_{ab} (-1)^{|a|} rho_{col(a)}) for box positions a, b.
  UEAElement tilde_e(std::size_t a, std::size_t b) const;
  /// chi of the gl component of tilde_e(a, b).
  Scalar chi_tilde_e(std::size_t a, std::size_t b) const;

  /// t_{ij}(E_{a_1,b_1} ... E_{a_k,b_k}), rows 1-based; the empty word maps to delta_ij.
  UEAElement t_map(std::size_t i, std::size_t j, const MatWord& word) const;
  UPolynomial t_map(std::size_t i, std::size_t j, const MatWordPoly& x) const;

  /// t^{(r)}_{ij} as the sum over box paths.
  UEAElement w_gen_pathsum(std::size_t i, std::size_t j, std::size_t r) const;
  /// Coefficient of u^{l-r} in t_{ij}(rdet A(u)).
  UEAElement w_gen_rdet(std::size_t i, std::size_t j, std::size_t r) const;
  /// Cached w_gen_pathsum for 0 <= r <= l.
  const GeneratorTable<UEAElement>& generators() const { return gens_; }

  /// Linear part of the Kazhdan-degree-r component of t^{(r)}_{ij}.
  LieElement leading_linear_part(std::size_t i, std::size_t j, std::size_t r) const;

  /// mu: U(p) -> U(gl_{m|n})^{(x) l}. Letters e_{i*r, j*r} go to
  /// e_{ij} - delta_ij (-1)^{|i|} rho_r in factor r, letters with
  /// col(a) < col(b) go to 0. Throws std::invalid_argument if x is not in
  /// U(p) or the Yangian does not match the rectangle.
  TensorElement mu(const UEAElement& x, const TruncatedYangian& yangian) const;

  /// [t_{ij}(x), t_{hk}(y_1 ... y_r)] against its expansion through matrix
  /// products in Mat_l.
  bool detcomp1_check(std::size_t i, std::size_t j, std::size_t h, std::size_t k, MatLetter x,
                      const MatWord& ys) const;

  /// Bracket relation among the tilde_e for every box 4-tuple, and their chi
  /// values for every box pair.
  CheckResult verify_etilrel(std::size_t jobs = 1) const;
  CheckResult verify_pathsum_rdet() const;
  /// pr_chi([a, t^{(r)}_{ij}]) = 0 for every basis element a of m.
  CheckResult verify_m_invariance(std::size_t jobs = 1) const;
  /// t_{ij}(E_{2,1}(u + E_{2,2} + rho_2)) - t_{ij}(u + E_{2,2} + rho_1) lies in
  /// I_chi for all i, j. Throws std::invalid_argument unless l = 2 and c = 1.
  CheckResult verify_crue(std::size_t c = 1) const;
  /// RTT relations among the generators, exactly in U(p).
  CheckResult verify_w_rtt(std::size_t jobs = 1) const;
  /// mu(t^{(r)}_{ij}) = kappa_l(t^{(r)}_{ij}) for all generators.
  CheckResult verify_mu_kappa(const TruncatedYangian& yangian) const;
  /// mu/kappa agreement, span ranks of the degree <= d supermonomials in the
  /// generators (and of their mu images) against pbw_count and sym_dim for
  /// every d in `degrees`, and m-invariance.
  CheckResult verify_iso(const TruncatedYangian& yangian, const std::vector<std::size_t>& degrees,
                         std::size_t jobs = 1) const;

  json dump(const UEAElement& x) const { return to_json(x, enveloping()); }

 private:
  UEAElement letter_image(std::size_t i, std::size_t j, MatLetter x) const;

  RectangleAlgebra rect_;
  MatWordPoly rdet_a_;
  GeneratorTable<UEAElement> gens_;
};

}  // namespace superw
