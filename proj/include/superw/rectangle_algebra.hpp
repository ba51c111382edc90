#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "superw/enveloping.hpp"
#include "superw/general_linear.hpp"
#include "superw/linalg.hpp"
#include "superw/rectangle.hpp"
#include "superw/serialize.hpp"

namespace superw {

/// Outcome of checking that ad h(pi) is an even good Z-grading for e(pi).
struct GoodGradingReport {
  bool h_e_is_2e = false;             // [h, e] = 2e
  bool integral_eigenvalues = false;  // g is the sum of integral ad h eigenspaces
  bool center_in_degree_zero = false;
  bool injective_below = false;       // ad e : g(j) -> g(j+2) injective for j <= -1
  bool surjective_above = false;      // ad e : g(j) -> g(j+2) surjective for j >= -1
  bool even = false;                  // g(j) = 0 for odd j
  std::map<int, std::size_t> eigenspace_dims;

  bool all() const {
    return h_e_is_2e && integral_eigenvalues && center_in_degree_zero && injective_below &&
           surjective_above && even;
  }
  json to_json() const;
};

/// c^{(r)}_{ij} with rows i, j and degree r counted from 1.
struct CentralizerElement {
  std::size_t i, j, r;
  LieElement value;
};

struct JordanType {
  std::vector<std::size_t> mu;  // Jordan type on the even subspace
  std::vector<std::size_t> nu;  // Jordan type on the odd subspace
  bool rectangular = false;
  std::size_t ell = 0;          // common block size when rectangular
};

/// g = gl_{M|N} attached to a colored rectangle together with U(g) in the
/// PBW order used for the W-algebra: generators sorted by Kazhdan degree
/// descending, then row, then column. Every generator of p therefore
/// precedes every generator of m, and monomials read (p-part)(m-part).
class RectangleAlgebra {
 public:
  explicit RectangleAlgebra(ColoredRectangle rectangle);

  const ColoredRectangle& rectangle() const { return rectangle_; }
  const GeneralLinear& gl() const { return gl_; }
  const EnvelopingAlgebra& enveloping() const { return *uea_; }
  std::shared_ptr<const EnvelopingAlgebra> enveloping_ptr() const { return uea_; }

  GenId generator(std::size_t from_box, std::size_t to_box) const { return gl_.generator(from_box, to_box); }

  /// Sum of e_{ij} over horizontally adjacent boxes, i left of j.
  LieElement e() const;
  /// -diag(tilde_col) in J order.
  LieElement h() const;
  /// ad h eigenvalue of e_{ij}: 2 (col(j) - col(i)).
  int ad_h_eigenvalue(GenId g) const;

  GoodGradingReport verify_good_grading() const;

  /// p = span{e_ij : col(i) <= col(j)}, m = span{e_ij : col(i) > col(j)}.
  std::pair<std::vector<GenId>, std::vector<GenId>> split_p_m() const;
  bool in_m(GenId g) const;
  bool in_p(GenId g) const { return !in_m(g); }
  /// True when every monomial of x only uses letters from p.
  bool in_Up(const UEAElement& x) const;

  /// chi(y) = (y, e).
  Scalar chi(const LieElement& y) const;
  Scalar chi(GenId g) const;

  /// Projection U(g) -> U(p) along the left ideal I_chi generated by
  /// a - chi(a), a in m: trailing m-letters a_1...a_k of each monomial are
  /// replaced by chi(a_1)...chi(a_k).
  UEAElement pr_chi(const UEAElement& x) const;
  /// Same, for an element of `algebra`; throws std::invalid_argument unless
  /// that algebra's order puts all of p before all of m.
  UEAElement pr_chi(const UEAElement& x, const EnvelopingAlgebra& algebra) const;

  /// a . y = pr_chi([a, y]) for a in m, y in U(p).
  UEAElement twisted_action(GenId a, const UEAElement& y) const;

  /// deg e_{ij} = col(j) - col(i) + 1.
  int kazhdan_degree(GenId g) const;
  int kazhdan_degree(const PBWMonomial& m) const;

  std::vector<CentralizerElement> centralizer_basis() const;

  /// dim F_d S(g^e) for the Kazhdan filtration, counted from the degrees and
  /// parities of centralizer_basis().
  std::uint64_t sym_dim(std::size_t d) const;

 private:
  ColoredRectangle rectangle_;
  GeneralLinear gl_;
  std::shared_ptr<const EnvelopingAlgebra> uea_;
};

/// Jordan type of an even nilpotent element of gl. Throws
/// std::invalid_argument for odd or non-nilpotent input.
JordanType jordan_type(const GeneralLinear& gl, const LieElement& e);

/// Matrix of a gl element in the universe's index order.
DenseMatrix to_matrix(const GeneralLinear& gl, const LieElement& x);

}  // namespace superw
