#include "superw/rectangle_algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "superw/linalg.hpp"

namespace superw {

json GoodGradingReport::to_json() const {
  json dims = json::object();
  for (const auto& [j, d] : eigenspace_dims) dims[std::to_string(j)] = d;
  return {{"h_e_is_2e", h_e_is_2e},
          {"integral_eigenvalues", integral_eigenvalues},
          {"center_in_degree_zero", center_in_degree_zero},
          {"injective_below", injective_below},
          {"surjective_above", surjective_above},
          {"even", even},
          {"eigenspace_dims", dims},
          {"all", all()}};
}

RectangleAlgebra::RectangleAlgebra(ColoredRectangle rectangle)
    : rectangle_(std::move(rectangle)), gl_(rectangle_.universe()) {
  const std::size_t d = gl_.rank();
  auto key = [&](GenId g) {
    return std::make_tuple(-kazhdan_degree(g), g / d, g % d);
  };
  uea_ = std::make_shared<const EnvelopingAlgebra>(gl_.lie_ptr(),
                                                   GeneratorOrder::by_key(gl_.dimension(), key));
}

int RectangleAlgebra::kazhdan_degree(GenId g) const {
  return static_cast<int>(rectangle_.col(gl_.col_of(g))) - static_cast<int>(rectangle_.col(gl_.row_of(g))) + 1;
}

int RectangleAlgebra::kazhdan_degree(const PBWMonomial& m) const {
  int total = 0;
  for (GenId g : uea_->generators(m)) total += kazhdan_degree(g);
  return total;
}

LieElement RectangleAlgebra::e() const {
  LieElement result;
  for (std::size_t i = 1; i <= rectangle_.height(); ++i)
    for (std::size_t c = 1; c < rectangle_.ell(); ++c)
      result.add(generator(rectangle_.box(i, c), rectangle_.box(i, c + 1)), 1);
  return result;
}

LieElement RectangleAlgebra::h() const {
  LieElement result;
  for (std::size_t j = 0; j < rectangle_.box_count(); ++j)
    result.add(generator(j, j), -rectangle_.tilde_col(j));
  return result;
}

int RectangleAlgebra::ad_h_eigenvalue(GenId g) const {
  return 2 * (static_cast<int>(rectangle_.col(gl_.col_of(g))) - static_cast<int>(rectangle_.col(gl_.row_of(g))));
}

GoodGradingReport RectangleAlgebra::verify_good_grading() const {
  GoodGradingReport report;
  const LieSuperalgebra& lie = gl_.lie();
  const LieElement e_elem = e(), h_elem = h();

  report.h_e_is_2e = lie.bracket(h_elem, e_elem) == e_elem * Scalar(2);

  // eigenvalues read off from [h, x] = lambda x on the basis
  std::map<int, std::vector<GenId>> spaces;
  report.integral_eigenvalues = true;
  for (GenId g = 0; g < gl_.dimension(); ++g) {
    LieElement image = lie.bracket(h_elem, LieElement::term(g));
    Scalar lambda = image.coefficient(g);
    if (image != LieElement::term(g, lambda) || lambda.get_den() != 1) {
      report.integral_eigenvalues = false;
      continue;
    }
    spaces[static_cast<int>(lambda.get_num().get_si())].push_back(g);
  }
  for (const auto& [j, basis] : spaces) report.eigenspace_dims[j] = basis.size();

  report.center_in_degree_zero = lie.bracket(h_elem, gl_.identity()).is_zero();

  report.even = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.first % 2 == 0; });

  auto dim_of = [&](int j) -> std::size_t {
    auto it = spaces.find(j);
    return it == spaces.end() ? 0 : it->second.size();
  };
  report.injective_below = true;
  report.surjective_above = true;
  if (!spaces.empty()) {
    const int lo = spaces.begin()->first - 2, hi = spaces.rbegin()->first;
    for (int j = lo; j <= hi; ++j) {
      std::vector<LieElement> images;
      if (auto it = spaces.find(j); it != spaces.end())
        for (GenId g : it->second) images.push_back(lie.bracket(e_elem, LieElement::term(g)));
      for (const auto& x : images)
        for (const auto& term : x)
          if (ad_h_eigenvalue(term.first) != j + 2) report.surjective_above = report.injective_below = false;
      const std::size_t rank = span_rank(images);
      if (j <= -1 && rank != dim_of(j)) report.injective_below = false;
      if (j >= -1 && rank != dim_of(j + 2)) report.surjective_above = false;
    }
  }
  return report;
}

bool RectangleAlgebra::in_m(GenId g) const {
  return rectangle_.col(gl_.row_of(g)) > rectangle_.col(gl_.col_of(g));
}

std::pair<std::vector<GenId>, std::vector<GenId>> RectangleAlgebra::split_p_m() const {
  std::pair<std::vector<GenId>, std::vector<GenId>> out;
  for (GenId g = 0; g < gl_.dimension(); ++g) (in_m(g) ? out.second : out.first).push_back(g);
  return out;
}

bool RectangleAlgebra::in_Up(const UEAElement& x) const {
  for (const auto& entry : x)
    for (Letter l : entry.first)
      if (in_m(uea_->order().generator(l))) return false;
  return true;
}

Scalar RectangleAlgebra::chi(const LieElement& y) const { return gl_.str_form(y, e()); }

Scalar RectangleAlgebra::chi(GenId g) const {
  const std::size_t a = gl_.row_of(g), b = gl_.col_of(g);
  if (rectangle_.row(a) == rectangle_.row(b) && rectangle_.col(a) == rectangle_.col(b) + 1)
    return parity_sign(rectangle_.parity(a));
  return 0;
}

UEAElement RectangleAlgebra::pr_chi(const UEAElement& x) const { return pr_chi(x, *uea_); }

UEAElement RectangleAlgebra::pr_chi(const UEAElement& x, const EnvelopingAlgebra& algebra) const {
  if (algebra.lie().dimension() != gl_.dimension())
    throw std::invalid_argument("pr_chi: element is not in U(g) for this rectangle");
  const auto& order = algebra.order();
  bool seen_m = false;
  for (GenId g : order.ascending()) {
    if (in_m(g)) {
      seen_m = true;
    } else if (seen_m) {
      throw std::invalid_argument("pr_chi: generator order does not place p before m");
    }
  }
  UEAElement result;
  for (const auto& [mono, coeff] : x) {
    Scalar c = coeff;
    std::size_t keep = mono.size();
    while (keep > 0 && in_m(order.generator(mono[keep - 1]))) {
      c *= chi(order.generator(mono[keep - 1]));
      --keep;
    }
    if (c != 0) result.add(PBWMonomial(mono.begin(), mono.begin() + static_cast<std::ptrdiff_t>(keep)), c);
  }
  return result;
}

UEAElement RectangleAlgebra::twisted_action(GenId a, const UEAElement& y) const {
  if (!in_m(a)) throw std::invalid_argument("twisted_action: generator is not in m");
  if (!in_Up(y)) throw std::invalid_argument("twisted_action: argument is not in U(p)");
  return pr_chi(uea_->supercommutator(uea_->generator(a), y));
}

std::vector<CentralizerElement> RectangleAlgebra::centralizer_basis() const {
  std::vector<CentralizerElement> basis;
  const std::size_t rows = rectangle_.height(), ell = rectangle_.ell();
  for (std::size_t r = 1; r <= ell; ++r) {
    for (std::size_t i = 1; i <= rows; ++i) {
      for (std::size_t j = 1; j <= rows; ++j) {
        LieElement c;
        const int sign = parity_sign(rectangle_.row_parity(i));
        for (std::size_t col = 1; col + r - 1 <= ell; ++col)
          c.add(generator(rectangle_.box(i, col), rectangle_.box(j, col + r - 1)), sign);
        basis.push_back({i, j, r, std::move(c)});
      }
    }
  }
  return basis;
}

std::uint64_t RectangleAlgebra::sym_dim(std::size_t d) const {
  std::vector<std::uint64_t> count(d + 1, 0);
  count[0] = 1;
  for (const auto& c : centralizer_basis()) {
    auto parity = gl_.lie().parity(c.value);
    std::optional<int> degree;
    for (const auto& term : c.value) {
      int k = kazhdan_degree(term.first);
      if (degree && *degree != k) throw std::logic_error("centralizer element is not Kazhdan homogeneous");
      degree = k;
    }
    if (!parity || !degree || *degree <= 0) throw std::logic_error("unexpected centralizer element");
    const auto w = static_cast<std::size_t>(*degree);
    if (w > d) continue;
    if (is_odd(*parity)) {
      for (std::size_t k = d + 1; k-- > w;) count[k] += count[k - w];
    } else {
      for (std::size_t k = w; k <= d; ++k) count[k] += count[k - w];
    }
  }
  std::uint64_t total = 0;
  for (auto v : count) total += v;
  return total;
}

DenseMatrix to_matrix(const GeneralLinear& gl, const LieElement& x) {
  DenseMatrix m(gl.rank(), std::vector<Scalar>(gl.rank(), 0));
  for (const auto& [g, c] : x) m[gl.row_of(g)][gl.col_of(g)] += c;
  return m;
}

namespace {

std::vector<std::size_t> block_partition(const DenseMatrix& block) {
  const std::size_t size = block.size();
  std::vector<std::size_t> ranks{size};
  DenseMatrix power = block;
  for (std::size_t k = 1; k <= size; ++k) {
    ranks.push_back(matrix_rank(power));
    if (ranks.back() == 0) break;
    power = matrix_multiply(power, block);
  }
  if (ranks.back() != 0) throw std::invalid_argument("jordan_type: element is not nilpotent");
  // number of blocks of size >= k is ranks[k-1] - ranks[k]
  std::vector<std::size_t> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k) at_least.push_back(ranks[k - 1] - ranks[k]);
  std::vector<std::size_t> parts;
  for (std::size_t k = at_least.size(); k-- > 0;) {
    const std::size_t bigger = k + 1 < at_least.size() ? at_least[k + 1] : 0;
    parts.insert(parts.end(), at_least[k] - bigger, k + 1);
  }
  return parts;
}

}  // namespace

JordanType jordan_type(const GeneralLinear& gl, const LieElement& e) {
  const auto& u = gl.universe();
  std::vector<std::size_t> even_idx, odd_idx;
  for (std::size_t a = 0; a < u.size(); ++a) (is_odd(u.parity(a)) ? odd_idx : even_idx).push_back(a);
  for (const auto& term : e)
    if (is_odd(gl.lie().parity(term.first))) throw std::invalid_argument("jordan_type: element is not even");
  const DenseMatrix full = to_matrix(gl, e);
  auto restrict = [&](const std::vector<std::size_t>& idx) {
    DenseMatrix block(idx.size(), std::vector<Scalar>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) block[r][c] = full[idx[r]][idx[c]];
    return block;
  };
  JordanType out;
  out.mu = block_partition(restrict(even_idx));
  out.nu = block_partition(restrict(odd_idx));
  std::vector<std::size_t> all = out.mu;
  all.insert(all.end(), out.nu.begin(), out.nu.end());
  out.rectangular = !all.empty() && std::all_of(all.begin(), all.end(), [&](std::size_t p) { return p == all.front(); });
  out.ell = out.rectangular ? all.front() : 0;
  return out;
}

}  // namespace superw
