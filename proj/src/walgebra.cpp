#include "superw/walgebra.hpp"

#include <optional>
#include <stdexcept>

#include "superw/linalg.hpp"

namespace superw {

Scalar rho(std::size_t r, std::size_t m, std::size_t n, std::size_t ell) {
  if (r < 1 || r > ell) throw std::out_of_range("rho: need 1 <= r <= l");
  return -Scalar(static_cast<long>(ell - r)) * (static_cast<long>(m) - static_cast<long>(n));
}

MatWordPoly mat_scalar(const Scalar& c) { return MatWordPoly::term(MatTerm{0, {}}, c); }
MatWordPoly mat_u() { return MatWordPoly::term(MatTerm{1, {}}, 1); }
MatWordPoly mat_letter(std::size_t a, std::size_t b) { return MatWordPoly::term(MatTerm{0, {{a, b}}}, 1); }

MatWordPoly mat_multiply(const MatWordPoly& x, const MatWordPoly& y) {
  MatWordPoly out;
  for (const auto& [tx, cx] : x) {
    for (const auto& [ty, cy] : y) {
      MatTerm t{tx.power + ty.power, tx.word};
      t.word.insert(t.word.end(), ty.word.begin(), ty.word.end());
      out.add(std::move(t), cx * cy);
    }
  }
  return out;
}

MatWordMatrix a_matrix(std::size_t m, std::size_t n, std::size_t ell) {
  if (ell == 0) throw std::invalid_argument("a_matrix: l must be at least 1");
  MatWordMatrix a(ell, std::vector<MatWordPoly>(ell));
  for (std::size_t c = 1; c <= ell; ++c) {
    a[c - 1][c - 1] = mat_u() + mat_letter(c, c) + mat_scalar(rho(c, m, n, ell));
    for (std::size_t d = c + 1; d <= ell; ++d) a[c - 1][d - 1] = mat_letter(c, d);
    if (c > 1) a[c - 1][c - 2] = mat_scalar(1);
  }
  return a;
}

MatWordMatrix submatrix(const MatWordMatrix& a, std::size_t p, std::size_t q) {
  if (p < 1 || q > a.size() || p > q + 1) throw std::out_of_range("submatrix: bad row range");
  MatWordMatrix out;
  for (std::size_t r = p; r <= q; ++r) {
    if (a[r - 1].size() != a.size()) throw std::invalid_argument("submatrix: matrix is not square");
    out.emplace_back(a[r - 1].begin() + static_cast<std::ptrdiff_t>(p - 1),
                     a[r - 1].begin() + static_cast<std::ptrdiff_t>(q));
  }
  return out;
}

MatWordPoly rdet(const MatWordMatrix& a) {
  const std::size_t k = a.size();
  for (const auto& row : a)
    if (row.size() != k) throw std::invalid_argument("rdet: matrix is not square");
  MatWordPoly result;
  std::vector<bool> used(k, false);
  auto expand = [&](auto&& self, std::size_t row, const MatWordPoly& prefix, int sign) -> void {
    if (row == k) {
      result.add_scaled(prefix, Scalar(sign));
      return;
    }
    // columns already used to the right of `col` count the inversions added by it
    for (std::size_t col = 0; col < k; ++col) {
      if (used[col] || a[row][col].is_zero()) continue;
      std::size_t inversions = 0;
      for (std::size_t c = col + 1; c < k; ++c) inversions += used[c];
      used[col] = true;
      self(self, row + 1, mat_multiply(prefix, a[row][col]), inversions % 2 ? -sign : sign);
      used[col] = false;
    }
  };
  expand(expand, 0, mat_scalar(1), 1);
  return result;
}

WAlgebra::WAlgebra(ColoredRectangle rectangle)
    : rect_(std::move(rectangle)),
      rdet_a_(rdet(a_matrix(rect_.rectangle().m(), rect_.rectangle().n(), rect_.rectangle().ell()))),
      gens_(rect_.rectangle().height(), rect_.rectangle().ell()) {
  for (std::size_t i = 1; i <= rows(); ++i)
    for (std::size_t j = 1; j <= rows(); ++j)
      for (std::size_t r = 0; r <= ell(); ++r) gens_.set(i, j, r, w_gen_pathsum(i, j, r));
}

Scalar WAlgebra::rho(std::size_t r) const { return superw::rho(r, rectangle().m(), rectangle().n(), ell()); }

UEAElement WAlgebra::tilde_e(std::size_t a, std::size_t b) const {
  const auto& pi = rectangle();
  const int sign = (pi.col(b) + pi.col(a)) % 2 ? -1 : 1;
  UEAElement out = enveloping().generator(rect_.generator(a, b), sign);
  if (a == b) out += enveloping().scalar(rho(pi.col(a)) * sign * parity_sign(pi.parity(a)));
  return out;
}

Scalar WAlgebra::chi_tilde_e(std::size_t a, std::size_t b) const {
  const auto& pi = rectangle();
  const int sign = (pi.col(b) + pi.col(a)) % 2 ? -1 : 1;
  return rect_.chi(rect_.generator(a, b)) * sign;
}

UEAElement WAlgebra::letter_image(std::size_t i, std::size_t j, MatLetter x) const {
  const auto& pi = rectangle();
  if (x.a < 1 || x.b < 1 || x.a > ell() || x.b > ell()) throw std::out_of_range("t_map: matrix unit out of range");
  return enveloping().generator(rect_.generator(pi.box(i, x.a), pi.box(j, x.b)), parity_sign(pi.row_parity(i)));
}

UEAElement WAlgebra::t_map(std::size_t i, std::size_t j, const MatWord& word) const {
  const std::size_t R = rows();
  std::vector<UEAElement> current(R);
  current[i - 1] = enveloping().one();
  for (const MatLetter& x : word) {
    std::vector<UEAElement> next(R);
    for (std::size_t from = 1; from <= R; ++from) {
      if (current[from - 1].is_zero()) continue;
      for (std::size_t to = 1; to <= R; ++to)
        next[to - 1] += enveloping().multiply(current[from - 1], letter_image(from, to, x));
    }
    current = std::move(next);
  }
  return current.at(j - 1);
}

UPolynomial WAlgebra::t_map(std::size_t i, std::size_t j, const MatWordPoly& x) const {
  UPolynomial out;
  for (const auto& [term, c] : x) {
    if (out.size() <= term.power) out.resize(term.power + 1);
    out[term.power].add_scaled(t_map(i, j, term.word), c);
  }
  return out;
}

UEAElement WAlgebra::w_gen_pathsum(std::size_t i, std::size_t j, std::size_t r) const {
  if (r > ell()) throw std::out_of_range("w_gen_pathsum: need r <= l");
  if (r == 0) return i == j ? enveloping().one() : UEAElement();
  const auto& pi = rectangle();
  UEAElement result;
  // pairs (a_t, b_t) with row(a_1) = i, row(b_t) = row(a_{t+1}),
  // col(a_t) <= col(b_t) < col(a_{t+1}), degrees summing to r, row(b_s) = j
  auto extend = [&](auto&& self, std::size_t row, std::size_t min_col, std::size_t budget,
                    const UEAElement& prefix) -> void {
    for (std::size_t ca = min_col; ca <= ell(); ++ca) {
      const std::size_t a = pi.box(row, ca);
      for (std::size_t cb = ca; cb <= ell() && cb - ca + 1 <= budget; ++cb) {
        const std::size_t degree = cb - ca + 1;
        for (std::size_t rb = 1; rb <= rows(); ++rb) {
          if (degree == budget && rb != j) continue;
          const std::size_t b = pi.box(rb, cb);
          UEAElement factor = tilde_e(a, b);
          if (is_odd(pi.parity(a))) factor = -factor;
          UEAElement grown = enveloping().multiply(prefix, factor);
          if (degree == budget) {
            result += grown;
          } else {
            self(self, rb, cb + 1, budget - degree, grown);
          }
        }
      }
    }
  };
  extend(extend, i, 1, r, enveloping().one());
  return result;
}

UEAElement WAlgebra::w_gen_rdet(std::size_t i, std::size_t j, std::size_t r) const {
  if (r > ell()) throw std::out_of_range("w_gen_rdet: need r <= l");
  const std::size_t power = ell() - r;
  MatWordPoly slice;
  for (const auto& [term, c] : rdet_a_)
    if (term.power == power) slice.add(MatTerm{0, term.word}, c);
  UPolynomial image = t_map(i, j, slice);
  return image.empty() ? UEAElement() : image[0];
}

LieElement WAlgebra::leading_linear_part(std::size_t i, std::size_t j, std::size_t r) const {
  LieElement out;
  const auto& order = enveloping().order();
  for (const auto& [mono, c] : gens_.at(i, j, r)) {
    if (mono.size() != 1) continue;
    const GenId g = order.generator(mono[0]);
    if (rect_.kazhdan_degree(g) == static_cast<int>(r)) out.add(g, c);
  }
  return out;
}

TensorElement WAlgebra::mu(const UEAElement& x, const TruncatedYangian& yangian) const {
  if (!(yangian.sequence() == rectangle().sequence()) || yangian.ell() != ell())
    throw std::invalid_argument("mu: Yangian does not match the rectangle");
  if (!rect_.in_Up(x)) throw std::invalid_argument("mu: element is not in U(p)");
  const auto& pi = rectangle();
  const auto& gl = rect_.gl();
  const auto& order = enveloping().order();
  const TensorPowerAlgebra& target = yangian.tensor();
  std::vector<std::optional<TensorElement>> images(order.size());
  auto image_of = [&](Letter l) -> const TensorElement& {
    auto& slot = images[l];
    if (!slot) {
      const GenId g = order.generator(l);
      const std::size_t a = gl.row_of(g), b = gl.col_of(g);
      TensorElement img;
      if (pi.col(a) == pi.col(b)) {
        const std::size_t c = pi.col(a);
        img = target.embed(c - 1, yangian.enveloping().generator(yangian.generator(pi.row(a), pi.row(b))));
        if (a == b) img -= target.scalar(rho(c) * parity_sign(pi.parity(a)));
      }
      slot = std::move(img);
    }
    return *slot;
  };
  TensorElement result;
  for (const auto& [mono, c] : x) {
    TensorElement term = target.scalar(c);
    for (Letter l : mono) {
      const TensorElement& img = image_of(l);
      if (img.is_zero()) {
        term = TensorElement();
        break;
      }
      term = target.multiply(term, img);
    }
    result += term;
  }
  return result;
}

bool WAlgebra::detcomp1_check(std::size_t i, std::size_t j, std::size_t h, std::size_t k, MatLetter x,
                              const MatWord& ys) const {
  const UEAElement lhs = enveloping().supercommutator(t_map(i, j, MatWord{x}), t_map(h, k, ys));
  UEAElement rhs;
  const std::size_t r = ys.size();
  for (std::size_t s = 1; s <= r; ++s) {
    const MatLetter& y = ys[s - 1];
    const MatWord head(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(s - 1));
    const MatWord tail(ys.begin() + static_cast<std::ptrdiff_t>(s), ys.end());
    if (x.b == y.a) {
      MatWord right{MatLetter{x.a, y.b}};
      right.insert(right.end(), tail.begin(), tail.end());
      rhs += enveloping().multiply(t_map(h, j, head), t_map(i, k, right));
    }
    if (y.b == x.a) {
      MatWord left = head;
      left.push_back(MatLetter{y.a, x.b});
      rhs -= enveloping().multiply(t_map(h, j, left), t_map(i, k, tail));
    }
  }
  const Parity pi = row_parity(i), pj = row_parity(j), ph = row_parity(h);
  if (koszul_sign(pi, pj) * koszul_sign(pi, ph) * koszul_sign(pj, ph) < 0) rhs = -rhs;
  return lhs == rhs;
}

CheckResult WAlgebra::verify_etilrel(std::size_t jobs) const {
  CheckResult result;
  result.name = "etilrel";
  const auto& pi = rectangle();
  const std::size_t D = pi.box_count();
  auto shift = [&](std::size_t a) { return enveloping().scalar(rho(pi.col(a)) * parity_sign(pi.parity(a))); };
  parallel_sweep(D * D * D * D, jobs, result, [&] {
    return [&](std::size_t idx, CheckResult& out) {
      const std::size_t d = idx % D, c = idx / D % D, b = idx / (D * D) % D, a = idx / (D * D * D);
      const UEAElement lhs = enveloping().supercommutator(tilde_e(a, b), tilde_e(c, d));
      UEAElement rhs;
      if (c == b) {
        rhs += tilde_e(a, d);
        if (a == d) rhs -= shift(a);
      }
      if (a == d) {
        UEAElement second = tilde_e(c, b);
        if (c == b) second -= shift(b);
        const int sign = koszul_sign(pi.parity(a) + pi.parity(b), pi.parity(c) + pi.parity(d));
        rhs.add_scaled(second, Scalar(-sign));
      }
      out.record(lhs == rhs, [&] {
        return json{{"boxes", {pi.box_index(a).label(), pi.box_index(b).label(), pi.box_index(c).label(),
                               pi.box_index(d).label()}},
                    {"lhs", dump(lhs)},
                    {"rhs", dump(rhs)}};
      });
    };
  });
  for (std::size_t a = 0; a < D; ++a) {
    for (std::size_t b = 0; b < D; ++b) {
      const bool adjacent = pi.row(a) == pi.row(b) && pi.col(a) == pi.col(b) + 1;
      const Scalar expected = adjacent ? Scalar(-parity_sign(pi.parity(a))) : Scalar(0);
      const Scalar actual = chi_tilde_e(a, b);
      result.record(actual == expected, [&] {
        return json{{"chi", {pi.box_index(a).label(), pi.box_index(b).label()}},
                    {"expected", to_string(expected)},
                    {"actual", to_string(actual)}};
      });
    }
  }
  return result;
}

CheckResult WAlgebra::verify_pathsum_rdet() const {
  CheckResult result;
  result.name = "pathsum-rdet";
  for (std::size_t i = 1; i <= rows(); ++i) {
    for (std::size_t j = 1; j <= rows(); ++j) {
      for (std::size_t r = 0; r <= ell(); ++r) {
        const UEAElement& path = gens_.at(i, j, r);
        const UEAElement det = w_gen_rdet(i, j, r);
        result.record(path == det, [&] {
          return json{{"i", i}, {"j", j}, {"r", r}, {"pathsum", dump(path)}, {"rdet", dump(det)}};
        });
      }
    }
  }
  return result;
}

CheckResult WAlgebra::verify_m_invariance(std::size_t jobs) const {
  CheckResult result;
  result.name = "m-invariance";
  const std::vector<GenId> m_basis = rect_.split_p_m().second;
  const std::size_t R = rows(), L = ell() + 1;
  parallel_sweep(m_basis.size() * R * R * L, jobs, result, [&] {
    return [&](std::size_t idx, CheckResult& out) {
      const std::size_t r = idx % L, j = idx / L % R + 1, i = idx / (L * R) % R + 1, g = idx / (L * R * R);
      const GenId a = m_basis[g];
      const UEAElement residue =
          rect_.pr_chi(enveloping().supercommutator(enveloping().generator(a), gens_.at(i, j, r)));
      out.record(residue.is_zero(), [&] {
        const auto& gl = rect_.gl();
        const auto& pi = rectangle();
        return json{{"a", {pi.box_index(gl.row_of(a)).label(), pi.box_index(gl.col_of(a)).label()}},
                    {"i", i}, {"j", j}, {"r", r}, {"residue", dump(residue)}};
      });
    };
  });
  result.details = {{"m_dimension", m_basis.size()}};
  return result;
}

CheckResult WAlgebra::verify_crue(std::size_t c) const {
  if (ell() != 2 || c != 1) throw std::invalid_argument("verify_crue: only l = 2, c = 1 is supported");
  CheckResult result;
  result.name = "crue";
  const MatWordPoly first = mat_multiply(mat_letter(2, 1), mat_u() + mat_letter(2, 2) + mat_scalar(rho(2)));
  const MatWordPoly second = mat_u() + mat_letter(2, 2) + mat_scalar(rho(1));
  const MatWordPoly difference = first - second;
  for (std::size_t i = 1; i <= rows(); ++i) {
    for (std::size_t j = 1; j <= rows(); ++j) {
      const UPolynomial image = t_map(i, j, difference);
      for (std::size_t p = 0; p < image.size(); ++p) {
        const UEAElement residue = rect_.pr_chi(image[p]);
        result.record(residue.is_zero(), [&] {
          return json{{"i", i}, {"j", j}, {"u_power", p}, {"residue", dump(residue)}};
        });
      }
    }
  }
  return result;
}

CheckResult WAlgebra::verify_w_rtt(std::size_t jobs) const {
  std::vector<Parity> parities;
  for (std::size_t i = 1; i <= rows(); ++i) parities.push_back(row_parity(i));
  return rtt_sweep("w-rtt", enveloping(), gens_, parities, jobs, [this](const UEAElement& x) { return dump(x); });
}

CheckResult WAlgebra::verify_mu_kappa(const TruncatedYangian& yangian) const {
  CheckResult result;
  result.name = "mu-kappa";
  for (std::size_t i = 1; i <= rows(); ++i) {
    for (std::size_t j = 1; j <= rows(); ++j) {
      for (std::size_t r = 0; r <= ell(); ++r) {
        const TensorElement image = mu(gens_.at(i, j, r), yangian);
        const TensorElement& expected = yangian.kappa_table().at(i, j, r);
        result.record(image == expected, [&] {
          return json{{"i", i}, {"j", j}, {"r", r}, {"mu", yangian.dump(image)}, {"kappa", yangian.dump(expected)}};
        });
      }
    }
  }
  return result;
}

CheckResult WAlgebra::verify_iso(const TruncatedYangian& yangian, const std::vector<std::size_t>& degrees,
                                 std::size_t jobs) const {
  CheckResult result;
  result.name = "iso";
  const CheckResult images = verify_mu_kappa(yangian);
  result.merge(images);

  std::vector<Parity> parities;
  for (std::size_t i = 1; i <= rows(); ++i) parities.push_back(row_parity(i));
  json table = json::array();
  for (std::size_t d : degrees) {
    const auto monomials = supermonomials(parities, ell(), d);
    const auto elements = supermonomial_images(enveloping(), gens_, monomials);
    std::vector<TensorElement> pushed;
    pushed.reserve(elements.size());
    for (const auto& x : elements) pushed.push_back(mu(x, yangian));
    const std::uint64_t pbw = monomials.size();
    const std::uint64_t sym = rect_.sym_dim(d);
    const std::size_t rank_w = span_rank(elements), rank_mu = span_rank(pushed);
    json row = {{"d", d}, {"pbw_count", pbw}, {"sym_dim", sym}, {"rank_w", rank_w}, {"rank_mu", rank_mu}};
    result.record(pbw == sym && rank_w == pbw && rank_mu == pbw, [&] { return json{{"dimensions", row}}; });
    table.push_back(std::move(row));
  }

  const CheckResult invariance = verify_m_invariance(jobs);
  result.merge(invariance);
  result.details = {{"mu_kappa", {{"tested", images.tested}, {"failed", images.failed}}},
                    {"dimensions", table},
                    {"m_invariance", {{"tested", invariance.tested}, {"failed", invariance.failed}}}};
  return result;
}

}  // namespace superw
