#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <thread>
#include <vector>

#include "superw/parity.hpp"
#include "superw/report.hpp"

namespace superw {

/// Runs cases 0..count-1 on `jobs` threads. Each thread gets contiguous
/// cases and its own worker from `make_worker()`; a worker is called as
/// worker(index, result). Partial results are merged in case order, so the
/// reported counterexample is the first failing case whatever `jobs` is.
template <typename MakeWorker>
void parallel_sweep(std::size_t count, std::size_t jobs, CheckResult& result, MakeWorker make_worker) {
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
  std::vector<CheckResult> partial(jobs);
  auto run_chunk = [&](std::size_t w) {
    auto worker = make_worker();
    const std::size_t lo = w * count / jobs, hi = (w + 1) * count / jobs;
    for (std::size_t idx = lo; idx < hi; ++idx) worker(idx, partial[w]);
  };
  if (jobs == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(run_chunk, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& p : partial) result.merge(p);
}

/// Images of the generators t^{(r)}_{ij}, 1 <= i,j <= rows, 0 <= r <= levels,
/// in some algebra; entries above `levels` read as zero.
template <typename Element>
class GeneratorTable {
 public:
  GeneratorTable(std::size_t rows, std::size_t levels)
      : rows_(rows), levels_(levels), entries_(rows * rows * (levels + 1)) {}

  std::size_t rows() const { return rows_; }
  std::size_t levels() const { return levels_; }

  const Element& at(std::size_t i, std::size_t j, std::size_t r) const {
    return r > levels_ ? zero_ : entries_.at(index(i, j, r));
  }
  void set(std::size_t i, std::size_t j, std::size_t r, Element value) {
    entries_.at(index(i, j, r)) = std::move(value);
  }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t r) const {
    return ((i - 1) * rows_ + (j - 1)) * (levels_ + 1) + r;
  }
  std::size_t rows_, levels_;
  std::vector<Element> entries_;
  Element zero_;
};

/// Both sides of
///   [t^{(r)}_{ij}, t^{(s)}_{hk}] = (-1)^{|i||j|+|i||h|+|j||h|}
///     sum_{t=0}^{min(r,s)-1} (t^{(t)}_{hj} t^{(r+s-1-t)}_{ik} - t^{(r+s-1-t)}_{hj} t^{(t)}_{ik})
/// evaluated on a generator table. Products of table entries are memoised.
template <typename Algebra, typename Element>
class RttEvaluator {
 public:
  RttEvaluator(const Algebra& algebra, const GeneratorTable<Element>& table, std::vector<Parity> row_parity)
      : algebra_(algebra), table_(table), parity_(std::move(row_parity)) {}

  Element lhs(std::size_t i, std::size_t j, std::size_t h, std::size_t k, std::size_t r, std::size_t s) const {
    return algebra_.supercommutator(table_.at(i, j, r), table_.at(h, k, s));
  }

  Element rhs(std::size_t i, std::size_t j, std::size_t h, std::size_t k, std::size_t r, std::size_t s) {
    Element out;
    for (std::size_t t = 0; t < std::min(r, s); ++t) {
      out += product(h, j, t, i, k, r + s - 1 - t);
      out -= product(h, j, r + s - 1 - t, i, k, t);
    }
    const Parity pi = parity_.at(i - 1), pj = parity_.at(j - 1), ph = parity_.at(h - 1);
    const int sign = koszul_sign(pi, pj) * koszul_sign(pi, ph) * koszul_sign(pj, ph);
    if (sign < 0) out = -out;
    return out;
  }

 private:
  const Element& product(std::size_t a, std::size_t b, std::size_t p, std::size_t c, std::size_t d, std::size_t q) {
    const std::array<std::size_t, 6> key{a, b, p, c, d, q};
    auto it = products_.find(key);
    if (it == products_.end()) {
      const Element& x = table_.at(a, b, p);
      const Element& y = table_.at(c, d, q);
      it = products_.emplace(key, x.is_zero() || y.is_zero() ? Element() : algebra_.multiply(x, y)).first;
    }
    return it->second;
  }

  const Algebra& algebra_;
  const GeneratorTable<Element>& table_;
  std::vector<Parity> parity_;
  std::map<std::array<std::size_t, 6>, Element> products_;
};

/// Checks the RTT relation for every (i,j,h,k) and 1 <= r,s <= table.levels().
/// `dump` serialises an element for the counterexample payload.
template <typename Algebra, typename Element, typename Dump>
CheckResult rtt_sweep(const std::string& name, const Algebra& algebra, const GeneratorTable<Element>& table,
                      const std::vector<Parity>& row_parity, std::size_t jobs, Dump dump) {
  CheckResult result;
  result.name = name;
  const std::size_t R = table.rows(), L = table.levels();
  const std::size_t count = R * R * R * R * L * L;
  parallel_sweep(count, jobs, result, [&] {
    return [&, eval = RttEvaluator<Algebra, Element>(algebra, table, row_parity)](std::size_t idx,
                                                                                CheckResult& out) mutable {
      std::size_t rest = idx;
      const std::size_t s = rest % L + 1; rest /= L;
      const std::size_t r = rest % L + 1; rest /= L;
      const std::size_t k = rest % R + 1; rest /= R;
      const std::size_t h = rest % R + 1; rest /= R;
      const std::size_t j = rest % R + 1; rest /= R;
      const std::size_t i = rest + 1;
      Element left = eval.lhs(i, j, h, k, r, s);
      Element right = eval.rhs(i, j, h, k, r, s);
      out.record(left == right, [&] {
        return json{{"i", i}, {"j", j}, {"h", h}, {"k", k}, {"r", r}, {"s", s},
                    {"lhs", dump(left)}, {"rhs", dump(right)}};
      });
    };
  });
  return result;
}

}  // namespace superw
