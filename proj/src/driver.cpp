#include "superw/driver.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "superw/linalg.hpp"
#include "superw/rectangle_algebra.hpp"
#include "superw/walgebra.hpp"
#include "superw/yangian.hpp"

namespace superw {

void ParameterSet::validate() const {
  if (ell == 0) throw std::invalid_argument("l must be at least 1");
  const EpsilonDeltaSequence b = sequence();
  if (b.m() != m || b.n() != n)
    throw std::invalid_argument("sequence '" + seq + "' does not have " + std::to_string(m) + " deltas and " +
                                std::to_string(n) + " epsilons");
}

std::string ParameterSet::str() const {
  std::ostringstream os;
  os << "(" << m << "," << n << "," << ell << "," << seq << ")";
  return os.str();
}

json ParameterSet::to_json() const { return {{"m", m}, {"n", n}, {"ell", ell}, {"seq", seq}}; }

const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{"good-grading", "centralizer", "kappa-rtt",  "kappa-recursion",
                                              "etilrel",      "pathsum-rdet", "m-invariance", "crue",
                                              "w-rtt",        "iso",          "dims"};
  return names;
}

std::vector<ParameterSet> default_sweep() {
  return {{1, 1, 1, "de"}, {1, 1, 2, "de"}, {1, 1, 3, "de"}, {2, 1, 2, "dde"}, {2, 1, 2, "ded"}, {1, 2, 2, "ede"}};
}

void RunConfig::validate() const {
  for (const auto& c : checks)
    if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end())
      throw std::invalid_argument("unknown check '" + c + "'");
  for (const auto& s : sets) s.validate();
}

json RunConfig::to_json() const {
  json s = json::array();
  for (const auto& p : sets) s.push_back(p.to_json());
  return {{"sets", s}, {"degree", degree}, {"checks", checks}, {"max_basis", max_basis}};
}

bool ParameterReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

json ParameterReport::to_json() const {
  json out = params.to_json();
  out["passed"] = passed();
  out["checks"] = json::array();
  for (const auto& c : checks) out["checks"].push_back(c.to_json());
  if (!skipped.empty()) out["not_applicable"] = skipped;
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(sets.begin(), sets.end(), [](const ParameterReport& p) { return p.passed(); });
}

std::uint64_t VerificationReport::tested() const {
  std::uint64_t total = 0;
  for (const auto& s : sets)
    for (const auto& c : s.checks) total += c.tested;
  return total;
}

json VerificationReport::to_json() const {
  json out = {{"schema", kSchemaVersion}, {"config", config.to_json()}, {"passed", passed()}, {"tested", tested()}};
  out["results"] = json::array();
  for (const auto& s : sets) out["results"].push_back(s.to_json());
  return out;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  for (const auto& s : sets) {
    for (const auto& c : s.checks) {
      os << (c.passed() ? "PASS " : "FAIL ") << s.params.str() << " " << c.name << ": " << c.tested << " cases";
      if (!c.passed()) os << ", " << c.failed << " failed";
      if (c.seconds) os << " (" << *c.seconds << " s)";
      os << "\n";
    }
    for (const auto& name : s.skipped) os << "N/A  " << s.params.str() << " " << name << "\n";
  }
  os << (passed() ? "all checks passed" : "some checks FAILED") << " (" << tested() << " cases)\n";
  return os.str();
}

namespace {

class SetContext {
 public:
  explicit SetContext(ParameterSet params) : params_(std::move(params)) { params_.validate(); }

  const ParameterSet& params() const { return params_; }
  ColoredRectangle rectangle() const {
    return ColoredRectangle::build(params_.m, params_.n, params_.ell, params_.sequence());
  }
  const RectangleAlgebra& rect() {
    if (!rect_) rect_ = std::make_unique<RectangleAlgebra>(rectangle());
    return *rect_;
  }
  const TruncatedYangian& yangian() {
    if (!yangian_) yangian_ = std::make_unique<TruncatedYangian>(params_.sequence(), params_.ell);
    return *yangian_;
  }
  const TruncatedYangian& lower_yangian() {
    if (!lower_) lower_ = std::make_unique<TruncatedYangian>(params_.sequence(), params_.ell - 1);
    return *lower_;
  }
  const WAlgebra& walgebra() {
    if (!walgebra_) walgebra_ = std::make_unique<WAlgebra>(rectangle());
    return *walgebra_;
  }

 private:
  ParameterSet params_;
  std::unique_ptr<RectangleAlgebra> rect_;
  std::unique_ptr<TruncatedYangian> yangian_, lower_;
  std::unique_ptr<WAlgebra> walgebra_;
};

CheckResult good_grading(SetContext& ctx) {
  CheckResult result;
  result.name = "good-grading";
  const GoodGradingReport g = ctx.rect().verify_good_grading();
  for (bool ok : {g.h_e_is_2e, g.integral_eigenvalues, g.center_in_degree_zero, g.injective_below,
                  g.surjective_above, g.even})
    result.record(ok);
  if (!result.passed()) result.counterexample = g.to_json();
  result.details = g.to_json();
  return result;
}

CheckResult centralizer(SetContext& ctx) {
  CheckResult result;
  result.name = "centralizer";
  const RectangleAlgebra& rect = ctx.rect();
  const auto& gl = rect.gl();
  const LieElement e = rect.e();
  const auto basis = rect.centralizer_basis();
  std::vector<LieElement> values;
  for (const auto& c : basis) {
    const LieElement bracket = gl.lie().bracket(c.value, e);
    result.record(bracket.is_zero(), [&] {
      return json{{"i", c.i}, {"j", c.j}, {"r", c.r}, {"bracket_with_e", to_json(bracket, gl.lie())}};
    });
    values.push_back(c.value);
  }
  const std::size_t rank = span_rank(values);
  result.record(rank == basis.size(), [&] { return json{{"independent_rank", rank}, {"size", basis.size()}}; });

  std::vector<LieElement> images;
  for (GenId g = 0; g < gl.dimension(); ++g) images.push_back(gl.lie().bracket(e, LieElement::term(g)));
  const std::size_t kernel = gl.dimension() - span_rank(images);
  const std::size_t expected = ctx.params().ell * (ctx.params().m + ctx.params().n) * (ctx.params().m + ctx.params().n);
  result.record(kernel == expected, [&] { return json{{"dim_centralizer", kernel}, {"expected", expected}}; });
  result.details = {{"basis_size", basis.size()}, {"dim_centralizer", kernel}};
  return result;
}

CheckResult kappa_recursion(SetContext& ctx) {
  CheckResult result;
  result.name = "kappa-recursion";
  const TruncatedYangian& y = ctx.yangian();
  const TruncatedYangian& lower = ctx.lower_yangian();
  for (std::size_t i = 1; i <= y.rows(); ++i) {
    for (std::size_t j = 1; j <= y.rows(); ++j) {
      for (std::size_t r = 0; r <= y.ell() + 1; ++r) {
        const TensorElement direct = y.kappa_image(i, j, r);
        const TensorElement composed = TruncatedYangian::kappa_recursion(y, lower, i, j, r);
        result.record(direct == composed, [&] {
          return json{{"i", i}, {"j", j}, {"r", r}, {"closed_form", y.dump(direct)}, {"recursion", y.dump(composed)}};
        });
        bool filtered = true;
        for (const auto& term : direct) filtered = filtered && TensorPowerAlgebra::length(term.first) <= r;
        result.record(filtered, [&] { return json{{"i", i}, {"j", j}, {"r", r}, {"filtration", false}}; });
      }
    }
  }
  return result;
}

CheckResult dimension_table(SetContext& ctx, std::size_t degree, std::uint64_t max_basis, bool ranks) {
  CheckResult result;
  result.name = ranks ? "iso" : "dims";
  std::vector<std::size_t> degrees;
  for (std::size_t d = 0; d <= degree; ++d) {
    const std::uint64_t size = ctx.yangian().pbw_count(d);
    if (ranks && size > max_basis) {
      result.record(false, [&] {
        return json{{"error", "resource budget exceeded"}, {"d", d}, {"basis_size", size}, {"max_basis", max_basis}};
      });
      break;
    }
    degrees.push_back(d);
  }
  if (ranks) {
    CheckResult iso = ctx.walgebra().verify_iso(ctx.yangian(), degrees);
    iso.merge(result);
    return iso;
  }
  json table = json::array();
  for (std::size_t d : degrees) {
    const std::uint64_t pbw = ctx.yangian().pbw_count(d), sym = ctx.rect().sym_dim(d);
    result.record(pbw == sym, [&] { return json{{"d", d}, {"pbw_count", pbw}, {"sym_dim", sym}}; });
    table.push_back({{"d", d}, {"pbw_count", pbw}, {"sym_dim", sym}});
  }
  result.details = table;
  return result;
}

std::optional<CheckResult> dispatch(const std::string& name, SetContext& ctx, std::size_t degree, std::size_t jobs,
                                    std::uint64_t max_basis) {
  const std::size_t ell = ctx.params().ell;
  if (name == "good-grading") return good_grading(ctx);
  if (name == "centralizer") return centralizer(ctx);
  if (name == "kappa-rtt") return ctx.yangian().rtt_sweep(jobs);
  if (name == "kappa-recursion") return ell >= 2 ? std::optional(kappa_recursion(ctx)) : std::nullopt;
  if (name == "etilrel") return ctx.walgebra().verify_etilrel(jobs);
  if (name == "pathsum-rdet") return ctx.walgebra().verify_pathsum_rdet();
  if (name == "m-invariance") return ctx.walgebra().verify_m_invariance(jobs);
  if (name == "crue") return ell == 2 ? std::optional(ctx.walgebra().verify_crue()) : std::nullopt;
  if (name == "w-rtt") return ctx.walgebra().verify_w_rtt(jobs);
  if (name == "iso") return dimension_table(ctx, degree, max_basis, true);
  if (name == "dims") return dimension_table(ctx, degree, max_basis, false);
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace

std::optional<CheckResult> run_check(const std::string& name, const ParameterSet& params, std::size_t degree,
                                     std::size_t jobs, std::uint64_t max_basis) {
  SetContext ctx(params);
  return dispatch(name, ctx, degree, jobs, max_basis);
}

VerificationReport run(const RunConfig& config) {
  config.validate();
  VerificationReport report;
  report.config = config;
  for (const auto& params : config.sets) {
    SetContext ctx(params);
    ParameterReport set_report;
    set_report.params = params;
    for (const auto& name : all_checks()) {
      if (std::find(config.checks.begin(), config.checks.end(), name) == config.checks.end()) continue;
      const auto start = std::chrono::steady_clock::now();
      std::optional<CheckResult> result = dispatch(name, ctx, config.degree, config.jobs, config.max_basis);
      if (!result) {
        set_report.skipped.push_back(name);
        continue;
      }
      result->name = name;
      if (config.timing)
        result->seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      set_report.checks.push_back(std::move(*result));
    }
    report.sets.push_back(std::move(set_report));
  }
  return report;
}

json dims(const ParameterSet& params, std::size_t d) {
  SetContext ctx(params);
  json rows = json::array();
  for (std::size_t k = 0; k <= d; ++k) {
    const std::uint64_t pbw = ctx.yangian().pbw_count(k), sym = ctx.rect().sym_dim(k);
    rows.push_back({{"d", k}, {"pbw_count", pbw}, {"sym_dim", sym}, {"equal", pbw == sym}});
  }
  return {{"schema", kSchemaVersion}, {"params", params.to_json()}, {"table", rows}};
}

const std::vector<std::string>& dump_selectors() {
  static const std::vector<std::string> names{"w-generators", "kappa-images", "centralizer", "rectangle"};
  return names;
}

json dump(const ParameterSet& params, const std::string& what) {
  if (std::find(dump_selectors().begin(), dump_selectors().end(), what) == dump_selectors().end())
    throw std::invalid_argument("unknown dump selector '" + what + "'");
  SetContext ctx(params);
  json out = {{"schema", kSchemaVersion}, {"params", params.to_json()}, {"what", what}};
  json items = json::array();
  if (what == "rectangle") {
    const ColoredRectangle pi = ctx.rectangle();
    for (std::size_t j = 0; j < pi.box_count(); ++j)
      items.push_back({{"position", j},
                       {"label", pi.box_index(j).label()},
                       {"row", pi.row(j)},
                       {"col", pi.col(j)},
                       {"tilde_col", pi.tilde_col(j)},
                       {"parity", is_odd(pi.parity(j)) ? 1 : 0}});
    json grid = json::array();
    for (std::size_t r = 1; r <= pi.height(); ++r) {
      json row = json::array();
      for (std::size_t c = 1; c <= pi.ell(); ++c) row.push_back(pi.box_index(pi.box(r, c)).label());
      grid.push_back(row);
    }
    out["grid"] = grid;
    out["boxes"] = items;
    return out;
  }
  if (what == "centralizer") {
    const RectangleAlgebra& rect = ctx.rect();
    for (const auto& c : rect.centralizer_basis())
      items.push_back({{"i", c.i}, {"j", c.j}, {"r", c.r}, {"value", to_json(c.value, rect.gl().lie())}});
  } else if (what == "w-generators") {
    const WAlgebra& w = ctx.walgebra();
    for (std::size_t r = 1; r <= w.ell(); ++r)
      for (std::size_t i = 1; i <= w.rows(); ++i)
        for (std::size_t j = 1; j <= w.rows(); ++j)
          items.push_back({{"i", i}, {"j", j}, {"r", r}, {"value", w.dump(w.generators().at(i, j, r))}});
  } else {
    const TruncatedYangian& y = ctx.yangian();
    for (std::size_t r = 1; r <= y.ell(); ++r)
      for (std::size_t i = 1; i <= y.rows(); ++i)
        for (std::size_t j = 1; j <= y.rows(); ++j)
          items.push_back({{"i", i}, {"j", j}, {"r", r}, {"value", y.dump(y.kappa_table().at(i, j, r))}});
  }
  out["items"] = items;
  return out;
}

}  // namespace superw
