#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "superw/driver.hpp"

namespace {

using superw::json;

struct Options {
  std::optional<std::size_t> m, n, ell;
  std::optional<std::string> seq;
  std::size_t degree = 2;
  std::string checks = "all";
  std::size_t jobs = 1;
  std::string out;
  bool timing = false;
  std::uint64_t max_basis = 20000;
  std::string what;
};

void add_set_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--m", o.m, "number of delta rows");
  cmd->add_option("--n", o.n, "number of epsilon rows");
  cmd->add_option("--ell", o.ell, "base of the rectangle");
  cmd->add_option("--seq", o.seq, "epsilon-delta sequence over {d,e}, e.g. dde");
}

std::vector<std::string> split_checks(const std::string& text) {
  if (text == "all") return superw::all_checks();
  std::vector<std::string> names;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) names.push_back(item);
  return names;
}

superw::ParameterSet single_set(const Options& o) {
  superw::ParameterSet p;
  if (!o.seq) throw std::invalid_argument("--seq is required");
  p.seq = *o.seq;
  const auto b = p.sequence();
  p.m = o.m.value_or(b.m());
  p.n = o.n.value_or(b.n());
  p.ell = o.ell.value_or(1);
  p.validate();
  return p;
}

void emit(const json& doc, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot write " + out);
  file << doc.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated super Yangians and rectangular finite W-superalgebras"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run identity checks over a parameter sweep");
  add_set_options(verify, o);
  verify->add_option("--degree", o.degree, "largest filtration degree for iso and dims")->capture_default_str();
  verify->add_option("--checks", o.checks, "comma separated check names, or 'all'")->capture_default_str();
  verify->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
  verify->add_option("--out", o.out, "write the JSON report here ('-' for stdout)");
  verify->add_option("--max-basis", o.max_basis, "largest supermonomial basis to rank")->capture_default_str();
  verify->add_flag("--timing", o.timing, "record wall time per check");

  auto* dims = app.add_subcommand("dims", "tabulate pbw_count and sym_dim");
  add_set_options(dims, o);
  dims->add_option("--degree", o.degree, "largest degree")->capture_default_str();
  dims->add_option("--out", o.out, "write JSON here instead of a text table");

  auto* dump = app.add_subcommand("dump", "write generators or rectangle data as JSON");
  add_set_options(dump, o);
  dump->add_option("--what", o.what, "w-generators | kappa-images | centralizer | rectangle")->required();
  dump->add_option("--out", o.out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      superw::RunConfig config;
      if (o.seq || o.m || o.n || o.ell) {
        config.sets.push_back(single_set(o));
      } else {
        config.sets = superw::default_sweep();
      }
      config.degree = o.degree;
      config.checks = split_checks(o.checks);
      config.jobs = o.jobs;
      config.timing = o.timing;
      config.max_basis = o.max_basis;
      const superw::VerificationReport report = superw::run(config);
      (o.out == "-" ? std::cerr : std::cout) << report.summary();
      if (!o.out.empty()) emit(report.to_json(), o.out);
      return report.passed() ? 0 : 1;
    }
    if (*dims) {
      const json table = superw::dims(single_set(o), o.degree);
      if (!o.out.empty()) {
        emit(table, o.out);
      } else {
        std::cout << "d  pbw_count  sym_dim\n";
        for (const auto& row : table["table"])
          std::cout << row["d"] << "  " << row["pbw_count"] << "  " << row["sym_dim"]
                    << (row["equal"].get<bool>() ? "" : "  MISMATCH") << "\n";
      }
      bool equal = true;
      for (const auto& row : table["table"]) equal = equal && row["equal"].get<bool>();
      return equal ? 0 : 1;
    }
    emit(superw::dump(single_set(o), o.what), o.out);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
