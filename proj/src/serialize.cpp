#include "superw/serialize.hpp"

#include <map>
#include <stdexcept>

namespace superw {

namespace {

json coefficient_fields(json record, const Scalar& c) {
  record["num"] = c.get_num().get_str();
  record["den"] = c.get_den().get_str();
  return record;
}

Scalar coefficient_from(const json& record) {
  Scalar c(mpz_class(record.at("num").get<std::string>()), mpz_class(record.at("den").get<std::string>()));
  if (c.get_den() == 0) throw std::invalid_argument("zero denominator");
  c.canonicalize();
  return c;
}

GenId lookup(const EnvelopingAlgebra& algebra, const std::string& row, const std::string& col) {
  const auto& lie = algebra.lie();
  for (GenId g = 0; g < lie.dimension(); ++g)
    if (lie.label(g).row == row && lie.label(g).col == col) return g;
  throw std::invalid_argument("unknown generator e_{" + row + "," + col + "}");
}

}  // namespace

json monomial_to_json(const PBWMonomial& m, const EnvelopingAlgebra& algebra) {
  json out = json::array();
  for (std::size_t k = 0; k < m.size();) {
    std::size_t run = k;
    while (run < m.size() && m[run] == m[k]) ++run;
    const auto& label = algebra.lie().label(algebra.order().generator(m[k]));
    out.push_back(json::array({label.row, label.col, run - k}));
    k = run;
  }
  return out;
}

PBWMonomial monomial_from_json(const json& j, const EnvelopingAlgebra& algebra) {
  std::vector<GenId> gens;
  for (const auto& factor : j) {
    GenId g = lookup(algebra, factor.at(0).get<std::string>(), factor.at(1).get<std::string>());
    const auto exponent = factor.at(2).get<std::size_t>();
    gens.insert(gens.end(), exponent, g);
  }
  return algebra.monomial(gens);
}

json to_json(const UEAElement& x, const EnvelopingAlgebra& algebra) {
  json terms = json::array();
  for (const auto& [mono, coeff] : x)
    terms.push_back(coefficient_fields({{"monomial", monomial_to_json(mono, algebra)}}, coeff));
  return {{"terms", terms}};
}

UEAElement uea_from_json(const json& j, const EnvelopingAlgebra& algebra) {
  UEAElement x;
  for (const auto& record : j.at("terms"))
    x.add(monomial_from_json(record.at("monomial"), algebra), coefficient_from(record));
  return x;
}

json to_json(const TensorElement& x, const TensorPowerAlgebra& algebra) {
  json terms = json::array();
  for (const auto& [mono, coeff] : x) {
    json factors = json::array();
    for (const auto& f : mono) factors.push_back(monomial_to_json(f, algebra.factor()));
    terms.push_back(coefficient_fields({{"factors", factors}}, coeff));
  }
  return {{"terms", terms}};
}

TensorElement tensor_from_json(const json& j, const TensorPowerAlgebra& algebra) {
  TensorElement x;
  for (const auto& record : j.at("terms")) {
    TensorMonomial mono;
    for (const auto& f : record.at("factors")) mono.push_back(monomial_from_json(f, algebra.factor()));
    if (mono.size() != algebra.factors()) throw std::invalid_argument("wrong number of tensor factors");
    x.add(std::move(mono), coefficient_from(record));
  }
  return x;
}

json to_json(const LieElement& x, const LieSuperalgebra& lie) {
  json terms = json::array();
  for (const auto& [g, coeff] : x)
    terms.push_back(coefficient_fields({{"row", lie.label(g).row}, {"col", lie.label(g).col}}, coeff));
  return {{"terms", terms}};
}

}  // namespace superw
