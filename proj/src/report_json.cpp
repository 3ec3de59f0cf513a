#include "qpoly/json_report.hpp"

#include <sstream>

namespace qpoly {
namespace {

Json quantity(const Quantity& q) {
  if (const auto* r = std::get_if<Rational>(&q))
    return Json{{"num", numerator(*r).str()}, {"den", denominator(*r).str()}};
  return Json{{"decimal", to_string(std::get<Real>(q), 30)}};
}

Json witness(const Witness& w) {
  Json params = Json::object();
  for (const auto& [name, v] : w.params) params[name] = v;
  return Json{{"check", w.check}, {"regime", to_string(w.regime)}, {"params", params},
              {"k", w.k},         {"lhs", quantity(w.lhs)},        {"rhs", quantity(w.rhs)}};
}

Json witness_list(const std::vector<Witness>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(witness(w));
  return out;
}

}  // namespace

Json to_json(const CertReport& rep) {
  Json first = nullptr;
  if (rep.first_violation) {
    first = Json{{"index", rep.first_violation->index},
                 {"value", rep.first_violation->value.convert_to<double>()}};
    if (rep.first_violation->x) first["x"] = rep.first_violation->x->convert_to<double>();
  }
  return Json{{"target", {{"descriptor", rep.target}, {"regime", to_string(rep.regime)}, {"sign", rep.sign}}},
              {"k_range", Json::array({rep.k_lo, rep.k_hi})},
              {"min_margin", rep.min_margin.convert_to<double>()},
              {"first_violation", first},
              {"status", to_string(rep.status)}};
}

Json to_json(const LemmaReport& rep) {
  Json ranges = Json::object();
  for (const auto& [k, v] : rep.ranges) ranges[k] = v;
  Json regimes = Json::object();
  for (const auto& [k, v] : rep.regime_counts) regimes[k] = v;
  Json per_check = Json::object();
  for (const auto& [k, v] : rep.check_counts) per_check[k] = v;
  return Json{{"lemma", rep.lemma},
              {"ranges", ranges},
              {"pass", rep.pass()},
              {"checks", rep.checks},
              {"regime_counts", regimes},
              {"check_counts", per_check},
              {"violation_count", rep.violation_count},
              {"violations", witness_list(rep.violations)},
              {"equality_count", rep.equality_count},
              {"equalities", witness_list(rep.equalities)},
              {"observation_count", rep.observation_count},
              {"observations", witness_list(rep.observations)}};
}

std::string to_csv(const CertReport& rep) {
  std::ostringstream os;
  os << "k,coefficient,margin,regime\n";
  for (const CoeffRow& row : rep.rows)
    os << row.k << ',' << to_string(row.coefficient, 25) << ',' << to_string(row.margin, 25) << ','
       << to_string(rep.regime) << '\n';
  return os.str();
}

}  // namespace qpoly
