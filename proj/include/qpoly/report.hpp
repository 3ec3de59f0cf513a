#pragma once

// Outcome of an exact or numeric lemma sweep.

#include "qpoly/exact.hpp"
#include "qpoly/numeric.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qpoly {

/// Label attached to every swept instance; reports never claim more than this.
enum class LemmaRegime { ProvenLemma1, ProvenLemma2, Proven, Empirical };
std::string to_string(LemmaRegime r);

using Quantity = std::variant<Rational, Real>;

struct Witness {
  std::string check;  // which inequality or identity
  LemmaRegime regime = LemmaRegime::Proven;
  std::vector<std::pair<std::string, long>> params;
  long k = 0;
  Quantity lhs;
  Quantity rhs;
};

struct LemmaReport {
  static constexpr std::size_t kMaxListed = 64;

  std::string lemma;
  std::map<std::string, std::string> ranges;
  std::size_t checks = 0;
  std::size_t violation_count = 0;
  std::size_t equality_count = 0;
  std::size_t observation_count = 0;
  std::vector<Witness> violations;    // proven regimes only; first kMaxListed
  std::vector<Witness> equalities;    // exact-equality cases; first kMaxListed
  std::vector<Witness> observations;  // failures in Empirical regimes
  std::map<std::string, std::size_t> regime_counts;
  std::map<std::string, std::size_t> check_counts;  // instances swept per check name

  bool pass() const { return violation_count == 0; }
  /// Counts one swept instance under its check name and regime.
  void tally(const std::string& check, LemmaRegime regime);

  void add_violation(Witness w);
  void add_equality(Witness w);
  void add_observation(Witness w);
  void merge(const LemmaReport& other);
};

}  // namespace qpoly
