#include "qpoly/report.hpp"

namespace qpoly {

std::string to_string(LemmaRegime r) {
  switch (r) {
    case LemmaRegime::ProvenLemma1: return "ProvenLemma1";
    case LemmaRegime::ProvenLemma2: return "ProvenLemma2";
    case LemmaRegime::Proven: return "Proven";
    case LemmaRegime::Empirical: return "Empirical";
  }
  return "?";
}

void LemmaReport::tally(const std::string& check, LemmaRegime regime) {
  ++checks;
  ++regime_counts[to_string(regime)];
  ++check_counts[check];
}

void LemmaReport::add_violation(Witness w) {
  ++violation_count;
  if (violations.size() < kMaxListed) violations.push_back(std::move(w));
}

void LemmaReport::add_equality(Witness w) {
  ++equality_count;
  if (equalities.size() < kMaxListed) equalities.push_back(std::move(w));
}

void LemmaReport::add_observation(Witness w) {
  ++observation_count;
  if (observations.size() < kMaxListed) observations.push_back(std::move(w));
}

void LemmaReport::merge(const LemmaReport& other) {
  checks += other.checks;
  for (const auto& w : other.violations)
    if (violations.size() < kMaxListed) violations.push_back(w);
  for (const auto& w : other.equalities)
    if (equalities.size() < kMaxListed) equalities.push_back(w);
  for (const auto& w : other.observations)
    if (observations.size() < kMaxListed) observations.push_back(w);
  violation_count += other.violation_count;
  equality_count += other.equality_count;
  observation_count += other.observation_count;
  for (const auto& [k, v] : other.regime_counts) regime_counts[k] += v;
  for (const auto& [k, v] : other.check_counts) check_counts[k] += v;
}

}  // namespace qpoly
