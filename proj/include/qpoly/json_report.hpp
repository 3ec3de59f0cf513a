#pragma once

#include "qpoly/report.hpp"
#include "qpoly/series_cm.hpp"

#include <json.hpp>

#include <string>

namespace qpoly {

using Json = nlohmann::ordered_json;

/// {"target", "k_range", "min_margin", "first_violation", "status"}
Json to_json(const CertReport& rep);

/// Lemma sweep; exact witnesses carry {"num","den"} strings, real ones {"decimal"}.
Json to_json(const LemmaReport& rep);

/// Coefficient rows as CSV with header k,coefficient,margin,regime.
std::string to_csv(const CertReport& rep);

}  // namespace qpoly
