#pragma once

#include "convterm/enumerator_matrix.hpp"
#include "convterm/macwilliams.hpp"
#include "convterm/spectrum.hpp"
#include "convterm/termination.hpp"

#include <json.hpp>

#include <string>

namespace convterm {

/// "1 + 2x^2 + 4x^3" in ascending weight order, with an explicit constant
/// term and " (mod x^(dmax+1))" appended for truncated enumerators.
std::string to_display_string(const WeightEnumerator& w);

/// Aligned table with an s/s' header row of state labels.
std::string to_table(const EnumeratorMatrix& m);

/// One line per row, bits grouped into n-bit symbols: "11 01 11 00".
std::string to_grouped_rows(const Gf2Matrix& m, int group);

std::string to_display_string(const BigRational& q);
double to_double(const BigRational& q);

nlohmann::json to_json(const WeightEnumerator& w);
WeightEnumerator weight_enumerator_from_json(const nlohmann::json& j);
nlohmann::json to_json(const EnumeratorMatrix& m);
nlohmann::json to_json(const Gf2Matrix& m, int group);
nlohmann::json to_json(const BlockCodeMatrix& m, int group);
nlohmann::json to_json(const SpectrumReport& r);
nlohmann::json to_json(const ConvergenceReport& r);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const PerformanceEstimate& e);

} // namespace convterm
