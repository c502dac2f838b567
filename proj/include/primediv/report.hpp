#pragma once

// JSON, text and CSV renderings of the library results.

#include <json.hpp>

#include <ostream>
#include <string>

#include "primediv/density.hpp"
#include "primediv/sieve.hpp"

namespace primediv::report {

using nlohmann::json;

json to_json(const ExactRational& x);  // "num/den"
json to_json(const ApproxReal& x);     // {"decimal", "abs_error"}
json to_json(const DensityResult& d);  // {"fraction"?, "decimal", "abs_error", "formula_id"}
json to_json(const AlgebraicNumber& x);
json to_json(const PrimeCheck& c);
json to_json(const SieveSummary& s);
json to_json(const ComparisonReport& r);

/// {"meta": {"command", "recurrence", ...extra}, "results": results}
json envelope(const std::string& command, const Recurrence* rec, json meta_extra, json results);

/// Classification plus the exact quotients, when they exist.
json classification_json(const Recurrence& rec);

void write_summary_text(std::ostream& os, const SieveSummary& s);
void write_comparison_text(std::ostream& os, const ComparisonReport& r);
void write_comparison_csv(std::ostream& os, const ComparisonReport& r);
/// Name, fraction, decimal and error per line.
void write_density_text(std::ostream& os, const DensityResult& d, const std::string& name);

}  // namespace primediv::report
