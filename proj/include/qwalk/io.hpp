#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qwalk/ctqw.hpp"
#include "qwalk/dirac.hpp"
#include "qwalk/distribution.hpp"
#include "qwalk/dtqw.hpp"
#include "qwalk/limit_laws.hpp"
#include "qwalk/stats.hpp"

namespace qwalk::io {

// Shortest exact decimal form (%.17g); keeps identical configs byte-identical.
std::string format_double(double v);

// Columns n, re_L, im_L, re_R, im_R, prob with a header row.
std::string walker_csv(const dtqw::WalkerState& s);

// Same schema plus a trailing method column; the scalar amplitude sits in the
// L columns.
std::string ctqw_csv(const ctqw::CtqwState& s, const std::string& method);

// Distribution-only rows; spinor columns zeroed. method may be empty.
std::string distribution_csv(const Distribution& d, const std::string& method = "");

// Write-temp-then-rename.
void atomic_write(const std::filesystem::path& path, const std::string& content);

// Sum of the prob column of a CSV produced by the writers above.
double csv_total_probability(const std::string& csv);

nlohmann::json law_json(const laws::LimitLaw& law);

nlohmann::json report_json(const stats::ConvergenceReport& rep, const laws::LimitLaw& law);

// Columns t, ks, m1, m2, m4.
std::string report_csv(const stats::ConvergenceReport& rep);

nlohmann::json order_report_json(const dirac::OrderReport& rep);

} // namespace qwalk::io
