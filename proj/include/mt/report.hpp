#pragma once

#include <string>

#include <json.hpp>

#include "mt/mazur_tate.hpp"
#include "mt/synthetic.hpp"

namespace mt {

enum class OutputFormat { Json, Csv, Text };

/// CSV columns, in order, shared by the per-level tables.
inline constexpr const char* kCsvHeader = "n,mu,lambda,is_maximal,integral,mu_cohomological,mu_neron,stab_mu,stab_lambda";

nlohmann::ordered_json level_row_to_json(const LevelRow& row, bool with_stabilized);
nlohmann::ordered_json boundary_to_json(const BoundaryCongruence& b);
nlohmann::ordered_json maximality_to_json(const MaximalityVerdict& m);
nlohmann::ordered_json report_to_json(const DichotomyReport& r);
nlohmann::ordered_json table_to_json(const InvariantsTable& t);

std::string levels_to_csv(const std::vector<LevelRow>& rows);

std::string report_to_text(const DichotomyReport& r);
std::string table_to_text(const InvariantsTable& t);
std::string boundary_to_text(const BoundaryCongruence& b);

std::string render(const DichotomyReport& r, OutputFormat f);
std::string render(const InvariantsTable& t, OutputFormat f);
std::string render(const BoundaryCongruence& b, OutputFormat f);

}  // namespace mt
