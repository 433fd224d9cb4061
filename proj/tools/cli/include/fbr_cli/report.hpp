#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbr/conductor.hpp"
#include "fbr/fibered_ring.hpp"

namespace fbr::cli {

enum class Format { Json, Tsv, Text };

Format parse_format(const std::string& s);

/// A rectangular table plus the structured JSON form of the same data.
struct Report {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  nlohmann::json json;
};

/// Writes one or more reports. JSON emits a single document (an array when
/// there are several reports); TSV and text emit one block per report.
void render(const std::vector<Report>& reports, Format format, std::ostream& out);

nlohmann::json cyc_json(const CycNum& c);
nlohmann::json element_json(const FBElement& x);
/// Elements of a subgroup with φ's exponents on them.
nlohmann::json pair_json(const FiberedRing& ring, int basis_index);
std::string pair_label(const FiberedRing& ring, int basis_index);
std::string point_label(const FiberedRing& ring, int point);

std::string cyc_cell(const CycNum& c, Format format);

Report basis_report(const FiberedRing& ring);
Report marks_report(const FiberedRing& ring);
Report species_report(const FiberedRing& ring, Format format);
Report idempotents_report(const FiberedRing& ring, Format format);
Report conductors_report(const FiberedRing& ring);

nlohmann::json conductor_json(const FiberedRing& ring, const ConductorReport& c);

}  // namespace fbr::cli
