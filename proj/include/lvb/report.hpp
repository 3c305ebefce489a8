#pragma once

#include <string>

#include "json.hpp"
#include "lvb/biquandle.hpp"
#include "lvb/calibration.hpp"
#include "lvb/coloring.hpp"
#include "lvb/diagram.hpp"

namespace lvb {

nlohmann::json to_json(const AxiomReport& report);
std::string format_text(const AxiomReport& report);

nlohmann::json to_json(const FCandidate& f);
std::string format_text(const FCandidate& f);

nlohmann::json to_json(const InvariantResult& result);
std::string format_text(const InvariantResult& result);

nlohmann::json to_json(const Distinction& d);
std::string format_text(const Distinction& d);

nlohmann::json to_json(const ConstraintSet& cs);
std::string format_text(const ConstraintSet& cs);

nlohmann::json to_json(const ConventionCalibration& c);
std::string format_text(const ConventionCalibration& c);

nlohmann::json to_json(const std::vector<ParityCheck>& rows);
std::string format_text(const std::vector<ParityCheck>& rows);

/// Provenance block printed at the top of every report.
nlohmann::json header_json(const Convention& group_convention, const ColoringConvention* coloring = nullptr);
std::string header_text(const Convention& group_convention, const ColoringConvention* coloring = nullptr);

}  // namespace lvb
