#pragma once

#include <json.hpp>

#include "qc/certify.hpp"
#include "qc/empirical.hpp"

namespace qc {

inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kLibraryVersion = "0.1.0";

nlohmann::ordered_json verdict_report(const Verdict& v);
nlohmann::ordered_json experiment_report(const ExperimentReport& rep);
nlohmann::ordered_json survey_report(const std::vector<SurveyRow>& rows);

}  // namespace qc
