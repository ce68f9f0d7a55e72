#pragma once

#include "chss/tables.hpp"

namespace chss {

std::string report_to_json(const Model& m, const RigidityReport& rep, const ModelTables* tables);
std::string report_to_markdown(const Model& m, const RigidityReport& rep);

}  // namespace chss
