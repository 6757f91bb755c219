#pragma once

#include <string>

#include <json.hpp>

#include "satlab/search.hpp"
#include "satlab/structure.hpp"

namespace satlab {

// newline-delimited "key: value" renderings; wall-clock timing is never
// included so output stays byte-stable
std::string to_text(const SearchReport& rep);
std::string to_text(const ResidueReport& rep);

nlohmann::json to_json(const SearchReport& rep);
nlohmann::json to_json(const ResidueReport& rep);

}  // namespace satlab
