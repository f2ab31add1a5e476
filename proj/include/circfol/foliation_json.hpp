#pragma once

#include <string>

#include <json.hpp>

#include "circfol/foliation.hpp"

namespace circfol {

// {"base": {"m": 2, "edges": [[0,1,1]]}, "fibers": [[2],[1]], "labels": ["inner","outer"]}
// Edges are [i, j, multiplicity] with 0-based indices; "labels" is optional.
FoliationSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const FoliationSpec& spec);

FoliationSpec read_spec_file(const std::string& path);

}  // namespace circfol
