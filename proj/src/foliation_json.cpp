#include "circfol/foliation_json.hpp"

#include <fstream>

namespace circfol {

using nlohmann::json;

FoliationSpec spec_from_json(const json& doc) {
  try {
    const json& base = doc.at("base");
    const auto m = base.at("m").get<long>();
    if (m <= 0) throw InvalidSpec("base.m must be positive");
    std::vector<BaseGraph::Edge> edges;
    for (const json& e : base.value("edges", json::array())) {
      if (!e.is_array() || (e.size() != 2 && e.size() != 3))
        throw InvalidSpec("base edges must be [i, j] or [i, j, multiplicity]");
      const auto i = e[0].get<long>();
      const auto j = e[1].get<long>();
      const int k = e.size() == 3 ? e[2].get<int>() : 1;
      if (i < 0 || j < 0) throw InvalidSpec("base edge endpoint out of range");
      edges.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), k});
    }
    std::vector<FiberSpec> fibers;
    for (const json& f : doc.at("fibers")) fibers.emplace_back(f.get<std::vector<Jump>>());
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    return FoliationSpec(BaseGraph::from_edges(static_cast<std::size_t>(m), edges), std::move(fibers),
                         std::move(labels));
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("malformed spec JSON: ") + e.what());
  }
}

json spec_to_json(const FoliationSpec& spec) {
  json edges = json::array();
  for (const auto& e : spec.base().edges()) edges.push_back({e.u, e.v, e.multiplicity});
  json fibers = json::array();
  for (const auto& f : spec.fibers()) fibers.push_back(f.jumps());
  json out = {{"base", {{"m", spec.vertex_count()}, {"edges", edges}}}, {"fibers", fibers}};
  if (!spec.labels().empty()) out["labels"] = spec.labels();
  return out;
}

FoliationSpec read_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidSpec("cannot open spec file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw InvalidSpec("spec file '" + path + "' is not valid JSON: " + e.what());
  }
  return spec_from_json(doc);
}

}  // namespace circfol
