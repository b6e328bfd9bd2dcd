#ifndef ORTK_TEXT_HPP
#define ORTK_TEXT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "ortk/ecgraph.hpp"
#include "ortk/rootsys.hpp"

namespace ortk {

// "e1-d2", "2d", "d+e1+e2", "1/2e1".
std::string weight_name(const RootSystem& rs, const Weight& v);
std::string root_name(const RootSystem& rs, int id);
std::vector<std::string> root_names(const RootSystem& rs, const std::vector<int>& ids);
Weight parse_weight_name(const RootSystem& rs, const std::string& text);

// Young diagram of a gl(m|n) Borel, or empty when the family is not gl.
std::string young_label(const RootSystem& rs, const Borel& b);
std::string borel_label(const RootSystem& rs, const Borel& b, int rank);

// "#3", a Young string for gl, or "{e1-d1; d1-e2; ...}" listing the odd positives.
int parse_borel_address(const RootSystem& rs, const BorelEnumeration& en, const std::string& text);
// Comma-separated addresses; commas inside braces do not split.
std::vector<std::string> split_addresses(const std::string& text);

std::string export_dot(const ColoredGraph& g);
nlohmann::ordered_json graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const nlohmann::json& j);

std::string family_name(const FamilySpec& spec);

}  // namespace ortk

#endif
