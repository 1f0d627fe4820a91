#pragma once

#include <string>

#include "construction.hpp"
#include "cover.hpp"
#include "graph.hpp"

namespace tropitev {

std::string linform_to_json(const LinForm& f);
LinForm linform_from_json(const std::string& text);

std::string graph_to_json(const MetricGraph& g);
MetricGraph graph_from_json(const std::string& text);

std::string cover_to_json(const TropicalCover& c);
// with an "index" object when s is given
std::string solution_to_json(const Solution& s);
// Parse errors on malformed input; does not validate the cover
TropicalCover cover_from_json(const std::string& text);

// source above target, dashed arrows for the map
std::string cover_to_dot(const TropicalCover& c, const std::string& name = "cover");

}  // namespace tropitev
