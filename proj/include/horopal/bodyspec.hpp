#pragma once

#include <string>
#include <vector>

#include "horopal/model.hpp"

namespace horopal {

// on-disk body description:
// {"kind":"hconvex","generators":[[x,y],...],"label":"..."}
struct BodySpec {
    std::string kind;  // "convex" or "hconvex"
    std::vector<HPoint> generators;
    std::string label;
};

BodySpec parse_bodyspec(const std::string& json_text);
BodySpec load_bodyspec(const std::string& path);
std::string to_json(const BodySpec& spec);

}  // namespace horopal
