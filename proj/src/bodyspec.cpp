#include "horopal/bodyspec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace horopal {

BodySpec parse_bodyspec(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("bodyspec: malformed JSON: ") + e.what());
    }
    BodySpec spec;
    spec.kind = j.value("kind", "hconvex");
    if (spec.kind != "convex" && spec.kind != "hconvex")
        throw std::runtime_error("bodyspec: kind must be \"convex\" or \"hconvex\"");
    spec.label = j.value("label", "");
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw std::runtime_error("bodyspec: missing or empty generators");
    for (const auto& g : j["generators"]) {
        if (!g.is_array() || g.size() != 2)
            throw std::runtime_error("bodyspec: generators must be [x, y] pairs");
        double x = g[0].get<double>(), y = g[1].get<double>();
        if (!valid_point(x, y))
            throw std::runtime_error("bodyspec: generator outside the open unit disk");
        spec.generators.push_back({x, y});
    }
    return spec;
}

BodySpec load_bodyspec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("bodyspec: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_bodyspec(ss.str());
}

std::string to_json(const BodySpec& spec) {
    nlohmann::json j;
    j["kind"] = spec.kind;
    if (!spec.label.empty()) j["label"] = spec.label;
    nlohmann::json gens = nlohmann::json::array();
    for (const HPoint& p : spec.generators) gens.push_back({p.x, p.y});
    j["generators"] = gens;
    return j.dump();
}

}  // namespace horopal
