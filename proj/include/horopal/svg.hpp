#pragma once

#include <string>
#include <vector>

#include "horopal/curves.hpp"

namespace horopal {

// figure scene: the unit circle plus styled curves, arcs and points
struct SvgScene {
    struct Item {
        Arc arc;
        std::string stroke = "#1f3a93";
        double width = 0.006;
    };
    std::vector<Item> items;
    std::vector<HPoint> points;

    void add_arc(const Arc& a, const std::string& stroke = "#1f3a93", double w = 0.006);
    void add_chain(const std::vector<Arc>& arcs, const std::string& stroke = "#1f3a93",
                   double w = 0.006);
    // full curves are clipped to the disk (geodesics/hypercycles between their
    // ideal points, circles and horocycles as closed loops)
    void add_curve(const Curve& c, const std::string& stroke = "#777777", double w = 0.004);
};

// deterministic output bytes for a fixed scene
std::string render_svg(const SvgScene& scene);
void write_svg(const SvgScene& scene, const std::string& path);

}  // namespace horopal
