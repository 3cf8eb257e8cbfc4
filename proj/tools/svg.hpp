#pragma once

// Minimal SVG writer for cromlech diagrams: the unit circle is mapped onto a
// 512 x 512 view box with the y axis pointing up.

#include <string>
#include <utility>

namespace menhir::cli {

class SvgCanvas {
public:
    static constexpr double size = 512.0;
    static constexpr double radius = 240.0;

    SvgCanvas();

    static std::pair<double, double> to_view(double x, double y);

    void cromlech();
    void star(double x, double y, bool filled);
    void arrow(double x0, double y0, double x1, double y1);
    void marker(double x, double y, const std::string& css_class, const std::string& label);
    void segment(double x0, double y0, double x1, double y1, const std::string& css_class);

    std::string finish() const;

private:
    std::string body_;
};

}  // namespace menhir::cli
