#include "svg.hpp"

#include <cstdio>

namespace menhir::cli {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

SvgCanvas::SvgCanvas() = default;

std::pair<double, double> SvgCanvas::to_view(double x, double y) {
    return {size / 2 + radius * x, size / 2 - radius * y};
}

void SvgCanvas::cromlech() {
    body_ += "  <circle class=\"cromlech\" cx=\"256\" cy=\"256\" r=\"240\" fill=\"none\" stroke=\"#444\" "
             "stroke-width=\"1.5\"/>\n";
}

void SvgCanvas::star(double x, double y, bool filled) {
    const auto [vx, vy] = to_view(x, y);
    body_ += "  <circle class=\"" + std::string(filled ? "star-after" : "star-before") + "\" cx=\"" + fmt(vx) +
             "\" cy=\"" + fmt(vy) + "\" r=\"5\" " +
             (filled ? "fill=\"#1f3b73\" stroke=\"none\"" : "fill=\"none\" stroke=\"#1f3b73\"") + "/>\n";
}

void SvgCanvas::arrow(double x0, double y0, double x1, double y1) {
    const auto [ax, ay] = to_view(x0, y0);
    const auto [bx, by] = to_view(x1, y1);
    body_ += "  <line class=\"arrow\" x1=\"" + fmt(ax) + "\" y1=\"" + fmt(ay) + "\" x2=\"" + fmt(bx) + "\" y2=\"" +
             fmt(by) + "\" stroke=\"#888\" marker-end=\"url(#head)\"/>\n";
}

void SvgCanvas::marker(double x, double y, const std::string& css_class, const std::string& label) {
    const auto [vx, vy] = to_view(x, y);
    body_ += "  <rect class=\"" + escape(css_class) + "\" x=\"" + fmt(vx - 4) + "\" y=\"" + fmt(vy - 4) +
             "\" width=\"8\" height=\"8\" fill=\"#b03a2e\"/>\n";
    if (!label.empty()) {
        body_ += "  <text x=\"" + fmt(vx + 7) + "\" y=\"" + fmt(vy - 7) +
                 "\" font-size=\"12\" font-family=\"sans-serif\">" + escape(label) + "</text>\n";
    }
}

void SvgCanvas::segment(double x0, double y0, double x1, double y1, const std::string& css_class) {
    const auto [ax, ay] = to_view(x0, y0);
    const auto [bx, by] = to_view(x1, y1);
    body_ += "  <line class=\"" + escape(css_class) + "\" x1=\"" + fmt(ax) + "\" y1=\"" + fmt(ay) + "\" x2=\"" +
             fmt(bx) + "\" y2=\"" + fmt(by) + "\" stroke=\"#b03a2e\" stroke-dasharray=\"4 3\"/>\n";
}

std::string SvgCanvas::finish() const {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 512 512\" width=\"512\" height=\"512\">\n"
           "  <defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#888\"/></marker></defs>\n" +
           body_ + "</svg>\n";
}

}  // namespace menhir::cli
