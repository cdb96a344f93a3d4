#include "krigmean/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <utility>

namespace krigmean::svg {

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace

Chart::Chart(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void Chart::add_line(std::vector<Point> pts, std::string color) {
    elements_.push_back({Element::Kind::Line, std::move(pts), std::move(color), 0.0, 0.0, false});
}

void Chart::add_points(std::vector<Point> pts, std::string color, double radius) {
    elements_.push_back({Element::Kind::Points, std::move(pts), std::move(color), radius, 0.0, false});
}

void Chart::add_hline(double y, std::string color) {
    elements_.push_back({Element::Kind::HLine, {}, std::move(color), 0.0, y, false});
}

void Chart::add_vline(double x, std::string color, bool dashed) {
    elements_.push_back({Element::Kind::VLine, {}, std::move(color), 0.0, x, dashed});
}

std::string Chart::render(int width, int height) const {
    double x_min = std::numeric_limits<double>::infinity(), x_max = -x_min;
    double y_min = x_min, y_max = -x_min;
    for (const auto& el : elements_) {
        for (const auto& p : el.pts) {
            x_min = std::min(x_min, p.x);
            x_max = std::max(x_max, p.x);
            y_min = std::min(y_min, p.y);
            y_max = std::max(y_max, p.y);
        }
        if (el.kind == Element::Kind::HLine) {
            y_min = std::min(y_min, el.coord);
            y_max = std::max(y_max, el.coord);
        }
        if (el.kind == Element::Kind::VLine) {
            x_min = std::min(x_min, el.coord);
            x_max = std::max(x_max, el.coord);
        }
    }
    if (!(x_min <= x_max)) {
        x_min = 0.0;
        x_max = 1.0;
    }
    if (!(y_min <= y_max)) {
        y_min = 0.0;
        y_max = 1.0;
    }
    if (x_max == x_min)
        x_max = x_min + 1.0;
    if (y_max == y_min)
        y_max = y_min + 1.0;
    const double x_pad = 0.04 * (x_max - x_min);
    const double y_pad = 0.08 * (y_max - y_min);
    x_min -= x_pad;
    x_max += x_pad;
    y_min -= y_pad;
    y_max += y_pad;

    const double ml = 72.0, mr = 20.0, mt = 34.0, mb = 46.0;
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto sx = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * pw; };
    auto sy = [&](double y) { return mt + ph - (y - y_min) / (y_max - y_min) * ph; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\">" << title_ << "</text>\n";

    // axes with 5 ticks per side
    out << "<g stroke=\"#333\" stroke-width=\"1\" fill=\"none\">\n";
    out << "<path d=\"M " << num(ml) << " " << num(mt) << " L " << num(ml) << " " << num(mt + ph)
        << " L " << num(ml + pw) << " " << num(mt + ph) << "\"/>\n";
    out << "</g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    for (int k = 0; k <= 4; ++k) {
        const double fx = x_min + (x_max - x_min) * k / 4.0;
        const double fy = y_min + (y_max - y_min) * k / 4.0;
        out << "<line x1=\"" << num(sx(fx)) << "\" y1=\"" << num(mt + ph) << "\" x2=\""
            << num(sx(fx)) << "\" y2=\"" << num(mt + ph + 5) << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << num(sx(fx)) << "\" y=\"" << num(mt + ph + 18)
            << "\" text-anchor=\"middle\">" << num(fx) << "</text>\n";
        out << "<line x1=\"" << num(ml - 5) << "\" y1=\"" << num(sy(fy)) << "\" x2=\"" << num(ml)
            << "\" y2=\"" << num(sy(fy)) << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << num(ml - 8) << "\" y=\"" << num(sy(fy) + 4)
            << "\" text-anchor=\"end\">" << num(fy) << "</text>\n";
    }
    out << "<text x=\"" << num(ml + pw / 2) << "\" y=\"" << num(height - 8)
        << "\" text-anchor=\"middle\">" << x_label_ << "</text>\n";
    out << "<text x=\"14\" y=\"" << num(mt + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << num(mt + ph / 2) << ")\">" << y_label_ << "</text>\n";
    out << "</g>\n";

    for (const auto& el : elements_) {
        switch (el.kind) {
        case Element::Kind::Line: {
            out << "<polyline fill=\"none\" stroke=\"" << el.color << "\" stroke-width=\"1.5\" points=\"";
            for (const auto& p : el.pts)
                out << num(sx(p.x)) << "," << num(sy(p.y)) << " ";
            out << "\"/>\n";
            break;
        }
        case Element::Kind::Points: {
            for (const auto& p : el.pts)
                out << "<circle cx=\"" << num(sx(p.x)) << "\" cy=\"" << num(sy(p.y)) << "\" r=\""
                    << num(el.radius) << "\" fill=\"" << el.color << "\"/>\n";
            break;
        }
        case Element::Kind::HLine:
            out << "<line x1=\"" << num(ml) << "\" y1=\"" << num(sy(el.coord)) << "\" x2=\""
                << num(ml + pw) << "\" y2=\"" << num(sy(el.coord)) << "\" stroke=\"" << el.color
                << "\" stroke-width=\"1.5\"/>\n";
            break;
        case Element::Kind::VLine:
            out << "<line x1=\"" << num(sx(el.coord)) << "\" y1=\"" << num(mt) << "\" x2=\""
                << num(sx(el.coord)) << "\" y2=\"" << num(mt + ph) << "\" stroke=\"" << el.color
                << "\"" << (el.dashed ? " stroke-dasharray=\"6 4\"" : "") << " stroke-width=\"1\"/>\n";
            break;
        }
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace krigmean::svg
