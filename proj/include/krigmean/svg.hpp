#ifndef KRIGMEAN_SVG_HPP
#define KRIGMEAN_SVG_HPP

#include <string>
#include <vector>

namespace krigmean::svg {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Minimal deterministic line/scatter chart writer; just enough for the
// figure-ready outputs. All coordinates are formatted with fixed precision
// so identical inputs render identical bytes.
class Chart {
public:
    Chart(std::string title, std::string x_label, std::string y_label);

    void add_line(std::vector<Point> pts, std::string color);
    void add_points(std::vector<Point> pts, std::string color, double radius = 3.0);
    void add_hline(double y, std::string color);
    void add_vline(double x, std::string color, bool dashed = false);

    std::string render(int width = 900, int height = 450) const;

private:
    struct Element {
        enum class Kind { Line, Points, HLine, VLine } kind;
        std::vector<Point> pts;
        std::string color;
        double radius = 0.0;
        double coord = 0.0;
        bool dashed = false;
    };

    std::string title_, x_label_, y_label_;
    std::vector<Element> elements_;
};

} // namespace krigmean::svg

#endif
