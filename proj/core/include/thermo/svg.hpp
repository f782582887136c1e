#pragma once

#include <string>
#include <vector>

namespace thermo {

// Minimal deterministic SVG 1.1 line/scatter chart writer. Output is plain
// text with fixed decimal formatting so identical inputs render identical
// bytes; the generation timestamp comment is optional for reproducible runs.
class SvgChart {
public:
    SvgChart(std::string title, std::string x_label, std::string y_label);

    void add_line(const std::string& name, const std::string& color,
                  const std::vector<double>& x, const std::vector<double>& y);
    void add_points(const std::string& name, const std::string& color,
                    const std::vector<double>& x, const std::vector<double>& y);

    // Render the document. When with_timestamp is true a generation-time
    // comment is embedded (suppressed by --reproducible).
    std::string render(bool with_timestamp) const;

private:
    struct Dataset {
        std::string name;
        std::string color;
        std::vector<double> x, y;
        bool points = false;
    };
    std::string title_, x_label_, y_label_;
    std::vector<Dataset> data_;
};

} // namespace thermo
