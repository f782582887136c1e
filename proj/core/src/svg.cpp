#include "thermo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>

namespace thermo {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMarginL = 70.0;
constexpr double kMarginR = 20.0;
constexpr double kMarginT = 40.0;
constexpr double kMarginB = 50.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

// round the axis range outward to a tidy tick step
void nice_range(double& lo, double& hi, double& step) {
    if (!(hi > lo)) {
        hi = lo + 1.0;
        lo -= 1.0;
    }
    const double span = hi - lo;
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double s = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) {
            s = m * mag;
            break;
        }
    }
    lo = std::floor(lo / s) * s;
    hi = std::ceil(hi / s) * s;
    step = s;
}

} // namespace

SvgChart::SvgChart(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void SvgChart::add_line(const std::string& name, const std::string& color,
                        const std::vector<double>& x,
                        const std::vector<double>& y) {
    data_.push_back({name, color, x, y, false});
}

void SvgChart::add_points(const std::string& name, const std::string& color,
                          const std::vector<double>& x,
                          const std::vector<double>& y) {
    data_.push_back({name, color, x, y, true});
}

std::string SvgChart::render(bool with_timestamp) const {
    double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
    double ylo = xlo, yhi = -xlo;
    for (const auto& d : data_) {
        for (double v : d.x) {
            xlo = std::min(xlo, v);
            xhi = std::max(xhi, v);
        }
        for (double v : d.y) {
            ylo = std::min(ylo, v);
            yhi = std::max(yhi, v);
        }
    }
    if (data_.empty() || !std::isfinite(xlo)) {
        xlo = 0.0; xhi = 1.0; ylo = 0.0; yhi = 1.0;
    }
    double xstep, ystep;
    nice_range(xlo, xhi, xstep);
    nice_range(ylo, yhi, ystep);

    const double pw = kWidth - kMarginL - kMarginR;
    const double ph = kHeight - kMarginT - kMarginB;
    const auto px = [&](double v) {
        return kMarginL + (v - xlo) / (xhi - xlo) * pw;
    };
    const auto py = [&](double v) {
        return kMarginT + (yhi - v) / (yhi - ylo) * ph;
    };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "width=\"720\" height=\"480\" viewBox=\"0 0 720 480\">\n";
    if (with_timestamp) {
        char buf[64];
        const std::time_t now = std::time(nullptr);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ",
                      std::gmtime(&now));
        s += std::string("<!-- generated ") + buf + " -->\n";
    }
    s += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
    s += "<text x=\"360\" y=\"24\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">" +
         escape(title_) + "</text>\n";

    // grid and ticks
    for (double v = xlo; v <= xhi + 1e-9; v += xstep) {
        const std::string X = fmt(px(v));
        s += "<line x1=\"" + X + "\" y1=\"" + fmt(kMarginT) + "\" x2=\"" + X +
             "\" y2=\"" + fmt(kHeight - kMarginB) +
             "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        s += "<text x=\"" + X + "\" y=\"" + fmt(kHeight - kMarginB + 18) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
             "font-size=\"11\">" +
             fmt_tick(v) + "</text>\n";
    }
    for (double v = ylo; v <= yhi + 1e-9; v += ystep) {
        const std::string Y = fmt(py(v));
        s += "<line x1=\"" + fmt(kMarginL) + "\" y1=\"" + Y + "\" x2=\"" +
             fmt(kWidth - kMarginR) + "\" y2=\"" + Y +
             "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        s += "<text x=\"" + fmt(kMarginL - 8) + "\" y=\"" + fmt(py(v) + 4) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" "
             "font-size=\"11\">" +
             fmt_tick(v) + "</text>\n";
    }
    // axes
    s += "<rect x=\"" + fmt(kMarginL) + "\" y=\"" + fmt(kMarginT) +
         "\" width=\"" + fmt(pw) + "\" height=\"" + fmt(ph) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s += "<text x=\"" + fmt(kMarginL + pw / 2) + "\" y=\"" +
         fmt(kHeight - 12) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">" +
         escape(x_label_) + "</text>\n";
    s += "<text x=\"18\" y=\"" + fmt(kMarginT + ph / 2) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 18 " +
         fmt(kMarginT + ph / 2) + ")\">" +
         escape(y_label_) + "</text>\n";

    // data
    for (const auto& d : data_) {
        if (d.points) {
            for (size_t i = 0; i < d.x.size() && i < d.y.size(); ++i)
                s += "<circle cx=\"" + fmt(px(d.x[i])) + "\" cy=\"" +
                     fmt(py(d.y[i])) + "\" r=\"3\" fill=\"" + d.color +
                     "\"/>\n";
        } else {
            std::string pts;
            for (size_t i = 0; i < d.x.size() && i < d.y.size(); ++i) {
                if (!pts.empty()) pts += ' ';
                pts += fmt(px(d.x[i])) + "," + fmt(py(d.y[i]));
            }
            s += "<polyline fill=\"none\" stroke=\"" + d.color +
                 "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
        }
    }
    // legend
    double ly = kMarginT + 14;
    for (const auto& d : data_) {
        const std::string X = fmt(kMarginL + 12);
        s += "<rect x=\"" + X + "\" y=\"" + fmt(ly - 9) +
             "\" width=\"12\" height=\"4\" fill=\"" + d.color + "\"/>\n";
        s += "<text x=\"" + fmt(kMarginL + 30) + "\" y=\"" + fmt(ly - 2) +
             "\" font-family=\"sans-serif\" font-size=\"12\">" +
             escape(d.name) + "</text>\n";
        ly += 16;
    }
    s += "</svg>\n";
    return s;
}

} // namespace thermo
