#include "app/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "app/table.hpp"

namespace sddm::app {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 18.0;
constexpr double kMarginTop = 20.0;
constexpr double kMarginBottom = 50.0;

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

double nice_step(double raw) {
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        if (mag * m >= raw) return mag * m;
    }
    return mag * 10.0;
}

// Clip a segment to y in [lo, hi]; false when fully outside.
bool clip_y(double& x1, double& y1, double& x2, double& y2, double lo, double hi) {
    if ((y1 < lo && y2 < lo) || (y1 > hi && y2 > hi)) return false;
    const auto x_at = [&](double y) { return x1 + (x2 - x1) * (y - y1) / (y2 - y1); };
    if (y1 < lo) {
        x1 = x_at(lo);
        y1 = lo;
    } else if (y1 > hi) {
        x1 = x_at(hi);
        y1 = hi;
    }
    if (y2 < lo) {
        x2 = x_at(lo);
        y2 = lo;
    } else if (y2 > hi) {
        x2 = x_at(hi);
        y2 = hi;
    }
    return true;
}

double slice_curve(const RegionSlice& s, BoundCurve c) {
    switch (c) {
        case BoundCurve::MeanLower: return s.raw.mean_lower;
        case BoundCurve::MeanUpper: return s.raw.mean_upper;
        case BoundCurve::VarLower: return s.raw.var_lower;
        case BoundCurve::VarUpper: return s.raw.var_upper;
    }
    return 0.0;
}

}  // namespace

std::string region_svg(const RegionReport& report) {
    const auto& slices = report.slices;
    const double g0 = slices.front().g;
    const double g1 = slices.back().g;
    const double r_max = report.clamp_r_max;

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const auto sx = [&](double g) { return kMarginLeft + (g - g0) / (g1 - g0) * plot_w; };
    const auto sy = [&](double r) { return kHeight - kMarginBottom - r / r_max * plot_h; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";

    // Shaded combined region.
    std::vector<std::pair<double, double>> top, bottom;
    for (const RegionSlice& s : slices) {
        if (!s.valid || s.combined.empty()) continue;
        top.emplace_back(s.g, std::min(s.combined.upper(), r_max));
        bottom.emplace_back(s.g, std::max(0.0, s.combined.lower()));
    }
    if (top.size() >= 2) {
        out << "<polygon fill=\"#d3d3d3\" stroke=\"none\" points=\"";
        for (const auto& [g, r] : top) out << px(sx(g)) << ',' << px(sy(r)) << ' ';
        for (auto it = bottom.rbegin(); it != bottom.rend(); ++it) {
            out << px(sx(it->first)) << ',' << px(sy(it->second)) << ' ';
        }
        out << "\"/>\n";
    }

    // Dotted gridlines with tick labels.
    const double gx_step = nice_step((g1 - g0) / 6.0);
    const double gy_step = nice_step(r_max / 5.0);
    out << "<g stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"1,3\">\n";
    for (double g = std::ceil(g0 / gx_step) * gx_step; g <= g1 + 1e-12; g += gx_step) {
        out << "<line x1=\"" << px(sx(g)) << "\" y1=\"" << px(sy(0)) << "\" x2=\"" << px(sx(g))
            << "\" y2=\"" << px(sy(r_max)) << "\"/>\n";
    }
    for (double r = gy_step; r <= r_max + 1e-12; r += gy_step) {
        out << "<line x1=\"" << px(sx(g0)) << "\" y1=\"" << px(sy(r)) << "\" x2=\"" << px(sx(g1))
            << "\" y2=\"" << px(sy(r)) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g font-family=\"monospace\" font-size=\"12\" fill=\"black\">\n";
    for (double g = std::ceil(g0 / gx_step) * gx_step; g <= g1 + 1e-12; g += gx_step) {
        out << "<text x=\"" << px(sx(g)) << "\" y=\"" << px(kHeight - kMarginBottom + 16)
            << "\" text-anchor=\"middle\">" << fmt6(g) << "</text>\n";
    }
    for (double r = 0.0; r <= r_max + 1e-12; r += gy_step) {
        out << "<text x=\"" << px(kMarginLeft - 6) << "\" y=\"" << px(sy(r) + 4)
            << "\" text-anchor=\"end\">" << fmt6(r) << "</text>\n";
    }
    out << "<text x=\"" << px(kMarginLeft + plot_w / 2) << "\" y=\"" << px(kHeight - 12)
        << "\" text-anchor=\"middle\">expected growth rate g_M</text>\n";
    out << "<text x=\"14\" y=\"" << px(kMarginTop + plot_h / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << px(kMarginTop + plot_h / 2) << ")\">exchange ratio r</text>\n";
    out << "<text x=\"" << px(kWidth - kMarginRight) << "\" y=\"" << px(kMarginTop + 12)
        << "\" text-anchor=\"end\">sigma = " << fmt6(report.sigma) << "</text>\n";
    out << "</g>\n";

    // Axes.
    out << "<g stroke=\"black\" stroke-width=\"1.5\" fill=\"none\">\n";
    out << "<line x1=\"" << px(sx(g0)) << "\" y1=\"" << px(sy(0)) << "\" x2=\"" << px(sx(g1))
        << "\" y2=\"" << px(sy(0)) << "\"/>\n";
    out << "<line x1=\"" << px(sx(g0)) << "\" y1=\"" << px(sy(0)) << "\" x2=\"" << px(sx(g0))
        << "\" y2=\"" << px(sy(r_max)) << "\"/>\n";
    out << "</g>\n";

    // Bound curves: solid for the expected-wealth pair, dashed for the
    // variance pair. Variance curves are vacuous at sigma == 0.
    const auto draw_curve = [&](BoundCurve curve, bool dashed) {
        std::string path;
        std::string last_point;
        for (std::size_t i = 1; i < slices.size(); ++i) {
            const RegionSlice& a = slices[i - 1];
            const RegionSlice& b = slices[i];
            if (!a.valid || !b.valid) {
                last_point.clear();
                continue;
            }
            const double va = slice_curve(a, curve);
            const double vb = slice_curve(b, curve);
            if (!std::isfinite(va) || !std::isfinite(vb)) {
                last_point.clear();
                continue;
            }
            double x1 = a.g, y1 = va, x2 = b.g, y2 = vb;
            if (!clip_y(x1, y1, x2, y2, 0.0, r_max)) {
                last_point.clear();
                continue;
            }
            const std::string p1 = px(sx(x1)) + " " + px(sy(y1));
            const std::string p2 = px(sx(x2)) + " " + px(sy(y2));
            if (p1 == last_point) {
                path += " L " + p2;
            } else {
                path += (path.empty() ? "M " : " M ") + p1 + " L " + p2;
            }
            last_point = p2;
        }
        if (path.empty()) return;
        out << "<path d=\"" << path << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.8\"";
        if (dashed) out << " stroke-dasharray=\"9,6\"";
        out << "/>\n";
    };
    draw_curve(BoundCurve::MeanLower, false);
    draw_curve(BoundCurve::MeanUpper, false);
    if (report.sigma > 0.0) {
        draw_curve(BoundCurve::VarLower, true);
        draw_curve(BoundCurve::VarUpper, true);
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace sddm::app
