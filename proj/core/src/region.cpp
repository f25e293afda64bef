#include "sddm/region.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "sddm/errors.hpp"

namespace sddm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool valid_point(const MergerContext& ctx, double g, double sigma) {
    return g > -1.0 && g < ctx.k_m && delta_value(ctx.k_m, g, sigma) > 0.0;
}

double curve_value(const RawBounds& b, BoundCurve c) {
    switch (c) {
        case BoundCurve::MeanLower: return b.mean_lower;
        case BoundCurve::MeanUpper: return b.mean_upper;
        case BoundCurve::VarLower: return b.var_lower;
        case BoundCurve::VarUpper: return b.var_upper;
    }
    return 0.0;
}

void validate_config(const SweepConfig& cfg) {
    if (cfg.sigmas.empty()) {
        throw ValidationError("sweep needs at least one sigma value");
    }
    for (double s : cfg.sigmas) {
        if (!std::isfinite(s) || s < 0.0) {
            std::ostringstream msg;
            msg << "sweep sigma " << s << " must be >= 0";
            throw ValidationError(msg.str());
        }
    }
    if (!std::isfinite(cfg.g_min) || !std::isfinite(cfg.g_max) || cfg.g_min >= cfg.g_max) {
        std::ostringstream msg;
        msg << "sweep growth range [" << cfg.g_min << ", " << cfg.g_max << "] must be increasing";
        throw ValidationError(msg.str());
    }
    if (cfg.g_steps < 2) {
        std::ostringstream msg;
        msg << "sweep needs at least 2 grid points, got " << cfg.g_steps;
        throw ValidationError(msg.str());
    }
    if (!std::isfinite(cfg.clamp_r_max) || cfg.clamp_r_max <= 0.0) {
        std::ostringstream msg;
        msg << "clamp_r_max " << cfg.clamp_r_max << " must be > 0";
        throw ValidationError(msg.str());
    }
}

bool extended_equal(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) return a == b;
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

const char* curve_name(BoundCurve c) {
    switch (c) {
        case BoundCurve::MeanLower: return "mean_lower";
        case BoundCurve::MeanUpper: return "mean_upper";
        case BoundCurve::VarLower: return "var_lower";
        case BoundCurve::VarUpper: return "var_upper";
    }
    return "?";
}

CrossingPoint find_crossing(const std::function<double(double)>& f_lo,
                            const std::function<double(double)>& f_hi,
                            double g1, double g2) {
    if (g1 > g2) std::swap(g1, g2);
    const auto diff = [&](double g) { return f_lo(g) - f_hi(g); };
    const std::array<double, 4> ends = {f_lo(g1), f_hi(g1), f_lo(g2), f_hi(g2)};
    for (double v : ends) {
        if (!std::isfinite(v)) {
            throw ValidationError("curve crossing needs finite curves on the bracket");
        }
    }
    double d1 = diff(g1);
    double d2 = diff(g2);
    if (!(d1 * d2 < 0.0)) {
        std::ostringstream msg;
        msg << "curve difference does not change sign on [" << g1 << ", " << g2 << "]";
        throw ValidationError(msg.str());
    }
    for (int it = 0; it < 200 && g2 - g1 > 1e-10; ++it) {
        const double mid = 0.5 * (g1 + g2);
        const double dm = diff(mid);
        if (dm == 0.0) {
            g1 = g2 = mid;
            break;
        }
        if ((dm < 0.0) == (d1 < 0.0)) {
            g1 = mid;
            d1 = dm;
        } else {
            g2 = mid;
            d2 = dm;
        }
    }
    const double g = 0.5 * (g1 + g2);
    return {g, 0.5 * (f_lo(g) + f_hi(g))};
}

double region_area(const RegionReport& report) {
    double area = 0.0;
    for (std::size_t i = 1; i < report.slices.size(); ++i) {
        const RegionSlice& a = report.slices[i - 1];
        const RegionSlice& b = report.slices[i];
        const double wa = a.valid ? a.combined.clamped_width(report.clamp_r_max) : 0.0;
        const double wb = b.valid ? b.combined.clamped_width(report.clamp_r_max) : 0.0;
        area += 0.5 * (wa + wb) * (b.g - a.g);
    }
    return area;
}

RawBounds rewritten_interval_bounds(const MergerContext& ctx, double growth_mean,
                                    double growth_stddev) {
    const double k = ctx.k_m;
    const double n = ctx.share_ratio;
    const double h_a = ctx.total_dividends / ctx.acquirer.equity_mean;
    const double h_b = ctx.total_dividends / ctx.target.equity_mean;
    const double growth_factor = (1.0 + growth_mean) / (k - growth_mean);

    RawBounds b;
    const double q = growth_factor * h_b - 1.0;
    b.mean_lower = q > 0.0 ? n / q : kInf;
    b.mean_upper = n * (growth_factor * h_a - 1.0);

    const double spread = h_factor(k, growth_mean, growth_stddev) / (k - growth_mean);
    const double f_a = ctx.acquirer.cv;
    const double f_b = ctx.target.cv;
    if (f_a == 0.0) {
        b.var_lower = spread > 0.0 ? kInf : -kInf;
    } else {
        b.var_lower = n * (spread * (1.0 + k) * h_a / f_a - 1.0);
    }
    if (f_b == 0.0) {
        b.var_upper = spread > 0.0 ? 0.0 : kInf;
    } else {
        const double p = spread * (1.0 + k) * h_b / f_b - 1.0;
        b.var_upper = p > 0.0 ? n / p : kInf;
    }
    return b;
}

BoundsCheck rewritten_bounds_check(const MergerContext& ctx, double growth_mean,
                                   double growth_stddev) {
    if (!valid_point(ctx, growth_mean, growth_stddev)) return BoundsCheck::NotApplicable;
    const MergerValuation mv = merged_valuation(ctx, growth_mean, growth_stddev);
    const RawBounds direct = raw_interval_bounds(ctx, mv);
    const RawBounds rewritten = rewritten_interval_bounds(ctx, growth_mean, growth_stddev);
    const bool ok = extended_equal(direct.mean_lower, rewritten.mean_lower) &&
                    extended_equal(direct.mean_upper, rewritten.mean_upper) &&
                    extended_equal(direct.var_lower, rewritten.var_lower) &&
                    extended_equal(direct.var_upper, rewritten.var_upper);
    return ok ? BoundsCheck::Pass : BoundsCheck::Fail;
}

BoundsCheck rewritten_bounds_check(const MergerInputs& m, double growth_mean,
                                   double growth_stddev) {
    return rewritten_bounds_check(make_merger_context(m), growth_mean, growth_stddev);
}

std::vector<RegionReport> sweep(const MergerInputs& tmpl, const SweepConfig& cfg) {
    validate_config(cfg);
    const MergerContext ctx = make_merger_context(tmpl);

    std::vector<double> grid(static_cast<std::size_t>(cfg.g_steps));
    const double step = (cfg.g_max - cfg.g_min) / (cfg.g_steps - 1);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i] = cfg.g_min + step * static_cast<double>(i);
    }

    std::vector<RegionReport> reports;
    reports.reserve(cfg.sigmas.size());
    for (double sigma : cfg.sigmas) {
        RegionReport report;
        report.sigma = sigma;
        report.clamp_r_max = cfg.clamp_r_max;
        report.slices.reserve(grid.size());

        for (double g : grid) {
            RegionSlice slice;
            slice.g = g;
            slice.valid = valid_point(ctx, g, sigma);
            if (slice.valid) {
                const MergerValuation mv = merged_valuation(ctx, g, sigma);
                slice.raw = raw_interval_bounds(ctx, mv);
                slice.mean_bounds = mean_interval(ctx, mv);
                slice.var_bounds = variance_interval(ctx, mv);
                slice.combined = slice.mean_bounds.intersect(slice.var_bounds);
            }
            report.slices.push_back(slice);
        }

        for (const RegionSlice& s : report.slices) {
            if (!s.valid || s.combined.empty()) continue;
            report.feasible = true;
            const double lo = s.combined.lower();
            if (!report.min_accepted_r || lo < *report.min_accepted_r) report.min_accepted_r = lo;
        }

        // Refine the feasibility onset below the first nonempty grid point.
        const auto nonempty_at = [&](double g) {
            if (!valid_point(ctx, g, sigma)) return false;
            return !combined_interval(ctx, merged_valuation(ctx, g, sigma)).empty();
        };
        for (std::size_t i = 0; i < report.slices.size(); ++i) {
            const RegionSlice& s = report.slices[i];
            if (!s.valid || s.combined.empty()) continue;
            if (i == 0) {
                report.g_feasible_min = s.g;
            } else {
                double lo = report.slices[i - 1].g;
                double hi = s.g;
                for (int it = 0; it < 100 && hi - lo > 1e-12; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    (nonempty_at(mid) ? hi : lo) = mid;
                }
                report.g_feasible_min = hi;
            }
            break;
        }

        // Pairwise curve crossings, bisection-refined between grid points.
        const auto curve_at = [&](BoundCurve c) {
            return [&ctx, sigma, c](double g) {
                return curve_value(raw_interval_bounds(ctx, merged_valuation(ctx, g, sigma)), c);
            };
        };
        constexpr std::array<BoundCurve, 4> kCurves = {
            BoundCurve::MeanLower, BoundCurve::MeanUpper, BoundCurve::VarLower,
            BoundCurve::VarUpper};
        for (std::size_t ia = 0; ia < kCurves.size(); ++ia) {
            for (std::size_t ib = ia + 1; ib < kCurves.size(); ++ib) {
                for (std::size_t i = 1; i < report.slices.size(); ++i) {
                    const RegionSlice& prev = report.slices[i - 1];
                    const RegionSlice& cur = report.slices[i];
                    if (!prev.valid || !cur.valid) continue;
                    const double a0 = curve_value(prev.raw, kCurves[ia]);
                    const double b0 = curve_value(prev.raw, kCurves[ib]);
                    const double a1 = curve_value(cur.raw, kCurves[ia]);
                    const double b1 = curve_value(cur.raw, kCurves[ib]);
                    if (!std::isfinite(a0) || !std::isfinite(b0) || !std::isfinite(a1) ||
                        !std::isfinite(b1)) {
                        continue;
                    }
                    if ((a0 - b0) * (a1 - b1) >= 0.0) continue;
                    Crossing cross;
                    cross.first = kCurves[ia];
                    cross.second = kCurves[ib];
                    cross.at = find_crossing(curve_at(kCurves[ia]), curve_at(kCurves[ib]),
                                             prev.g, cur.g);
                    report.crossings.push_back(cross);
                }
            }
        }

        report.area = region_area(report);
        reports.push_back(std::move(report));
    }
    return reports;
}

}  // namespace sddm
