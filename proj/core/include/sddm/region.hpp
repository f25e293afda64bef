#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sddm/merger.hpp"

namespace sddm {

struct SweepConfig {
    double g_min = 0.0;
    double g_max = 0.0;
    int g_steps = 500;
    std::vector<double> sigmas;
    double clamp_r_max = 2.2;  // truncation of unbounded intervals for plots and area

    bool operator==(const SweepConfig&) const = default;
};

struct RegionSlice {
    double g = 0.0;
    bool valid = false;  // k_M > g, g > -1 and delta_M > 0
    RawBounds raw;       // curve values; meaningless when !valid
    ExtendedInterval mean_bounds;
    ExtendedInterval var_bounds;
    ExtendedInterval combined;
};

enum class BoundCurve { MeanLower, MeanUpper, VarLower, VarUpper };
const char* curve_name(BoundCurve c);

struct CrossingPoint {
    double g = 0.0;
    double r = 0.0;
};

struct Crossing {
    BoundCurve first = BoundCurve::MeanLower;
    BoundCurve second = BoundCurve::MeanUpper;
    CrossingPoint at;
};

struct RegionReport {
    double sigma = 0.0;
    double clamp_r_max = 2.2;
    std::vector<RegionSlice> slices;
    bool feasible = false;
    std::optional<double> g_feasible_min;  // bisection-refined onset of a nonempty combined interval
    std::optional<double> min_accepted_r;  // infimum of combined lower bounds
    std::vector<Crossing> crossings;       // pairwise curve intersections found on the grid
    double area = 0.0;                     // integral of truncated combined width over g
};

// One report per sigma; slices where the merged model is undefined are
// retained with valid == false. Deterministic for fixed inputs; slices are
// independent and may be evaluated in parallel.
std::vector<RegionReport> sweep(const MergerInputs& tmpl, const SweepConfig& cfg);

// Bisect f_lo - f_hi on [g1, g2] down to 1e-10; both curves must be finite
// and the difference must change sign on the bracket.
CrossingPoint find_crossing(const std::function<double(double)>& f_lo,
                            const std::function<double(double)>& f_hi,
                            double g1, double g2);

// Trapezoidal integral of the truncated combined width, using the report's
// clamp_r_max. Zero when the region is infeasible.
double region_area(const RegionReport& report);

// The interval bounds rearranged around the pre-merger constants
// H_i = (D_A + D_B) / W_i and J_i = (1 + k_M) H_i / f_i. Algebraically
// identical to raw_interval_bounds; used as an independent evaluation route.
RawBounds rewritten_interval_bounds(const MergerContext& ctx, double growth_mean, double growth_stddev);

enum class BoundsCheck { Pass, Fail, NotApplicable };

// Compares the rewritten bounds against the direct ones at one grid point,
// to 1e-9 relative. NotApplicable where the merged model is undefined.
BoundsCheck rewritten_bounds_check(const MergerContext& ctx, double growth_mean, double growth_stddev);
BoundsCheck rewritten_bounds_check(const MergerInputs& m, double growth_mean, double growth_stddev);

}  // namespace sddm
