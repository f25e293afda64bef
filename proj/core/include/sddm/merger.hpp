#pragma once

#include <optional>

#include "sddm/company.hpp"
#include "sddm/interval.hpp"

namespace sddm {

struct MergerInputs {
    CompanyParams acquirer;
    CompanyParams target;
    GrowthModel merged_growth = GrowthModel::from_moments(0.0, 0.0);
    // Post-merger discount rate; when absent it is the equity-weighted
    // average of the two pre-merger rates.
    std::optional<double> discount_override;
};

struct MergerValuation {
    double k_m = 0.0;              // post-merger discount rate
    double total_dividends = 0.0;  // D_A(0) + D_B(0)
    double equity_mean = 0.0;      // expected post-merger equity value
    double cv = 0.0;               // post-merger coefficient of variation
    double weight_acquirer = 0.0;  // pre-merger relative equity values
    double weight_target = 0.0;
    double growth_mean = 0.0;
    double growth_stddev = 0.0;
};

// Pre-merger quantities that do not depend on the merged growth
// assumption; computed once and reused across sweep slices.
struct MergerContext {
    Valuation acquirer;
    Valuation target;
    double k_acquirer = 0.0;
    double k_target = 0.0;
    double shares_acquirer = 0.0;
    double shares_target = 0.0;
    double k_m = 0.0;
    double total_dividends = 0.0;
    double share_ratio = 0.0;  // N_A / N_B
    double weight_acquirer = 0.0;
    double weight_target = 0.0;
};

// Interval endpoints before clamping to r >= 0. +inf in a lower slot marks
// an unsatisfiable condition, +inf in an upper slot a vacuous one; -inf in
// the variance lower slot means the condition binds nowhere.
struct RawBounds {
    double mean_lower = 0.0;
    double mean_upper = 0.0;
    double var_lower = 0.0;
    double var_upper = 0.0;
};

// Equity-weighted average of the two discount rates.
double blended_discount_rate(double k_a, double equity_a, double k_b, double equity_b);

// Validates both companies and fixes the post-merger discount rate.
MergerContext make_merger_context(const MergerInputs& m);

// Throws ModelDomainError when k_M <= growth mean or delta_M <= 0.
MergerValuation merged_valuation(const MergerContext& ctx, double growth_mean, double growth_stddev);
MergerValuation merged_valuation(const MergerInputs& m);

// Post-merger dividends per share at exchange ratio r.
double merged_dps(const MergerInputs& m, double exchange_ratio);

RawBounds raw_interval_bounds(const MergerContext& ctx, const MergerValuation& mv);

// Exchange ratios for which both shareholder groups gain expected wealth.
ExtendedInterval mean_interval(const MergerContext& ctx, const MergerValuation& mv);
ExtendedInterval mean_interval(const MergerInputs& m);

// Exchange ratios for which both shareholder groups see their wealth
// variance reduced.
ExtendedInterval variance_interval(const MergerContext& ctx, const MergerValuation& mv);
ExtendedInterval variance_interval(const MergerInputs& m);

ExtendedInterval combined_interval(const MergerContext& ctx, const MergerValuation& mv);
ExtendedInterval combined_interval(const MergerInputs& m);

// Growth rate at which the merger creates exactly zero expected synergy.
double no_synergy_growth(const MergerContext& ctx);
double no_synergy_growth(const MergerInputs& m);

// The unique mean-acceptable exchange ratio under zero synergy.
double r_star(const Valuation& acquirer, const Valuation& target);

// Variance interval evaluated at the no-synergy growth with the given
// post-merger growth stddev.
ExtendedInterval no_synergy_interval(const MergerContext& ctx, double growth_stddev);
ExtendedInterval no_synergy_interval(const MergerInputs& m);

// Whether the merged cv does not exceed the equity-weighted average of the
// pre-merger cvs.
bool cv_mixture_check(const MergerContext& ctx, double merged_cv);
bool cv_mixture_check(const MergerInputs& m);

}  // namespace sddm
