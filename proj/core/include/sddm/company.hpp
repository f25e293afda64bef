#pragma once

#include "sddm/growth_model.hpp"

namespace sddm {

// Pre-merger description of a single company. All rates are per-period
// decimals (0.04, not 4%). Money values are unit-free; fractional share
// counts are allowed.
struct CompanyParams {
    double dps0 = 0.0;           // last paid dividend per share, > 0
    double discount_rate = 0.0;  // risk-adjusted rate k, must exceed mean growth
    double shares = 0.0;         // outstanding shares N, > 0
    GrowthModel growth = GrowthModel::from_moments(0.0, 0.0);

    bool operator==(const CompanyParams&) const = default;
};

// Derived valuation quantities for one company.
struct Valuation {
    double mean_price = 0.0;    // expected current stock price
    double stddev_price = 0.0;  // standard deviation of the current price
    double delta = 0.0;         // (1+k)^2 - (1+g)^2 - sigma^2
    double h_factor = 0.0;      // sigma / sqrt(delta)
    double cv = 0.0;            // coefficient of variation stddev/mean
    double equity_mean = 0.0;   // shares * mean_price
};

struct Dispersion {
    double delta = 0.0;
    double h_factor = 0.0;
    double stddev_price = 0.0;
    double cv = 0.0;
};

// Scalar building blocks, shared with the merged-company math. All three
// extend continuously to stddev == 0, where h and the cv are exactly zero.
double delta_value(double discount_rate, double growth_mean, double growth_stddev);
double h_factor(double discount_rate, double growth_mean, double growth_stddev);
double coefficient_of_variation(double discount_rate, double growth_mean, double growth_stddev);

// d * (1+g) / (k-g); requires k > g.
double gordon_price(double dps0, double discount_rate, double growth_mean);

// Throws ValidationError for structural problems (dps0, shares) and
// ModelDomainError when k <= mean growth or delta <= 0.
void validate(const CompanyParams& c);

double expected_price(const CompanyParams& c);
Dispersion price_dispersion(const CompanyParams& c);
Valuation value_company(const CompanyParams& c);

}  // namespace sddm
