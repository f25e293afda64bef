#include "sddm/company.hpp"

#include <cmath>
#include <sstream>

#include "sddm/errors.hpp"

namespace sddm {

double delta_value(double discount_rate, double growth_mean, double growth_stddev) {
    const double one_k = 1.0 + discount_rate;
    const double one_g = 1.0 + growth_mean;
    return one_k * one_k - one_g * one_g - growth_stddev * growth_stddev;
}

double h_factor(double discount_rate, double growth_mean, double growth_stddev) {
    if (growth_stddev == 0.0) return 0.0;  // continuous limit of sigma/sqrt(delta)
    const double delta = delta_value(discount_rate, growth_mean, growth_stddev);
    if (delta <= 0.0) {
        std::ostringstream msg;
        msg << "delta = (1+k)^2 - (1+g)^2 - sigma^2 = " << delta
            << " must be strictly positive (k = " << discount_rate << ", g = " << growth_mean
            << ", sigma = " << growth_stddev << ")";
        throw ModelDomainError(msg.str());
    }
    return growth_stddev / std::sqrt(delta);
}

double coefficient_of_variation(double discount_rate, double growth_mean, double growth_stddev) {
    return h_factor(discount_rate, growth_mean, growth_stddev) * (1.0 + discount_rate) /
           (1.0 + growth_mean);
}

double gordon_price(double dps0, double discount_rate, double growth_mean) {
    if (discount_rate <= growth_mean) {
        std::ostringstream msg;
        msg << "discount rate must exceed expected growth: k = " << discount_rate
            << " <= g = " << growth_mean;
        throw ModelDomainError(msg.str());
    }
    return dps0 * (1.0 + growth_mean) / (discount_rate - growth_mean);
}

void validate(const CompanyParams& c) {
    if (!std::isfinite(c.dps0) || c.dps0 <= 0.0) {
        std::ostringstream msg;
        msg << "dividend per share " << c.dps0 << " must be > 0";
        throw ValidationError(msg.str());
    }
    if (!std::isfinite(c.shares) || c.shares <= 0.0) {
        std::ostringstream msg;
        msg << "share count " << c.shares << " must be > 0";
        throw ValidationError(msg.str());
    }
    if (!std::isfinite(c.discount_rate)) {
        throw ValidationError("discount rate must be finite");
    }
    if (c.discount_rate <= c.growth.mean()) {
        std::ostringstream msg;
        msg << "discount rate must exceed expected growth: k = " << c.discount_rate
            << " <= g = " << c.growth.mean();
        throw ModelDomainError(msg.str());
    }
    // Raises on delta <= 0.
    h_factor(c.discount_rate, c.growth.mean(), c.growth.stddev());
}

double expected_price(const CompanyParams& c) {
    return gordon_price(c.dps0, c.discount_rate, c.growth.mean());
}

Dispersion price_dispersion(const CompanyParams& c) {
    Dispersion d;
    d.delta = delta_value(c.discount_rate, c.growth.mean(), c.growth.stddev());
    d.h_factor = h_factor(c.discount_rate, c.growth.mean(), c.growth.stddev());
    d.cv = d.h_factor * (1.0 + c.discount_rate) / (1.0 + c.growth.mean());
    d.stddev_price = expected_price(c) * d.cv;
    return d;
}

Valuation value_company(const CompanyParams& c) {
    validate(c);
    const Dispersion d = price_dispersion(c);
    Valuation v;
    v.mean_price = expected_price(c);
    v.stddev_price = d.stddev_price;
    v.delta = d.delta;
    v.h_factor = d.h_factor;
    v.cv = d.cv;
    v.equity_mean = c.shares * v.mean_price;
    return v;
}

}  // namespace sddm
