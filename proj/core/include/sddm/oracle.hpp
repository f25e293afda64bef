#pragma once

#include <cstdint>

#include "sddm/company.hpp"

namespace sddm {

struct SimConfig {
    long long horizon = 0;  // periods T, >= 1
    long long paths = 0;    // >= 1
    std::uint64_t seed = 0;

    bool operator==(const SimConfig&) const = default;
};

struct MomentEstimate {
    double mean = 0.0;
    double variance = 0.0;
    double mean_se = 0.0;    // standard error of the mean
    double var_se = 0.0;     // standard error of the variance, via the fourth moment
    double tail_bound = 0.0; // omitted expected value beyond the horizon
    long long horizon = 0;
    long long paths = 0;
};

// Monte Carlo moments of the truncated dividend-sum price. Requires an
// explicit-state growth model; neither k > g nor delta > 0 is needed.
// Identical seeds reproduce identical output bit-for-bit on one platform.
MomentEstimate simulate_price(const CompanyParams& c, const SimConfig& cfg);

// d * sum_{t=1..T} x^t with x = (1+g)/(1+k). Requires k > -1.
double truncated_mean_exact(const CompanyParams& c, long long horizon);

// Exact variance of the truncated dividend-sum price, accumulated in O(T)
// from the first two growth moments; converges to the closed form when
// delta > 0. Works for explicit and moments-only growth models.
double truncated_variance_exact(const CompanyParams& c, long long horizon);

// Exact omitted expected value beyond T: d * x^(T+1) / (1-x). Requires
// k > mean growth, otherwise the tail diverges.
double tail_bound(const CompanyParams& c, long long horizon);

// Smallest horizon whose tail bound is below rel_tol times the closed-form
// expected price.
long long auto_horizon(const CompanyParams& c, double rel_tol = 1e-6);

}  // namespace sddm
