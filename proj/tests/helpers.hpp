#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "sddm/merger.hpp"
#include "sddm/rng.hpp"

namespace testutil {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : rng_(seed) {}
    double uniform() { return rng_.uniform(); }
    double uniform(double a, double b) { return a + (b - a) * rng_.uniform(); }

private:
    sddm::Xoshiro256pp rng_;
};

// Valid random company in moments form. Margins keep truncated series
// well-converged: k - g >= 0.02 and sigma at most 90% of the delta limit.
inline sddm::CompanyParams random_company(Rng& rng) {
    const double g = rng.uniform(-0.05, 0.06);
    const double k = g + rng.uniform(0.02, 0.10);
    const double sigma_max = std::sqrt((1 + k) * (1 + k) - (1 + g) * (1 + g));
    sddm::CompanyParams c;
    c.dps0 = rng.uniform(0.1, 5.0);
    c.discount_rate = k;
    c.shares = rng.uniform(100.0, 10000.0);
    c.growth = sddm::GrowthModel::from_moments(g, rng.uniform(0.0, 0.9) * sigma_max);
    return c;
}

// Same first two moments as c, as an explicit symmetric two-state model.
inline sddm::CompanyParams to_two_state(const sddm::CompanyParams& c) {
    sddm::CompanyParams out = c;
    const double m = c.growth.mean();
    const double s = c.growth.stddev();
    if (s == 0.0) {
        out.growth = sddm::GrowthModel::from_states({m}, {1.0});
    } else {
        out.growth = sddm::GrowthModel::from_states({m - s, m + s}, {0.5, 0.5});
    }
    return out;
}

struct Instance {
    sddm::CompanyParams a, b;
    double g_m = 0.0;
    double sigma_m = 0.0;
    sddm::MergerContext ctx;
    sddm::MergerValuation mv;
};

// Random pair of companies plus a valid merged (growth mean, stddev) point.
inline Instance random_instance(Rng& rng) {
    Instance inst;
    inst.a = random_company(rng);
    inst.b = random_company(rng);
    sddm::MergerInputs m;
    m.acquirer = inst.a;
    m.target = inst.b;
    inst.ctx = sddm::make_merger_context(m);
    const double k = inst.ctx.k_m;
    inst.g_m = rng.uniform(std::min(-0.02, k - 0.03), k - 0.002);
    const double sigma_max =
        std::sqrt((1 + k) * (1 + k) - (1 + inst.g_m) * (1 + inst.g_m));
    inst.sigma_m = rng.uniform(0.0, 0.9) * sigma_max;
    inst.mv = sddm::merged_valuation(inst.ctx, inst.g_m, inst.sigma_m);
    return inst;
}

// Direct evaluation of the shareholder acceptance conditions at one r;
// independent of the interval formulas.
inline bool mean_conditions(const sddm::MergerContext& ctx, const sddm::MergerValuation& mv,
                            double r) {
    const double per_share = mv.equity_mean / (ctx.shares_acquirer + r * ctx.shares_target);
    return per_share >= ctx.acquirer.mean_price && r * per_share >= ctx.target.mean_price;
}

inline bool variance_conditions(const sddm::MergerContext& ctx, const sddm::MergerValuation& mv,
                                double r) {
    const double stddev =
        mv.equity_mean * mv.cv / (ctx.shares_acquirer + r * ctx.shares_target);
    return stddev <= ctx.acquirer.stddev_price && r * stddev <= ctx.target.stddev_price;
}

// Reference inputs: the worked example with moments-form growth models.
inline sddm::MergerInputs table1_inputs(std::optional<double> discount_override = std::nullopt,
                                        double merged_mean = 0.03, double merged_stddev = 0.01) {
    sddm::MergerInputs m;
    m.acquirer.dps0 = 0.6;
    m.acquirer.discount_rate = 0.04;
    m.acquirer.shares = 1000.0;
    m.acquirer.growth = sddm::GrowthModel::from_moments(0.01, 0.02);
    m.target.dps0 = 0.3;
    m.target.discount_rate = 0.08;
    m.target.shares = 2500.0;
    m.target.growth = sddm::GrowthModel::from_moments(0.03, 0.09);
    m.merged_growth = sddm::GrowthModel::from_moments(merged_mean, merged_stddev);
    m.discount_override = discount_override;
    return m;
}

}  // namespace testutil
