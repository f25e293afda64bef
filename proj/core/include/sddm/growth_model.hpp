#pragma once

#include <utility>
#include <vector>

namespace sddm {

// Probabilities must sum to one within this tolerance; inside it the input
// is renormalized, outside it is rejected.
inline constexpr double kProbSumTolerance = 1e-12;

// Per-period dividend growth rate, drawn independently each period.
// Either an explicit finite-state distribution or just its first two
// moments: the closed-form valuation uses only mean and standard
// deviation, while path simulation needs explicit states.
class GrowthModel {
public:
    // states must be strictly increasing with every state > -1; probs must
    // be positive and sum to one within kProbSumTolerance.
    static GrowthModel from_states(std::vector<double> states, std::vector<double> probs);

    // mean > -1, stddev >= 0.
    static GrowthModel from_moments(double mean, double stddev);

    bool moments_only() const { return states_.empty(); }
    double mean() const { return mean_; }
    double stddev() const { return stddev_; }

    // Empty in moments-only form.
    const std::vector<double>& states() const { return states_; }
    const std::vector<double>& probs() const { return probs_; }

    bool operator==(const GrowthModel&) const = default;

private:
    GrowthModel() = default;

    std::vector<double> states_;
    std::vector<double> probs_;
    double mean_ = 0.0;
    double stddev_ = 0.0;
};

// (mean, stddev) of the growth distribution.
std::pair<double, double> growth_moments(const GrowthModel& g);

}  // namespace sddm
