#include "sddm/growth_model.hpp"

#include <cmath>
#include <sstream>

#include "sddm/errors.hpp"

namespace sddm {

GrowthModel GrowthModel::from_states(std::vector<double> states, std::vector<double> probs) {
    if (states.empty()) {
        throw ValidationError("growth model needs at least one state");
    }
    if (states.size() != probs.size()) {
        std::ostringstream msg;
        msg << "growth model has " << states.size() << " states but " << probs.size()
            << " probabilities";
        throw ValidationError(msg.str());
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!std::isfinite(states[i]) || states[i] <= -1.0) {
            std::ostringstream msg;
            msg << "growth state " << states[i] << " at index " << i << " must be > -1";
            throw ValidationError(msg.str());
        }
        if (i > 0 && states[i] <= states[i - 1]) {
            std::ostringstream msg;
            msg << "growth states must be strictly increasing; state " << states[i]
                << " at index " << i << " does not exceed " << states[i - 1];
            throw ValidationError(msg.str());
        }
        if (!std::isfinite(probs[i]) || probs[i] <= 0.0) {
            std::ostringstream msg;
            msg << "growth probability " << probs[i] << " at index " << i << " must be > 0";
            throw ValidationError(msg.str());
        }
    }
    double sum = 0.0;
    for (double p : probs) sum += p;
    if (std::abs(sum - 1.0) > kProbSumTolerance) {
        std::ostringstream msg;
        msg << "growth probabilities sum to " << sum << "; must equal 1 within "
            << kProbSumTolerance;
        throw ValidationError(msg.str());
    }
    for (double& p : probs) p /= sum;

    double mean = 0.0;
    double second = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        mean += probs[i] * states[i];
        second += probs[i] * states[i] * states[i];
    }
    GrowthModel g;
    g.states_ = std::move(states);
    g.probs_ = std::move(probs);
    g.mean_ = mean;
    g.stddev_ = g.states_.size() == 1 ? 0.0 : std::sqrt(std::max(0.0, second - mean * mean));
    return g;
}

GrowthModel GrowthModel::from_moments(double mean, double stddev) {
    if (!std::isfinite(mean) || mean <= -1.0) {
        std::ostringstream msg;
        msg << "mean growth " << mean << " must be > -1";
        throw ValidationError(msg.str());
    }
    if (!std::isfinite(stddev) || stddev < 0.0) {
        std::ostringstream msg;
        msg << "growth stddev " << stddev << " must be >= 0";
        throw ValidationError(msg.str());
    }
    GrowthModel g;
    g.mean_ = mean;
    g.stddev_ = stddev;
    return g;
}

std::pair<double, double> growth_moments(const GrowthModel& g) {
    return {g.mean(), g.stddev()};
}

}  // namespace sddm
