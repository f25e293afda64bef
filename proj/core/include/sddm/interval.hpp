#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sddm {

// Closed exchange-ratio interval over the extended reals: possibly empty,
// possibly unbounded above. Endpoints of an empty interval carry no
// meaning and cannot be read. Comparisons are exact; emptiness is decided
// without tolerance so feasibility verdicts near degenerate points are
// not fuzzed.
class ExtendedInterval {
public:
    static ExtendedInterval empty_interval() { return {}; }

    // Empty when lo > hi.
    static ExtendedInterval closed(double lo, double hi) {
        ExtendedInterval iv;
        if (lo <= hi) {
            iv.lower_ = lo;
            iv.upper_ = hi;
            iv.empty_ = false;
        }
        return iv;
    }

    static ExtendedInterval unbounded_above(double lo) {
        return closed(lo, std::numeric_limits<double>::infinity());
    }

    bool empty() const { return empty_; }

    double lower() const {
        require_nonempty();
        return lower_;
    }

    double upper() const {
        require_nonempty();
        return upper_;
    }

    bool bounded_above() const {
        require_nonempty();
        return std::isfinite(upper_);
    }

    bool contains(double r) const { return !empty_ && lower_ <= r && r <= upper_; }

    ExtendedInterval intersect(const ExtendedInterval& other) const {
        if (empty_ || other.empty_) return {};
        return closed(std::max(lower_, other.lower_), std::min(upper_, other.upper_));
    }

    // Width after truncating the upper endpoint at r_max; zero if empty.
    double clamped_width(double r_max) const {
        if (empty_) return 0.0;
        return std::max(0.0, std::min(upper_, r_max) - lower_);
    }

    bool operator==(const ExtendedInterval& other) const {
        if (empty_ != other.empty_) return false;
        return empty_ || (lower_ == other.lower_ && upper_ == other.upper_);
    }

private:
    void require_nonempty() const {
        if (empty_) throw std::logic_error("endpoint of an empty interval is not readable");
    }

    double lower_ = 0.0;
    double upper_ = 0.0;
    bool empty_ = true;
};

}  // namespace sddm
