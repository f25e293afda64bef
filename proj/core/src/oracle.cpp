#include "sddm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "sddm/errors.hpp"
#include "sddm/rng.hpp"

namespace sddm {

namespace {

void require_positive_discount_base(const CompanyParams& c) {
    if (c.discount_rate <= -1.0) {
        std::ostringstream msg;
        msg << "discount rate k = " << c.discount_rate << " must exceed -1";
        throw ModelDomainError(msg.str());
    }
}

void validate_sim_config(const SimConfig& cfg) {
    if (cfg.horizon < 1) {
        std::ostringstream msg;
        msg << "simulation horizon " << cfg.horizon << " must be >= 1";
        throw ValidationError(msg.str());
    }
    if (cfg.paths < 1) {
        std::ostringstream msg;
        msg << "simulation path count " << cfg.paths << " must be >= 1";
        throw ValidationError(msg.str());
    }
}

}  // namespace

MomentEstimate simulate_price(const CompanyParams& c, const SimConfig& cfg) {
    validate_sim_config(cfg);
    if (c.growth.moments_only()) {
        throw ValidationError(
            "simulation needs an explicit-state growth model; a moments-only model cannot be "
            "sampled");
    }
    require_positive_discount_base(c);

    const auto& states = c.growth.states();
    const auto& probs = c.growth.probs();
    const double discount = 1.0 / (1.0 + c.discount_rate);

    // Inverse CDF over the ordered states.
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;
    std::vector<double> ratios(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        ratios[i] = (1.0 + states[i]) * discount;
    }

    const auto n = static_cast<std::size_t>(cfg.paths);
    std::vector<double> prices(n);
    for (std::size_t p = 0; p < n; ++p) {
        Xoshiro256pp rng = substream(cfg.seed, p);
        double cum = c.dps0;
        double price = 0.0;
        for (long long t = 0; t < cfg.horizon; ++t) {
            const double u = rng.uniform();
            std::size_t idx = 0;
            while (idx + 1 < cdf.size() && cdf[idx] <= u) ++idx;
            cum *= ratios[idx];
            price += cum;
        }
        prices[p] = price;
    }

    MomentEstimate est;
    est.horizon = cfg.horizon;
    est.paths = cfg.paths;

    double sum = 0.0;
    for (double v : prices) sum += v;
    est.mean = sum / static_cast<double>(n);

    if (n >= 2) {
        double m2 = 0.0;
        double m4 = 0.0;
        for (double v : prices) {
            const double d = v - est.mean;
            const double d2 = d * d;
            m2 += d2;
            m4 += d2 * d2;
        }
        const double nn = static_cast<double>(n);
        est.variance = m2 / (nn - 1.0);
        est.mean_se = std::sqrt(est.variance / nn);
        // Var(s^2) = (mu4 - s^4 (n-3)/(n-1)) / n, with sample moments plugged in.
        const double mu4 = m4 / nn;
        const double var_of_var =
            (mu4 - est.variance * est.variance * (nn - 3.0) / (nn - 1.0)) / nn;
        est.var_se = std::sqrt(std::max(0.0, var_of_var));
    } else {
        est.variance = 0.0;
        est.mean_se = std::numeric_limits<double>::infinity();
        est.var_se = std::numeric_limits<double>::infinity();
    }

    est.tail_bound = c.discount_rate > c.growth.mean()
                         ? tail_bound(c, cfg.horizon)
                         : std::numeric_limits<double>::infinity();
    return est;
}

double truncated_mean_exact(const CompanyParams& c, long long horizon) {
    require_positive_discount_base(c);
    const double x = (1.0 + c.growth.mean()) / (1.0 + c.discount_rate);
    double acc = 0.0;
    double xp = 1.0;
    for (long long t = 0; t < horizon; ++t) {
        xp *= x;
        acc += xp;
    }
    return c.dps0 * acc;
}

double truncated_variance_exact(const CompanyParams& c, long long horizon) {
    require_positive_discount_base(c);
    const double sigma = c.growth.stddev();
    if (sigma == 0.0) return 0.0;  // deterministic dividend path

    const double one_k = 1.0 + c.discount_rate;
    const double one_g = 1.0 + c.growth.mean();
    const double x = one_g / one_k;
    const double y = (one_g * one_g + sigma * sigma) / (one_k * one_k);

    // Second moment of the truncated sum: terms E[term_t * term_u] =
    // d^2 y^min(t,u) x^|t-u|, accumulated forward with
    // inner(u) = sum_{t<u} y^t x^(u-t).
    double diag = 0.0;
    double cross = 0.0;
    double inner = 0.0;
    double yp = 1.0;
    for (long long u = 0; u < horizon; ++u) {
        cross += inner;
        yp *= y;
        diag += yp;
        inner = x * (inner + yp);
    }
    const double second_moment = c.dps0 * c.dps0 * (diag + 2.0 * cross);
    const double mean = truncated_mean_exact(c, horizon);
    return std::max(0.0, second_moment - mean * mean);
}

double tail_bound(const CompanyParams& c, long long horizon) {
    if (c.discount_rate <= c.growth.mean()) {
        std::ostringstream msg;
        msg << "tail bound diverges: k = " << c.discount_rate
            << " <= g = " << c.growth.mean();
        throw ModelDomainError(msg.str());
    }
    const double x = (1.0 + c.growth.mean()) / (1.0 + c.discount_rate);
    return c.dps0 * std::pow(x, static_cast<double>(horizon + 1)) / (1.0 - x);
}

long long auto_horizon(const CompanyParams& c, double rel_tol) {
    const double price = gordon_price(c.dps0, c.discount_rate, c.growth.mean());
    const double target = rel_tol * price;
    const double x = (1.0 + c.growth.mean()) / (1.0 + c.discount_rate);

    long long horizon = 1;
    const double rhs = target * (1.0 - x) / c.dps0;
    if (rhs > 0.0 && rhs < 1.0) {
        horizon = std::max<long long>(
            1, static_cast<long long>(std::ceil(std::log(rhs) / std::log(x))) - 1);
    }
    while (tail_bound(c, horizon) > target && horizon < (1LL << 40)) ++horizon;
    while (horizon > 1 && tail_bound(c, horizon - 1) <= target) --horizon;
    return horizon;
}

}  // namespace sddm
