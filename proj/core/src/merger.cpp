#include "sddm/merger.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sddm/errors.hpp"

namespace sddm {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double blended_discount_rate(double k_a, double equity_a, double k_b, double equity_b) {
    const double total = equity_a + equity_b;
    if (!(total > 0.0)) {
        std::ostringstream msg;
        msg << "combined equity value " << total << " must be > 0";
        throw ModelDomainError(msg.str());
    }
    return (k_a * equity_a + k_b * equity_b) / total;
}

MergerContext make_merger_context(const MergerInputs& m) {
    MergerContext ctx;
    ctx.acquirer = value_company(m.acquirer);
    ctx.target = value_company(m.target);
    ctx.k_acquirer = m.acquirer.discount_rate;
    ctx.k_target = m.target.discount_rate;
    ctx.shares_acquirer = m.acquirer.shares;
    ctx.shares_target = m.target.shares;
    ctx.total_dividends = m.acquirer.dps0 * m.acquirer.shares + m.target.dps0 * m.target.shares;
    ctx.share_ratio = m.acquirer.shares / m.target.shares;
    const double total_equity = ctx.acquirer.equity_mean + ctx.target.equity_mean;
    ctx.weight_acquirer = ctx.acquirer.equity_mean / total_equity;
    ctx.weight_target = ctx.target.equity_mean / total_equity;
    ctx.k_m = m.discount_override
                  ? *m.discount_override
                  : blended_discount_rate(ctx.k_acquirer, ctx.acquirer.equity_mean, ctx.k_target,
                                          ctx.target.equity_mean);
    return ctx;
}

MergerValuation merged_valuation(const MergerContext& ctx, double growth_mean,
                                 double growth_stddev) {
    MergerValuation mv;
    mv.k_m = ctx.k_m;
    mv.total_dividends = ctx.total_dividends;
    mv.weight_acquirer = ctx.weight_acquirer;
    mv.weight_target = ctx.weight_target;
    mv.growth_mean = growth_mean;
    mv.growth_stddev = growth_stddev;
    mv.equity_mean = gordon_price(ctx.total_dividends, ctx.k_m, growth_mean);
    mv.cv = coefficient_of_variation(ctx.k_m, growth_mean, growth_stddev);
    return mv;
}

MergerValuation merged_valuation(const MergerInputs& m) {
    const MergerContext ctx = make_merger_context(m);
    return merged_valuation(ctx, m.merged_growth.mean(), m.merged_growth.stddev());
}

double merged_dps(const MergerInputs& m, double exchange_ratio) {
    const double total = m.acquirer.dps0 * m.acquirer.shares + m.target.dps0 * m.target.shares;
    return total / (m.acquirer.shares + exchange_ratio * m.target.shares);
}

RawBounds raw_interval_bounds(const MergerContext& ctx, const MergerValuation& mv) {
    const double n = ctx.share_ratio;
    const double w_a = ctx.acquirer.equity_mean;
    const double w_b = ctx.target.equity_mean;
    const double w_m = mv.equity_mean;
    const double v_a = w_a * ctx.acquirer.cv;
    const double v_b = w_b * ctx.target.cv;
    const double v_m = w_m * mv.cv;

    RawBounds b;
    // The target gains expected wealth only when the merged equity exceeds
    // its own; otherwise no finite ratio works.
    b.mean_lower = w_m > w_b ? n * w_b / (w_m - w_b) : kInf;
    b.mean_upper = n * (w_m - w_a) / w_a;

    if (v_a == 0.0) {
        // A zero-variance acquirer tolerates no residual merged variance.
        b.var_lower = v_m > 0.0 ? kInf : -kInf;
    } else {
        b.var_lower = n * (v_m - v_a) / v_a;
    }
    // The target's variance condition is vacuous while V_M <= V_B.
    b.var_upper = v_m > v_b ? n * v_b / (v_m - v_b) : kInf;
    return b;
}

ExtendedInterval mean_interval(const MergerContext& ctx, const MergerValuation& mv) {
    const RawBounds b = raw_interval_bounds(ctx, mv);
    return ExtendedInterval::closed(std::max(0.0, b.mean_lower), b.mean_upper);
}

ExtendedInterval variance_interval(const MergerContext& ctx, const MergerValuation& mv) {
    const RawBounds b = raw_interval_bounds(ctx, mv);
    return ExtendedInterval::closed(std::max(0.0, b.var_lower), b.var_upper);
}

ExtendedInterval combined_interval(const MergerContext& ctx, const MergerValuation& mv) {
    return mean_interval(ctx, mv).intersect(variance_interval(ctx, mv));
}

ExtendedInterval mean_interval(const MergerInputs& m) {
    const MergerContext ctx = make_merger_context(m);
    return mean_interval(ctx, merged_valuation(ctx, m.merged_growth.mean(), m.merged_growth.stddev()));
}

ExtendedInterval variance_interval(const MergerInputs& m) {
    const MergerContext ctx = make_merger_context(m);
    return variance_interval(ctx,
                             merged_valuation(ctx, m.merged_growth.mean(), m.merged_growth.stddev()));
}

ExtendedInterval combined_interval(const MergerInputs& m) {
    const MergerContext ctx = make_merger_context(m);
    return combined_interval(ctx,
                             merged_valuation(ctx, m.merged_growth.mean(), m.merged_growth.stddev()));
}

double no_synergy_growth(const MergerContext& ctx) {
    const double total_equity = ctx.acquirer.equity_mean + ctx.target.equity_mean;
    if (!(total_equity > 0.0)) {
        std::ostringstream msg;
        msg << "combined pre-merger equity " << total_equity << " must be > 0";
        throw ModelDomainError(msg.str());
    }
    // Solves D (1+g) / (k_M - g) = W_A + W_B for g.
    return (total_equity * ctx.k_m - ctx.total_dividends) / (total_equity + ctx.total_dividends);
}

double no_synergy_growth(const MergerInputs& m) {
    return no_synergy_growth(make_merger_context(m));
}

double r_star(const Valuation& acquirer, const Valuation& target) {
    return target.mean_price / acquirer.mean_price;
}

ExtendedInterval no_synergy_interval(const MergerContext& ctx, double growth_stddev) {
    const double g = no_synergy_growth(ctx);
    const double f_m = coefficient_of_variation(ctx.k_m, g, growth_stddev);
    const double f_a = ctx.acquirer.cv;
    const double f_b = ctx.target.cv;
    const double n = ctx.share_ratio;
    const double point = r_star(ctx.acquirer, ctx.target);

    double lower;
    if (f_a == 0.0) {
        lower = f_m > 0.0 ? kInf : 0.0;
    } else {
        lower = n * (f_m / f_a - 1.0) + point * (f_m / f_a);
    }

    double upper;
    if (f_b == 0.0) {
        upper = f_m > 0.0 ? 0.0 : kInf;
    } else {
        const double bracket = (f_m / f_b - 1.0) / n + (f_m / f_b) / point;
        upper = bracket > 0.0 ? 1.0 / bracket : kInf;
    }
    return ExtendedInterval::closed(std::max(0.0, lower), upper);
}

ExtendedInterval no_synergy_interval(const MergerInputs& m) {
    return no_synergy_interval(make_merger_context(m), m.merged_growth.stddev());
}

bool cv_mixture_check(const MergerContext& ctx, double merged_cv) {
    return merged_cv <=
           ctx.weight_acquirer * ctx.acquirer.cv + ctx.weight_target * ctx.target.cv;
}

bool cv_mixture_check(const MergerInputs& m) {
    const MergerContext ctx = make_merger_context(m);
    const MergerValuation mv =
        merged_valuation(ctx, m.merged_growth.mean(), m.merged_growth.stddev());
    return cv_mixture_check(ctx, mv.cv);
}

}  // namespace sddm
