#include <cmath>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "sddm/errors.hpp"
#include "sddm/oracle.hpp"

using namespace sddm;

namespace {

CompanyParams moments_company(double d, double k, double g, double sigma) {
    CompanyParams c;
    c.dps0 = d;
    c.discount_rate = k;
    c.shares = 1000.0;
    c.growth = GrowthModel::from_moments(g, sigma);
    return c;
}

CompanyParams two_state_a() {
    CompanyParams c;
    c.dps0 = 0.6;
    c.discount_rate = 0.04;
    c.shares = 1000.0;
    c.growth = GrowthModel::from_states({-0.01, 0.03}, {0.5, 0.5});
    return c;
}

}  // namespace

TEST_CASE("oracle: truncated mean identities") {
    const CompanyParams a = moments_company(0.6, 0.04, 0.01, 0.02);
    CHECK(truncated_mean_exact(a, 1) ==
          doctest::Approx(0.6 * 1.01 / 1.04).epsilon(1e-14));
    CHECK(truncated_mean_exact(a, 2000) == doctest::Approx(20.2).epsilon(1e-9));
    // Divergent ratio still has a finite partial sum.
    const CompanyParams diverging = moments_company(1.0, 0.03, 0.06, 0.0);
    const double partial = truncated_mean_exact(diverging, 10);
    CHECK(std::isfinite(partial));
    CHECK(partial > 10.0 * 1.0);  // ten growing terms, each above d
}

TEST_CASE("oracle: truncated mean plus tail equals the closed form") {
    const CompanyParams a = moments_company(0.6, 0.04, 0.01, 0.02);
    const double closed = gordon_price(a.dps0, a.discount_rate, a.growth.mean());
    for (long long horizon : {1LL, 7LL, 50LL, 400LL}) {
        const double sum = truncated_mean_exact(a, horizon) + tail_bound(a, horizon);
        CHECK(std::abs(sum - closed) <= 1e-12 * closed);
    }
}

TEST_CASE("oracle: tail bound values") {
    const CompanyParams a = moments_company(0.6, 0.04, 0.01, 0.02);
    // Horizon zero reproduces the full expected price.
    CHECK(tail_bound(a, 0) ==
          doctest::Approx(gordon_price(0.6, 0.04, 0.01)).epsilon(1e-12));
    CHECK(tail_bound(a, 400) < 1e-3);
    CHECK(tail_bound(a, 2000) < 1e-12);
    CHECK_THROWS_AS(tail_bound(moments_company(1.0, 0.03, 0.06, 0.0), 10), ModelDomainError);
}

TEST_CASE("oracle: truncated variance is exactly zero for deterministic growth") {
    const CompanyParams c = moments_company(1.0, 0.05, 0.01, 0.0);
    for (long long horizon : {1LL, 10LL, 500LL}) {
        CHECK(truncated_variance_exact(c, horizon) == 0.0);
    }
}

TEST_CASE("oracle: truncated variance converges to the closed form") {
    const CompanyParams a = moments_company(0.6, 0.04, 0.01, 0.02);
    const Valuation va = value_company(a);
    const double closed_a = va.stddev_price * va.stddev_price;
    CHECK(std::abs(truncated_variance_exact(a, 2000) - closed_a) <= 1e-6 * closed_a);

    const CompanyParams b = moments_company(0.3, 0.08, 0.03, 0.09);
    const Valuation vb = value_company(b);
    const double closed_b = vb.stddev_price * vb.stddev_price;
    CHECK(std::abs(truncated_variance_exact(b, 2000) - closed_b) <= 1e-4 * closed_b);
}

TEST_CASE("oracle: truncated variance is nondecreasing in the horizon") {
    const CompanyParams a = moments_company(0.6, 0.04, 0.01, 0.02);
    double prev = 0.0;
    for (long long horizon : {1LL, 2LL, 5LL, 10LL, 50LL, 200LL, 1000LL}) {
        const double v = truncated_variance_exact(a, horizon);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("oracle: truncated variance depends only on the first two moments") {
    // Two-state and three-state distributions with identical moments.
    CompanyParams two = two_state_a();
    CompanyParams three = two;
    three.growth = GrowthModel::from_states({-0.03, 0.01, 0.05}, {0.125, 0.75, 0.125});
    CHECK(two.growth.mean() == doctest::Approx(three.growth.mean()).epsilon(1e-14));
    CHECK(two.growth.stddev() == doctest::Approx(three.growth.stddev()).epsilon(1e-12));
    for (long long horizon : {1LL, 3LL, 17LL, 250LL}) {
        const double lhs = truncated_variance_exact(two, horizon);
        const double rhs = truncated_variance_exact(three, horizon);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, lhs));
    }
}

TEST_CASE("oracle: degenerate one-state simulation reproduces the truncated sum") {
    CompanyParams c;
    c.dps0 = 1.0;
    c.discount_rate = 0.05;
    c.shares = 1.0;
    c.growth = GrowthModel::from_states({0.01}, {1.0});
    SimConfig cfg;
    cfg.horizon = 60;
    cfg.paths = 500;
    cfg.seed = 9;
    const MomentEstimate est = simulate_price(c, cfg);
    const double expected = truncated_mean_exact(c, 60);
    CHECK(std::abs(est.mean - expected) <= 1e-12 * expected);
    // All paths are identical; the residual variance is pure summation
    // rounding in the sample mean.
    CHECK(est.variance <= 1e-20 * est.mean * est.mean);
    CHECK(est.mean_se <= 1e-12 * est.mean);
}

TEST_CASE("oracle: single-period simulation matches the one-step mean") {
    CompanyParams c = two_state_a();
    SimConfig cfg;
    cfg.horizon = 1;
    cfg.paths = 40000;
    cfg.seed = 31337;
    const MomentEstimate est = simulate_price(c, cfg);
    const double expected = c.dps0 * (1.0 + c.growth.mean()) / (1.0 + c.discount_rate);
    CHECK(std::abs(est.mean - expected) <= 3.0 * est.mean_se);
}

TEST_CASE("oracle: simulated moments match the closed forms within three standard errors") {
    const CompanyParams c = two_state_a();
    const Valuation v = value_company(c);
    SimConfig cfg;
    cfg.horizon = 400;
    cfg.paths = 20000;
    cfg.seed = 20240817;
    const MomentEstimate est = simulate_price(c, cfg);
    CHECK(std::abs(est.mean - v.mean_price) <= 3.0 * est.mean_se);
    CHECK(std::abs(est.variance - v.stddev_price * v.stddev_price) <= 3.0 * est.var_se);
    CHECK(est.tail_bound < 1e-3);
}

TEST_CASE("oracle: identical seeds reproduce identical estimates") {
    const CompanyParams c = two_state_a();
    SimConfig cfg;
    cfg.horizon = 50;
    cfg.paths = 4000;
    cfg.seed = 555;
    const MomentEstimate x = simulate_price(c, cfg);
    const MomentEstimate y = simulate_price(c, cfg);
    CHECK(x.mean == y.mean);
    CHECK(x.variance == y.variance);
    CHECK(x.var_se == y.var_se);
    cfg.seed = 556;
    const MomentEstimate z = simulate_price(c, cfg);
    CHECK(x.mean != z.mean);
}

TEST_CASE("oracle: tripling the paths shrinks the mean standard error by about sqrt(3)") {
    const CompanyParams c = two_state_a();
    SimConfig cfg;
    cfg.horizon = 100;
    cfg.paths = 30000;
    cfg.seed = 7;
    const double se1 = simulate_price(c, cfg).mean_se;
    cfg.paths = 90000;
    const double se3 = simulate_price(c, cfg).mean_se;
    const double ratio = se1 / se3;
    CHECK(ratio > std::sqrt(3.0) * 0.8);
    CHECK(ratio < std::sqrt(3.0) * 1.2);
}

TEST_CASE("oracle: simulation rejects moments-only growth") {
    const CompanyParams c = moments_company(0.6, 0.04, 0.01, 0.02);
    SimConfig cfg;
    cfg.horizon = 10;
    cfg.paths = 10;
    cfg.seed = 1;
    try {
        simulate_price(c, cfg);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("explicit") != std::string::npos);
    }
}

TEST_CASE("oracle: a single path still yields an estimate with wide errors") {
    const CompanyParams c = two_state_a();
    SimConfig cfg;
    cfg.horizon = 20;
    cfg.paths = 1;
    cfg.seed = 3;
    const MomentEstimate est = simulate_price(c, cfg);
    CHECK(std::isfinite(est.mean));
    CHECK(est.variance == 0.0);
    CHECK(std::isinf(est.mean_se));
    CHECK(std::isinf(est.var_se));
}

TEST_CASE("oracle: simulation configuration validation") {
    const CompanyParams c = two_state_a();
    SimConfig cfg;
    cfg.horizon = 0;
    cfg.paths = 10;
    CHECK_THROWS_AS(simulate_price(c, cfg), ValidationError);
    cfg.horizon = 10;
    cfg.paths = 0;
    CHECK_THROWS_AS(simulate_price(c, cfg), ValidationError);
}

TEST_CASE("oracle: automatic horizon is minimal for the tail target") {
    const CompanyParams a = moments_company(0.6, 0.04, 0.01, 0.02);
    const long long horizon = auto_horizon(a);
    const double target = 1e-6 * gordon_price(a.dps0, a.discount_rate, a.growth.mean());
    CHECK(tail_bound(a, horizon) <= target);
    CHECK(tail_bound(a, horizon - 1) > target);
    CHECK(horizon > 300);
    CHECK(horizon < 700);
}

TEST_CASE("oracle: truncated variance matches closed forms on random companies") {
    testutil::Rng rng(123321);
    for (int trial = 0; trial < 10; ++trial) {
        const CompanyParams c = testutil::random_company(rng);
        const Valuation v = value_company(c);
        const double closed = v.stddev_price * v.stddev_price;
        const double exact = truncated_variance_exact(c, 4000);
        if (closed == 0.0) {
            CHECK(exact == 0.0);
        } else {
            CHECK(std::abs(exact - closed) <= 1e-6 * closed);
        }
    }
}
