#include <vector>

#include "doctest.h"
#include "sddm/errors.hpp"
#include "sddm/growth_model.hpp"

using sddm::GrowthModel;
using sddm::ValidationError;

TEST_CASE("growth: degenerate one-state distribution has zero spread") {
    const auto g = GrowthModel::from_states({0.01}, {1.0});
    const auto [mean, stddev] = sddm::growth_moments(g);
    CHECK(mean == 0.01);
    CHECK(stddev == 0.0);
}

TEST_CASE("growth: symmetric two-point distribution") {
    const auto g = GrowthModel::from_states({-0.01, 0.03}, {0.5, 0.5});
    CHECK(g.mean() == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(g.stddev() == doctest::Approx(0.02).epsilon(1e-12));
}

TEST_CASE("growth: moments-only form echoes its fields") {
    const auto g = GrowthModel::from_moments(0.03, 0.09);
    CHECK(g.mean() == 0.03);
    CHECK(g.stddev() == 0.09);
    CHECK(g.moments_only());
    CHECK(g.states().empty());
}

TEST_CASE("growth: derived moments match a moments-only twin") {
    const auto explicit_form = GrowthModel::from_states({-0.06, 0.0, 0.12}, {0.3, 0.4, 0.3});
    const auto twin = GrowthModel::from_moments(explicit_form.mean(), explicit_form.stddev());
    CHECK(twin.mean() == explicit_form.mean());
    CHECK(twin.stddev() == explicit_form.stddev());
}

TEST_CASE("growth: rejects malformed distributions") {
    CHECK_THROWS_AS(GrowthModel::from_states({}, {}), ValidationError);
    CHECK_THROWS_AS(GrowthModel::from_states({0.01, 0.02}, {1.0}), ValidationError);
    CHECK_THROWS_AS(GrowthModel::from_states({0.03, 0.01}, {0.5, 0.5}), ValidationError);
    CHECK_THROWS_AS(GrowthModel::from_states({0.01, 0.01}, {0.5, 0.5}), ValidationError);
    CHECK_THROWS_AS(GrowthModel::from_states({-1.0, 0.01}, {0.5, 0.5}), ValidationError);
    CHECK_THROWS_AS(GrowthModel::from_states({-0.01, 0.03}, {0.5, -0.5}), ValidationError);
    CHECK_THROWS_AS(GrowthModel::from_states({-0.01, 0.03}, {0.5, 0.0}), ValidationError);
}

TEST_CASE("growth: probability sum tolerance is strict") {
    // Off by 1e-9: rejected, not silently renormalized.
    CHECK_THROWS_AS(GrowthModel::from_states({0.0, 0.02}, {0.5, 0.5 + 1e-9}), ValidationError);
    // Off by less than 1e-12: accepted and normalized.
    const auto g = GrowthModel::from_states({0.0, 0.02}, {0.5, 0.5 + 1e-13});
    CHECK(g.probs()[0] + g.probs()[1] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("growth: moments-only validation") {
    CHECK_THROWS_AS(GrowthModel::from_moments(-1.0, 0.1), ValidationError);
    CHECK_THROWS_AS(GrowthModel::from_moments(0.02, -0.1), ValidationError);
    CHECK_NOTHROW(GrowthModel::from_moments(-0.99, 0.0));
}
