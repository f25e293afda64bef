#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "sddm/interval.hpp"

using sddm::ExtendedInterval;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("interval: construction and emptiness") {
    CHECK(ExtendedInterval::empty_interval().empty());
    CHECK(ExtendedInterval::closed(0.3, 0.2).empty());
    const auto iv = ExtendedInterval::closed(0.2, 0.3);
    CHECK(!iv.empty());
    CHECK(iv.lower() == 0.2);
    CHECK(iv.upper() == 0.3);
    CHECK(!ExtendedInterval::closed(0.5, 0.5).empty());
}

TEST_CASE("interval: endpoints of an empty interval are unreadable") {
    const auto e = ExtendedInterval::empty_interval();
    CHECK_THROWS_AS(e.lower(), std::logic_error);
    CHECK_THROWS_AS(e.upper(), std::logic_error);
    CHECK_THROWS_AS(e.bounded_above(), std::logic_error);
}

TEST_CASE("interval: unbounded above") {
    const auto iv = ExtendedInterval::unbounded_above(0.1);
    CHECK(!iv.empty());
    CHECK(!iv.bounded_above());
    CHECK(iv.contains(1e12));
    CHECK(!iv.contains(0.05));
}

TEST_CASE("interval: containment is closed at the endpoints") {
    const auto iv = ExtendedInterval::closed(0.2, 0.6);
    CHECK(iv.contains(0.2));
    CHECK(iv.contains(0.6));
    CHECK(!iv.contains(0.2 - 1e-12));
    CHECK(!ExtendedInterval::empty_interval().contains(0.0));
}

TEST_CASE("interval: intersection") {
    const auto a = ExtendedInterval::closed(0.1, 0.5);
    const auto b = ExtendedInterval::closed(0.3, 0.9);
    const auto c = a.intersect(b);
    CHECK(c.lower() == 0.3);
    CHECK(c.upper() == 0.5);
    CHECK(a.intersect(ExtendedInterval::closed(0.6, 0.7)).empty());
    CHECK(a.intersect(ExtendedInterval::empty_interval()).empty());
    const auto d = a.intersect(ExtendedInterval::unbounded_above(0.2));
    CHECK(d.lower() == 0.2);
    CHECK(d.upper() == 0.5);
    const auto both_unbounded =
        ExtendedInterval::unbounded_above(0.1).intersect(ExtendedInterval::unbounded_above(0.4));
    CHECK(both_unbounded.lower() == 0.4);
    CHECK(!both_unbounded.bounded_above());
}

TEST_CASE("interval: clamped width") {
    CHECK(ExtendedInterval::empty_interval().clamped_width(2.2) == 0.0);
    CHECK(ExtendedInterval::closed(0.2, 0.7).clamped_width(2.2) == doctest::Approx(0.5));
    CHECK(ExtendedInterval::unbounded_above(0.2).clamped_width(2.2) == doctest::Approx(2.0));
    // Lower bound above the clamp: nothing visible remains.
    CHECK(ExtendedInterval::closed(3.0, kInf).clamped_width(2.2) == 0.0);
}
