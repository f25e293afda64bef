#include <string>

#include "app/scenario.hpp"
#include "doctest.h"
#include "sddm/errors.hpp"

using namespace sddm;
using namespace sddm::app;

namespace {

const char* kScenarioDir = SDDM_SCENARIO_DIR;

std::string minimal(const std::string& merger_extra = "",
                    const std::string& growth_a =
                        R"({ "mean": "1%", "stddev": "2%" })") {
    return std::string(R"({
      "companies": {
        "A": { "dps0": 0.6, "discount_rate": "4%", "shares": 1000, "growth": )") +
           growth_a + R"( },
        "B": { "dps0": 0.3, "discount_rate": 0.08, "shares": 2500,
               "growth": { "mean": 0.03, "stddev": 0.09 } }
      },
      "merger": { "acquirer": "A", "target": "B",
                  "growth": { "mean": "3%", "stddev": "1%" })" +
           merger_extra + R"( }
    })";
}

}  // namespace

TEST_CASE("scenario: percent strings and decimals parse to the same rates") {
    const Scenario sc = parse_scenario(minimal());
    CHECK(sc.companies.at("A").discount_rate == 0.04);
    CHECK(sc.companies.at("B").discount_rate == 0.08);
    CHECK(sc.companies.at("A").growth.mean() == 0.01);
    CHECK(sc.companies.at("A").growth.stddev() == 0.02);
    CHECK(sc.merger.growth.mean() == 0.03);
    CHECK(sc.merger.growth.stddev() == 0.01);
    // Defaults apply when sim/sweep are absent.
    CHECK(sc.sim.horizon == 0);
    CHECK(sc.sim.paths == 200000);
    CHECK(sc.sim.seed == 42);
    CHECK(!sc.sweep.has_value());
}

TEST_CASE("scenario: bundled reference files load") {
    const Scenario states = load_scenario(std::string(kScenarioDir) + "/yagil-table1.json");
    CHECK(states.companies.at("A").growth.states().size() == 2);
    CHECK(states.companies.at("A").growth.mean() == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(states.sweep.has_value());
    CHECK(states.sweep->sigmas.size() == 5);
    CHECK(states.sweep->g_steps == 500);
    CHECK(states.sim.paths == 200000);

    const Scenario moments =
        load_scenario(std::string(kScenarioDir) + "/yagil-table1-moments.json");
    CHECK(moments.companies.at("B").growth.moments_only());
    CHECK(moments.companies.at("B").growth.stddev() == 0.09);
}

TEST_CASE("scenario: serialization round-trips exactly") {
    const Scenario sc = load_scenario(std::string(kScenarioDir) + "/yagil-table1.json");
    const Scenario again = parse_scenario(serialize_scenario(sc));
    CHECK(again == sc);
    // And the canonical form is a fixed point.
    CHECK(serialize_scenario(again) == serialize_scenario(sc));

    const Scenario bare = parse_scenario(minimal(R"(, "discount_override": "5.73%")"));
    CHECK(bare.merger.discount_override == doctest::Approx(0.0573).epsilon(1e-15));
    CHECK(parse_scenario(serialize_scenario(bare)) == bare);
}

TEST_CASE("scenario: unknown merger names are rejected") {
    const std::string text = R"({
      "companies": { "A": { "dps0": 1, "discount_rate": 0.05, "shares": 1,
                            "growth": { "mean": 0, "stddev": 0 } } },
      "merger": { "acquirer": "A", "target": "Z",
                  "growth": { "mean": 0, "stddev": 0 } }
    })";
    try {
        parse_scenario(text);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("unknown company name 'Z'") != std::string::npos);
    }
}

TEST_CASE("scenario: acquirer and target must differ") {
    const std::string text = R"({
      "companies": { "A": { "dps0": 1, "discount_rate": 0.05, "shares": 1,
                            "growth": { "mean": 0, "stddev": 0 } } },
      "merger": { "acquirer": "A", "target": "A",
                  "growth": { "mean": 0, "stddev": 0 } }
    })";
    CHECK_THROWS_AS(parse_scenario(text), ValidationError);
}

TEST_CASE("scenario: malformed documents name the problem") {
    CHECK_THROWS_AS(parse_scenario("{"), ValidationError);
    CHECK_THROWS_AS(parse_scenario("[]"), ValidationError);
    try {
        parse_scenario(R"({ "companies": {} })");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("companies") != std::string::npos);
    }
    try {
        parse_scenario(minimal("", R"({ "states": [0.0, 0.02], "probs": [0.5, 0.4] })"));
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        // The probability-sum violation is carried through verbatim.
        CHECK(std::string(e.what()).find("sum") != std::string::npos);
    }
    // A growth object may not mix the two forms.
    CHECK_THROWS_AS(
        parse_scenario(minimal("", R"({ "states": [0.0], "probs": [1.0], "mean": 0.0 })")),
        ValidationError);
    // Bad rate strings name the offending value.
    CHECK_THROWS_AS(parse_scenario(minimal(R"(, "discount_override": "four percent")")),
                    ValidationError);
}

TEST_CASE("scenario: merger inputs resolve the configured pair") {
    const Scenario sc = parse_scenario(minimal());
    const MergerInputs m = merger_inputs(sc);
    CHECK(m.acquirer.shares == 1000);
    CHECK(m.target.shares == 2500);
    CHECK(!m.discount_override.has_value());
    CHECK(m.merged_growth.mean() == 0.03);
}
