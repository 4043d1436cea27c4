// Scenario ingestion and re-emission.  One JSON file describes the field,
// the tau class and the state; loading validates the schema and
// canonicalizes the data (coefficients sorted, zero terms dropped).
#pragma once

#include <iosfwd>

#include "monres/driver.hpp"

namespace monres {

struct Scenario {
    int tau = 1;
    std::optional<Situation> situation;   // tau = 1
    std::optional<Tau0State> tau0;        // tau = 0
    std::optional<Tau2State> tau2;        // tau = 2
    std::optional<long long> seed;
    ResolveLimits limits;
};

// Throws ValidationError with a JSON-pointer-style path on schema errors;
// tau = 3 files are rejected outright (no such state exists in this model).
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& json_text);

std::string scenario_to_json(const Scenario& sc);  // pretty, canonical ordering
void save_scenario(const Scenario& sc, const std::string& path);

}  // namespace monres
