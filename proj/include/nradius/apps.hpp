#pragma once

#include <map>
#include <string>
#include <vector>

#include "nradius/types.hpp"

namespace nradius {

/// One target quantity of a scenario. When a published figure disagrees
/// with exact recomputation, `value` holds the recomputed number,
/// `discrepancy` is set, and `note` records the published figure.
struct ExpectedValue {
    std::string name;
    double value = 0.0;
    double tol = 0.0;
    std::string provenance;
    bool discrepancy = false;
    std::string note;
};

struct Scenario {
    std::string id;  // quantum | volterra | fractional | fpde | example
    std::map<std::string, ComplexMatrix> operands;
    std::vector<ExpectedValue> expected;
    std::vector<std::string> notes;
};

Scenario build_quantum();
Scenario build_volterra();
Scenario build_fractional();
Scenario build_fpde();
Scenario build_example();

struct CheckLine {
    std::string scenario;
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string note;
};

/// Recompute every expected quantity of one scenario.
std::vector<CheckLine> run_scenario(const Scenario& scenario);

/// All four application scenarios plus the worked block-matrix example.
std::vector<CheckLine> repro_all();

}  // namespace nradius
