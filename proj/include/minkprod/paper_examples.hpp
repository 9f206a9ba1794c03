#pragma once

#include <string>
#include <vector>

namespace minkprod {

/// One reproduction scenario: measured values against expected ones.
struct ExampleResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

/// Registered scenario ids.
std::vector<std::string> paper_example_ids();

/// Run one scenario; throws InvalidInput for unknown ids.
ExampleResult run_paper_example(const std::string& id);

}  // namespace minkprod
