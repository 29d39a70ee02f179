// Exception taxonomy shared by all modules. The CLI maps these onto its
// exit codes: 0 pass, 1 usage, 2 mathematical check failed, 3 legitimate
// construction non-success, 4 resource cap exceeded.
#pragma once

#include <stdexcept>
#include <string>

namespace qfgaps {

// A cap (sieve size, exact-mode limit, character enumeration) was exceeded.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// A construction that theory says cannot fail did fail; indicates a bug.
struct construction_error : std::logic_error {
    explicit construction_error(const std::string& what) : std::logic_error(what) {}
};

// The refined-interval search exhausted its admissible range. Legitimate at
// small sizes; the caller may retry with a larger gap length or smaller delta.
struct no_interval_error : std::runtime_error {
    explicit no_interval_error(const std::string& what) : std::runtime_error(what) {}
};

// A comparison stayed undecidable after the maximum precision escalation.
struct indeterminate_error : std::runtime_error {
    explicit indeterminate_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qfgaps
