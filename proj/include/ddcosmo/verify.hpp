#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ddcosmo/quadrature.hpp"

namespace ddcosmo {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail; // measured value vs bound, one line
};

/// Runs the invariant battery covering every module's stated invariants.
/// The profile scales grid sizes; the checked bounds themselves are fixed.
std::vector<CheckResult> verify_all(const Profile& profile, std::uint64_t seed);

/// Prints one line per check; returns the number of failures.
int report(const std::vector<CheckResult>& results, std::ostream& os);

} // namespace ddcosmo
