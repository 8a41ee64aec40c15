#include "ddcosmo/verify.hpp"
#include <ostream>
namespace ddcosmo {
std::vector<CheckResult> verify_all(const Profile&, std::uint64_t) { return {}; }
int report(const std::vector<CheckResult>& results, std::ostream& os) {
    int failures = 0;
    for (const auto& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << "\n";
        if (!r.pass) ++failures;
    }
    return failures;
}
}
