// The `verify` driver: named machine checks grouped into suites, one
// PASS/FAIL/INCONCLUSIVE line per check.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamsphere {

// Known suites: counts, appendix, planar, moments, search.
// Returns true iff every executed check passed. Unknown suite names throw.
bool run_verify(const std::vector<std::string>& suites, std::ostream& out,
                int threads = 1);

}  // namespace hamsphere
