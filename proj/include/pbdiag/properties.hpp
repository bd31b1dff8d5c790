#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pbdiag {

struct PropertyResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0 && cases > 0; }
};

// Randomized algebraic identities (each run `cases` times from `seed`) plus the
// exhaustive adjointness check on small enumerated bases.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed, int cases);

}  // namespace pbdiag
