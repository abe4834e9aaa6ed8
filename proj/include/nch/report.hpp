#pragma once
// Named pass/fail assertions collected by the verification suites.

#include <stdexcept>
#include <string>
#include <vector>

namespace nch {

struct Assertion {
    std::string name;
    bool pass = false;
    std::string detail;
};

using Assertions = std::vector<Assertion>;

inline bool all_pass(const Assertions& as) {
    for (const auto& a : as)
        if (!a.pass) return false;
    return true;
}

inline void append(Assertions& to, const Assertions& from) { to.insert(to.end(), from.begin(), from.end()); }

// Thrown when a configured resource cap (NCH_MAX_DIM) would be exceeded.
struct ResourceCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a degree-raising operation would leave the truncation.
struct TruncationOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long max_dim_cap();  // NCH_MAX_DIM or 20000

}  // namespace nch
