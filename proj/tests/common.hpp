#pragma once

#include "oracle.hpp"

#include "nch/algebra.hpp"

namespace testing {

inline oracle::Table table_of(const nch::Algebra<nch::Q>& a) {
    oracle::Table t;
    t.d = a.dim();
    t.c.assign(std::size_t(t.d) * t.d * t.d, 0.0);
    for (const auto& [i, j, k, v] : a.structure()) t.c[std::size_t((i * t.d + j) * t.d + k)] = v.convert_to<double>();
    return t;
}

inline const std::vector<std::string>& five() {
    static const std::vector<std::string> names{"C", "C2", "dual", "M2", "upper2"};
    return names;
}

}  // namespace testing
