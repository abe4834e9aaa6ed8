#include "nch/report.hpp"

#include <cstdlib>
#include <string>

namespace nch {

long max_dim_cap() {
    const long cap = [] {
        const char* v = std::getenv("NCH_MAX_DIM");
        if (!v || !*v) return 20000L;
        try {
            long c = std::stol(v);
            return c > 0 ? c : 20000L;
        } catch (...) {
            return 20000L;
        }
    }();
    return cap;
}

}  // namespace nch
