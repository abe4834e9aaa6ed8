#pragma once
// Command execution behind the CLI: one configuration in, one report out.

#include "nch/io.hpp"
#include "nch/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nch {

struct RunConfig {
    std::string command;             // describe | homology | verify | chern | index | toeplitz
    std::string algebra = "C";       // built-in name or definition file
    std::optional<int> N;            // truncation; defaults to window top + 2
    std::optional<int> max_degree;   // top of the degree window
    std::string theory = "hc";       // hh | hc | hc-connes | hc-reduced | hp
    std::string suite;               // verify only
    std::string format = "table";    // table | json
    std::uint64_t seed = 1;
    // toeplitz
    std::string symbol = "z";
    std::string pair;                // optional second symbol for the commutator trace
    std::string n_range = "1..12";
    // verify excision / derivation / lie
    std::string extension;           // built-in extension name; default: the file's ideal, else "split"
    std::string derivation;          // "euler" | "inner:<basis index>"; default picks one that applies
    int r = 2;
};

const std::vector<std::string>& suite_names();

struct Report {
    std::string command;
    Json config;
    Json results = Json::array();
    Assertions assertions;
};

// Throws ParseError on a bad configuration or input and ResourceCapExceeded
// when a chain space would exceed NCH_MAX_DIM.
Report run(const RunConfig& cfg);

std::string emit(const Report& r, const std::string& format);
Json report_json(const Report& r);

// 0 when every assertion passes, 1 otherwise
int exit_status(const Report& r);

}  // namespace nch
