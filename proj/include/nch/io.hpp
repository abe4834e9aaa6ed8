#pragma once
// Algebra definition files, symbol input, and their JSON forms.

#include "nch/algebra.hpp"
#include "nch/toeplitz.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nch {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A loaded algebra. Files whose structure constants all have zero imaginary
// part are loaded over Q; otherwise only the Gaussian form is present.
struct LoadedAlgebra {
    std::string source;  // built-in name or file path
    std::optional<Algebra<Q>> rational;
    std::optional<Algebra<QI>> gaussian;
    std::optional<std::vector<std::vector<Q>>> ideal;  // "ideal" field, as vectors in the algebra
    Json document;                                     // the parsed file, or the built-in serialized

    bool is_rational() const { return rational.has_value(); }
    const Algebra<Q>& q() const;
};

// { "name", "dim", "unital", "basis", "structure": [[i, j, k, "p/q"], ...], "ideal"?: [...] }
// "ideal" entries are basis indices or coordinate vectors.
LoadedAlgebra algebra_from_json(const Json& doc, const std::string& source = "<json>");
// A built-in name or a path to a definition file.
LoadedAlgebra load_algebra(const std::string& name_or_path);

template <class S>
Json algebra_to_json(const Algebra<S>& a) {
    Json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    j["unital"] = a.unital();
    j["basis"] = a.labels();
    Json st = Json::array();
    for (const auto& [i, k, l, v] : a.structure()) st.push_back(Json::array({i, k, l, to_string(v)}));
    j["structure"] = st;
    return j;
}

// "z^-1 + 2 + 3z^2" or {"-1": "1", "0": "2", "2": "3"}
Laurent parse_symbol(const std::string& text);
Json symbol_to_json(const Laurent& f);

// "1..12" or "7"
std::pair<int, int> parse_range(const std::string& text);

Extension<Q> extension_from(const LoadedAlgebra& a);

}  // namespace nch
