#include "nch/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace nch {

const Algebra<Q>& LoadedAlgebra::q() const {
    if (!rational) throw ParseError(source + ": structure constants are not rational; this command needs a rational algebra");
    return *rational;
}

namespace {

template <class T>
T field(const Json& doc, const char* key, const std::string& source) {
    if (!doc.contains(key)) throw ParseError(source + ": missing field \"" + key + "\"");
    try {
        return doc.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw ParseError(source + ": field \"" + key + "\": " + e.what());
    }
}

QI scalar_field(const Json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return QI(Q(v.get<long>()));
        if (v.is_string()) return parse_scalar<QI>(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": scalar must be an integer or a string like \"p/q\" or \"p/q+r/s i\"");
}

}  // namespace

LoadedAlgebra algebra_from_json(const Json& doc, const std::string& source) {
    if (!doc.is_object()) throw ParseError(source + ": algebra definition must be a JSON object");
    auto name = field<std::string>(doc, "name", source);
    int dim = field<int>(doc, "dim", source);
    bool unital = field<bool>(doc, "unital", source);
    std::vector<std::string> basis;
    if (doc.contains("basis")) basis = field<std::vector<std::string>>(doc, "basis", source);
    if (!basis.empty() && int(basis.size()) != dim) throw ParseError(source + ": basis has " + std::to_string(basis.size()) + " labels, dim is " + std::to_string(dim));
    if (dim <= 0) throw ParseError(source + ": dim must be positive");
    if (!doc.contains("structure") || !doc["structure"].is_array()) throw ParseError(source + ": missing array \"structure\"");

    std::vector<Algebra<QI>::Entry> st;
    bool rational = true;
    for (std::size_t n = 0; n < doc["structure"].size(); ++n) {
        const auto& e = doc["structure"][n];
        std::string where = source + ": structure[" + std::to_string(n) + "]";
        if (!e.is_array() || e.size() != 4) throw ParseError(where + " must be [i, j, k, scalar]");
        int idx[3];
        for (int s = 0; s < 3; ++s) {
            if (!e[std::size_t(s)].is_number_integer()) throw ParseError(where + ": index must be an integer");
            idx[s] = e[std::size_t(s)].get<int>();
            if (idx[s] < 0 || idx[s] >= dim) throw ParseError(where + ": index " + std::to_string(idx[s]) + " out of range");
        }
        QI v = scalar_field(e[3], where);
        if (v.im != 0) rational = false;
        st.emplace_back(idx[0], idx[1], idx[2], v);
    }

    LoadedAlgebra out;
    out.source = source;
    out.document = doc;
    try {
        out.gaussian = Algebra<QI>(name, dim, unital, basis, st);
        if (rational) {
            std::vector<Algebra<Q>::Entry> sq;
            for (const auto& [i, j, k, v] : st) sq.emplace_back(i, j, k, v.re);
            out.rational = Algebra<Q>(name, dim, unital, basis, sq);
        }
    } catch (const AlgebraError& e) {
        throw ParseError(source + ": " + e.what());
    }

    if (doc.contains("ideal")) {
        if (!rational) throw ParseError(source + ": an ideal is only supported over Q");
        const auto& id = doc["ideal"];
        if (!id.is_array()) throw ParseError(source + ": \"ideal\" must be an array");
        std::vector<std::vector<Q>> gens;
        for (std::size_t n = 0; n < id.size(); ++n) {
            std::string where = source + ": ideal[" + std::to_string(n) + "]";
            std::vector<Q> v(std::size_t(dim), Q(0));
            if (id[n].is_number_integer()) {
                int k = id[n].get<int>();
                if (k < 0 || k >= dim) throw ParseError(where + ": index out of range");
                v[std::size_t(k)] = 1;
            } else if (id[n].is_array() && int(id[n].size()) == dim) {
                for (int k = 0; k < dim; ++k) {
                    QI s = scalar_field(id[n][std::size_t(k)], where);
                    if (s.im != 0) throw ParseError(where + ": ideal generators must be rational");
                    v[std::size_t(k)] = s.re;
                }
            } else {
                throw ParseError(where + ": expected a basis index or a coordinate vector of length dim");
            }
            gens.push_back(std::move(v));
        }
        out.ideal = std::move(gens);
    }
    return out;
}

LoadedAlgebra load_algebra(const std::string& name_or_path) {
    for (const auto& b : builtin_names())
        if (b == name_or_path) {
            LoadedAlgebra out;
            out.source = b;
            out.rational = builtin_algebra<Q>(b);
            out.gaussian = builtin_algebra<QI>(b);
            out.document = algebra_to_json(*out.rational);
            return out;
        }
    if (!std::filesystem::exists(name_or_path))
        throw ParseError("\"" + name_or_path + "\" is neither a built-in algebra (C, C2, dual, M2, upper2, strict_upper2) nor a readable file");
    std::ifstream in(name_or_path);
    std::stringstream ss;
    ss << in.rdbuf();
    Json doc;
    try {
        doc = Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw ParseError(name_or_path + ": " + e.what());
    }
    return algebra_from_json(doc, name_or_path);
}

Laurent parse_symbol(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '{') {
        Json doc;
        try {
            doc = Json::parse(text);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("symbol: ") + e.what());
        }
        std::map<int, Q> c;
        for (const auto& [k, v] : doc.items()) {
            int deg;
            try {
                std::size_t used = 0;
                deg = std::stoi(k, &used);
                if (used != k.size()) throw std::invalid_argument(k);
            } catch (const std::exception&) {
                throw ParseError("symbol: key \"" + k + "\" is not an integer exponent");
            }
            QI s = scalar_field(v, "symbol[" + k + "]");
            if (s.im != 0) throw ParseError("symbol: coefficients must be rational");
            c[deg] = s.re;
        }
        return Laurent::from_coeffs(c);
    }
    try {
        return Laurent::parse(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Json symbol_to_json(const Laurent& f) {
    Json j = Json::object();
    for (const auto& [k, v] : f.coeffs()) j[std::to_string(k)] = v.str();
    return j;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
        if (lo > hi || lo < 1) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::exception&) {
        throw ParseError("bad range \"" + text + "\" (expected lo..hi with 1 <= lo <= hi)");
    }
}

Extension<Q> extension_from(const LoadedAlgebra& a) {
    if (!a.ideal) throw ParseError(a.source + ": no \"ideal\" field");
    try {
        return quotient(a.q(), *a.ideal, a.q().name() + "/I");
    } catch (const AlgebraError& e) {
        throw ParseError(a.source + ": " + e.what());
    }
}

}  // namespace nch
