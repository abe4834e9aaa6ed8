#include "nch/run.hpp"

#include "nch/cochains.hpp"
#include "nch/cuntz.hpp"
#include "nch/excision.hpp"
#include "nch/homology.hpp"
#include "nch/kindex.hpp"
#include "nch/lie.hpp"
#include "nch/toeplitz.hpp"

#include <iomanip>
#include <random>
#include <sstream>

namespace nch {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"operators", "harmonic", "sbi",    "excision", "goodwillie",
                                                "derivation", "cuntz",   "lie",    "cochains", "index"};
    return names;
}

namespace {

template <class S>
Json sparse_json(const SparseVec<S>& v, const std::function<std::string(int)>& label) {
    Json out = Json::array();
    for (std::size_t k = 0; k < v.nnz(); ++k) out.push_back(Json::array({label(v.idx[k]), to_string(v.val[k])}));
    return out;
}

Json dims_json(const std::vector<int>& v) { return Json(v); }

template <class S>
Json homology_rows(const std::vector<HomologyResult<S>>& hs, const std::function<std::string(int, int)>& label) {
    Json rows = Json::array();
    for (const auto& h : hs) {
        Json reps = Json::array();
        for (const auto& r : h.basis.reps()) reps.push_back(sparse_json<S>(r, [&](int i) { return label(h.degree, i); }));
        rows.push_back({{"degree", h.degree}, {"dim", h.dim}, {"trusted", h.trusted}, {"representatives", reps}});
    }
    return rows;
}

template <class S>
void run_homology(const Algebra<S>& a, const RunConfig& cfg, int top, Report& rep) {
    const std::string& th = cfg.theory;
    Json res;
    res["algebra"] = a.name();
    res["theory"] = th;
    if (th == "hh") {
        auto hs = hochschild_homology(a, top);
        if (a.unital()) {
            FormComplex<S> f(a, top + 2);
            res["chains"] = "reduced forms a0 da1..dan";
            res["degrees"] = homology_rows<S>(hs, [&](int n, int i) { return f.label(n, i); });
        } else {
            TensorComplex<S> t(a, top + 2);
            res["chains"] = "a0 (x) .. (x) an";
            res["degrees"] = homology_rows<S>(hs, [&](int n, int i) { return t.label(n, i); });
        }
    } else if (th == "hc") {
        if (!a.unital()) throw ParseError("theory hc (mixed model) needs a unital algebra; use hc-connes");
        auto hs = cyclic_homology(a, top, CyclicModel::mixed);
        FormComplex<S> f(a, top + 2);
        MixedComplex<S> m(f);
        res["chains"] = "sum_p u^p w_{n-2p}";
        res["degrees"] = homology_rows<S>(hs, [&](int n, int i) { return m.label(n, i); });
    } else if (th == "hc-connes") {
        auto hs = cyclic_homology(a, top, CyclicModel::connes);
        TensorComplex<S> t(a, top + 1);
        ConnesComplex<S> c(t, top + 1);
        res["chains"] = "C^lambda orbit representatives";
        res["degrees"] = homology_rows<S>(hs, [&](int n, int i) { return c.label(n, i); });
    } else if (th == "hc-reduced") {
        auto r = reduced_cyclic(a, top);
        res["hc_k"] = dims_json(r.hc_k);
        res["hc"] = dims_json(r.hc_a);
        res["hc_reduced"] = dims_json(r.hc_reduced);
        append(rep.assertions, r.assertions);
    } else if (th == "hp") {
        Json per = Json::array();
        for (int parity = 0; parity < 2; ++parity) {
            auto e = periodic_approx(a, parity, top);
            per.push_back({{"parity", parity},
                           {"tower_degrees", e.tower_degrees},
                           {"tower_dims", e.tower_dims},
                           {"s_iso", e.s_iso},
                           {"stabilized", e.stabilized},
                           {"estimate", e.estimate}});
        }
        res["periodic"] = per;
    } else {
        throw ParseError("unknown theory \"" + th + "\" (hh, hc, hc-connes, hc-reduced, hp)");
    }
    rep.results.push_back(res);
}

SpMat<Q> derivation_matrix(const Algebra<Q>& a, const std::string& spec, std::string& used) {
    auto euler = [&] {
        std::vector<Trip<Q>> t;
        for (int i = a.unital() ? 1 : 0; i < a.dim(); ++i) t.emplace_back(i, i, Q(1));
        SpMat<Q> D(a.dim(), a.dim());
        D.setFromTriplets(t.begin(), t.end());
        return D;
    };
    auto inner = [&](int k) {
        if (k < 0 || k >= a.dim()) throw ParseError("inner derivation index out of range");
        return inner_derivation(a, a.basis_vec(k));
    };
    if (spec == "euler") {
        used = "euler";
        return euler();
    }
    if (spec.rfind("inner:", 0) == 0) {
        int k;
        try {
            k = std::stoi(spec.substr(6));
        } catch (const std::exception&) {
            throw ParseError("bad derivation \"" + spec + "\"");
        }
        used = spec;
        return inner(k);
    }
    if (!spec.empty()) throw ParseError("unknown derivation \"" + spec + "\" (euler, inner:<k>)");
    try {
        auto D = euler();
        require_derivation(a, D);
        used = "euler";
        return D;
    } catch (const NotADerivation&) {
        used = "inner:" + std::to_string(a.dim() - 1);
        return inner(a.dim() - 1);
    }
}

Json index_json(const std::vector<IndexValue>& vs) {
    Json out = Json::array();
    for (const auto& v : vs)
        out.push_back({{"instance", v.instance}, {"n", v.n}, {"direct", v.direct.str()}, {"paired", v.paired.str()},
                       {"equal", v.equal()}});
    return out;
}

void run_index(Report& rep, int levels) {
    Json even = Json::array(), odd = Json::array();
    for (const auto& inst : even_instances()) {
        auto r = even_index_check(inst, levels);
        for (auto& j : index_json(r.values)) even.push_back(j);
        append(rep.assertions, r.assertions);
    }
    auto of = odd_finite_check();
    for (auto& j : index_json(of.values)) odd.push_back(j);
    append(rep.assertions, of.assertions);
    for (int k : {1, 2, -1}) {
        auto ot = odd_toeplitz_check(k, 2);
        for (auto& j : index_json(ot.values)) odd.push_back(j);
        append(rep.assertions, ot.assertions);
    }
    rep.results.push_back({{"even", even}, {"odd", odd}});
}

void run_verify(const LoadedAlgebra& la, const RunConfig& cfg, int N, Report& rep) {
    const std::string& s = cfg.suite;
    std::mt19937_64 rng(cfg.seed);
    Json res;
    res["suite"] = s;
    if (s == "operators" || s == "harmonic") {
        auto go = [&](const auto& a) {
            using S = typename std::decay_t<decltype(a)>::Vec::value_type;
            auto u = a.unital() ? a : unitalize(a);
            FormComplex<S> f(u, N);
            if (s == "operators") {
                TensorComplex<S> t(a, N);
                append(rep.assertions, operator_identities(f, t));
                append(rep.assertions, xcomplex_identities(f));
                append(rep.assertions, fedosov_identities(f));
                if (!a.unital()) append(rep.assertions, tilde_block_identities(a, N));
            } else {
                append(rep.assertions, harmonic_identities(f));
            }
            res["algebra"] = u.name();
            Json dims = Json::array();
            for (int n = 0; n <= N; ++n) dims.push_back(f.dim(n));
            res["form_dims"] = dims;
        };
        if (la.is_rational()) go(*la.rational);
        else go(*la.gaussian);
    } else if (s == "sbi") {
        int w = cfg.max_degree.value_or(4);
        if (la.is_rational()) append(rep.assertions, sbi_check(*la.rational, w));
        else append(rep.assertions, sbi_check(*la.gaussian, w));
        res["window"] = w;
    } else if (s == "excision") {
        int w = cfg.max_degree.value_or(4);
        Extension<Q> ext;
        std::string name;
        if (!cfg.extension.empty()) {
            try {
                ext = builtin_extension(cfg.extension);
            } catch (const std::exception& e) {
                throw ParseError(e.what());
            }
            name = cfg.extension;
        } else if (la.ideal) {
            ext = extension_from(la);
            name = la.source;
        } else {
            ext = builtin_extension("split");
            name = "split";
            // the selected algebra still gets its own H-unitality verdict
            auto own = h_unitality(la.q(), std::min(N, 5));
            res["algebra_bar_homology"] = own.dims;
            res["algebra_h_unital"] = own.h_unital;
        }
        auto e = excision_check(ext, w, name);
        append(rep.assertions, e.assertions);
        auto h = h_unitality(ext.I, std::min(N, 5));
        append(rep.assertions, h.assertions);
        res["extension"] = name;
        res["window"] = w;
        res["hc_I"] = e.hc_i;
        res["hc_R"] = e.hc_r;
        res["hc_A"] = e.hc_a;
        res["rank_i"] = e.rank_i;
        res["rank_pi"] = e.rank_pi;
        res["bar_homology_I"] = h.dims;
        res["h_unital"] = h.h_unital;
    } else if (s == "goodwillie") {
        Json per = Json::array();
        for (int p = 1; p <= 3; ++p) {
            auto g = goodwillie_decomposition(la.q(), p, N);
            append(rep.assertions, g.assertions);
            Json conv = Json::array();
            for (std::size_t i = 0; i < g.conventions_tried.size(); ++i)
                conv.push_back({{"convention", g.conventions_tried[i]}, {"pass", bool(g.conventions_pass[i])}});
            per.push_back({{"p", p}, {"weight_dims", g.weight_dims}, {"source_dims", g.source_dims},
                           {"convention", g.convention}, {"conventions", conv}});
        }
        res["weights"] = per;
    } else if (s == "derivation") {
        const auto& a = la.q();
        std::string used;
        auto D = derivation_matrix(a, cfg.derivation, used);
        try {
            require_derivation(a, D);
        } catch (const NotADerivation& e) {
            throw ParseError(e.what());
        }
        auto r = derivation_check(a, D, cfg.max_degree.value_or(4), used.rfind("inner", 0) == 0, a.name());
        append(rep.assertions, r.assertions);
        res["derivation"] = used;
    } else if (s == "cuntz") {
        append(rep.assertions, cuntz_relation_checks(la.q().unital() ? la.q() : unitalize(la.q()), std::min(N, 4), cfg.seed));
        auto d = dihedral_checks(N);
        append(rep.assertions, d.assertions);
        auto rows = [](const std::vector<SeriesRow>& rs) {
            Json out = Json::array();
            for (const auto& r : rs) {
                Json c = Json::array();
                for (int j = 0; j <= std::max(0, r.coeff.degree()); ++j) c.push_back(r.coeff.coeff(j).str());
                out.push_back({{"degree", r.degree}, {"word", r.word}, {"coeff_in_t", c}});
            }
            return out;
        };
        res["L"] = rows(d.L);
        res["W"] = rows(d.W);
    } else if (s == "lie") {
        const auto& a = la.q();
        int top = cfg.max_degree.value_or(a.dim() == 1 ? 3 : 2);
        auto ce = ce_homology(a, cfg.r, top);
        append(rep.assertions, ce.assertions);
        res["gl"] = ce.name;
        res["ce_homology"] = ce.full_dims;
        res["coinvariant_homology"] = ce.coinv_dims;
        Json ids = Json::array();
        for (int n = 1; n <= std::min(cfg.r, 2); ++n) {
            auto ci = coinvariant_identity(a, cfg.r, n);
            std::string tag = ci.name + ", n=" + std::to_string(n) + ": ";
            rep.assertions.push_back({tag + "dim (g^(x)n)_g = n! (dim A)^n",
                                      ci.tensor_holds(),
                                      std::to_string(ci.tensor_coinv) + " vs " + std::to_string(ci.tensor_perm)});
            rep.assertions.push_back({tag + "dim (Lambda^n g)_g = dim (k[S_n] (x) A^(x)n)_{S_n} (sign-twisted)",
                                      ci.wedge_holds(),
                                      std::to_string(ci.wedge_coinv) + " vs " + std::to_string(ci.wedge_perm)});
            ids.push_back({{"n", n}, {"tensor", ci.tensor_coinv}, {"tensor_expected", ci.tensor_perm},
                           {"wedge", ci.wedge_coinv}, {"wedge_expected", ci.wedge_perm}});
        }
        res["coinvariant_identities"] = ids;
        auto cc = cyclic_class_homology(a, top);
        append(rep.assertions, cc.assertions);
        res["cyclic_class"] = {{"r", cc.r}, {"span_dims", cc.class_dims}, {"lambda_dims", cc.lambda_dims},
                               {"homology", cc.homology}, {"hc", cc.hc}};
        if (a.unital()) {
            GlAlgebra g(a, cfg.r);
            for (const auto& sigma : std::vector<std::vector<int>>{{1, 0}, {0, 1}})
                rep.assertions.push_back({"tr_sigma invariant on " + ce.name + ", sigma = " +
                                              (sigma[0] == 1 ? std::string("(12)") : std::string("id")),
                                          tr_sigma_invariant(g, sigma, cfg.seed), ""});
        }
    } else if (s == "cochains") {
        const auto& a = la.q();
        FormComplex<Q> f(a.unital() ? a : unitalize(a), std::min(N, 5));
        auto st = supertrace_check(f, rng);
        append(rep.assertions, st.assertions);
        append(rep.assertions, kappa_invariant_checks(f, rng));
        auto M2 = builtin_algebra<Q>("M2");
        if (a.unital()) {
            auto im = random_based_map(a, M2, rng);
            CochainAlgebra ca(a, M2);
            append(rep.assertions, curvature_checks(ca, im));
            append(rep.assertions, cochain_algebra_checks(ca, rng));
            BasedLift lift(a, M2, im);
            Vec tau{Q(2), Q(0), Q(0), Q(1)};
            int nmax = a.dim() <= 2 ? 2 : 1;
            append(rep.assertions, transgression_checks(lift, tau, nmax));
            res["target"] = "M2";
            res["transgression_levels"] = nmax;
        }
        res["supertrace_dims"] = {st.dim_fedosov, st.dim_karoubi, st.dim_rescaled};
        res["cyclic_cohomology"] = cyclic_cohomology_dims(a, std::min(N, 4));
    } else if (s == "index") {
        run_index(rep, 1);
        append(rep.assertions, lifting_polynomial_checks(3));
        append(rep.assertions, k_construction_checks());
        return;
    } else {
        std::string all;
        for (const auto& n : suite_names()) all += (all.empty() ? "" : ", ") + n;
        throw ParseError("unknown suite \"" + s + "\" (" + all + ")");
    }
    rep.results.push_back(res);
}

void run_chern(const Algebra<Q>& a, int top, Report& rep) {
    // idempotents: 1, and every basis element that is idempotent
    std::vector<std::pair<std::string, std::vector<std::vector<Vec>>>> es;
    if (a.unital()) es.push_back({"1", {{a.unit()}}});
    for (int i = a.unital() ? 1 : 0; i < a.dim(); ++i) {
        auto e = a.basis_vec(i);
        if (a.multiply(e, e) == e) es.push_back({a.labels()[std::size_t(i)], {{e}}});
    }
    int nmax = std::max(0, (top - 1) / 2);
    TensorComplex<Q> t(a, 2 * nmax + 1);
    for (const auto& [name, e] : es) {
        Json levels = Json::array();
        for (int n = 0; n <= nmax; ++n) {
            auto c = trace_power_chain(t, e, 2 * n + 1);
            levels.push_back({{"degree", 2 * n}, {"chain", sparse_json<Q>(c, [&](int i) { return t.label(2 * n, i); })}});
        }
        append(rep.assertions, chern_character_checks(a, e, nmax));
        rep.results.push_back({{"idempotent", name}, {"levels", levels}});
    }
}

void run_toeplitz(const RunConfig& cfg, Report& rep) {
    Laurent f = parse_symbol(cfg.symbol);
    auto [lo, hi] = parse_range(cfg.n_range);
    auto r = toeplitz_index(f, lo, hi);
    Json per = Json::array();
    for (const auto& [n, v] : r.per_n) per.push_back({{"N", n}, {"index", v.str()}});
    Json res{{"symbol", f.str()},
             {"coefficients", symbol_to_json(f)},
             {"winding", r.winding.value},
             {"winding_exact", r.winding.exact},
             {"winding_method", r.winding.method},
             {"sign_convention", "index = " + std::string(index_sign_convention < 0 ? "-" : "") + "winding"},
             {"parametrix", r.parametrix},
             {"per_N", per},
             {"stabilized", r.stabilized},
             {"index", r.index.str()},
             {"phi_parametrix", r.phi_inverse.str()}};
    append(rep.assertions, r.assertions);
    if (!cfg.pair.empty()) {
        Laurent g = parse_symbol(cfg.pair);
        Json tr = Json::array();
        for (int n = lo; n <= hi; ++n) tr.push_back({{"N", n}, {"trace", commutator_trace_truncated(f, g, n).str()}});
        Q four = commutator_trace_fourier(f, g);
        int th = commutator_threshold(f, g);
        bool stable = true;
        for (int n = std::max(lo, th); n <= hi; ++n)
            if (commutator_trace_truncated(f, g, n) != four) stable = false;
        rep.assertions.push_back({"tr(f[e,g]) = sum_k k f_-k g_k for N >= " + std::to_string(th), stable, ""});
        res["pair"] = {{"g", g.str()}, {"fourier", four.str()}, {"threshold", th}, {"per_N", tr},
                       {"phi", cocycle_phi(f, g).str()}};
    }
    rep.results.push_back(res);
}

}  // namespace

Report run(const RunConfig& cfg) {
    Report rep;
    rep.command = cfg.command;
    const std::string& c = cfg.command;
    if (cfg.format != "table" && cfg.format != "json") throw ParseError("format must be table or json");

    int default_top = c == "homology" ? 6 : 4;
    int top = cfg.max_degree.value_or(default_top);
    if (top < 0) throw ParseError("max degree must be >= 0");
    int N = cfg.N.value_or(c == "verify" ? 6 : top + 2);
    if (N < 0) throw ParseError("N must be >= 0");
    bool windowed = c == "homology" || c == "chern" ||
                    (c == "verify" && (cfg.suite == "sbi" || cfg.suite == "excision" || cfg.suite == "derivation"));
    if (windowed && cfg.N && cfg.max_degree && N < top + 2)
        throw ParseError("N = " + std::to_string(N) + " is below the trusted-degree rule N >= max degree + 2 = " +
                         std::to_string(top + 2));

    rep.config["command"] = c;
    if (c != "toeplitz" && c != "index") rep.config["algebra"] = cfg.algebra;
    if (c == "homology") rep.config["theory"] = cfg.theory;
    if (c == "verify") rep.config["suite"] = cfg.suite;
    if (c != "toeplitz" && c != "index") {
        rep.config["N"] = N;
        rep.config["max_degree"] = top;
    }
    rep.config["seed"] = cfg.seed;
    rep.config["max_dim_cap"] = max_dim_cap();
    if (c == "toeplitz") {
        rep.config["symbol"] = cfg.symbol;
        rep.config["N_range"] = cfg.n_range;
        if (!cfg.pair.empty()) rep.config["pair"] = cfg.pair;
    }

    if (c == "toeplitz") {
        run_toeplitz(cfg, rep);
        return rep;
    }
    if (c == "index") {
        run_index(rep, 1);
        return rep;
    }

    auto la = load_algebra(cfg.algebra);
    auto check_valid = [&](const auto& a) {
        auto v = validate(a);
        if (!v.ok()) throw ParseError(la.source + ": not an associative algebra with the declared unit (see describe)");
    };
    if (c == "describe") {
        auto go = [&](const auto& a) {
            auto v = validate(a);
            Json res = algebra_to_json(a);
            res["scalars"] = la.is_rational() ? "rational" : "gaussian";
            if (la.ideal) res["ideal"] = la.document["ideal"];
            rep.assertions.push_back({a.name() + ": associative on all basis triples", v.associativity_defects.empty(),
                                      v.associativity_defects.empty() ? "" : "first defect at basis triple (" +
                                          std::to_string(std::get<0>(v.associativity_defects[0])) + "," +
                                          std::to_string(std::get<1>(v.associativity_defects[0])) + "," +
                                          std::to_string(std::get<2>(v.associativity_defects[0])) + ")"});
            if (a.unital())
                rep.assertions.push_back({a.name() + ": basis element 0 is a two-sided unit", v.unit_defects.empty(),
                                          v.unit_defects.empty() ? "" : "fails on basis element " + std::to_string(v.unit_defects[0])});
            rep.results.push_back(res);
        };
        if (la.is_rational()) go(*la.rational);
        else go(*la.gaussian);
        return rep;
    }
    if (la.is_rational()) check_valid(*la.rational);
    else check_valid(*la.gaussian);

    if (c == "homology") {
        if (la.is_rational()) run_homology(*la.rational, cfg, top, rep);
        else run_homology(*la.gaussian, cfg, top, rep);
    } else if (c == "verify") {
        run_verify(la, cfg, N, rep);
    } else if (c == "chern") {
        run_chern(la.q(), top, rep);
    } else {
        throw ParseError("unknown command \"" + c + "\"");
    }
    return rep;
}

Json report_json(const Report& r) {
    Json j;
    j["command"] = r.command;
    j["config"] = r.config;
    j["results"] = r.results;
    Json as = Json::array();
    for (const auto& a : r.assertions) as.push_back({{"name", a.name}, {"pass", a.pass}, {"detail", a.detail}});
    j["assertions"] = as;
    return j;
}

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// non-empty array of objects with identical keys and primitive values
bool is_record_array(const Json& v) {
    if (!v.is_array() || v.empty() || !v.front().is_object()) return false;
    std::vector<std::string> keys;
    for (const auto& [k, x] : v.front().items()) keys.push_back(k);
    for (const auto& row : v) {
        if (!row.is_object() || row.size() != keys.size()) return false;
        for (const auto& k : keys)
            if (!row.contains(k) || !row[k].is_primitive()) return false;
    }
    return true;
}

void table_value(std::ostringstream& os, const std::string& key, const Json& v, int indent) {
    std::string pad(std::size_t(indent), ' ');
    bool flat_array = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
    if (v.is_primitive()) {
        os << pad << key << ": " << scalar_text(v) << "\n";
    } else if (flat_array) {
        os << pad << key << ":";
        for (const auto& x : v) os << " " << scalar_text(x);
        os << "\n";
    } else if (is_record_array(v)) {
        os << pad << key << ":\n";
        std::vector<std::string> keys;
        for (const auto& [k, x] : v.front().items()) keys.push_back(k);
        std::vector<std::size_t> w;
        for (const auto& k : keys) {
            std::size_t m = k.size();
            for (const auto& row : v) m = std::max(m, scalar_text(row[k]).size());
            w.push_back(m);
        }
        os << pad << " ";
        for (std::size_t i = 0; i < keys.size(); ++i) os << " " << std::setw(int(w[i])) << keys[i];
        os << "\n";
        for (const auto& row : v) {
            os << pad << " ";
            for (std::size_t i = 0; i < keys.size(); ++i) os << " " << std::setw(int(w[i])) << scalar_text(row[keys[i]]);
            os << "\n";
        }
    } else if (v.is_object()) {
        os << pad << key << ":\n";
        for (const auto& [k, x] : v.items()) table_value(os, k, x, indent + 2);
    } else {
        os << pad << key << ":\n";
        int i = 0;
        for (const auto& x : v) table_value(os, "[" + std::to_string(i++) + "]", x, indent + 2);
    }
}

void degree_table(std::ostringstream& os, const Json& rows) {
    os << "  degree  dim  trusted\n";
    for (const auto& r : rows)
        os << "  " << std::setw(6) << r["degree"].get<int>() << "  " << std::setw(3) << r["dim"].get<int>() << "  "
           << (r["trusted"].get<bool>() ? "yes" : "no") << "\n";
}

}  // namespace

std::string emit(const Report& r, const std::string& format) {
    if (format == "json") return report_json(r).dump(2) + "\n";
    std::ostringstream os;
    os << r.command;
    for (const auto& [k, v] : r.config.items())
        if (k != "command") os << "  " << k << "=" << scalar_text(v);
    os << "\n";
    for (const auto& res : r.results) {
        for (const auto& [k, v] : res.items()) {
            if (k == "degrees") {
                degree_table(os, v);
            } else {
                table_value(os, k, v, 0);
            }
        }
    }
    int failed = 0;
    for (const auto& a : r.assertions) {
        os << (a.pass ? "PASS  " : "FAIL  ") << a.name;
        if (!a.detail.empty()) os << "  [" << a.detail << "]";
        os << "\n";
        if (!a.pass) ++failed;
    }
    if (!r.assertions.empty())
        os << r.assertions.size() - std::size_t(failed) << "/" << r.assertions.size() << " assertions passed\n";
    os << "seed: " << r.config.value("seed", std::uint64_t(0)) << "\n";
    return os.str();
}

int exit_status(const Report& r) { return all_pass(r.assertions) ? 0 : 1; }

}  // namespace nch
