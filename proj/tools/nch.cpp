// nch: command-line front end.
//   nch homology --algebra C --theory hc --max-degree 6
//   nch verify --suite operators --algebra dual --N 6
//   nch toeplitz --symbol "z" --N 1..12

#include "nch/run.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void common(CLI::App* sub, nch::RunConfig& cfg, bool algebra = true) {
    if (algebra) sub->add_option("-a,--algebra", cfg.algebra, "built-in name (C, C2, dual, M2, upper2, strict_upper2) or JSON file");
    sub->add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized samples");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hochschild, cyclic and index computations for finite-dimensional algebras"};
    app.require_subcommand(1);
    nch::RunConfig cfg;
    int N = -1, top = -1;
    std::string n_range;

    auto* describe = app.add_subcommand("describe", "print and validate an algebra");
    common(describe, cfg);

    auto* homology = app.add_subcommand("homology", "HH, HC, reduced HC, HP estimates");
    common(homology, cfg);
    homology->add_option("--theory", cfg.theory, "hh, hc, hc-connes, hc-reduced, hp")
        ->check(CLI::IsMember({"hh", "hc", "hc-connes", "hc-reduced", "hp"}));
    homology->add_option("--max-degree", top, "top degree of the window");
    homology->add_option("--N", N, "truncation (>= max degree + 2)");

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    common(verify, cfg);
    verify->add_option("--suite", cfg.suite, "operators, harmonic, sbi, excision, goodwillie, derivation, cuntz, lie, cochains, index")
        ->required()
        ->check(CLI::IsMember(nch::suite_names()));
    verify->add_option("--N", N, "truncation");
    verify->add_option("--max-degree,--window", top, "degree window");
    verify->add_option("--extension", cfg.extension, "excision: split, square_zero, trivial");
    verify->add_option("--derivation", cfg.derivation, "derivation: euler or inner:<k>");
    verify->add_option("--r", cfg.r, "lie: matrix size")->check(CLI::Range(1, 4));

    auto* chern = app.add_subcommand("chern", "Chern character chains of idempotents");
    common(chern, cfg);
    chern->add_option("--max-degree", top, "top chain degree");

    auto* index = app.add_subcommand("index", "even and odd index theorem instances");
    common(index, cfg, false);

    auto* toeplitz = app.add_subcommand("toeplitz", "Toeplitz index and commutator traces");
    common(toeplitz, cfg, false);
    toeplitz->add_option("--symbol", cfg.symbol, "\"z^-1 + 2 + 3z^2\" or {\"-1\": \"1\", \"0\": \"2\"}");
    toeplitz->add_option("--pair", cfg.pair, "second symbol g for tr(f[e,g])");
    toeplitz->add_option("--N", n_range, "truncation range lo..hi");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "toeplitz") {
        if (!n_range.empty()) cfg.n_range = n_range;
    } else {
        if (N >= 0) cfg.N = N;
        if (top >= 0) cfg.max_degree = top;
    }

    try {
        auto rep = nch::run(cfg);
        std::cout << nch::emit(rep, cfg.format);
        return nch::exit_status(rep);
    } catch (const nch::ResourceCapExceeded& e) {
        std::cerr << "resource cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const nch::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nch::AlgebraError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
