#include <doctest.h>

#include "nch/excision.hpp"

using namespace nch;

namespace {

void require_all(const Assertions& as) {
    for (const auto& a : as) CHECK_MESSAGE(a.pass, a.name << " " << a.detail);
}

}  // namespace

TEST_CASE("H-unitality verdicts") {
    CHECK(h_unitality(builtin_algebra<Q>("M2"), 5).h_unital);
    CHECK(h_unitality(builtin_algebra<Q>("C"), 5).h_unital);
    auto su = h_unitality(builtin_algebra<Q>("strict_upper2"), 5);
    CHECK_FALSE(su.h_unital);
    // I^2 = 0 forces b' = 0, so every bar group is the whole space
    for (int d : su.dims) CHECK(d == 1);
}

TEST_CASE("split extension: all three predicates") {
    auto r = excision_check(builtin_extension("split"), 4, "split");
    require_all(r.assertions);
    CHECK(r.hc_i == std::vector<int>{1, 0, 1, 0, 1});
    CHECK(r.hc_r == std::vector<int>{2, 0, 2, 0, 2});
}

TEST_CASE("square-zero extension breaks the connecting identity") {
    auto r = excision_check(builtin_extension("square_zero"), 4, "square_zero");
    CHECK_FALSE(r.all_pass());
}

TEST_CASE("Goodwillie weight decomposition for A = C, M = C") {
    auto C = builtin_algebra<Q>("C");
    for (int p = 1; p <= 3; ++p) {
        auto g = goodwillie_decomposition(C, p, 6);
        require_all(g.assertions);
        CHECK(g.weight_dims == g.source_dims);
    }
}

TEST_CASE("Goodwillie with a non-identity bimodule") {
    auto C2 = builtin_algebra<Q>("C2");
    require_all(goodwillie_decomposition(C2, 2, 5).assertions);
}

TEST_CASE("Lie derivative kills S on HC") {
    auto dual = builtin_algebra<Q>("dual");
    SpMat<Q> D(2, 2);
    D.insert(1, 1) = Q(1);
    require_all(derivation_check(dual, D, 4, false, "dual").assertions);
    auto M2 = builtin_algebra<Q>("M2");
    require_all(derivation_check(M2, inner_derivation(M2, M2.basis_vec(1)), 3, true, "M2").assertions);
}

TEST_CASE("a non-derivation is rejected") {
    auto dual = builtin_algebra<Q>("dual");
    SpMat<Q> D(2, 2);
    D.insert(0, 0) = Q(1);
    CHECK_THROWS_AS(require_derivation(dual, D), NotADerivation);
}
