#include <doctest.h>

#include "common.hpp"

#include "nch/cochains.hpp"

using namespace nch;

namespace {

void require_all(const Assertions& as) {
    for (const auto& a : as) CHECK_MESSAGE(a.pass, a.name << " " << a.detail);
}

Q frac_factorial(int n) {
    Q num = 1, den = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    for (int i = 2; i <= 2 * n; ++i) den *= i;
    return num / den;
}

}  // namespace

TEST_CASE("Chern-Simons form on the unit: n!/(2n)!") {
    auto C = builtin_algebra<Q>("C");
    BasedLift lift(C, C, {C.unit()});
    CHECK(lift.chern_simons(1, {Q(1)}, {0, 0, 0}) == Q(1, 2));
    for (int n = 1; n <= 3; ++n)
        CHECK(lift.chern_simons(n, {Q(1)}, std::vector<int>(std::size_t(2 * n + 1), 0)) == frac_factorial(n));
}

TEST_CASE("transgression b cs = ch over random based maps" * doctest::description("seeded")) {
    auto M2 = builtin_algebra<Q>("M2");
    Vec tau{Q(2), Q(0), Q(0), Q(1)};
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        std::mt19937_64 rng(seed);
        auto src = builtin_algebra<Q>(seed == 2 ? "dual" : "C2");
        auto im = random_based_map(src, M2, rng);
        BasedLift lift(src, M2, im);
        require_all(transgression_checks(lift, tau, 2));
        CochainAlgebra ca(src, M2);
        require_all(curvature_checks(ca, im));
    }
}

TEST_CASE("cochain algebra is a DG algebra" * doctest::description("seeded")) {
    std::mt19937_64 rng(5);
    CochainAlgebra ca(builtin_algebra<Q>("dual"), builtin_algebra<Q>("M2"));
    require_all(cochain_algebra_checks(ca, rng));
}

TEST_CASE("cyclic cohomology dimensions match cyclic homology") {
    for (const char* name : {"C", "dual", "C2"}) {
        auto a = builtin_algebra<Q>(name);
        CHECK_MESSAGE(cyclic_cohomology_dims(a, 4) == oracle::hc_dims(testing::table_of(a), 4), name);
    }
}

TEST_CASE("supertrace characterizations and kappa-invariant functionals" * doctest::description("seeded")) {
    std::mt19937_64 rng(9);
    for (const char* name : {"C", "dual"}) {
        FormComplex<Q> f(builtin_algebra<Q>(name), 4);
        auto r = supertrace_check(f, rng);
        require_all(r.assertions);
        require_all(kappa_invariant_checks(f, rng));
    }
}

TEST_CASE("cyclic cocycle predicate") {
    auto a = builtin_algebra<Q>("M2");
    TensorComplex<Q> t(a, 2);
    // the trace is a cyclic 0-cocycle; a non-trace functional is not
    auto tr = functional_cochain({Q(2), Q(0), Q(0), Q(1)});
    CHECK(is_cyclic_cocycle(t, tr));
    auto bad = functional_cochain({Q(0), Q(1), Q(0), Q(0)});
    CHECK_FALSE(is_cyclic_cocycle(t, bad));
}
