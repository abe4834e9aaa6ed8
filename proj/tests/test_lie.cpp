#include <doctest.h>

#include "nch/lie.hpp"

using namespace nch;

namespace {

void require_all(const Assertions& as) {
    for (const auto& a : as) CHECK_MESSAGE(a.pass, a.name << " " << a.detail);
}

}  // namespace

TEST_CASE("exterior power bookkeeping") {
    ExteriorPower e(5, 3);
    CHECK(e.size() == 10);
    std::vector<int> s{3, 1, 2};
    CHECK(ExteriorPower::normalize(s) == 1);
    CHECK(s == std::vector<int>{1, 2, 3});
    std::vector<int> t{2, 1};
    CHECK(ExteriorPower::normalize(t) == -1);
    std::vector<int> u{1, 4, 1};
    CHECK(ExteriorPower::normalize(u) == 0);
}

TEST_CASE("gl_r(A) is a Lie algebra") {
    for (const char* name : {"C", "dual", "C2"}) CHECK(GlAlgebra(builtin_algebra<Q>(name), 2).is_lie());
}

TEST_CASE("homology of gl_1(C) and gl_2(C)") {
    // H(gl_r) is exterior on generators of degrees 1, 3, .., 2r - 1
    auto g1 = ce_homology(builtin_algebra<Q>("C"), 1, 1);
    CHECK(g1.full_dims == std::vector<int>{1, 1});
    auto g2 = ce_homology(builtin_algebra<Q>("C"), 2, 4);
    CHECK(g2.full_dims == std::vector<int>{1, 1, 0, 1, 1});
    require_all(g2.assertions);
}

TEST_CASE("coinvariant identities in the stable range") {
    struct Case {
        const char* a;
        int r, n;
    };
    for (auto c : {Case{"C", 1, 1}, Case{"C", 2, 2}, Case{"C2", 2, 2}, Case{"dual", 2, 2}, Case{"C", 3, 2}}) {
        auto ci = coinvariant_identity(builtin_algebra<Q>(c.a), c.r, c.n);
        CHECK_MESSAGE(ci.tensor_holds(), c.a << " " << c.r << " " << c.n);
        CHECK_MESSAGE(ci.wedge_holds(), c.a << " " << c.r << " " << c.n);
    }
    CHECK(coinvariant_identity(builtin_algebra<Q>("C"), 2, 2).tensor_coinv == 2);
}

TEST_CASE("below the stable range the tensor identity fails") {
    auto ci = coinvariant_identity(builtin_algebra<Q>("C"), 2, 3);
    CHECK(ci.tensor_coinv == 5);
    CHECK(ci.tensor_perm == 6);
}

TEST_CASE("tr_sigma: invariance, span, independence for r >= n") {
    GlAlgebra g(builtin_algebra<Q>("C"), 3);
    for (const auto& s : std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 0}, {1, 0, 2}}) CHECK(tr_sigma_invariant(g, s, 1));
    auto big = trace_span(3, 3);
    CHECK(big.span());
    CHECK(big.independent());
    auto small = trace_span(2, 3);
    CHECK(small.span());
    CHECK_FALSE(small.independent());
}

TEST_CASE("cyclic-class subcomplex carries HC") {
    auto r = cyclic_class_homology(builtin_algebra<Q>("C"), 3);
    require_all(r.assertions);
    CHECK(r.homology == std::vector<int>{1, 0, 1});
    auto d = cyclic_class_homology(builtin_algebra<Q>("dual"), 2);
    require_all(d.assertions);
}
