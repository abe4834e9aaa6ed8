#include <doctest.h>

#include "common.hpp"

#include "nch/homology.hpp"

using namespace nch;

namespace {

template <class S>
std::vector<int> dims(const std::vector<HomologyResult<S>>& hs) {
    std::vector<int> out;
    for (const auto& h : hs) out.push_back(h.dim);
    return out;
}

int top_for(const Algebra<Q>& a) { return a.dim() >= 4 ? 3 : 4; }

}  // namespace

TEST_CASE("HC of the ground field alternates 1, 0") {
    auto hc = dims(cyclic_homology(builtin_algebra<Q>("C"), 6, CyclicModel::mixed));
    CHECK(hc == std::vector<int>{1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("HH agrees with the dense reference") {
    for (const auto& name : testing::five()) {
        auto a = builtin_algebra<Q>(name);
        int top = top_for(a);
        CHECK_MESSAGE(dims(hochschild_homology(a, top)) == oracle::hh_dims(testing::table_of(a), top), name);
    }
}

TEST_CASE("HC in both models agrees with the dense reference") {
    for (const auto& name : testing::five()) {
        auto a = builtin_algebra<Q>(name);
        int top = top_for(a);
        auto ref = oracle::hc_dims(testing::table_of(a), top);
        CHECK_MESSAGE(dims(cyclic_homology(a, top, CyclicModel::mixed)) == ref, name);
        CHECK_MESSAGE(dims(cyclic_homology(a, top, CyclicModel::connes)) == ref, name);
    }
}

TEST_CASE("nonunital algebra: Connes model against the reference") {
    auto a = builtin_algebra<Q>("strict_upper2");
    CHECK(dims(cyclic_homology(a, 4, CyclicModel::connes)) == oracle::hc_dims(testing::table_of(a), 4));
}

TEST_CASE("Morita invariance for M2") {
    auto m2 = dims(cyclic_homology(builtin_algebra<Q>("M2"), 4, CyclicModel::connes));
    auto c = dims(cyclic_homology(builtin_algebra<Q>("C"), 4, CyclicModel::connes));
    CHECK(m2 == c);
}

TEST_CASE("dual numbers: HH and HC values") {
    auto a = builtin_algebra<Q>("dual");
    // HH_0 = A, HH_n = k for n >= 1; HC_even = 2, HC_odd = 0
    CHECK(dims(hochschild_homology(a, 4)) == std::vector<int>{2, 1, 1, 1, 1});
    CHECK(dims(cyclic_homology(a, 4, CyclicModel::mixed)) == std::vector<int>{2, 0, 2, 0, 2});
}

TEST_CASE("SBI sequence is exact on the window") {
    for (const char* name : {"dual", "C2", "upper2"}) {
        for (const auto& as : sbi_check(builtin_algebra<Q>(name), 4)) CHECK_MESSAGE(as.pass, as.name << " " << as.detail);
    }
}

TEST_CASE("reduced cyclic homology of the dual numbers") {
    auto r = reduced_cyclic(builtin_algebra<Q>("dual"), 4);
    CHECK(r.hc_k == std::vector<int>{1, 0, 1, 0, 1});
    CHECK(r.hc_reduced == std::vector<int>{1, 0, 1, 0, 1});
    for (const auto& as : r.assertions) CHECK_MESSAGE(as.pass, as.name);
}

TEST_CASE("Gaussian scalars give the same dimensions as the rational split algebra") {
    using E = Algebra<QI>::Entry;
    // x^2 = 2i x: x / 2i is an idempotent, so the algebra is C + C
    Algebra<QI> a("g", 2, true, {"1", "x"}, {E{0, 0, 0, QI(1)}, E{0, 1, 1, QI(1)}, E{1, 0, 1, QI(1)}, E{1, 1, 1, QI(Q(0), Q(2))}});
    auto c2 = dims(cyclic_homology(builtin_algebra<Q>("C2"), 4, CyclicModel::mixed));
    CHECK(dims(cyclic_homology(a, 4, CyclicModel::mixed)) == c2);
}
