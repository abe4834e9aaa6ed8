#include <doctest.h>

#include "nch/kindex.hpp"

using namespace nch;

namespace {

void require_all(const Assertions& as) {
    for (const auto& a : as) CHECK_MESSAGE(a.pass, a.name << " " << a.detail);
}

// remainder of p modulo a monic q
Poly<Q> mod(Poly<Q> p, const Poly<Q>& q) {
    while (p.degree() >= q.degree()) {
        Q c = p.coeff(p.degree());
        p = p - Poly<Q>::monomial(p.degree() - q.degree(), c) * q;
    }
    return p;
}

}  // namespace

TEST_CASE("lifting polynomials: endpoints and f^2 - f divisible by (x^2 - x)^(n+1)") {
    Poly<Q> x = Poly<Q>::x();
    Poly<Q> xx = x * x - x;
    for (int n = 0; n <= 4; ++n) {
        auto f = lifting_polynomial(n);
        CHECK(f(Q(0)) == 0);
        CHECK(f(Q(1)) == 1);
        CHECK(f.degree() == 2 * n + 1);
        Poly<Q> m = 1;
        for (int i = 0; i <= n; ++i) m = m * xx;
        CHECK(mod(f * f - f, m).degree() < 0);
    }
    require_all(lifting_polynomial_checks(3));
}

TEST_CASE("even index: direct formula equals the pairing on every instance") {
    auto insts = even_instances();
    REQUIRE(insts.size() >= 3);
    bool nilpotent = false;
    for (const auto& inst : insts) {
        if (inst.m >= 1) nilpotent = true;
        auto r = even_index_check(inst, 1);
        require_all(r.assertions);
        for (const auto& v : r.values) {
            CHECK_MESSAGE(v.equal(), inst.name);
            CHECK_MESSAGE(v.direct == inst.expected, inst.name);
        }
    }
    CHECK(nilpotent);
}

TEST_CASE("odd index on finite data") {
    auto r = odd_finite_check();
    require_all(r.assertions);
    for (const auto& v : r.values) CHECK(v.equal());
}

TEST_CASE("Whitehead and Milnor constructions") { require_all(k_construction_checks()); }
