#include <doctest.h>

#include "nch/cuntz.hpp"

using namespace nch;

namespace {

void require_all(const Assertions& as) {
    for (const auto& a : as) CHECK_MESSAGE(a.pass, a.name << " " << a.detail);
}

// -2^(2i-1) ((i-1)!)^2 / (2i-1)!
Q closed_coefficient(int i) {
    Q f = 1, g = 1;
    for (int k = 2; k < i; ++k) f *= k;
    for (int k = 2; k <= 2 * i - 1; ++k) g *= k;
    Q p = 1;
    for (int k = 0; k < 2 * i - 1; ++k) p *= 2;
    return -p * f * f / g;
}

}  // namespace

TEST_CASE("Cuntz relations on QA" * doctest::description("seeded")) {
    for (const char* name : {"C2", "dual", "M2"}) require_all(cuntz_relation_checks(builtin_algebra<Q>(name), 4, 3));
}

TEST_CASE("L has the closed-form coefficients") {
    Dihedral dh(6);
    auto rows = dh.coordinates(dh.log_direct());
    CHECK(closed_coefficient(1) == -2);
    CHECK(closed_coefficient(2) == Q(-4, 3));
    CHECK(closed_coefficient(3) == Q(-16, 15));
    int seen = 0;
    for (const auto& r : rows) {
        if (r.coeff.degree() < 0) continue;
        REQUIRE(r.word.rfind("p(f)q(f)", 0) == 0);
        int i = (r.degree + 1) / 2;
        CHECK(r.degree == 2 * i - 1);
        CHECK(r.coeff.coeff(0) == closed_coefficient(i));
        ++seen;
    }
    CHECK(seen == 3);
    CHECK(dh.log_direct() == dh.log_closed());
}

TEST_CASE("dihedral suite") { require_all(dihedral_checks(6).assertions); }

TEST_CASE("W_t conjugates f to f^gamma at t = 1") {
    Dihedral dh(6);
    auto w = dh.w_exp();
    auto W = dh.w_at(w, Q(1));
    auto Wi = dh.w_at(w, Q(-1));
    CHECK(dh.mul(dh.mul(Wi, dh.f()), W) == dh.f_gamma());
}
