#pragma once
// Matrix K-theory over finite data: idempotent lifting, the Whitehead and
// Milnor constructions, the connecting idempotent e_n, Chern characters and
// the even/odd higher-trace index formulas.
//
// The matrix-level routines are templates over the ring element type E, which
// needs +, -, *, == and Q * E. They are used with Element<Q> (finite-dimensional
// algebras) and with the half-line operators of the Toeplitz model.

#include "nch/cochains.hpp"
#include "nch/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

namespace nch {

// f_n(x) = ((2n+1)!/(n!)^2) int_0^x (t - t^2)^n dt
Poly<Q> lifting_polynomial(int n);
Assertions lifting_polynomial_checks(int nmax);

// ---------------------------------------------------------------------------
// matrix helpers

template <class E>
RingMatrix<E> mscale(const Q& c, RingMatrix<E> m) {
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) m(i, j) = c * m(i, j);
    return m;
}

template <class E>
RingMatrix<E> mpow(const RingMatrix<E>& x, int k, const RingMatrix<E>& one) {
    RingMatrix<E> r = one;
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
}

template <class E>
RingMatrix<E> mpoly(const Poly<Q>& p, const RingMatrix<E>& x, const RingMatrix<E>& one) {
    RingMatrix<E> r = one - one;
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + mscale(c[i], one);
    return r;
}

template <class E>
Q mtrace(const RingMatrix<E>& m, const std::function<Q(const E&)>& tau) {
    Q s(0);
    for (int i = 0; i < m.size(); ++i) s += tau(m(i, i));
    return s;
}

template <class E>
bool entries_satisfy(const RingMatrix<E>& m, const std::function<bool(const E&)>& pred) {
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j)
            if (!pred(m(i, j))) return false;
    return true;
}

template <class E>
RingMatrix<E> e0_of(int r, const E& zero, const E& one) {
    RingMatrix<E> m(2 * r, zero);
    for (int i = 0; i < r; ++i) m(i, i) = one;
    return m;
}

// ---------------------------------------------------------------------------
// Whitehead factorization of diag(phi, phi^-1)

struct WhiteheadResult {
    std::vector<MatrixOverAlgebra<Q>> factors;  // four 2r x 2r factors
    MatrixOverAlgebra<Q> product;
    Assertions assertions;
};

WhiteheadResult whitehead_factor(const MatrixOverAlgebra<Q>& phi);
// diag([x, y], 1) = diag(x, x^-1) diag(y, y^-1) diag((yx)^-1, yx)
Assertions commutator_embedding_check(const MatrixOverAlgebra<Q>& x, const MatrixOverAlgebra<Q>& y);

// ---------------------------------------------------------------------------
// Milnor patching for lifts p, q of phi, phi^-1 modulo I

template <class E>
struct MilnorPatch {
    RingMatrix<E> omega, omega_inv, e, q_tilde;
    Assertions assertions;
};

template <class E>
MilnorPatch<E> milnor_patch(const RingMatrix<E>& p, const RingMatrix<E>& q, const E& zero, const E& one,
                            const std::function<bool(const E&)>& in_i, const std::function<bool(const E&)>& in_i2) {
    int r = p.size();
    auto id = RingMatrix<E>::identity(r, zero, one);
    auto z = RingMatrix<E>(r, zero);
    if (!entries_satisfy<E>(q * p - id, in_i) || !entries_satisfy<E>(p * q - id, in_i))
        throw std::invalid_argument("lifts are not inverse modulo I");
    auto up = [&](const RingMatrix<E>& a) { return RingMatrix<E>::block(id, a, z, id); };
    auto lo = [&](const RingMatrix<E>& a) { return RingMatrix<E>::block(id, z, a, id); };
    auto rot = RingMatrix<E>::block(z, z - id, id, z);
    auto rot_inv = RingMatrix<E>::block(z, id, z - id, z);
    MilnorPatch<E> m;
    m.omega = up(p) * lo(z - q) * up(p) * rot;
    m.omega_inv = rot_inv * up(z - p) * lo(q) * up(z - p);
    auto e0 = e0_of(r, zero, one);
    auto one2 = RingMatrix<E>::identity(2 * r, zero, one);
    m.e = m.omega * e0 * m.omega_inv;
    m.q_tilde = (id + (id - q * p)) * q;
    m.assertions.push_back({"omega omega^-1 = omega^-1 omega = 1", m.omega * m.omega_inv == one2 && m.omega_inv * m.omega == one2, ""});
    m.assertions.push_back({"e = omega e0 omega^-1 is idempotent", m.e.is_idempotent(), ""});
    m.assertions.push_back({"e = diag(1, 0) mod I", entries_satisfy<E>(m.e - e0, in_i), ""});
    m.assertions.push_back({"q~ p = 1 mod I^2", entries_satisfy<E>(m.q_tilde * p - id, in_i2), ""});
    m.assertions.push_back({"p q~ = 1 mod I^2", entries_satisfy<E>(p * m.q_tilde - id, in_i2), ""});
    return m;
}

// ---------------------------------------------------------------------------
// Connecting idempotent e_n for lifts p, q of u, u^-1

template <class E>
struct Connecting {
    RingMatrix<E> x, y, qn, en, T, T_inv;
    Assertions assertions;
};

template <class E>
Connecting<E> connecting_idempotent(const RingMatrix<E>& p, const RingMatrix<E>& q, int n, const E& zero, const E& one,
                                    const std::function<bool(const E&)>& in_i) {
    if (n < 1) throw std::invalid_argument("connecting idempotent needs n >= 1");
    int r = p.size();
    auto id = RingMatrix<E>::identity(r, zero, one);
    Connecting<E> c;
    c.x = id - q * p;
    c.y = id - p * q;
    if (!entries_satisfy<E>(c.x, in_i) || !entries_satisfy<E>(c.y, in_i))
        throw std::invalid_argument("lifts are not inverse modulo I");
    auto geom = id;
    for (int i = 1; i < 2 * n; ++i) geom = geom + mpow(c.x, i, id);
    c.qn = geom * q;
    auto xn = mpow(c.x, n, id), yn = mpow(c.y, n, id);
    auto x2n = xn * xn, y2n = yn * yn;
    c.en = RingMatrix<E>::block(id - y2n, p * xn, xn * c.qn, x2n);
    auto z = RingMatrix<E>(r, zero);
    c.T = RingMatrix<E>::block(p, z - yn, xn, c.qn);
    c.T_inv = RingMatrix<E>::block(c.qn, xn, z - yn, p);
    auto one2 = RingMatrix<E>::identity(2 * r, zero, one);
    auto e0 = e0_of(r, zero, one);
    std::string ns = " (n = " + std::to_string(n) + ")";
    bool xq = true;
    for (int i = 1; i <= 3; ++i)
        if (mpow(c.x, i, id) * q != q * mpow(c.y, i, id)) xq = false;
    c.assertions.push_back({"x^i q = q y^i for i <= 3" + ns, xq, ""});
    c.assertions.push_back({"q_n = q (1 + y + ... + y^{2n-1})" + ns, [&] {
                                auto g = id;
                                for (int i = 1; i < 2 * n; ++i) g = g + mpow(c.y, i, id);
                                return q * g == c.qn;
                            }(),
                            ""});
    c.assertions.push_back({"q_n p = 1 - x^{2n}" + ns, c.qn * p == id - x2n, ""});
    c.assertions.push_back({"p q_n = 1 - y^{2n}" + ns, p * c.qn == id - y2n, ""});
    c.assertions.push_back({"e_n^2 = e_n" + ns, c.en.is_idempotent(), ""});
    c.assertions.push_back({"T T^-1 = T^-1 T = 1" + ns, c.T * c.T_inv == one2 && c.T_inv * c.T == one2, ""});
    c.assertions.push_back({"T e_0 T^-1 = e_n" + ns, c.T * e0 * c.T_inv == c.en, ""});
    c.assertions.push_back({"e_n - e_0 has entries in I" + ns, entries_satisfy<E>(c.en - e0, in_i), ""});
    return c;
}

// ---------------------------------------------------------------------------
// Lift data and the index formulas on matrices

// A linear lift rho: A -> R with a trace-like functional tau on R.
template <class AE, class RE>
struct LiftData {
    std::function<RE(const AE&)> rho;
    std::function<Q(const RE&)> tau;
    RE zero, one;

    RingMatrix<RE> lift(const RingMatrix<AE>& m) const {
        RingMatrix<RE> out(m.size(), zero);
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j) out(i, j) = rho(m(i, j));
        return out;
    }
    Q trace(const RingMatrix<RE>& m) const { return mtrace<RE>(m, tau); }
};

// tau~(f_n(rho~(e)))
template <class AE, class RE>
Q even_index_direct(const LiftData<AE, RE>& ld, const RingMatrix<AE>& e, int n) {
    auto f = ld.lift(e);
    auto id = RingMatrix<RE>::identity(e.size(), ld.zero, ld.one);
    return ld.trace(mpoly(lifting_polynomial(n), f, id));
}

// cs_{2n+1}(tau~, rho~) on a tuple of 2n+1 matrices: the t-integral is expanded
// exactly and the cyclic norm sums the rotations (sign +1 in even degree).
template <class AE, class RE>
Q chern_simons_on(const LiftData<AE, RE>& ld, const std::vector<RingMatrix<AE>>& x, int n) {
    int r = x[0].size();
    auto zero = RingMatrix<RE>(r, ld.zero);
    Q total(0);
    std::vector<RingMatrix<AE>> y = x;
    for (int rot = 0; rot <= 2 * n; ++rot) {
        std::vector<RingMatrix<RE>> poly{ld.lift(y[0])};
        for (int j = 1; j <= n; ++j) {
            auto X = ld.lift(y[2 * j - 1] * y[2 * j]);
            auto Y = ld.lift(y[2 * j - 1]) * ld.lift(y[2 * j]);
            std::vector<RingMatrix<RE>> next(poly.size() + 2, zero);
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] = next[k + 1] + poly[k] * X;
                next[k + 2] = next[k + 2] - poly[k] * Y;
            }
            poly = std::move(next);
        }
        for (std::size_t k = 0; k < poly.size(); ++k) total += ld.trace(poly[k]) / Q(int(k) + 1);
        std::rotate(y.begin(), y.end() - 1, y.end());
    }
    return total / factorial(n);
}

// <cs_{2n+1}, (2n)!/n! (e)_{2n+1}>
template <class AE, class RE>
Q even_index_paired(const LiftData<AE, RE>& ld, const RingMatrix<AE>& e, int n) {
    std::vector<RingMatrix<AE>> x(std::size_t(2 * n + 1), e);
    return factorial(2 * n) / factorial(n) * chern_simons_on(ld, x, n);
}

// ch_{2n}(tau~, rho~) = tau~(omega^n / n!) N on a tuple of 2n matrices
// (rotation sign -1 in odd degree 2n-1).
template <class AE, class RE>
Q chern_on(const LiftData<AE, RE>& ld, const std::vector<RingMatrix<AE>>& x, int n) {
    Q total(0);
    std::vector<RingMatrix<AE>> y = x;
    auto omega = [&](const RingMatrix<AE>& a, const RingMatrix<AE>& b) {
        return ld.lift(a * b) - ld.lift(a) * ld.lift(b);
    };
    for (int rot = 0; rot < 2 * n; ++rot) {
        auto w = omega(y[0], y[1]);
        for (int j = 1; j < n; ++j) w = w * omega(y[2 * j], y[2 * j + 1]);
        Q v = ld.trace(w);
        total += rot % 2 ? -v : v;
        std::rotate(y.begin(), y.end() - 1, y.end());
    }
    return total / factorial(n);
}

// <ch_{2n}, (n-1)! tr(u^-1 - 1, u - 1)_{2n}>
template <class AE, class RE>
Q odd_index_paired(const LiftData<AE, RE>& ld, const RingMatrix<AE>& u_minus_1, const RingMatrix<AE>& uinv_minus_1,
                   int n) {
    std::vector<RingMatrix<AE>> x;
    for (int j = 0; j < n; ++j) {
        x.push_back(uinv_minus_1);
        x.push_back(u_minus_1);
    }
    return factorial(n - 1) * chern_on(ld, x, n);
}

// tau~((1 - qp)^n - (1 - pq)^n)
template <class RE>
Q odd_index_direct(const RingMatrix<RE>& p, const RingMatrix<RE>& q, int n, const std::function<Q(const RE&)>& tau,
                   const RE& zero, const RE& one) {
    auto id = RingMatrix<RE>::identity(p.size(), zero, one);
    return mtrace<RE>(mpow(id - q * p, n, id) - mpow(id - p * q, n, id), tau);
}

// ---------------------------------------------------------------------------
// Finite-dimensional higher traces

struct IndexValue {
    std::string instance;
    int n = 0;
    Q direct, paired;
    bool equal() const { return direct == paired; }
};

struct EvenInstance {
    std::string name;
    Extension<Q> ext;
    int m = 0;
    Vec tau;                                // functional on R vanishing on [R, R] + I^{m+1}
    std::vector<std::vector<Vec>> lifts;    // images of A's basis in R, two admissible lifts
    std::vector<std::vector<Vec>> e;        // r x r idempotent over A, coordinates
    Q expected;                             // independent value of ind
};

std::vector<EvenInstance> even_instances();

struct EvenIndexReport {
    std::vector<IndexValue> values;
    Assertions assertions;
};

// Checks trace conditions, lift admissibility, direct = paired (matrix level
// and through tr-expansion into A-tuples), lift independence, n-stability,
// and the lifted idempotent, for n = m .. m + extra_levels.
EvenIndexReport even_index_check(const EvenInstance& inst, int extra_levels = 1);

// Chern character chains for an idempotent over A: tr(e)_{2n+1} in A^(x)(2n+1).
SparseVec<Q> trace_power_chain(const TensorComplex<Q>& t, const std::vector<std::vector<Vec>>& e, int copies);
// tr(u^-1 - 1, u - 1)_{2n} in A^(x)2n
SparseVec<Q> trace_alternating_chain(const TensorComplex<Q>& t, const std::vector<std::vector<Vec>>& a,
                                     const std::vector<std::vector<Vec>>& b, int n);
// b(chain) = 0 in C^lambda and N(e)_{2n+1} = (2n+1)(e)_{2n+1}
Assertions chern_character_checks(const Algebra<Q>& a, const std::vector<std::vector<Vec>>& e, int nmax);

// Odd finite instance: R = dual numbers, I = (eps), commuting and
// non-commuting lifts of a unit over C.
struct OddInstanceReport {
    std::vector<IndexValue> values;
    Assertions assertions;
};
OddInstanceReport odd_finite_check();

// Small whitehead / milnor / connecting demonstrations over finite algebras.
Assertions k_construction_checks();

}  // namespace nch
