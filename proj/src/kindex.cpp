#include "nch/kindex.hpp"

namespace nch {

Poly<Q> lifting_polynomial(int n) {
    using P = Poly<Q>;
    P t_minus_t2(std::vector<Q>{Q(0), Q(1), Q(-1)});
    return P(factorial(2 * n + 1) / (factorial(n) * factorial(n))) * t_minus_t2.pow(n).integral();
}

Assertions lifting_polynomial_checks(int nmax) {
    using P = Poly<Q>;
    Assertions out;
    const P x = P::x();
    const P one(1);
    const P x_minus_x2 = x - x * x;
    for (int n = 0; n <= nmax; ++n) {
        P f = lifting_polynomial(n);
        std::string tag = "f_" + std::to_string(n);
        out.push_back({tag + "(0) = 0, " + tag + "(1) = 1", f(Q(0)) == 0 && f(Q(1)) == 1, ""});
        out.push_back({tag + " has degree <= 2n+1", f.degree() <= 2 * n + 1, std::to_string(f.degree())});
        out.push_back({tag + " = x mod x(1-x)", divmod(f - x, x_minus_x2).second.zero(), ""});
        out.push_back({tag + "^2 - " + tag + " = 0 mod (x - x^2)^{n+1}", divmod(f * f - f, x_minus_x2.pow(n + 1)).second.zero(), ""});
        out.push_back({tag + " = 0 mod x^{n+1} and 1 mod (1-x)^{n+1}",
                       divmod(f, x.pow(n + 1)).second.zero() && divmod(f - one, (one - x).pow(n + 1)).second.zero(), ""});
        // nilpotent test ring C[t]/t^{n+2}: f_n(g)^2 - f_n(g) lies in (t^{n+1})
        Algebra<Q> r = truncated_polynomial<Q>(n + 2);
        bool nil = true;
        for (const auto& g : std::vector<Vec>{{Q(1), Q(1)}, {Q(0), Q(1)}, {Q(1), Q(3), Q(-1)}, {Q(0), Q(2), Q(5)}}) {
            Vec gv = r.zero();
            for (std::size_t i = 0; i < g.size() && i < gv.size(); ++i) gv[i] = g[i];
            Element<Q> ge{&r, gv};
            Element<Q> fg = eval_in(f, ge, Element<Q>::one(r), [](const Element<Q>& a, const Element<Q>& b) { return a * b; },
                                    [](const Element<Q>& a, const Q& c, const Element<Q>& b) { return a + c * b; });
            Element<Q> d = fg * fg - fg;
            for (int k = 0; k <= n; ++k)
                if (d.x[k] != 0) nil = false;
            if (fg.x[0] != gv[0]) nil = false;
        }
        out.push_back({tag + "(g)^2 - " + tag + "(g) in (t^{n+1}) in C[t]/t^{n+2}", nil, ""});
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

using M = MatrixOverAlgebra<Q>;

M block_of(const M& a, const M& b, const M& c, const M& d) { return M::block(a, b, c, d); }

M zero_like(const M& m) { return M(m.size(), Element<Q>::zero(*m(0, 0).alg)); }

M id_like(const M& m) {
    const auto& a = *m(0, 0).alg;
    return M::identity(m.size(), Element<Q>::zero(a), Element<Q>::one(a));
}

// membership in a subspace of R
class Subspace {
public:
    Subspace(int dim, const std::vector<Vec>& basis) : e_(dim) {
        for (const auto& v : basis) e_.insert(Algebra<Q>::to_sparse(v));
    }
    bool contains(const Vec& v) const { return e_.contains(Algebra<Q>::to_sparse(v)); }

private:
    Echelon<Q> e_;
};

M from_coords(const Algebra<Q>& a, const std::vector<std::vector<Vec>>& c) {
    M m(int(c.size()), Element<Q>::zero(a));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) m(int(i), int(j)) = Element<Q>{&a, c[i][j]};
    return m;
}

Q dot(const Vec& a, const Vec& b) {
    Q s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

LiftData<Element<Q>, Element<Q>> lift_data(const Algebra<Q>& r, const std::vector<Vec>& images, const Vec& tau) {
    LiftData<Element<Q>, Element<Q>> ld;
    const Algebra<Q>* rp = &r;
    ld.rho = [rp, images](const Element<Q>& a) {
        Vec out = rp->zero();
        for (std::size_t i = 0; i < a.x.size(); ++i)
            if (a.x[i] != 0)
                for (std::size_t k = 0; k < out.size(); ++k) out[k] += a.x[i] * images[i][k];
        return Element<Q>{rp, out};
    };
    ld.tau = [tau](const Element<Q>& x) { return dot(tau, x.x); };
    ld.zero = Element<Q>::zero(r);
    ld.one = Element<Q>::one(r);
    return ld;
}

// all index sequences of length k over [0, r)
template <class F>
void for_each_cycle(int r, int k, F f) {
    std::vector<int> idx(std::size_t(k), 0);
    while (true) {
        f(idx);
        int s = k - 1;
        while (s >= 0 && ++idx[s] == r) idx[s--] = 0;
        if (s < 0) return;
    }
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

WhiteheadResult whitehead_factor(const M& phi) {
    WhiteheadResult w;
    M inv = invert(phi);
    M z = zero_like(phi), id = id_like(phi);
    w.factors = {block_of(id, phi, z, id), block_of(id, z, z - inv, id), block_of(id, phi, z, id),
                 block_of(z, z - id, id, z)};
    w.product = w.factors[0] * w.factors[1] * w.factors[2] * w.factors[3];
    w.assertions.push_back({"product of the four factors = diag(phi, phi^-1)", w.product == block_of(phi, z, z, inv), ""});
    bool unip = true;
    for (int k = 0; k < 3; ++k) {
        const M& f = w.factors[std::size_t(k)];
        if (f.sub(0, 0, phi.size()) != id || f.sub(phi.size(), phi.size(), phi.size()) != id) unip = false;
    }
    w.assertions.push_back({"first three factors are unipotent block-triangular", unip, ""});
    return w;
}

Assertions commutator_embedding_check(const M& x, const M& y) {
    Assertions out;
    M xi = invert(x), yi = invert(y);
    M z = zero_like(x), id = id_like(x);
    M yx = y * x, yxi = invert(yx);
    M lhs = block_of(x * y * xi * yi, z, z, id);
    M rhs = block_of(x, z, z, xi) * block_of(y, z, z, yi) * block_of(yxi, z, z, yx);
    out.push_back({"diag([x, y], 1) = diag(x, x^-1) diag(y, y^-1) diag((yx)^-1, yx)", lhs == rhs, ""});
    bool all = true;
    for (const M* m : std::initializer_list<const M*>{&x, &y, &yxi})
        for (const auto& a : whitehead_factor(*m).assertions)
            if (!a.pass) all = false;
    out.push_back({"each diagonal factor has a Whitehead factorization", all, ""});
    return out;
}

// ---------------------------------------------------------------------------

SparseVec<Q> trace_power_chain(const TensorComplex<Q>& t, const std::vector<std::vector<Vec>>& e, int copies) {
    int r = int(e.size());
    std::vector<std::vector<Vec>> terms;
    for_each_cycle(r, copies, [&](const std::vector<int>& idx) {
        std::vector<Vec> term;
        for (int s = 0; s < copies; ++s) {
            const Vec& v = e[idx[s]][idx[(s + 1) % copies]];
            if (is_zero_vec(v)) return;
            term.push_back(v);
        }
        terms.push_back(std::move(term));
    });
    return tensor_chain(t, terms);
}

SparseVec<Q> trace_alternating_chain(const TensorComplex<Q>& t, const std::vector<std::vector<Vec>>& a,
                                     const std::vector<std::vector<Vec>>& b, int n) {
    int r = int(a.size());
    int k = 2 * n;
    std::vector<std::vector<Vec>> terms;
    for_each_cycle(r, k, [&](const std::vector<int>& idx) {
        std::vector<Vec> term;
        for (int s = 0; s < k; ++s) {
            const Vec& v = (s % 2 ? b : a)[idx[s]][idx[(s + 1) % k]];
            if (is_zero_vec(v)) return;
            term.push_back(v);
        }
        terms.push_back(std::move(term));
    });
    return tensor_chain(t, terms);
}

Assertions chern_character_checks(const Algebra<Q>& a, const std::vector<std::vector<Vec>>& e, int nmax) {
    Assertions out;
    TensorComplex<Q> t(a, 2 * nmax);
    for (int n = 0; n <= nmax; ++n) {
        auto c = trace_power_chain(t, e, 2 * n + 1);
        auto nc = apply(t.norm(2 * n), c);
        std::string k = std::to_string(2 * n + 1);
        out.push_back({a.name() + ": N(e)_" + k + " = " + k + " (e)_" + k, nc == scaled(c, Q(2 * n + 1)), ""});
        if (n >= 1) {
            auto bc = apply(t.norm(2 * n - 1), apply(t.b(2 * n), c));
            out.push_back({a.name() + ": tr(e)_" + k + " is a cycle in C^lambda", bc.empty(), ""});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<EvenInstance> even_instances() {
    std::vector<EvenInstance> out;
    auto section = [](const Extension<Q>& ext) {
        std::vector<Vec> im;
        for (int c : ext.complement) im.push_back(ext.R.basis_vec(c));
        return im;
    };
    // perturb the non-unit lifts by fixed vectors of I
    auto perturbed = [](const Extension<Q>& ext, std::vector<Vec> im, int seed) {
        for (std::size_t i = 1; i < im.size(); ++i)
            for (std::size_t j = 0; j < ext.ideal.size(); ++j) {
                Q c((int(i) * 3 + int(j) * 5 + seed) % 7 - 3);
                for (std::size_t k = 0; k < im[i].size(); ++k) im[i][k] += c * ext.ideal[j][k];
            }
        return im;
    };
    {
        // I = 0: ind = tau(e)
        Algebra<Q> m2 = builtin_algebra<Q>("M2");
        EvenInstance in;
        in.name = "R = A = M2, I = 0, tau = tr";
        in.ext = quotient(m2, {}, "M2");
        in.m = 0;
        in.tau = {Q(2), Q(0), Q(0), Q(1)};
        in.lifts = {section(in.ext)};
        // diag(1, e22) over M2, e22 = 1 - e11
        in.e = {{{Q(1), Q(0), Q(0), Q(0)}, {Q(0), Q(0), Q(0), Q(0)}}, {{Q(0), Q(0), Q(0), Q(0)}, {Q(1), Q(0), Q(0), Q(-1)}}};
        in.expected = Q(3);
        out.push_back(std::move(in));
    }
    {
        // R = M2(dual), I = M2(eps); tau = tr(X0) + 3 tr(X1)
        Algebra<Q> r = matrix_algebra(builtin_algebra<Q>("dual"), 2);
        std::vector<Vec> gens;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) gens.push_back(r.basis_vec((i * 2 + j) * 2 + 1));
        EvenInstance in;
        in.name = "R = M2(dual), I = M2(eps), tau = tr_0 + 3 tr_1";
        in.ext = quotient(r, gens, "M2");
        in.m = 1;
        in.tau = r.zero();
        in.tau[0] = Q(2);
        for (int i = 0; i < 2; ++i) {
            in.tau[std::size_t((i * 2 + i) * 2 + 1)] = Q(3);
            if (i > 0) in.tau[std::size_t((i * 2 + i) * 2)] = Q(1);
        }
        in.lifts = {section(in.ext), perturbed(in.ext, section(in.ext), 1)};
        in.e = {{{Q(1), Q(0), Q(0), Q(-1)}}};  // e11 = 1 - E22
        in.expected = Q(1);
        out.push_back(std::move(in));
    }
    {
        // nilpotent extension R = M2(C[t]/t^3), I = (t), m = 2; tau = tr_0 + 2 tr_1 + 5 tr_2
        Algebra<Q> r = matrix_algebra(truncated_polynomial<Q>(3), 2);
        std::vector<Vec> gens;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 1; k < 3; ++k) gens.push_back(r.basis_vec((i * 2 + j) * 3 + k));
        EvenInstance in;
        in.name = "R = M2(C[t]/t^3), I = (t), tau = tr_0 + 2 tr_1 + 5 tr_2";
        in.ext = quotient(r, gens, "M2");
        in.m = 2;
        in.tau = r.zero();
        in.tau[0] = Q(2);
        const Q c[3] = {Q(1), Q(2), Q(5)};
        for (int k = 1; k < 3; ++k) in.tau[std::size_t(k)] = c[k];
        for (int k = 0; k < 3; ++k) in.tau[std::size_t(9 + k)] = c[k];
        in.lifts = {section(in.ext), perturbed(in.ext, section(in.ext), 2)};
        in.e = {{{Q(1), Q(1), Q(0), Q(-1)}}};  // e11 + e12
        in.expected = Q(1);
        out.push_back(std::move(in));
    }
    {
        // R = upper2, I = strict upper, A = C + C; tau(diag(a, b) + c e12) = 2a + 7b
        Algebra<Q> r = builtin_algebra<Q>("upper2");
        EvenInstance in;
        in.name = "R = upper2, I = strict_upper2, tau = 2 e11* + 7 e22*";
        in.ext = quotient(r, {{Q(0), Q(1), Q(0)}}, "CxC");
        in.m = 1;
        in.tau = {Q(9), Q(0), Q(2)};
        auto s = section(in.ext);
        auto l2 = s;
        l2[1] = {Q(0), Q(5), Q(1)};  // e11 + 5 e12
        in.lifts = {s, l2};
        in.e = {{{Q(0), Q(1)}}};
        in.expected = Q(2);
        out.push_back(std::move(in));
    }
    return out;
}

EvenIndexReport even_index_check(const EvenInstance& inst, int extra_levels) {
    EvenIndexReport rep;
    const auto& R = inst.ext.R;
    const auto& A = inst.ext.A;
    const std::string& nm = inst.name;
    // trace condition on the spanning set [e_i, e_j] and I^{m+1}
    bool tr_ok = true;
    for (int i = 0; i < R.dim(); ++i)
        for (int j = 0; j < R.dim(); ++j) {
            Vec c = R.multiply(R.basis_vec(i), R.basis_vec(j));
            Vec d = R.multiply(R.basis_vec(j), R.basis_vec(i));
            if (dot(inst.tau, c) != dot(inst.tau, d)) tr_ok = false;
        }
    std::vector<Vec> im1 = inst.ext.ideal.empty() ? std::vector<Vec>{} : ideal_power(R, inst.ext.ideal, inst.m + 1);
    for (const auto& v : im1)
        if (dot(inst.tau, v) != 0) tr_ok = false;
    rep.assertions.push_back({nm + ": tau vanishes on [R, R] + I^{m+1}", tr_ok, ""});
    Subspace in_i(R.dim(), inst.ext.ideal), in_im1(R.dim(), im1);

    M e = from_coords(A, inst.e);
    rep.assertions.push_back({nm + ": e is idempotent over A", e.is_idempotent(), ""});

    for (std::size_t l = 0; l < inst.lifts.size(); ++l) {
        bool sec = true;
        for (int i = 0; i < A.dim(); ++i) {
            auto pv = apply(inst.ext.projection, Algebra<Q>::to_sparse(inst.lifts[l][i]));
            if (!(pv == SparseVec<Q>::unit(i))) sec = false;
        }
        if (A.unital() && inst.lifts[l][0] != R.unit()) sec = false;
        rep.assertions.push_back({nm + ": lift " + std::to_string(l) + " is a based section of R -> A", sec, ""});
    }

    std::vector<std::vector<Q>> direct(inst.lifts.size());
    for (std::size_t l = 0; l < inst.lifts.size(); ++l) {
        auto ld = lift_data(R, inst.lifts[l], inst.tau);
        BasedLift bl(A, R, inst.lifts[l]);
        for (int n = inst.m; n <= inst.m + extra_levels; ++n) {
            IndexValue v{nm + " [lift " + std::to_string(l) + "]", n, even_index_direct(ld, e, n),
                         even_index_paired(ld, e, n)};
            // pairing through the cochain on A and the chain tr(e)_{2n+1}
            TensorComplex<Q> t(A, 2 * n);
            auto chain = trace_power_chain(t, inst.e, 2 * n + 1);
            Q expanded(0);
            for (std::size_t k = 0; k < chain.nnz(); ++k)
                expanded += chain.val[k] * bl.chern_simons(n, inst.tau, t.space(2 * n).tuple(chain.idx[k]));
            expanded *= factorial(2 * n) / factorial(n);
            std::string tag = v.instance + ", n = " + std::to_string(n);
            rep.assertions.push_back({tag + ": direct formula = <cn, Ch>", v.equal(),
                                      v.direct.str() + " vs " + v.paired.str()});
            rep.assertions.push_back({tag + ": <cs(tau~, rho~), (e)> = <cs(tau, rho), tr(e)>", expanded == v.paired,
                                      expanded.str() + " vs " + v.paired.str()});
            rep.assertions.push_back({tag + ": index equals the independent value", v.direct == inst.expected,
                                      v.direct.str() + " vs " + inst.expected.str()});
            // the lifted idempotent
            auto id = M::identity(e.size(), ld.zero, ld.one);
            auto F = mpoly(lifting_polynomial(n), ld.lift(e), id);
            bool idem = entries_satisfy<Element<Q>>(F * F - F, [&](const Element<Q>& x) { return in_im1.contains(x.x); });
            bool red = entries_satisfy<Element<Q>>(F - ld.lift(e), [&](const Element<Q>& x) { return in_i.contains(x.x); });
            rep.assertions.push_back({tag + ": f_n(rho(e)) idempotent mod I^{m+1} and = rho(e) mod I", idem && red, ""});
            direct[l].push_back(v.direct);
            rep.values.push_back(v);
        }
    }
    bool stable = true, indep = true;
    for (std::size_t l = 0; l < direct.size(); ++l)
        for (std::size_t k = 1; k < direct[l].size(); ++k)
            if (direct[l][k] != direct[l][0]) stable = false;
    for (std::size_t l = 1; l < direct.size(); ++l)
        if (direct[l] != direct[0]) indep = false;
    rep.assertions.push_back({nm + ": index stable in n", stable, ""});
    rep.assertions.push_back({nm + ": index independent of the lift (" + std::to_string(direct.size()) + " lifts)", indep, ""});
    return rep;
}

// ---------------------------------------------------------------------------

OddInstanceReport odd_finite_check() {
    // R = M2(dual), I = M2(eps), tau(X) = tr(X1) on I; tau[R, I] = 0. A = M2.
    OddInstanceReport rep;
    Algebra<Q> r = matrix_algebra(builtin_algebra<Q>("dual"), 2);
    std::vector<Vec> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(r.basis_vec(i * 2 + 1));
    Extension<Q> ext = quotient(r, gens, "M2");
    const auto& A = ext.A;
    Vec tau = r.zero();
    tau[1] = Q(1);
    tau[7] = Q(1);
    bool tr_ok = true;
    for (int i = 0; i < r.dim(); ++i)
        for (const auto& g : gens)
            if (dot(tau, r.multiply(r.basis_vec(i), g)) != dot(tau, r.multiply(g, r.basis_vec(i)))) tr_ok = false;
    rep.assertions.push_back({"M2(dual): tau vanishes on [R, I]", tr_ok, ""});
    Subspace in_i(r.dim(), ext.ideal);
    auto in_pred = [&](const Element<Q>& x) { return in_i.contains(x.x); };

    std::vector<Vec> section;
    for (int c : ext.complement) section.push_back(r.basis_vec(c));
    auto ld = lift_data(r, section, tau);
    // u = 1 + 2 e12 over A = M2 (basis 1, E12, E21, E22), u^-1 = 1 - 2 e12
    Element<Q> u{&A, {Q(1), Q(2), Q(0), Q(0)}}, ui{&A, {Q(1), Q(-2), Q(0), Q(0)}};
    Element<Q> oneA = Element<Q>::one(A);
    M um1(1, u - oneA), uim1(1, ui - oneA);
    // lifts with eps-perturbations that do not commute
    Element<Q> p = ld.rho(u) + Element<Q>{&r, [&] { Vec v = r.zero(); v[3] = Q(1); v[5] = Q(2); return v; }()};
    Element<Q> q = ld.rho(ui) + Element<Q>{&r, [&] { Vec v = r.zero(); v[1] = Q(3); v[5] = Q(-1); return v; }()};
    RingMatrix<Element<Q>> P(1, p), Qm(1, q);
    std::function<Q(const Element<Q>&)> tf = ld.tau;
    for (int n = 1; n <= 3; ++n) {
        IndexValue v{"M2(dual) odd", n, odd_index_direct<Element<Q>>(P, Qm, n, tf, ld.zero, ld.one),
                     odd_index_paired(ld, um1, uim1, n)};
        rep.assertions.push_back({"M2(dual), n = " + std::to_string(n) + ": direct formula = <cn, Ch>", v.equal(),
                                  v.direct.str() + " vs " + v.paired.str()});
        rep.values.push_back(v);
        auto c = connecting_idempotent<Element<Q>>(P, Qm, n, ld.zero, ld.one, in_pred);
        append(rep.assertions, c.assertions);
        Q te = mtrace<Element<Q>>(c.en - e0_of(1, ld.zero, ld.one), tf);
        rep.assertions.push_back({"M2(dual), n = " + std::to_string(n) + ": tau(e_n - e_0) = direct formula at 2n",
                                  te == odd_index_direct<Element<Q>>(P, Qm, 2 * n, tf, ld.zero, ld.one), te.str()});
    }
    // commuting lifts over the dual numbers: e_n = e_0
    Algebra<Q> d = builtin_algebra<Q>("dual");
    Element<Q> pd{&d, {Q(2), Q(1)}};
    Element<Q> qd = invert(RingMatrix<Element<Q>>(1, pd))(0, 0);
    auto c = connecting_idempotent<Element<Q>>(RingMatrix<Element<Q>>(1, pd), RingMatrix<Element<Q>>(1, qd), 1,
                                              Element<Q>::zero(d), Element<Q>::one(d),
                                              [](const Element<Q>& x) { return x.x[0] == 0; });
    rep.assertions.push_back({"commuting lifts: e_1 = e_0", c.en == e0_of(1, Element<Q>::zero(d), Element<Q>::one(d)), ""});
    return rep;
}

Assertions k_construction_checks() {
    Assertions out;
    Algebra<Q> c = builtin_algebra<Q>("C");
    Algebra<Q> d = builtin_algebra<Q>("dual");
    Algebra<Q> m2 = builtin_algebra<Q>("M2");
    auto tag = [&](const std::string& t, Assertions as) {
        for (auto& a : as) a.name = t + ": " + a.name;
        append(out, as);
    };
    tag("phi = 2 over C", whitehead_factor(M(1, Element<Q>{&c, {Q(2)}})).assertions);
    tag("phi = 1 + eps over dual", whitehead_factor(M(1, Element<Q>{&d, {Q(1), Q(1)}})).assertions);
    M phi2(2, Element<Q>::zero(m2));
    phi2(0, 0) = Element<Q>{&m2, {Q(1), Q(1), Q(0), Q(0)}};
    phi2(0, 1) = Element<Q>{&m2, {Q(0), Q(0), Q(1), Q(0)}};
    phi2(1, 1) = Element<Q>::one(m2);
    tag("2x2 phi over M2", whitehead_factor(phi2).assertions);
    tag("x, y over M2", commutator_embedding_check(M(1, Element<Q>{&m2, {Q(1), Q(1), Q(0), Q(0)}}),
                                                   M(1, Element<Q>{&m2, {Q(1), Q(0), Q(1), Q(0)}})));
    // Milnor patch over the dual numbers: phi = 1, p = 1 + eps, q = 1 - eps
    {
        auto in_i = [](const Element<Q>& x) { return x.x[0] == 0; };
        auto in_i2 = [](const Element<Q>& x) { return x.is_zero(); };
        auto mp = milnor_patch<Element<Q>>(M(1, Element<Q>{&d, {Q(1), Q(1)}}), M(1, Element<Q>{&d, {Q(1), Q(-1)}}),
                                           Element<Q>::zero(d), Element<Q>::one(d), in_i, in_i2);
        tag("Milnor patch over dual, p = 1 + eps, q = 1 - eps", mp.assertions);
        auto mp0 = milnor_patch<Element<Q>>(M(1, Element<Q>{&c, {Q(3)}}), M(1, Element<Q>{&c, {Q(1, 3)}}),
                                            Element<Q>::zero(c), Element<Q>::one(c),
                                            [](const Element<Q>& x) { return x.is_zero(); },
                                            [](const Element<Q>& x) { return x.is_zero(); });
        bool triv = mp0.e == e0_of(1, Element<Q>::zero(c), Element<Q>::one(c));
        out.push_back({"Milnor patch with I = 0, q = p^-1: e = diag(1, 0)", triv, ""});
    }
    // Milnor patch over M2(C[t]/t^3) with a non-trivial q~ correction
    {
        Algebra<Q> r = matrix_algebra(truncated_polynomial<Q>(3), 2);
        std::vector<Vec> gens, gens2;
        for (int i = 0; i < 4; ++i) {
            gens.push_back(r.basis_vec(i * 3 + 1));
            gens.push_back(r.basis_vec(i * 3 + 2));
            gens2.push_back(r.basis_vec(i * 3 + 2));
        }
        Subspace s1(r.dim(), gens), s2(r.dim(), gens2);
        // phi = 1 + e12 (plain index 3), inverse 1 - e12; lifts perturbed by t e21 and t e11
        Vec pv = r.unit(), qv = r.unit();
        pv[3] = Q(1);
        pv[7] = Q(1);
        qv[3] = Q(-1);
        qv[1] = Q(2);
        Element<Q> p{&r, pv}, q{&r, qv};
        auto mp = milnor_patch<Element<Q>>(M(1, p), M(1, q), Element<Q>::zero(r), Element<Q>::one(r),
                                           [&](const Element<Q>& x) { return s1.contains(x.x); },
                                           [&](const Element<Q>& x) { return s2.contains(x.x); });
        tag("Milnor patch over M2(C[t]/t^3)", mp.assertions);
        Element<Q> x = Element<Q>::one(r) - q * p;
        out.push_back({"Milnor patch over M2(C[t]/t^3): qp - 1 is not in I^2 (correction needed)", !s2.contains(x.x), ""});
    }
    return out;
}

}  // namespace nch
