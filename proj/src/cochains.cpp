#include "nch/cochains.hpp"

#include "nch/homology.hpp"

#include <algorithm>

namespace nch {

namespace {

Vec transpose_apply(const SpMat<Q>& m, const Vec& f) {
    Vec g(std::size_t(m.cols()), Q(0));
    for (int c = 0; c < m.outerSize(); ++c)
        for (SpMat<Q>::InnerIterator it(m, c); it; ++it) g[c] += it.value() * f[it.row()];
    return g;
}

Q random_q(std::mt19937_64& rng, int range) {
    std::uniform_int_distribution<int> u(-range, range);
    return Q(u(rng));
}

Vec random_vec(int n, std::mt19937_64& rng, int range) {
    Vec v(std::size_t(n), Q(0));
    for (auto& x : v) x = random_q(rng, range);
    return v;
}

Vec add_vec(Vec a, const Vec& b, const Q& c = Q(1)) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
    return a;
}

Q dot(const Vec& a, const Vec& b) {
    Q s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

Cochain zero_cochain(const TensorComplex<Q>& t, int k) { return {k, Vec(std::size_t(t.dim(k)), Q(0))}; }

Cochain random_cochain(const TensorComplex<Q>& t, int k, std::mt19937_64& rng, int range) {
    return {k, random_vec(t.dim(k), rng, range)};
}

Cochain cochain_b(const TensorComplex<Q>& t, const Cochain& f) {
    return {f.degree + 1, transpose_apply(t.b(f.degree + 1), f.values)};
}

Cochain cochain_lambda(const TensorComplex<Q>& t, const Cochain& f) {
    return {f.degree, transpose_apply(t.lambda(f.degree), f.values)};
}

Cochain cochain_norm(const TensorComplex<Q>& t, const Cochain& f) {
    return {f.degree, transpose_apply(t.norm(f.degree), f.values)};
}

bool is_cyclic_cocycle(const TensorComplex<Q>& t, const Cochain& f) {
    if (cochain_lambda(t, f).values != f.values) return false;
    for (const auto& v : cochain_b(t, f).values)
        if (v != 0) return false;
    return true;
}

Q pair(const Cochain& f, const SparseVec<Q>& chain) {
    Q s(0);
    for (std::size_t k = 0; k < chain.nnz(); ++k) s += f.values.at(std::size_t(chain.idx[k])) * chain.val[k];
    return s;
}

Cochain functional_cochain(const Vec& tau) { return {0, tau}; }

SparseVec<Q> tensor_chain(const TensorComplex<Q>& t, const std::vector<std::vector<Vec>>& terms) {
    std::vector<std::pair<int, Q>> out;
    for (const auto& term : terms) {
        int k = int(term.size()) - 1;
        std::vector<SparseVec<Q>> f;
        for (const auto& x : term) f.push_back(Algebra<Q>::to_sparse(x));
        expand_tensor(t.space(k), f, Q(1), out);
    }
    return make_sparse(std::move(out));
}

std::vector<int> cyclic_cohomology_dims(const Algebra<Q>& a, int nmax) {
    TensorComplex<Q> t(a, nmax + 1);
    ConnesComplex<Q> c(t, nmax + 1);
    const auto& cx = c.complex();
    std::vector<int> dims;
    for (int n = 0; n <= nmax; ++n) {
        // coboundary C^n -> C^{n+1} is the transpose of d_{n+1}
        int out_rank = rank<Q>(SpMat<Q>(cx.diff(n + 1).transpose()));
        int in_rank = n >= 1 ? rank<Q>(SpMat<Q>(cx.diff(n).transpose())) : 0;
        dims.push_back(cx.dims[n] - out_rank - in_rank);
    }
    return dims;
}

// ---------------------------------------------------------------------------

CochainAlgebra::CochainAlgebra(Algebra<Q> a, Algebra<Q> r) : a_(std::move(a)), r_(std::move(r)) {}

const TupleSpace& CochainAlgebra::space(int arity) const {
    while (int(sp_.size()) <= arity) sp_.emplace_back(std::vector<int>(sp_.size(), 0), a_.dim());
    return sp_[std::size_t(arity)];
}

RCochain CochainAlgebra::zero(int arity) const {
    return {arity, std::vector<Vec>(std::size_t(space(arity).size()), r_.zero())};
}

RCochain CochainAlgebra::unit() const { return {0, {r_.unit()}}; }

RCochain CochainAlgebra::from_map(const std::vector<Vec>& images) const {
    if (int(images.size()) != a_.dim()) throw std::invalid_argument("one image per basis vector required");
    return {1, images};
}

RCochain CochainAlgebra::random(int arity, std::mt19937_64& rng, int range) const {
    RCochain f = zero(arity);
    for (auto& v : f.values) v = random_vec(r_.dim(), rng, range);
    return f;
}

RCochain CochainAlgebra::add(const RCochain& x, const RCochain& y, const Q& c) const {
    if (x.arity != y.arity) throw std::invalid_argument("cochain arity mismatch");
    RCochain r = x;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = add_vec(r.values[i], y.values[i], c);
    return r;
}

RCochain CochainAlgebra::scale(const RCochain& x, const Q& c) const {
    RCochain r = x;
    for (auto& v : r.values)
        for (auto& e : v) e *= c;
    return r;
}

RCochain CochainAlgebra::multiply(const RCochain& x, const RCochain& y) const {
    RCochain r = zero(x.arity + y.arity);
    int ny = space(y.arity).size();
    for (std::size_t i = 0; i < x.values.size(); ++i)
        for (std::size_t j = 0; j < y.values.size(); ++j)
            r.values[i * std::size_t(ny) + j] = r_.multiply(x.values[i], y.values[j]);
    return r;
}

Vec CochainAlgebra::eval_sparse(const RCochain& f, const std::vector<SparseVec<Q>>& args) const {
    std::vector<std::pair<int, Q>> terms;
    expand_tensor(space(f.arity), args, Q(1), terms);
    Vec out = r_.zero();
    for (auto& [idx, c] : terms) out = add_vec(out, f.values[idx], c);
    return out;
}

RCochain CochainAlgebra::delta(const RCochain& f) const {
    int k = f.arity;
    RCochain r = zero(k + 1);
    if (k == 0) return r;
    const auto& sp = space(k + 1);
    for (int c = 0; c < sp.size(); ++c) {
        auto t = sp.tuple(c);
        Vec acc = r_.zero();
        for (int i = 1; i <= k; ++i) {
            std::vector<SparseVec<Q>> args;
            for (int s = 0; s < k; ++s) {
                int src = s < i - 1 ? s : s + 1;
                args.push_back(s == i - 1 ? a_.mul(t[i - 1], t[i]) : SparseVec<Q>::unit(t[src]));
            }
            acc = add_vec(acc, eval_sparse(f, args), Q((k - i) % 2 ? -1 : 1));
        }
        r.values[c] = acc;
    }
    return r;
}

RCochain CochainAlgebra::commutator(const RCochain& x, const RCochain& y) const {
    Q s = (x.arity * y.arity) % 2 ? Q(1) : Q(-1);
    return add(multiply(x, y), multiply(y, x), s);
}

bool CochainAlgebra::equal(const RCochain& x, const RCochain& y) const {
    return x.arity == y.arity && x.values == y.values;
}

Cochain CochainAlgebra::trace_norm(const RCochain& x, const Vec& tau, const TensorComplex<Q>& t) const {
    Cochain g{x.arity - 1, Vec()};
    for (const auto& v : x.values) g.values.push_back(dot(tau, v));
    return cochain_norm(t, g);
}

// ---------------------------------------------------------------------------

BasedLift::BasedLift(const Algebra<Q>& a, const Algebra<Q>& r, std::vector<Vec> images)
    : a_(&a), r_(&r), rho_(std::move(images)) {
    if (int(rho_.size()) != a.dim()) throw std::invalid_argument("one image per basis vector required");
    if (a.unital() && r.unital() && rho_[0] != r.unit()) throw std::invalid_argument("lift is not based: rho(1) != 1");
    int d = a.dim();
    omega_.resize(std::size_t(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec ab = rho(a.to_dense(a.mul(i, j)));
            omega_[std::size_t(i) * d + j] = add_vec(ab, r.multiply(rho_[i], rho_[j]), Q(-1));
        }
}

Vec BasedLift::rho(const Vec& x) const {
    Vec out = r_->zero();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) out = add_vec(out, rho_[i], x[i]);
    return out;
}

Vec BasedLift::omega(int i, int j) const { return omega_[std::size_t(i) * a_->dim() + j]; }

bool BasedLift::is_homomorphism() const {
    for (const auto& w : omega_)
        for (const auto& x : w)
            if (x != 0) return false;
    return true;
}

Q BasedLift::cs_term(int n, const Vec& tau, const std::vector<int>& x) const {
    // polynomial in t with R coefficients
    std::vector<Vec> poly{rho_[x[0]]};
    for (int j = 1; j <= n; ++j) {
        int p = x[2 * j - 1], q = x[2 * j];
        Vec X = rho(a_->to_dense(a_->mul(p, q)));
        Vec Y = r_->multiply(rho_[p], rho_[q]);
        std::vector<Vec> next(poly.size() + 2, r_->zero());
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] = add_vec(next[k + 1], r_->multiply(poly[k], X));
            next[k + 2] = add_vec(next[k + 2], r_->multiply(poly[k], Y), Q(-1));
        }
        poly = std::move(next);
    }
    Q s(0);
    for (std::size_t k = 0; k < poly.size(); ++k) s += dot(tau, poly[k]) / Q(int(k) + 1);
    return s / Q(factorial(n));
}

Q BasedLift::ch_term(int n, const Vec& tau, const std::vector<int>& x) const {
    Vec acc = omega(x[0], x[1]);
    for (int j = 1; j <= n; ++j) acc = r_->multiply(acc, omega(x[2 * j], x[2 * j + 1]));
    return dot(tau, acc) / Q(factorial(n + 1));
}

Q BasedLift::chern_simons(int n, const Vec& tau, const std::vector<int>& tuple) const {
    // f N (x) = sum_i f(lambda^i x); lambda on 2n+1 factors has sign +1
    Q s(0);
    auto y = tuple;
    for (int i = 0; i <= 2 * n; ++i) {
        s += cs_term(n, tau, y);
        std::rotate(y.begin(), y.end() - 1, y.end());
    }
    return s;
}

Q BasedLift::chern(int n, const Vec& tau, const std::vector<int>& tuple) const {
    Q s(0);
    auto y = tuple;
    for (int i = 0; i <= 2 * n + 1; ++i) {
        Q v = ch_term(n, tau, y);
        s += i % 2 ? -v : v;
        std::rotate(y.begin(), y.end() - 1, y.end());
    }
    return s;
}

Cochain BasedLift::chern_simons_cochain(int n, const Vec& tau, const TensorComplex<Q>& t) const {
    Cochain c{2 * n, Vec()};
    for (int i = 0; i < t.dim(2 * n); ++i) c.values.push_back(chern_simons(n, tau, t.space(2 * n).tuple(i)));
    return c;
}

Cochain BasedLift::chern_cochain(int n, const Vec& tau, const TensorComplex<Q>& t) const {
    Cochain c{2 * n + 1, Vec()};
    for (int i = 0; i < t.dim(2 * n + 1); ++i) c.values.push_back(chern(n, tau, t.space(2 * n + 1).tuple(i)));
    return c;
}

std::vector<Vec> random_based_map(const Algebra<Q>& a, const Algebra<Q>& r, std::mt19937_64& rng, int range) {
    std::vector<Vec> im;
    for (int i = 0; i < a.dim(); ++i) im.push_back(random_vec(r.dim(), rng, range));
    if (a.unital()) im[0] = r.unit();
    return im;
}

Assertions curvature_checks(const CochainAlgebra& ca, const std::vector<Vec>& images) {
    Assertions out;
    const std::string tag = ca.source().name() + "->" + ca.target().name();
    RCochain rho = ca.from_map(images);
    RCochain drho = ca.delta(rho);
    RCochain omega = ca.add(drho, ca.multiply(rho, rho), Q(-1));
    // (b'rho)(a1, a2) = rho(a1 a2)
    bool ok = true;
    const auto& a = ca.source();
    for (int i = 0; i < a.dim() && ok; ++i)
        for (int j = 0; j < a.dim() && ok; ++j) {
            Vec v = ca.target().zero();
            auto p = a.mul(i, j);
            for (std::size_t k = 0; k < p.nnz(); ++k) v = add_vec(v, images[p.idx[k]], p.val[k]);
            if (drho.values[std::size_t(i) * a.dim() + j] != v) ok = false;
        }
    out.push_back({tag + ": (b'rho)(a1, a2) = rho(a1 a2)", ok, ""});
    if (a.unital()) {
        bool un = true;
        for (int j = 0; j < a.dim(); ++j)
            for (const auto& x : {omega.values[std::size_t(j)], omega.values[std::size_t(j) * a.dim()]})
                for (const auto& c : x)
                    if (c != 0) un = false;
        out.push_back({tag + ": omega vanishes when an argument is 1", un, ""});
    }
    RCochain lhs = ca.delta(omega);
    RCochain rhs = ca.scale(ca.commutator(rho, omega), Q(-1));
    std::string det;
    bool bi = ca.equal(lhs, rhs);
    if (!bi)
        for (std::size_t i = 0; i < lhs.values.size(); ++i)
            if (lhs.values[i] != rhs.values[i]) {
                det = "first failure at " + tuple_label(a, ca.space(3).tuple(int(i)));
                break;
            }
    out.push_back({tag + ": Bianchi b'omega = -[rho, omega]", bi, det});
    return out;
}

Assertions cochain_algebra_checks(const CochainAlgebra& ca, std::mt19937_64& rng, int samples) {
    Assertions out;
    std::uniform_int_distribution<int> ar(0, 2);
    bool sq = true, leib = true, assoc = true;
    for (int s = 0; s < samples; ++s) {
        int p = ar(rng), q = ar(rng), r = ar(rng);
        auto f = ca.random(p, rng), g = ca.random(q, rng), h = ca.random(r, rng);
        if (!ca.equal(ca.delta(ca.delta(f)), ca.zero(p + 2))) sq = false;
        RCochain lhs = ca.delta(ca.multiply(f, g));
        RCochain rhs = ca.add(ca.scale(ca.multiply(ca.delta(f), g), q % 2 ? Q(-1) : Q(1)), ca.multiply(f, ca.delta(g)));
        if (!ca.equal(lhs, rhs)) leib = false;
        if (!ca.equal(ca.multiply(ca.multiply(f, g), h), ca.multiply(f, ca.multiply(g, h)))) assoc = false;
    }
    const std::string tag = ca.source().name() + "->" + ca.target().name();
    out.push_back({tag + ": b'^2 = 0 on random cochains", sq, ""});
    out.push_back({tag + ": b'(fg) = (-1)^|g| (b'f) g + f b'g", leib, ""});
    out.push_back({tag + ": cochain product associative", assoc, ""});
    return out;
}

Assertions transgression_checks(const BasedLift& lift, const Vec& tau, int nmax) {
    Assertions out;
    const auto& a = lift.source();
    TensorComplex<Q> t(a, 2 * nmax + 2);
    const std::string tag = a.name() + "->" + lift.target().name();
    for (int n = 0; n <= nmax; ++n) {
        Cochain cs = lift.chern_simons_cochain(n, tau, t);
        Cochain ch = lift.chern_cochain(n, tau, t);
        Cochain bcs = cochain_b(t, cs);
        bool ok = bcs.values == ch.values;
        std::string det;
        if (!ok)
            for (std::size_t i = 0; i < ch.values.size(); ++i)
                if (bcs.values[i] != ch.values[i]) {
                    det = "first failure at " + t.label(2 * n + 1, int(i)) + ": " + bcs.values[i].str() + " vs " +
                          ch.values[i].str();
                    break;
                }
        std::string ns = std::to_string(n);
        out.push_back({tag + ": b cs_" + std::to_string(2 * n + 1) + " = ch_" + std::to_string(2 * n + 2), ok, det});
        out.push_back({tag + ": cs_" + std::to_string(2 * n + 1) + " is lambda-invariant",
                       cochain_lambda(t, cs).values == cs.values, ""});
        out.push_back({tag + ": ch_" + std::to_string(2 * n + 2) + " is a cyclic cocycle", is_cyclic_cocycle(t, ch), ""});
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct Layout {
    std::vector<int> off;
    int total = 0;
    explicit Layout(const FormComplex<Q>& f) {
        for (int n = 0; n <= f.top(); ++n) {
            off.push_back(total);
            total += f.dim(n);
        }
    }
};

// Row "sum_r coef * tau_deg[r] * m[r, c]" for each column c of m.
void add_rows(std::vector<std::vector<std::pair<int, Q>>>& rows, const SpMat<Q>& m, int off, const Q& coef,
              std::size_t first_row) {
    for (int c = 0; c < m.outerSize(); ++c)
        for (SpMat<Q>::InnerIterator it(m, c); it; ++it)
            rows[first_row + std::size_t(c)].emplace_back(off + int(it.row()), coef * it.value());
}

std::vector<SparseVec<Q>> solution_space(const std::vector<std::vector<std::pair<int, Q>>>& rows, int nvars) {
    std::vector<Trip<Q>> t;
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto& [c, v] : rows[r]) t.emplace_back(int(r), c, v);
    SpMat<Q> m(int(rows.size()), nvars);
    m.setFromTriplets(t.begin(), t.end());
    return kernel<Q>(m);
}

std::vector<SparseVec<Q>> truncate_to(const std::vector<SparseVec<Q>>& vs, int limit) {
    std::vector<SparseVec<Q>> out;
    for (const auto& v : vs) {
        SparseVec<Q> w;
        for (std::size_t k = 0; k < v.nnz(); ++k)
            if (v.idx[k] < limit) w.push(v.idx[k], v.val[k]);
        out.push_back(w);
    }
    return out;
}

bool same_span(const std::vector<SparseVec<Q>>& a, const std::vector<SparseVec<Q>>& b, int dim) {
    int ra = rank_of(a, dim), rb = rank_of(b, dim);
    auto ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    return ra == rb && rank_of(ab, dim) == ra;
}

FormFunctional unpack(const FormComplex<Q>& f, const Layout& l, const SparseVec<Q>& v) {
    FormFunctional tau;
    for (int n = 0; n <= f.top(); ++n) tau.emplace_back(std::size_t(f.dim(n)), Q(0));
    for (std::size_t k = 0; k < v.nnz(); ++k) {
        int n = int(std::upper_bound(l.off.begin(), l.off.end(), v.idx[k]) - l.off.begin()) - 1;
        tau[n][v.idx[k] - l.off[n]] = v.val[k];
    }
    return tau;
}

// Fedosov supercommutator of two basis forms, truncated.
GradedChain<Q> supercommutator(const FormComplex<Q>& f, int p, int i, int q, int j) {
    auto x = f.basis_chain(p, i), y = f.basis_chain(q, j);
    auto xy = f.fedosov(x, y, Overflow::drop);
    auto yx = f.fedosov(y, x, Overflow::drop);
    return (p * q) % 2 ? xy + yx : xy - yx;
}

}  // namespace

bool vanishes_on_supercommutators(const FormComplex<Q>& f, const FormFunctional& tau, std::string* where) {
    int N = f.top();
    for (int p = 0; p <= N; ++p)
        for (int q = 0; p + q + 2 <= N; ++q)
            for (int i = 0; i < f.dim(p); ++i)
                for (int j = 0; j < f.dim(q); ++j) {
                    auto c = supercommutator(f, p, i, q, j);
                    Q s(0);
                    for (int n = 0; n <= N; ++n)
                        for (std::size_t k = 0; k < c.part[n].nnz(); ++k) s += tau[n][c.part[n].idx[k]] * c.part[n].val[k];
                    if (s != 0) {
                        if (where) *where = f.label(p, i) + " , " + f.label(q, j);
                        return false;
                    }
                }
    return true;
}

SupertraceReport supertrace_check(const FormComplex<Q>& f, std::mt19937_64& rng) {
    int N = f.top();
    Layout l(f);
    SupertraceReport rep;
    const std::string an = f.algebra().name();
    // (i)
    std::vector<std::vector<std::pair<int, Q>>> r1;
    for (int p = 0; p <= N; ++p)
        for (int q = 0; p + q + 2 <= N; ++q)
            for (int i = 0; i < f.dim(p); ++i)
                for (int j = 0; j < f.dim(q); ++j) {
                    auto c = supercommutator(f, p, i, q, j);
                    std::vector<std::pair<int, Q>> row;
                    for (int n = 0; n <= N; ++n)
                        for (std::size_t k = 0; k < c.part[n].nnz(); ++k)
                            row.emplace_back(l.off[n] + c.part[n].idx[k], c.part[n].val[k]);
                    r1.push_back(std::move(row));
                }
    // kappa invariance, shared by (ii) and (iii)
    std::vector<std::vector<std::pair<int, Q>>> kinv;
    for (int n = 0; n <= N; ++n) {
        std::size_t first = kinv.size();
        kinv.resize(first + std::size_t(f.dim(n)));
        add_rows(kinv, SpMat<Q>(f.kappa(n) - f.one(n)), l.off[n], Q(1), first);
    }
    auto r2 = kinv, r3 = kinv;
    for (int n = 1; n + 1 <= N; ++n) {
        std::size_t first = r2.size();
        r2.resize(first + std::size_t(f.dim(n)));
        add_rows(r2, f.b(n), l.off[n - 1], Q(1), first);
        add_rows(r2, f.d(n), l.off[n + 1], Q(-2), first);
        first = r3.size();
        r3.resize(first + std::size_t(f.dim(n)));
        add_rows(r3, f.b(n), l.off[n - 1], FormComplex<Q>::rescaling_z(n - 1), first);
        add_rows(r3, f.B(n), l.off[n + 1], FormComplex<Q>::rescaling_z(n + 1), first);
    }
    auto v1 = solution_space(r1, l.total), v2 = solution_space(r2, l.total), v3 = solution_space(r3, l.total);
    rep.dim_fedosov = int(v1.size());
    rep.dim_karoubi = int(v2.size());
    rep.dim_rescaled = int(v3.size());
    // compare on degrees not touched by the truncation boundary
    int lim = N >= 2 ? l.off[N - 1] : 0;
    auto t1 = truncate_to(v1, lim), t2 = truncate_to(v2, lim), t3 = truncate_to(v3, lim);
    std::string upto = " (components of degree <= " + std::to_string(N - 2) + ")";
    rep.assertions.push_back({an + ": (i) <=> (ii)" + upto, same_span(t1, t2, l.total), ""});
    rep.assertions.push_back({an + ": (ii) <=> (iii)" + upto, same_span(t2, t3, l.total), ""});
    for (int n = 1; n + 1 <= N; ++n) {
        Q ratio = FormComplex<Q>::rescaling_z(n + 1) / FormComplex<Q>::rescaling_z(n - 1);
        rep.assertions.push_back({"z_" + std::to_string(n + 1) + " / z_" + std::to_string(n - 1) + " = -2/" +
                                      std::to_string(n + 1),
                                  ratio == Q(-2) / Q(n + 1), ratio.str()});
    }
    // a random element of (iii) satisfies (i) and (ii)
    if (!v3.empty()) {
        SparseVec<Q> s;
        std::uniform_int_distribution<int> u(-3, 3);
        for (const auto& v : v3) s = axpy(s, Q(u(rng)), v);
        auto tau = unpack(f, l, s);
        std::string where;
        bool i_ok = vanishes_on_supercommutators(f, tau, &where);
        rep.assertions.push_back({an + ": random solution of (iii) vanishes on Fedosov supercommutators", i_ok, where});
        bool ii_ok = true;
        for (const auto& row : r2) {
            Q acc(0);
            for (auto& [c, v] : row) acc += s.at(c) * v;
            if (acc != 0) ii_ok = false;
        }
        rep.assertions.push_back({an + ": random solution of (iii) satisfies (ii)", ii_ok, ""});
    }
    // the trace of the regular representation in degree 0, extended by zero
    FormFunctional tr;
    for (int n = 0; n <= N; ++n) tr.emplace_back(std::size_t(f.dim(n)), Q(0));
    const auto& a = f.algebra();
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) tr[0][i] += a.mul(i, j).at(j);
    std::string where;
    rep.assertions.push_back({an + ": degree-0 trace extended by zero vanishes on Fedosov supercommutators",
                              vanishes_on_supercommutators(f, tr, &where), where});
    return rep;
}

Assertions kappa_invariant_checks(const FormComplex<Q>& f, std::mt19937_64& rng) {
    Assertions out;
    std::uniform_int_distribution<int> u(-3, 3);
    for (int n = 0; n + 1 <= f.top(); ++n) {
        // left kernel of 1 - kappa
        auto ker = kernel<Q>(SpMat<Q>(SpMat<Q>(f.one(n) - f.kappa(n)).transpose()));
        SparseVec<Q> s;
        for (const auto& v : ker) s = axpy(s, Q(u(rng)), v);
        Vec fv(std::size_t(f.dim(n)), Q(0));
        for (std::size_t k = 0; k < s.nnz(); ++k) fv[s.idx[k]] = s.val[k];
        SpMat<Q> bB = f.b(n + 1) * f.B(n);
        Vec fbB = transpose_apply(bB, fv);
        Vec fP = transpose_apply(f.P(n), fv);
        bool z = std::all_of(fbB.begin(), fbB.end(), [](const Q& x) { return x == 0; });
        std::string d = " on degree " + std::to_string(n) + " (dim of invariants " + std::to_string(ker.size()) + ")";
        out.push_back({f.algebra().name() + ": f kappa = f => f bB = 0" + d, z, ""});
        out.push_back({f.algebra().name() + ": f kappa = f => f P = f" + d, fP == fv, ""});
    }
    return out;
}

}  // namespace nch
