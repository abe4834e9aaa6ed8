#include "nch/homology.hpp"

#include <algorithm>

namespace nch {

namespace {

template <class S>
SpMat<S> from_trips(int r, int c, const std::vector<Trip<S>>& t) {
    SpMat<S> m(r, c);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

template <class S>
void put_block(std::vector<Trip<S>>& t, const SpMat<S>& m, int ro, int co) {
    for (int k = 0; k < m.outerSize(); ++k)
        for (typename SpMat<S>::InnerIterator it(m, k); it; ++it)
            t.emplace_back(int(it.row()) + ro, int(it.col()) + co, it.value());
}

}  // namespace

template <class S>
MixedComplex<S>::MixedComplex(const FormComplex<S>& f) : f_(f) {
    int N = f.top();
    for (int n = 0; n <= N; ++n) {
        std::vector<int> off;
        int acc = 0;
        for (int p = 0; 2 * p <= n; ++p) {
            off.push_back(acc);
            acc += f.dim(n - 2 * p);
        }
        off.push_back(acc);
        off_.push_back(off);
        c_.dims.push_back(acc);
    }
    for (int n = 0; n <= N; ++n) {
        std::vector<Trip<S>> t;
        if (n >= 1)
            for (int p = 0; 2 * p <= n; ++p) {
                int k = n - 2 * p;
                if (k >= 1) put_block(t, f.b(k), offset(n - 1, p), offset(n, p));
                if (p >= 1) put_block(t, f.B(k), offset(n - 1, p - 1), offset(n, p));
            }
        c_.d.push_back(from_trips<S>(n >= 1 ? c_.dims[n - 1] : 0, c_.dims[n], t));
    }
}

template <class S>
SpMat<S> MixedComplex<S>::s_op(int n) const {
    if (n < 2) return SpMat<S>(0, c_.dims[n]);
    std::vector<Trip<S>> t;
    for (int p = 1; 2 * p <= n; ++p) {
        int k = n - 2 * p;
        for (int i = 0; i < f_.dim(k); ++i) t.emplace_back(offset(n - 2, p - 1) + i, offset(n, p) + i, S(1));
    }
    return from_trips<S>(c_.dims[n - 2], c_.dims[n], t);
}

template <class S>
SpMat<S> MixedComplex<S>::i_op(int n) const {
    std::vector<Trip<S>> t;
    for (int i = 0; i < f_.dim(n); ++i) t.emplace_back(i, i, S(1));
    return from_trips<S>(c_.dims[n], f_.dim(n), t);
}

template <class S>
SpMat<S> MixedComplex<S>::b_conn(int n) const {
    std::vector<Trip<S>> t;
    put_block(t, f_.B(n), 0, 0);
    return from_trips<S>(f_.dim(n + 1), c_.dims[n], t);
}

template <class S>
std::pair<int, int> MixedComplex<S>::locate(int n, int idx) const {
    const auto& off = off_.at(std::size_t(n));
    int p = int(std::upper_bound(off.begin(), off.end(), idx) - off.begin()) - 1;
    return {p, idx - off[p]};
}

template <class S>
std::string MixedComplex<S>::label(int n, int idx) const {
    auto [p, i] = locate(n, idx);
    return "u^" + std::to_string(p) + f_.label(n - 2 * p, i);
}

template <class S>
ConnesComplex<S>::ConnesComplex(const TensorComplex<S>& t, int top) : t_(t) {
    if (top > t.top()) throw TruncationOverflow("cyclic complex above the tensor truncation");
    for (int n = 0; n <= top; ++n) {
        const auto& sp = t.space(n);
        int dim = sp.size();
        std::vector<int> rep_of(std::size_t(dim), -1), sign_of(std::size_t(dim), 0);
        std::vector<int> reps;
        std::vector<int> orbit_id(std::size_t(dim), -1);
        for (int c = 0; c < dim; ++c) {
            if (rep_of[c] >= 0) continue;
            // c is the smallest index of its orbit (all earlier ones are assigned)
            auto x = sp.tuple(c);
            bool survives = true;
            std::vector<std::pair<int, int>> members;  // (index, k) with rot^k(c)
            auto y = x;
            for (int k = 0; k <= n; ++k) {
                int yi = sp.index(y);
                if (k > 0 && yi == c && (long(n) * k) % 2 == 1) survives = false;
                members.emplace_back(yi, k);
                std::rotate(y.begin(), y.end() - 1, y.end());
            }
            int id = survives ? int(reps.size()) : -1;
            if (survives) reps.push_back(c);
            for (auto [yi, k] : members) {
                if (rep_of[yi] >= 0) continue;
                rep_of[yi] = c;
                // y = rot^k(rep) and lambda y = (-1)^n rot y, so [rot^k rep] = (-1)^{nk} [rep]
                sign_of[yi] = (long(n) * k) % 2 ? -1 : 1;
                orbit_id[yi] = id;
            }
        }
        std::vector<Trip<S>> pt, st;
        for (int c = 0; c < dim; ++c)
            if (orbit_id[c] >= 0) pt.emplace_back(orbit_id[c], c, S(sign_of[c]));
        for (std::size_t j = 0; j < reps.size(); ++j) st.emplace_back(reps[j], int(j), S(1));
        int m = int(reps.size());
        proj_.push_back(from_trips<S>(m, dim, pt));
        sec_.push_back(from_trips<S>(dim, m, st));
        reps_.push_back(std::move(reps));
        c_.dims.push_back(m);
    }
    for (int n = 0; n <= top; ++n) {
        if (n == 0) {
            c_.d.push_back(SpMat<S>(0, c_.dims[0]));
            continue;
        }
        SpMat<S> bs = t.b(n) * sec_[n];
        c_.d.push_back(pruned<S>(SpMat<S>(proj_[n - 1] * bs)));
    }
}

template <class S>
QuotientComplex<S> quotient_by_basis(const ChainComplex<S>& c, const std::vector<std::vector<int>>& dropped) {
    QuotientComplex<S> q;
    std::vector<std::vector<int>> newidx;
    for (int n = 0; n <= c.top(); ++n) {
        std::vector<int> ni(std::size_t(c.dims[n]), 0);
        if (n < int(dropped.size()))
            for (int i : dropped[n]) ni[i] = -1;
        int k = 0;
        for (auto& v : ni)
            if (v == 0) v = k++;
        std::vector<Trip<S>> t;
        for (int i = 0; i < c.dims[n]; ++i)
            if (ni[i] >= 0) t.emplace_back(ni[i], i, S(1));
        q.proj.push_back(from_trips<S>(k, c.dims[n], t));
        q.complex.dims.push_back(k);
        newidx.push_back(std::move(ni));
    }
    for (int n = 0; n <= c.top(); ++n) {
        const auto& d = c.diff(n);
        if (n >= 1 && n < int(dropped.size()))
            for (int j : dropped[n])
                for (typename SpMat<S>::InnerIterator it(d, j); it; ++it)
                    if (!is_zero(it.value()) && newidx[n - 1][it.row()] >= 0)
                        throw std::logic_error("dropped basis vectors do not span a subcomplex");
        SpMat<S> dq = n >= 1 ? SpMat<S>(q.proj[n - 1] * d) : SpMat<S>(0, c.dims[n]);
        // restrict to kept columns
        SpMat<S> keep = SpMat<S>(q.proj[n].transpose());
        q.complex.d.push_back(pruned<S>(SpMat<S>(dq * keep)));
    }
    return q;
}

template <class S>
std::vector<HomologyResult<S>> hochschild_homology(const Algebra<S>& a, int max_degree) {
    int N = max_degree + 2;
    if (a.unital()) {
        FormComplex<S> f(a, N);
        return homology(hochschild_complex(f), max_degree, N - 2);
    }
    TensorComplex<S> t(a, N);
    ChainComplex<S> c;
    for (int n = 0; n <= N; ++n) {
        c.dims.push_back(t.dim(n));
        c.d.push_back(t.b(n));
    }
    return homology(c, max_degree, N - 2);
}

template <class S>
std::vector<HomologyResult<S>> cyclic_homology(const Algebra<S>& a, int max_degree, CyclicModel model) {
    if (model == CyclicModel::mixed) {
        int N = max_degree + 2;
        FormComplex<S> f(a, N);
        MixedComplex<S> m(f);
        return homology(m.complex(), max_degree, N - 2);
    }
    // C^lambda has a single differential: H_n needs C^lambda_{n+1} only.
    TensorComplex<S> t(a, max_degree + 1);
    ConnesComplex<S> c(t, max_degree + 1);
    return homology(c.complex(), max_degree, max_degree);
}

template <class S>
Assertions sbi_check(const Algebra<S>& a, int nmax) {
    int N = nmax + 3;
    FormComplex<S> f(a, N);
    MixedComplex<S> m(f);
    auto hh = homology(hochschild_complex(f), nmax + 1, N - 2);
    auto hc = homology(m.complex(), nmax, N - 2);
    const auto& D = m.complex();
    auto empty = [](int r, int c) { return dense_zero<S>(r, c); };
    auto hcdim = [&](int n) { return n < 0 ? 0 : hc[n].dim; };
    auto hhdim = [&](int n) { return n < 0 ? 0 : hh[n].dim; };
    Assertions out;
    const std::string an = a.name();
    std::vector<DenseMat<S>> I, Sm, Bm;
    for (int n = 0; n <= nmax; ++n) {
        auto i = map_on_homology(hh[n], hc[n], m.i_op(n), f.b(n + 1));
        auto b = map_on_homology(hc[n], hh[n + 1], m.b_conn(n), D.diff(n + 1));
        HomologyMap<S> s{empty(hcdim(n - 2), hc[n].dim), true};
        if (n >= 2) s = map_on_homology(hc[n], hc[n - 2], m.s_op(n), D.diff(n + 1));
        out.push_back({an + ": I, S, B well defined on degree " + std::to_string(n),
                       i.well_defined && b.well_defined && s.well_defined, ""});
        I.push_back(i.matrix);
        Sm.push_back(s.matrix);
        Bm.push_back(b.matrix);
    }
    auto node = [&](const std::string& where, const DenseMat<S>& in, const DenseMat<S>& outm, int dim) {
        bool ok = exact_at(in, outm, dim);
        out.push_back({an + ": exact at " + where, ok,
                       ok ? "" : "rank in " + std::to_string(dense_rank(in)) + ", rank out " +
                                     std::to_string(dense_rank(outm)) + ", dim " + std::to_string(dim)});
    };
    for (int n = 0; n <= nmax; ++n) {
        node("HC_" + std::to_string(n), I[n], Sm[n], hcdim(n));
        if (n >= 2) node("HC_" + std::to_string(n - 2) + " (S in, B out)", Sm[n], Bm[n - 2], hcdim(n - 2));
        if (n >= 1) {
            DenseMat<S> bin = n >= 2 ? Bm[n - 2] : empty(hhdim(n - 1), 0);
            node("HH_" + std::to_string(n - 1), bin, I[n - 1], hhdim(n - 1));
        }
        if (n >= 2) {
            DenseMat<S> bs = Bm[n - 2] * Sm[n];
            out.push_back({an + ": B S = 0 on HC_" + std::to_string(n), dense_is_zero<S>(bs), ""});
        }
        DenseMat<S> si = Sm[n] * I[n];
        out.push_back({an + ": S I = 0 on HH_" + std::to_string(n), dense_is_zero<S>(si), ""});
        if (n + 1 <= nmax) {
            DenseMat<S> ib = I[n + 1] * Bm[n];
            out.push_back({an + ": I B = 0 on HC_" + std::to_string(n), dense_is_zero<S>(ib), ""});
        }
    }
    return out;
}

template <class S>
PeriodicEstimate periodic_approx(const Algebra<S>& a, int parity, int max_degree) {
    int N = max_degree + 2;
    FormComplex<S> f(a, N);
    MixedComplex<S> m(f);
    auto hc = homology(m.complex(), max_degree, N - 2);
    PeriodicEstimate pe;
    pe.parity = parity;
    for (int n = parity; n <= max_degree; n += 2) {
        pe.tower_degrees.push_back(n);
        pe.tower_dims.push_back(hc[n].dim);
        bool iso = false;
        if (n >= 2) {
            auto s = map_on_homology(hc[n], hc[n - 2], m.s_op(n), m.complex().diff(n + 1));
            iso = s.well_defined && hc[n].dim == hc[n - 2].dim && dense_rank(s.matrix) == hc[n].dim;
        }
        pe.s_iso.push_back(iso);
    }
    for (std::size_t i = 0; i + 1 < pe.s_iso.size(); ++i)
        if (pe.s_iso[i] && pe.s_iso[i + 1]) {
            pe.stabilized = true;
            pe.estimate = pe.tower_dims[i];
            break;
        }
    return pe;
}

template <class S>
ReducedCyclicReport<S> reduced_cyclic(const Algebra<S>& a, int nmax) {
    if (!a.unital()) throw AlgebraError("reduced cyclic homology needs a unital algebra");
    int top = nmax + 1;
    Algebra<S> k = builtin_algebra<S>("C");
    TensorComplex<S> tk(k, top), ta(a, top);
    ConnesComplex<S> ck(tk, top), ca(ta, top);
    std::vector<std::vector<int>> dropped;
    std::vector<SpMat<S>> incl;
    for (int n = 0; n <= top; ++n) {
        std::vector<int> dr;
        std::vector<Trip<S>> t;
        if (!ck.reps(n).empty()) {
            // the all-unit tuple has index 0 in both tensor spaces
            const auto& ra = ca.reps(n);
            auto it = std::find(ra.begin(), ra.end(), 0);
            if (it == ra.end()) throw std::logic_error("unit orbit missing from cyclic complex");
            int idx = int(it - ra.begin());
            dr.push_back(idx);
            t.emplace_back(idx, 0, S(1));
        }
        dropped.push_back(dr);
        incl.push_back(from_trips<S>(ca.complex().dims[n], ck.complex().dims[n], t));
    }
    auto q = quotient_by_basis(ca.complex(), dropped);
    auto hk = homology(ck.complex(), nmax, nmax);
    auto ha = homology(ca.complex(), nmax, nmax);
    auto hq = homology(q.complex, nmax, nmax);
    ReducedCyclicReport<S> r;
    const std::string an = a.name();
    for (int n = 0; n <= nmax; ++n) {
        auto i = map_on_homology(hk[n], ha[n], incl[n], ck.complex().diff(n + 1));
        auto p = map_on_homology(ha[n], hq[n], q.proj[n], ca.complex().diff(n + 1));
        r.hc_k.push_back(hk[n].dim);
        r.hc_a.push_back(ha[n].dim);
        r.hc_reduced.push_back(hq[n].dim);
        r.rank_i.push_back(dense_rank(i.matrix));
        r.rank_pi.push_back(dense_rank(p.matrix));
        std::string d = " on degree " + std::to_string(n);
        r.assertions.push_back({an + ": inclusion and projection well defined" + d, i.well_defined && p.well_defined, ""});
        DenseMat<S> pi = p.matrix * i.matrix;
        r.assertions.push_back({an + ": pi_* i_* = 0" + d, dense_is_zero<S>(pi), ""});
        r.assertions.push_back({an + ": im i_* = ker pi_* at HC" + d, exact_at(i.matrix, p.matrix, ha[n].dim), ""});
        int lhs = hq[n].dim - r.rank_pi[n];
        int rhs = n >= 1 ? r.hc_k[n - 1] - r.rank_i[n - 1] : 0;
        r.assertions.push_back({an + ": connecting dimension dim HCbar_n - rk pi_n = dim HC_{n-1}(k) - rk i_{n-1}" + d,
                                lhs == rhs, std::to_string(lhs) + " vs " + std::to_string(rhs)});
    }
    return r;
}

template class MixedComplex<Q>;
template class ConnesComplex<Q>;
template QuotientComplex<Q> quotient_by_basis<Q>(const ChainComplex<Q>&, const std::vector<std::vector<int>>&);
template std::vector<HomologyResult<Q>> hochschild_homology<Q>(const Algebra<Q>&, int);
template std::vector<HomologyResult<Q>> cyclic_homology<Q>(const Algebra<Q>&, int, CyclicModel);
template Assertions sbi_check<Q>(const Algebra<Q>&, int);
template PeriodicEstimate periodic_approx<Q>(const Algebra<Q>&, int, int);
template ReducedCyclicReport<Q> reduced_cyclic<Q>(const Algebra<Q>&, int);

template class MixedComplex<QI>;
template class ConnesComplex<QI>;
template QuotientComplex<QI> quotient_by_basis<QI>(const ChainComplex<QI>&, const std::vector<std::vector<int>>&);
template std::vector<HomologyResult<QI>> hochschild_homology<QI>(const Algebra<QI>&, int);
template std::vector<HomologyResult<QI>> cyclic_homology<QI>(const Algebra<QI>&, int, CyclicModel);
template Assertions sbi_check<QI>(const Algebra<QI>&, int);
template PeriodicEstimate periodic_approx<QI>(const Algebra<QI>&, int, int);
template ReducedCyclicReport<QI> reduced_cyclic<QI>(const Algebra<QI>&, int);

}  // namespace nch
