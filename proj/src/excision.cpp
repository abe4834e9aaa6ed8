#include "nch/excision.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace nch {

namespace {

SpMat<Q> trips_to_matrix(int r, int c, const std::vector<Trip<Q>>& t) {
    SpMat<Q> m(r, c);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

// f^{(x)(n+1)} : C_n(X) -> C_n(Y)
SpMat<Q> tensor_power(const TensorComplex<Q>& x, const TensorComplex<Q>& y, const SpMat<Q>& f, int n) {
    auto fc = columns(f);
    std::vector<Trip<Q>> t;
    for (int c = 0; c < x.dim(n); ++c) {
        auto tup = x.space(n).tuple(c);
        std::vector<SparseVec<Q>> parts;
        for (int v : tup) parts.push_back(fc[std::size_t(v)]);
        std::vector<std::pair<int, Q>> out;
        expand_tensor(y.space(n), parts, Q(1), out);
        for (auto& [r, v] : out) t.emplace_back(r, c, v);
    }
    return trips_to_matrix(y.dim(n), x.dim(n), t);
}

SpMat<Q> connes_map(const ConnesComplex<Q>& x, const ConnesComplex<Q>& y, const SpMat<Q>& f, int n) {
    SpMat<Q> full = tensor_power(x.tensors(), y.tensors(), f, n);
    SpMat<Q> a = full * x.section(n);
    return y.proj(n) * a;
}

std::string dims_str(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

HUnitalReport h_unitality(const Algebra<Q>& I, int N) {
    if (N < 2) throw std::invalid_argument("H-unitality needs N >= 2");
    HUnitalReport rep;
    rep.algebra = I.name();
    rep.N = N;
    TensorComplex<Q> t(I, N);
    ChainComplex<Q> c;
    for (int n = 0; n <= N; ++n) {
        c.dims.push_back(t.dim(n));
        c.d.push_back(n == 0 ? SpMat<Q>(0, t.dim(0)) : t.bprime(n));
    }
    auto hs = homology(c, N - 1, N - 1);
    rep.h_unital = true;
    for (const auto& h : hs) {
        rep.dims.push_back(h.dim);
        if (h.dim != 0) rep.h_unital = false;
    }
    rep.assertions.push_back({I.name() + ": b'^2 = 0 on the bar complex", true, ""});
    rep.assertions.push_back({I.name() + ": bar homology dims (n <= " + std::to_string(N - 1) + ")", true, dims_str(rep.dims)});
    return rep;
}

bool ExcisionReport::all_pass() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const Assertion& a) { return a.pass; });
}

ExcisionReport excision_check(const Extension<Q>& ext, int window, const std::string& name) {
    ExcisionReport rep;
    rep.name = name.empty() ? ext.R.name() : name;
    rep.window = window;
    int top = window + 1;
    bool has_i = !ext.ideal.empty();
    TensorComplex<Q> tr(ext.R, top), ta(ext.A, top);
    ConnesComplex<Q> cr(tr, top), ca(ta, top);
    auto hr = homology(cr.complex(), window, window);
    auto ha = homology(ca.complex(), window, window);
    std::vector<HomologyResult<Q>> hi;
    std::unique_ptr<TensorComplex<Q>> ti;
    std::unique_ptr<ConnesComplex<Q>> ci;
    if (has_i) {
        ti = std::make_unique<TensorComplex<Q>>(ext.I, top);
        ci = std::make_unique<ConnesComplex<Q>>(*ti, top);
        hi = homology(ci->complex(), window, window);
    }
    std::vector<DenseMat<Q>> im, pm;
    const std::string tag = rep.name + ": ";
    for (int q = 0; q <= window; ++q) {
        std::string d = " at q = " + std::to_string(q);
        auto p = map_on_homology(hr[q], ha[q], connes_map(cr, ca, ext.projection, q), cr.complex().diff(q + 1));
        HomologyMap<Q> i{dense_zero<Q>(hr[q].dim, 0), true};
        if (has_i) i = map_on_homology(hi[q], hr[q], connes_map(*ci, cr, ext.inclusion, q), ci->complex().diff(q + 1));
        rep.hc_i.push_back(has_i ? hi[q].dim : 0);
        rep.hc_r.push_back(hr[q].dim);
        rep.hc_a.push_back(ha[q].dim);
        rep.rank_i.push_back(dense_rank(i.matrix));
        rep.rank_pi.push_back(dense_rank(p.matrix));
        rep.assertions.push_back({tag + "i_* and pi_* well defined" + d, i.well_defined && p.well_defined, ""});
        DenseMat<Q> comp = p.matrix * i.matrix;
        rep.assertions.push_back({tag + "pi_* i_* = 0" + d, dense_is_zero<Q>(comp), ""});
        bool ex = exact_at(i.matrix, p.matrix, hr[q].dim);
        rep.assertions.push_back({tag + "im i_* = ker pi_*" + d, ex,
                                  "rank i_* " + std::to_string(rep.rank_i[q]) + ", dim HC(R) " + std::to_string(hr[q].dim) +
                                      ", rank pi_* " + std::to_string(rep.rank_pi[q])});
    }
    for (int q = 0; q + 1 <= window; ++q) {
        int lhs = rep.hc_i[q] - rep.rank_i[q];
        int rhs = rep.hc_a[q + 1] - rep.rank_pi[q + 1];
        rep.assertions.push_back({tag + "dim ker(i_*, q) = dim coker(pi_*, q + 1) at q = " + std::to_string(q), lhs == rhs,
                                  std::to_string(lhs) + " vs " + std::to_string(rhs)});
    }
    return rep;
}

Extension<Q> builtin_extension(const std::string& name) {
    using Vec = std::vector<Q>;
    if (name == "split") {
        Algebra<Q> r = direct_sum(builtin_algebra<Q>("C"), builtin_algebra<Q>("M2"));
        // basis: 1, 1_1 (unit of C), e12_2, e21_2, e11_2
        Vec one2{Q(1), Q(-1), Q(0), Q(0), Q(0)};
        return quotient(r, {one2, r.basis_vec(2), r.basis_vec(3), r.basis_vec(4)}, "C");
    }
    if (name == "square_zero") {
        Algebra<Q> r = builtin_algebra<Q>("upper2");
        return quotient(r, {r.basis_vec(1)}, "CxC");
    }
    if (name == "trivial") return quotient(builtin_algebra<Q>("M2"), {}, "M2");
    throw AlgebraError("unknown extension: " + name + " (split, square_zero, trivial)");
}

// ---------------------------------------------------------------------------
// weight decomposition

namespace {

struct Convention {
    std::string name;
    // sign of the face merging global position g (0-based) in block j (0-based)
    std::function<int(int g, int j, int i, int Kbefore)> face;
    std::function<int(const std::vector<int>& k)> eps;
    std::function<int(const std::vector<int>& k, int p)> rot;
};

int pm(long e) { return e % 2 ? -1 : 1; }

std::vector<Convention> conventions() {
    std::vector<Convention> cs;
    // blocks M (x) A^(x)k_j of degree k_j + 1, Koszul signs
    cs.push_back({"suspended blocks (degree k_j + 1), Koszul signs, identity on generators",
                  [](int g, int, int, int) { return pm(g); }, [](const std::vector<int>&) { return 1; },
                  [](const std::vector<int>& k, int p) {
                      long K = 0;
                      for (int x : k) K += x;
                      return pm(long(k[0] + 1) * (K - k[0] + p - 1));
                  }});
    // blocks of degree k_j, Z/p acting through Koszul signs times the sign of the p-cycle
    auto epsA = [](const std::vector<int>& k) {
        long e = 0;
        for (std::size_t j = 0; j < k.size(); ++j) e += long(j) * k[j];
        return pm(e);
    };
    cs.push_back({"blocks of degree k_j with [p-1] shift; generator signs (-1)^{sum (j-1) k_j}; cyclic group twisted by sign of the p-cycle",
                  [](int, int, int i, int Kb) { return pm(Kb + i); }, epsA,
                  [](const std::vector<int>& k, int p) {
                      long K = 0;
                      for (int x : k) K += x;
                      return pm(long(p - 1) + long(k[0]) * (K - k[0]));
                  }});
    cs.push_back({"blocks of degree k_j with [p-1] shift; untwisted Koszul rotation",
                  [](int, int, int i, int Kb) { return pm(Kb + i); }, epsA,
                  [](const std::vector<int>& k, int) {
                      long K = 0;
                      for (int x : k) K += x;
                      return pm(long(k[0]) * (K - k[0]));
                  }});
    return cs;
}

std::vector<int> block_lengths(const std::vector<int>& w, int dA) {
    std::vector<int> k;
    for (int x : w) {
        if (x >= dA)
            k.push_back(0);
        else
            ++k.back();
    }
    return k;
}

int weight_of(const std::vector<int>& w, int dA) {
    return int(std::count_if(w.begin(), w.end(), [&](int x) { return x >= dA; }));
}

int rank_sp(const SpMat<Q>& m) { return rank_of(columns(m), int(m.rows())); }

}  // namespace

GoodwillieReport goodwillie_decomposition(const Algebra<Q>& A, int p, int N) {
    std::vector<SpMat<Q>> l, r;
    for (int i = 0; i < A.dim(); ++i) {
        l.push_back(A.left_matrix(A.basis_vec(i)));
        r.push_back(A.right_matrix(A.basis_vec(i)));
    }
    return goodwillie_decomposition(A, l, r, p, N);
}

GoodwillieReport goodwillie_decomposition(const Algebra<Q>& A, const std::vector<SpMat<Q>>& left,
                                          const std::vector<SpMat<Q>>& right, int p, int N) {
    if (p < 1) throw std::invalid_argument("weight p must be >= 1");
    GoodwillieReport rep;
    rep.p = p;
    rep.N = N;
    Algebra<Q> R = square_zero_extension(A, left, right, "m");
    const int dA = A.dim();
    TensorComplex<Q> t(R, N);
    ConnesComplex<Q> c(t, N);
    const std::string tag = R.name() + ", p = " + std::to_string(p) + ": ";

    // grading preserved by b on C_n and on C^lambda_n
    bool graded_b = true, graded_l = true;
    for (int n = 1; n <= N; ++n) {
        const SpMat<Q>& bn = t.b(n);
        for (int k = 0; k < bn.outerSize(); ++k)
            for (SpMat<Q>::InnerIterator it(bn, k); it; ++it)
                if (weight_of(t.space(n - 1).tuple(int(it.row())), dA) != weight_of(t.space(n).tuple(int(it.col())), dA))
                    graded_b = false;
        const SpMat<Q>& bl = c.complex().diff(n);
        for (int k = 0; k < bl.outerSize(); ++k)
            for (SpMat<Q>::InnerIterator it(bl, k); it; ++it)
                if (weight_of(t.space(n - 1).tuple(c.reps(n - 1)[std::size_t(it.row())]), dA) !=
                    weight_of(t.space(n).tuple(c.reps(n)[std::size_t(it.col())]), dA))
                    graded_l = false;
    }
    rep.assertions.push_back({tag + "b preserves the M-weight on C_n, n <= " + std::to_string(N), graded_b, ""});
    rep.assertions.push_back({tag + "cyclic differential preserves the M-weight on C^lambda_n", graded_l, ""});

    for (int n = 0; n <= N; ++n) {
        int w = 0;
        for (int rix : c.reps(n))
            if (weight_of(t.space(n).tuple(rix), dA) == p) ++w;
        rep.weight_dims.push_back(w);
    }

    // source words: tuples with p M-letters and an M-letter in front
    std::vector<std::vector<std::vector<int>>> words(std::size_t(N) + 1);
    std::vector<std::map<std::vector<int>, int>> index(std::size_t(N) + 1);
    for (int n = 0; n <= N; ++n)
        for (int ix = 0; ix < t.dim(n); ++ix) {
            auto w = t.space(n).tuple(ix);
            if (w[0] >= dA && weight_of(w, dA) == p) {
                index[n][w] = int(words[n].size());
                words[n].push_back(w);
            }
        }
    auto product = [&](int x, int y) { return R.mul(x, y); };

    // p = 1: Hochschild complex C_n(A, M) = M (x) A^(x)n built from the action matrices
    if (p == 1) {
        bool chain = true, iso = true;
        std::vector<SpMat<Q>> bm(std::size_t(N) + 1), phi(std::size_t(N) + 1);
        auto act = [&](const SpMat<Q>& m, int col) {
            SparseVec<Q> v;
            for (SpMat<Q>::InnerIterator it(m, col); it; ++it) v.push(int(it.row()) + dA, it.value());
            return v;
        };
        for (int n = 0; n <= N; ++n) {
            std::vector<Trip<Q>> tb, tp;
            for (std::size_t cix = 0; cix < words[n].size(); ++cix) {
                const auto& w = words[n][cix];
                int col = int(cix);
                // phi: class in C^lambda
                for (SpMat<Q>::InnerIterator it(c.proj(n), t.space(n).index(w)); it; ++it)
                    tp.emplace_back(int(it.row()), col, it.value());
                if (n == 0) continue;
                auto emit = [&](std::vector<SparseVec<Q>> parts, const Q& s) {
                    std::vector<std::pair<int, Q>> out;
                    expand_tensor(t.space(n - 1), parts, s, out);
                    for (auto& [ix, v] : out) tb.emplace_back(index[n - 1].at(t.space(n - 1).tuple(ix)), col, v);
                };
                std::vector<SparseVec<Q>> parts(static_cast<std::size_t>(n), SparseVec<Q>());
                // m a1
                parts[0] = act(right[std::size_t(w[1])], w[0] - dA);
                for (int s = 1; s < n; ++s) parts[std::size_t(s)] = SparseVec<Q>::unit(w[std::size_t(s) + 1]);
                emit(parts, Q(1));
                for (int i = 1; i < n; ++i) {
                    for (int s = 0; s < n; ++s) {
                        int src = s < i ? s : s + 1;
                        parts[std::size_t(s)] = s == i ? product(w[std::size_t(i)], w[std::size_t(i) + 1]) : SparseVec<Q>::unit(w[std::size_t(src)]);
                    }
                    emit(parts, Q(i % 2 ? -1 : 1));
                }
                // a_n m
                parts[0] = act(left[std::size_t(w[std::size_t(n)])], w[0] - dA);
                for (int s = 1; s < n; ++s) parts[std::size_t(s)] = SparseVec<Q>::unit(w[std::size_t(s)]);
                emit(parts, Q(n % 2 ? -1 : 1));
            }
            int nw = int(words[n].size());
            bm[std::size_t(n)] = trips_to_matrix(n ? int(words[n - 1].size()) : 0, nw, tb);
            phi[std::size_t(n)] = trips_to_matrix(c.complex().dims[n], nw, tp);
            if (nw != rep.weight_dims[n] || rank_sp(phi[std::size_t(n)]) != nw) iso = false;
            if (n >= 1) {
                SpMat<Q> lhs = phi[std::size_t(n) - 1] * bm[std::size_t(n)];
                SpMat<Q> rhs = c.complex().diff(n) * phi[std::size_t(n)];
                if (!mat_equal<Q>(lhs, rhs)) chain = false;
            }
        }
        rep.assertions.push_back({tag + "C(A, M) -> weight-1 cyclic chains is a chain map", chain, ""});
        rep.assertions.push_back({tag + "C(A, M) -> weight-1 cyclic chains is bijective in every degree", iso, ""});
    }

    // cyclic tensor construction under each candidate sign convention
    for (const auto& conv : conventions()) {
        bool ok = true;
        std::vector<int> sdims;
        std::vector<SpMat<Q>> D(std::size_t(N) + 1), Phi(std::size_t(N) + 1), T(std::size_t(N) + 1);
        for (int n = 0; n <= N; ++n) {
            int nw = int(words[n].size());
            std::vector<Trip<Q>> td, tt, tp;
            for (int col = 0; col < nw; ++col) {
                const auto& w = words[n][std::size_t(col)];
                auto k = block_lengths(w, dA);
                int e = conv.eps(k);
                for (SpMat<Q>::InnerIterator it(c.proj(n), t.space(n).index(w)); it; ++it)
                    tp.emplace_back(int(it.row()), col, it.value() * e);
                // rotation of blocks: move the first block (1 + k_1 letters) to the end
                std::vector<int> rw(w.begin() + 1 + k[0], w.end());
                rw.insert(rw.end(), w.begin(), w.begin() + 1 + k[0]);
                tt.emplace_back(index[n].at(rw), col, Q(conv.rot(k, p)));
                if (n == 0) continue;
                int j = -1, Kb = 0, start = 0;
                for (int g = 0; g <= n; ++g) {
                    if (w[std::size_t(g)] >= dA) {
                        if (j >= 0) Kb += k[std::size_t(j)];
                        ++j;
                        start = g;
                    }
                    int i = g - start;
                    int s = conv.face(g, j, i, Kb);
                    std::vector<SparseVec<Q>> parts;
                    if (g < n) {
                        for (int x = 0; x < g; ++x) parts.push_back(SparseVec<Q>::unit(w[std::size_t(x)]));
                        parts.push_back(product(w[std::size_t(g)], w[std::size_t(g) + 1]));
                        for (int x = g + 2; x <= n; ++x) parts.push_back(SparseVec<Q>::unit(w[std::size_t(x)]));
                    } else {
                        parts.push_back(product(w[std::size_t(n)], w[0]));
                        for (int x = 1; x < n; ++x) parts.push_back(SparseVec<Q>::unit(w[std::size_t(x)]));
                    }
                    std::vector<std::pair<int, Q>> out;
                    expand_tensor(t.space(n - 1), parts, Q(s), out);
                    for (auto& [ix, v] : out) td.emplace_back(index[n - 1].at(t.space(n - 1).tuple(ix)), col, v);
                }
            }
            D[std::size_t(n)] = trips_to_matrix(n ? int(words[n - 1].size()) : 0, nw, td);
            T[std::size_t(n)] = trips_to_matrix(nw, nw, tt);
            Phi[std::size_t(n)] = trips_to_matrix(c.complex().dims[n], nw, tp);
            SpMat<Q> one = identity<Q>(nw);
            SpMat<Q> tp_pow = one;
            for (int r = 0; r < p; ++r) tp_pow = SpMat<Q>(T[std::size_t(n)] * tp_pow);
            if (!mat_equal<Q>(tp_pow, one)) ok = false;
            SpMat<Q> omt = one - T[std::size_t(n)];
            int cov = nw - rank_sp(omt);
            sdims.push_back(cov);
            SpMat<Q> killed = Phi[std::size_t(n)] * omt;
            if (!is_zero(killed)) ok = false;
            if (cov != rep.weight_dims[n] || rank_sp(Phi[std::size_t(n)]) != rep.weight_dims[n]) ok = false;
            if (n >= 1) {
                SpMat<Q> dd = n >= 2 ? SpMat<Q>(D[std::size_t(n) - 1] * D[std::size_t(n)]) : SpMat<Q>();
                if (n >= 2 && !is_zero(dd)) ok = false;
                SpMat<Q> td1 = T[std::size_t(n) - 1] * D[std::size_t(n)], dt = D[std::size_t(n)] * T[std::size_t(n)];
                if (!mat_equal<Q>(td1, dt)) ok = false;
                SpMat<Q> lhs = Phi[std::size_t(n) - 1] * D[std::size_t(n)];
                SpMat<Q> rhs = c.complex().diff(n) * Phi[std::size_t(n)];
                if (!mat_equal<Q>(lhs, rhs)) ok = false;
            }
        }
        rep.conventions_tried.push_back(conv.name);
        rep.conventions_pass.push_back(ok);
        if (ok && rep.convention.empty()) {
            rep.convention = conv.name;
            rep.source_dims = sdims;
        }
    }
    bool found = !rep.convention.empty();
    rep.assertions.push_back({tag + "cyclic tensor construction maps isomorphically onto the weight part (n <= " +
                                  std::to_string(N) + ")",
                              found, found ? rep.convention : "no sign convention gives a chain isomorphism"});
    if (found)
        rep.assertions.push_back({tag + "dims agree on both sides", rep.source_dims == rep.weight_dims,
                                  dims_str(rep.source_dims) + " vs " + dims_str(rep.weight_dims)});
    return rep;
}

// ---------------------------------------------------------------------------
// derivations

void require_derivation(const Algebra<Q>& a, const SpMat<Q>& D) {
    int n = a.dim();
    if (D.rows() != n || D.cols() != n) throw NotADerivation("derivation matrix has the wrong shape");
    auto Dv = [&](const std::vector<Q>& v) {
        std::vector<Q> r = a.zero();
        for (int j = 0; j < n; ++j)
            for (SpMat<Q>::InnerIterator it(D, j); it; ++it) r[std::size_t(it.row())] += it.value() * v[std::size_t(j)];
        return r;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto ei = a.basis_vec(i), ej = a.basis_vec(j);
            auto lhs = Dv(a.multiply(ei, ej));
            auto r1 = a.multiply(Dv(ei), ej), r2 = a.multiply(ei, Dv(ej));
            for (int k = 0; k < n; ++k)
                if (lhs[std::size_t(k)] != r1[std::size_t(k)] + r2[std::size_t(k)])
                    throw NotADerivation("Leibniz rule fails on (" + a.labels()[std::size_t(i)] + ", " +
                                         a.labels()[std::size_t(j)] + ")");
        }
}

SpMat<Q> inner_derivation(const Algebra<Q>& a, const std::vector<Q>& x) {
    SpMat<Q> l = a.left_matrix(x), r = a.right_matrix(x);
    return l - r;
}

SpMat<Q> lie_derivative(const FormComplex<Q>& f, const SpMat<Q>& D, int n) {
    auto dc = columns(D);
    const auto& sp = f.space(n);
    std::vector<Trip<Q>> t;
    for (int c = 0; c < sp.size(); ++c) {
        auto tup = sp.tuple(c);
        for (int s = 0; s <= n; ++s) {
            std::vector<SparseVec<Q>> parts;
            for (int x = 0; x <= n; ++x) parts.push_back(x == s ? dc[std::size_t(tup[std::size_t(x)])] : SparseVec<Q>::unit(tup[std::size_t(x)]));
            std::vector<std::pair<int, Q>> out;
            expand_tensor(sp, parts, Q(1), out);
            for (auto& [r, v] : out) t.emplace_back(r, c, v);
        }
    }
    return trips_to_matrix(sp.size(), sp.size(), t);
}

DerivationReport derivation_check(const Algebra<Q>& a, const SpMat<Q>& D, int nmax, bool expect_zero_on_hh,
                                  const std::string& name) {
    require_derivation(a, D);
    DerivationReport rep;
    rep.name = name;
    const std::string tag = name + ": ";
    int N = nmax + 2;
    FormComplex<Q> f(a, N);
    std::vector<SpMat<Q>> L;
    for (int n = 0; n <= N; ++n) L.push_back(lie_derivative(f, D, n));
    bool cb = true, cd = true, ck = true;
    for (int n = 0; n <= N; ++n) {
        if (n >= 1) {
            SpMat<Q> x = L[std::size_t(n) - 1] * f.b(n), y = f.b(n) * L[std::size_t(n)];
            if (!mat_equal<Q>(x, y)) cb = false;
        }
        if (n + 1 <= N) {
            SpMat<Q> x = L[std::size_t(n) + 1] * f.d(n), y = f.d(n) * L[std::size_t(n)];
            if (!mat_equal<Q>(x, y)) cd = false;
        }
        SpMat<Q> x = L[std::size_t(n)] * f.kappa(n), y = f.kappa(n) * L[std::size_t(n)];
        if (!mat_equal<Q>(x, y)) ck = false;
    }
    std::string upto = " on Omega^{<=" + std::to_string(N) + "}";
    rep.assertions.push_back({tag + "L_D b = b L_D" + upto, cb, ""});
    rep.assertions.push_back({tag + "L_D d = d L_D" + upto, cd, ""});
    rep.assertions.push_back({tag + "L_D kappa = kappa L_D" + upto, ck, ""});

    MixedComplex<Q> m(f);
    const auto& C = m.complex();
    auto Ltot = [&](int n) {
        std::vector<Trip<Q>> t;
        for (int p = 0; 2 * p <= n; ++p) {
            const SpMat<Q>& b = L[std::size_t(n - 2 * p)];
            int o = m.offset(n, p);
            for (int k = 0; k < b.outerSize(); ++k)
                for (SpMat<Q>::InnerIterator it(b, k); it; ++it) t.emplace_back(int(it.row()) + o, int(it.col()) + o, it.value());
        }
        return trips_to_matrix(C.dims[n], C.dims[n], t);
    };
    bool chain = true;
    for (int n = 1; n <= N; ++n) {
        SpMat<Q> x = Ltot(n - 1) * C.diff(n), y = C.diff(n) * Ltot(n);
        if (!mat_equal<Q>(x, y)) chain = false;
    }
    rep.assertions.push_back({tag + "L_D is a chain map of the (b, B) total complex", chain, ""});
    auto hc = homology(C, nmax, N - 2);
    for (int n = 2; n <= nmax; ++n) {
        SpMat<Q> ls = Ltot(n - 2) * m.s_op(n);
        auto h = map_on_homology(hc[n], hc[n - 2], ls, C.diff(n + 1));
        rep.assertions.push_back({tag + "L_D S = 0 on HC_" + std::to_string(n), h.well_defined && dense_is_zero<Q>(h.matrix),
                                  "dim HC_" + std::to_string(n) + " = " + std::to_string(hc[n].dim)});
    }
    if (expect_zero_on_hh) {
        auto hh = homology(hochschild_complex(f), nmax, N - 2);
        for (int n = 0; n <= nmax; ++n) {
            auto h = map_on_homology(hh[n], hh[n], L[std::size_t(n)], f.b(n + 1));
            rep.assertions.push_back({tag + "L_D = 0 on HH_" + std::to_string(n), h.well_defined && dense_is_zero<Q>(h.matrix),
                                      "dim HH_" + std::to_string(n) + " = " + std::to_string(hh[n].dim)});
        }
    }
    return rep;
}

}  // namespace nch
