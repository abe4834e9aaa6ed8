#pragma once
// Truncated chain spaces of noncommutative differential forms and the
// operators acting on them, each realized as one exact sparse matrix per
// degree. Reduced forms: Omega^n A = A (x) Abar^(x)n, tuples (a0, a1..an)
// with a1..an never the unit. Unreduced chains: C_n = A^(x)(n+1).

#include "nch/algebra.hpp"
#include "nch/polynomial.hpp"
#include "nch/report.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nch {

enum class Convention { reduced, unreduced, bar };

// Lexicographic mixed-radix numbering of tuples with slot i in [lo[i], hi).
class TupleSpace {
public:
    TupleSpace() = default;
    TupleSpace(std::vector<int> lo, int hi) : lo_(std::move(lo)), hi_(hi), stride_(lo_.size()) {
        long s = 1;
        for (std::size_t i = lo_.size(); i-- > 0;) {
            stride_[i] = int(s);
            s *= std::max(0, hi_ - lo_[i]);
            if (s > max_dim_cap())
                throw ResourceCapExceeded("chain space of dimension " + std::to_string(s) +
                                          " exceeds NCH_MAX_DIM=" + std::to_string(max_dim_cap()));
        }
        size_ = int(s);
    }

    int slots() const { return int(lo_.size()); }
    int size() const { return size_; }
    int lo(int slot) const { return lo_[slot]; }
    int hi() const { return hi_; }
    bool admits(int slot, int v) const { return v >= lo_[slot] && v < hi_; }

    int index(const std::vector<int>& t) const {
        int r = 0;
        for (std::size_t i = 0; i < t.size(); ++i) r += (t[i] - lo_[i]) * stride_[i];
        return r;
    }
    std::vector<int> tuple(int idx) const {
        std::vector<int> t(lo_.size());
        for (std::size_t i = 0; i < lo_.size(); ++i) {
            t[i] = lo_[i] + idx / stride_[i];
            idx %= stride_[i];
        }
        return t;
    }

private:
    std::vector<int> lo_;
    int hi_ = 0;
    std::vector<int> stride_;
    int size_ = 1;
};

// Adds c * (f_0 (x) ... (x) f_k) to out; components outside a slot's range
// (the unit in a reduced slot) are dropped.
template <class S>
void expand_tensor(const TupleSpace& sp, const std::vector<SparseVec<S>>& f, const S& c,
                   std::vector<std::pair<int, S>>& out) {
    int k = int(f.size());
    std::vector<std::size_t> pos(f.size(), 0);
    for (const auto& v : f)
        if (v.empty()) return;
    // odometer over the supports
    while (true) {
        bool ok = true;
        int idx = 0;
        S coef = c;
        std::vector<int> t(f.size());
        for (int s = 0; s < k; ++s) {
            int v = f[s].idx[pos[s]];
            if (!sp.admits(s, v)) { ok = false; break; }
            t[s] = v;
            coef *= f[s].val[pos[s]];
        }
        if (ok) {
            idx = sp.index(t);
            out.emplace_back(idx, std::move(coef));
        }
        int s = k - 1;
        while (s >= 0 && ++pos[s] == f[s].nnz()) pos[s--] = 0;
        if (s < 0) break;
    }
}

template <class S>
std::string tuple_label(const Algebra<S>& a, const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + a.labels()[t[i]];
    return s + ")";
}

// Forms of degree 0..N, one sparse vector per degree.
template <class S>
struct GradedChain {
    std::vector<SparseVec<S>> part;

    GradedChain() = default;
    explicit GradedChain(int N) : part(std::size_t(N) + 1) {}
    int top() const { return int(part.size()) - 1; }

    GradedChain& operator+=(const GradedChain& o) {
        for (std::size_t k = 0; k < part.size(); ++k) part[k] = axpy(part[k], S(1), o.part[k]);
        return *this;
    }
    GradedChain& operator-=(const GradedChain& o) {
        for (std::size_t k = 0; k < part.size(); ++k) part[k] = axpy(part[k], S(-1), o.part[k]);
        return *this;
    }
    friend GradedChain operator+(GradedChain a, const GradedChain& b) { return a += b; }
    friend GradedChain operator-(GradedChain a, const GradedChain& b) { return a -= b; }
    friend GradedChain operator*(const S& s, GradedChain a) {
        for (auto& p : a.part) p = scaled(std::move(p), s);
        return a;
    }
    friend bool operator==(const GradedChain& a, const GradedChain& b) { return a.part == b.part; }
    friend bool operator!=(const GradedChain& a, const GradedChain& b) { return !(a == b); }
    bool is_zero() const {
        for (const auto& p : part)
            if (!p.empty()) return false;
        return true;
    }
};

enum class Overflow { error, drop };

template <class S>
class FormComplex {
public:
    FormComplex(Algebra<S> a, int N) : a_(std::move(a)), N_(N) {
        if (!a_.unital()) throw AlgebraError("reduced forms need a unital algebra (unitalize first)");
        if (N < 0) throw std::invalid_argument("truncation must be >= 0");
        for (int n = 0; n <= N; ++n) {
            std::vector<int> lo(std::size_t(n) + 1, 1);
            lo[0] = 0;
            sp_.emplace_back(lo, a_.dim());
        }
        std::size_t m = std::size_t(N) + 1;
        b_.resize(m); d_.resize(m); k_.resize(m); ki_.resize(m); B_.resize(m); P_.resize(m); G_.resize(m);
    }

    const Algebra<S>& algebra() const { return a_; }
    int top() const { return N_; }
    const TupleSpace& space(int n) const { return sp_.at(std::size_t(n)); }
    int dim(int n) const { return space(n).size(); }
    std::string label(int n, int idx) const { return tuple_label(a_, space(n).tuple(idx)); }
    SpMat<S> one(int n) const { return identity<S>(dim(n)); }

    // Omega^n -> Omega^{n-1}; zero map out of degree 0.
    const SpMat<S>& b(int n) const {
        return cached(b_, n, [&] {
            if (n == 0) return SpMat<S>(0, dim(0));
            return build(n, n - 1, [&](const std::vector<int>& t, auto& out) {
                std::vector<SparseVec<S>> f(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) {
                    for (int s = 0; s < n; ++s) {
                        int src = s < i ? s : s + 1;
                        f[s] = s == i ? prod(t[i], t[i + 1]) : SparseVec<S>::unit(t[src]);
                    }
                    expand_tensor(space(n - 1), f, S(i % 2 ? -1 : 1), out);
                }
                f[0] = prod(t[n], t[0]);
                for (int s = 1; s < n; ++s) f[s] = SparseVec<S>::unit(t[s]);
                expand_tensor(space(n - 1), f, S(n % 2 ? -1 : 1), out);
            });
        });
    }

    // Omega^n -> Omega^{n+1}
    const SpMat<S>& d(int n) const {
        raise_check(n, "d");
        return cached(d_, n, [&] {
            return build(n, n + 1, [&](const std::vector<int>& t, auto& out) {
                if (t[0] == 0) return;
                std::vector<int> u{0};
                u.insert(u.end(), t.begin(), t.end());
                out.emplace_back(space(n + 1).index(u), S(1));
            });
        });
    }

    // Karoubi operator on Omega^n
    const SpMat<S>& kappa(int n) const {
        return cached(k_, n, [&] {
            if (n == 0) return one(0);
            return build(n, n, [&](const std::vector<int>& t, auto& out) {
                std::vector<SparseVec<S>> f(std::size_t(n) + 1);
                f[0] = SparseVec<S>::unit(t[n]);
                for (int s = 1; s <= n; ++s) f[s] = SparseVec<S>::unit(t[s - 1]);
                expand_tensor(space(n), f, S(n % 2 ? -1 : 1), out);
                f[0] = SparseVec<S>::unit(0);
                f[1] = prod(t[n], t[0]);
                expand_tensor(space(n), f, S(n % 2 ? 1 : -1), out);
            });
        });
    }

    // kappa^n + kappa^(n-1) - kappa^(2n), from (x^n - 1)(x^(n+1) - 1) = 0.
    const SpMat<S>& kappa_inv(int n) const {
        return cached(ki_, n, [&] {
            if (n == 0) return one(0);
            SpMat<S> kn1 = power(kappa(n), n - 1);
            SpMat<S> kn = pruned<S>(kn1 * kappa(n));
            SpMat<S> r = kn + kn1 - SpMat<S>(kn * kn);
            return pruned<S>(r);
        });
    }

    // B = sum_{j=0}^{n} kappa^j d : Omega^n -> Omega^{n+1}
    const SpMat<S>& B(int n) const {
        raise_check(n, "B");
        return cached(B_, n, [&] {
            SpMat<S> x = d(n), acc = d(n);
            for (int j = 1; j <= n; ++j) {
                x = pruned<S>(kappa(n + 1) * x);
                acc += x;
            }
            return pruned<S>(acc);
        });
    }

    // Projection onto the generalized 1-eigenspace of kappa.
    const SpMat<S>& P(int n) const {
        return cached(P_, n, [&] {
            if (n == 0) return one(0);
            return eval(harmonic_polys(n).first, kappa(n));
        });
    }
    // Green operator: G(1 - kappa) = 1 - P, GP = 0.
    const SpMat<S>& G(int n) const {
        return cached(G_, n, [&] {
            if (n == 0) return SpMat<S>(dim(0), dim(0));
            return eval(harmonic_polys(n).second, kappa(n));
        });
    }

    // Polynomials e, g with P = e(kappa), G = g(kappa) on Omega^n.
    static std::pair<Poly<S>, Poly<S>> harmonic_polys(int n) {
        using P = Poly<S>;
        P x = P::x();
        P m = (x.pow(n) - P(1)) * (x.pow(n + 1) - P(1));
        P sq = (x - P(1)).pow(2);
        P q = divmod(m, sq).first;
        auto [g, s, t] = ext_gcd(sq, q);
        if (g != P(1)) throw std::logic_error("harmonic split not coprime");
        P e = divmod(t * q, m).second;
        // h (1 - x) = 1 mod q
        auto [g2, h, unused] = ext_gcd(P(1) - x, q);
        (void)unused;
        if (g2 != P(1)) throw std::logic_error("1 - x not invertible modulo q");
        P gr = divmod(h * (P(1) - e), m).second;
        return {e, gr};
    }

    // Scaling of the even/odd identification: c_{2n} = c_{2n+1} = (-1)^n n!
    static S scaling_c(int k) {
        int n = k / 2;
        S f = S(factorial(n));
        return n % 2 ? -f : f;
    }
    // z_{2m} = (-1)^m / m!, z_{2m+1} = (-1)^m 2^m / (2m+1)!!
    static S rescaling_z(int k) {
        int m = k / 2;
        S sign = m % 2 ? S(-1) : S(1);
        if (k % 2 == 0) return sign / S(factorial(m));
        S df(1), p2(1);
        for (int i = 1; i <= 2 * m + 1; i += 2) df *= S(i);
        for (int i = 0; i < m; ++i) p2 *= S(2);
        return sign * p2 / df;
    }

    // (a0 da1..dan)(b0 db1..dbm) in Omega^(n+m)
    SparseVec<S> multiply_basis(int n, int i, int m, int j, Overflow pol = Overflow::error) const {
        if (n + m > N_) {
            if (pol == Overflow::drop) return {};
            throw TruncationOverflow("form product of degree " + std::to_string(n + m) + " exceeds N=" +
                                     std::to_string(N_));
        }
        auto a = space(n).tuple(i);
        auto bt = space(m).tuple(j);
        a.push_back(bt[0]);  // a_{n+1} = b0
        std::vector<std::pair<int, S>> out;
        std::vector<SparseVec<S>> f(std::size_t(n + m) + 1);
        for (int k = 1; k <= m; ++k) f[n + k] = SparseVec<S>::unit(bt[k]);
        for (int k = 0; k <= n; ++k) {
            for (int s = 0; s <= n; ++s) {
                if (s < k) f[s] = SparseVec<S>::unit(a[s]);
                else if (s == k) f[s] = prod(a[k], a[k + 1]);
                else f[s] = SparseVec<S>::unit(a[s + 1]);
            }
            expand_tensor(space(n + m), f, S((n - k) % 2 ? -1 : 1), out);
        }
        return make_sparse(std::move(out));
    }

    GradedChain<S> zero_chain() const { return GradedChain<S>(N_); }
    GradedChain<S> basis_chain(int n, int i) const {
        GradedChain<S> c(N_);
        c.part[n] = SparseVec<S>::unit(i);
        return c;
    }
    // Degree-0 chain of an algebra element.
    GradedChain<S> element(const std::vector<S>& x) const {
        GradedChain<S> c(N_);
        c.part[0] = Algebra<S>::to_sparse(x);
        return c;
    }

    GradedChain<S> multiply(const GradedChain<S>& x, const GradedChain<S>& y, Overflow pol = Overflow::error) const {
        GradedChain<S> r(N_);
        std::vector<std::vector<std::pair<int, S>>> acc(std::size_t(N_) + 1);
        for (int n = 0; n <= N_; ++n)
            for (int m = 0; m <= N_; ++m) {
                const auto& xv = x.part[n];
                const auto& yv = y.part[m];
                if (xv.empty() || yv.empty()) continue;
                if (n + m > N_) {
                    if (pol == Overflow::drop) continue;
                    throw TruncationOverflow("form product leaves the truncation");
                }
                for (std::size_t p = 0; p < xv.nnz(); ++p)
                    for (std::size_t q = 0; q < yv.nnz(); ++q) {
                        auto t = multiply_basis(n, xv.idx[p], m, yv.idx[q]);
                        S c = xv.val[p] * yv.val[q];
                        for (std::size_t k = 0; k < t.nnz(); ++k) acc[n + m].emplace_back(t.idx[k], c * t.val[k]);
                    }
            }
        for (int n = 0; n <= N_; ++n) r.part[n] = make_sparse(std::move(acc[n]));
        return r;
    }

    GradedChain<S> apply_d(const GradedChain<S>& x, Overflow pol = Overflow::error) const {
        GradedChain<S> r(N_);
        for (int n = 0; n <= N_; ++n) {
            if (x.part[n].empty()) continue;
            if (n == N_) {
                if (pol == Overflow::drop) continue;
                throw TruncationOverflow("d leaves the truncation");
            }
            r.part[n + 1] = apply(d(n), x.part[n]);
        }
        return r;
    }

    // Degree-wise parity sign (-1)^n applied to each component.
    GradedChain<S> parity_twist(GradedChain<S> x) const {
        for (int n = 1; n <= N_; n += 2) x.part[n] = scaled(std::move(x.part[n]), S(-1));
        return x;
    }

    // x o y = xy - (-1)^|x| dx dy, extended linearly over degrees.
    GradedChain<S> fedosov(const GradedChain<S>& x, const GradedChain<S>& y, Overflow pol = Overflow::error) const {
        GradedChain<S> r = multiply(x, y, pol);
        GradedChain<S> dx = apply_d(x, pol), dy = apply_d(y, pol);
        GradedChain<S> corr = multiply(parity_twist(dx), dy, pol);
        // parity_twist(dx) carries (-1)^(|x|+1); so subtracting -(...) adds
        return r + corr;
    }

private:
    template <class Fn>
    SpMat<S> build(int from, int to, Fn&& fn) const {
        std::vector<Trip<S>> trips;
        const auto& src = space(from);
        for (int c = 0; c < src.size(); ++c) {
            std::vector<std::pair<int, S>> out;
            fn(src.tuple(c), out);
            auto v = make_sparse(std::move(out));
            for (std::size_t k = 0; k < v.nnz(); ++k) trips.emplace_back(v.idx[k], c, v.val[k]);
        }
        SpMat<S> m(dim(to), src.size());
        m.setFromTriplets(trips.begin(), trips.end());
        return m;
    }

    template <class Fn>
    const SpMat<S>& cached(std::vector<std::optional<SpMat<S>>>& cache, int n, Fn&& fn) const {
        auto& slot = cache.at(std::size_t(n));
        if (!slot) slot = fn();
        return *slot;
    }

    void raise_check(int n, const char* op) const {
        if (n >= N_)
            throw TruncationOverflow(std::string(op) + " on degree " + std::to_string(n) + " leaves truncation N=" +
                                     std::to_string(N_));
    }

    SparseVec<S> prod(int i, int j) const { return a_.mul(i, j); }

    static SpMat<S> eval(const Poly<S>& p, const SpMat<S>& k) {
        int n = int(k.rows());
        SpMat<S> r(n, n);
        const auto& c = p.coeffs();
        for (std::size_t i = c.size(); i-- > 0;) {
            r = pruned<S>(SpMat<S>(r * k) + SpMat<S>(identity<S>(n) * c[i]));
        }
        return r;
    }

    Algebra<S> a_;
    int N_;
    std::vector<TupleSpace> sp_;
    mutable std::vector<std::optional<SpMat<S>>> b_, d_, k_, ki_, B_, P_, G_;
};

// Unreduced chains C_n = A^(x)(n+1), n = 0..N; the algebra may be nonunital.
template <class S>
class TensorComplex {
public:
    TensorComplex(Algebra<S> a, int N) : a_(std::move(a)), N_(N) {
        for (int n = 0; n <= N; ++n) sp_.emplace_back(std::vector<int>(std::size_t(n) + 1, 0), a_.dim());
        std::size_t m = std::size_t(N) + 1;
        b_.resize(m); bp_.resize(m); l_.resize(m); nn_.resize(m);
    }

    const Algebra<S>& algebra() const { return a_; }
    int top() const { return N_; }
    const TupleSpace& space(int n) const { return sp_.at(std::size_t(n)); }
    int dim(int n) const { return space(n).size(); }
    std::string label(int n, int idx) const { return tuple_label(a_, space(n).tuple(idx)); }
    SpMat<S> one(int n) const { return identity<S>(dim(n)); }

    // Hochschild boundary C_n -> C_{n-1}
    const SpMat<S>& b(int n) const { return face_sum(b_, n, true); }
    // b' omits the last face
    const SpMat<S>& bprime(int n) const { return face_sum(bp_, n, false); }

    // lambda(a0..an) = (-1)^n (an, a0..a_{n-1})
    const SpMat<S>& lambda(int n) const {
        auto& slot = l_.at(std::size_t(n));
        if (!slot) {
            std::vector<Trip<S>> t;
            S sg(n % 2 ? -1 : 1);
            for (int c = 0; c < dim(n); ++c) {
                auto x = space(n).tuple(c);
                std::rotate(x.begin(), x.end() - 1, x.end());
                t.emplace_back(space(n).index(x), c, sg);
            }
            SpMat<S> m(dim(n), dim(n));
            m.setFromTriplets(t.begin(), t.end());
            slot = m;
        }
        return *slot;
    }

    // N = sum_{i=0}^{n} lambda^i
    const SpMat<S>& norm(int n) const {
        auto& slot = nn_.at(std::size_t(n));
        if (!slot) {
            SpMat<S> acc = one(n), x = one(n);
            for (int i = 1; i <= n; ++i) {
                x = pruned<S>(lambda(n) * x);
                acc += x;
            }
            slot = pruned<S>(acc);
        }
        return *slot;
    }

private:
    const SpMat<S>& face_sum(std::vector<std::optional<SpMat<S>>>& cache, int n, bool last) const {
        auto& slot = cache.at(std::size_t(n));
        if (slot) return *slot;
        if (n == 0) {
            slot = SpMat<S>(0, dim(0));
            return *slot;
        }
        std::vector<Trip<S>> trips;
        for (int c = 0; c < dim(n); ++c) {
            auto t = space(n).tuple(c);
            std::vector<std::pair<int, S>> out;
            std::vector<SparseVec<S>> f(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                for (int s = 0; s < n; ++s) {
                    int src = s < i ? s : s + 1;
                    f[s] = s == i ? a_.mul(t[i], t[i + 1]) : SparseVec<S>::unit(t[src]);
                }
                expand_tensor(space(n - 1), f, S(i % 2 ? -1 : 1), out);
            }
            if (last) {
                f[0] = a_.mul(t[n], t[0]);
                for (int s = 1; s < n; ++s) f[s] = SparseVec<S>::unit(t[s]);
                expand_tensor(space(n - 1), f, S(n % 2 ? -1 : 1), out);
            }
            auto v = make_sparse(std::move(out));
            for (std::size_t k = 0; k < v.nnz(); ++k) trips.emplace_back(v.idx[k], c, v.val[k]);
        }
        SpMat<S> m(dim(n - 1), dim(n));
        m.setFromTriplets(trips.begin(), trips.end());
        slot = m;
        return *slot;
    }

    Algebra<S> a_;
    int N_;
    std::vector<TupleSpace> sp_;
    mutable std::vector<std::optional<SpMat<S>>> b_, bp_, l_, nn_;
};

// Equality check of two matrices, naming the first offending basis tuple.
template <class S, class Label>
Assertion matrix_assertion(const std::string& name, const SpMat<S>& lhs, const SpMat<S>& rhs, Label&& col_label) {
    Assertion a{name, true, ""};
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        a.pass = false;
        a.detail = "shape mismatch";
        return a;
    }
    auto diff = first_difference<S>(lhs, rhs);
    if (diff) {
        a.pass = false;
        a.detail = "first difference at input " + col_label(diff->second) + ", output row " +
                   std::to_string(diff->first);
    }
    return a;
}

// The operator identity suite on reduced and unreduced chains, degrees < N.
template <class S>
Assertions operator_identities(const FormComplex<S>& f, const TensorComplex<S>& t);

// b beta and natural-delta compose to zero (X-complex), source degrees <= N-2.
template <class S>
Assertions xcomplex_identities(const FormComplex<S>& f);

// P^2 = P, P kappa = kappa P, G(bd + db) = 1 - P and GP = PG = 0 for degrees <= N-1.
template <class S>
Assertions harmonic_identities(const FormComplex<S>& f);

// Fedosov associativity on basis triples (truncated) and unit.
template <class S>
Assertions fedosov_identities(const FormComplex<S>& f, int max_triples = 4000);

// Block description of the operators on reduced forms of the unitalization
// of a nonunital algebra A, through C_n(A) + C_{n-1}(A) = Omega^n(A~).
template <class S>
Assertions tilde_block_identities(const Algebra<S>& a, int N);

// Operator matrices as "degree row col value" lines.
template <class S>
std::string triplet_text(int degree, const SpMat<S>& m) {
    std::ostringstream os;
    for (int k = 0; k < m.outerSize(); ++k)
        for (typename SpMat<S>::InnerIterator it(m, k); it; ++it)
            if (!is_zero(it.value()))
                os << degree << ' ' << it.row() << ' ' << it.col() << ' ' << to_string(it.value()) << '\n';
    return os.str();
}

extern template class FormComplex<Q>;
extern template class TensorComplex<Q>;

}  // namespace nch
