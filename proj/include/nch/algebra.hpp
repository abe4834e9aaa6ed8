#pragma once
// Finite-dimensional associative algebras given by sparse structure
// constants, their elements, matrices over rings, and the standard
// constructions (unitalization, quotients, matrix algebras, direct sums,
// square-zero extensions).

#include "nch/linalg.hpp"

#include <array>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace nch {

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class S>
class Algebra {
public:
    using Vec = std::vector<S>;
    using Entry = std::tuple<int, int, int, S>;

    Algebra() = default;
    Algebra(std::string name, int dim, bool unital, std::vector<std::string> labels,
            const std::vector<Entry>& structure)
        : name_(std::move(name)), dim_(dim), unital_(unital), labels_(std::move(labels)),
          table_(std::size_t(dim) * std::size_t(dim)) {
        if (dim <= 0) throw AlgebraError("algebra dimension must be positive");
        if (labels_.empty())
            for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i));
        if (int(labels_.size()) != dim) throw AlgebraError("basis label count differs from dim");
        std::vector<std::vector<std::pair<int, S>>> acc(table_.size());
        for (const auto& [i, j, k, c] : structure) {
            if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
                throw AlgebraError("structure constant index out of range");
            acc[std::size_t(i) * dim + j].emplace_back(k, c);
        }
        for (std::size_t t = 0; t < acc.size(); ++t) table_[t] = make_sparse(std::move(acc[t]));
    }

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    bool unital() const { return unital_; }
    const std::vector<std::string>& labels() const { return labels_; }

    // e_i e_j
    const SparseVec<S>& mul(int i, int j) const { return table_[std::size_t(i) * dim_ + j]; }

    std::vector<Entry> structure() const {
        std::vector<Entry> out;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                const auto& p = mul(i, j);
                for (std::size_t k = 0; k < p.nnz(); ++k) out.emplace_back(i, j, p.idx[k], p.val[k]);
            }
        return out;
    }

    Vec zero() const { return Vec(std::size_t(dim_), S(0)); }
    Vec basis_vec(int i) const {
        Vec v = zero();
        v[i] = S(1);
        return v;
    }
    Vec unit() const {
        if (!unital_) throw AlgebraError(name_ + " is not unital");
        return basis_vec(0);
    }

    Vec multiply(const Vec& a, const Vec& b) const {
        Vec r = zero();
        for (int i = 0; i < dim_; ++i) {
            if (is_zero(a[i])) continue;
            for (int j = 0; j < dim_; ++j) {
                if (is_zero(b[j])) continue;
                S ab = a[i] * b[j];
                const auto& p = mul(i, j);
                for (std::size_t k = 0; k < p.nnz(); ++k) r[p.idx[k]] += ab * p.val[k];
            }
        }
        return r;
    }

    // Left multiplication by a as a dim x dim matrix.
    SpMat<S> left_matrix(const Vec& a) const {
        std::vector<SparseVec<S>> cols;
        for (int j = 0; j < dim_; ++j) cols.push_back(to_sparse(multiply(a, basis_vec(j))));
        return from_columns(dim_, cols);
    }
    SpMat<S> right_matrix(const Vec& a) const {
        std::vector<SparseVec<S>> cols;
        for (int j = 0; j < dim_; ++j) cols.push_back(to_sparse(multiply(basis_vec(j), a)));
        return from_columns(dim_, cols);
    }

    static SparseVec<S> to_sparse(const Vec& v) {
        SparseVec<S> s;
        for (std::size_t i = 0; i < v.size(); ++i) s.push(int(i), v[i]);
        return s;
    }
    Vec to_dense(const SparseVec<S>& s) const {
        Vec v = zero();
        for (std::size_t k = 0; k < s.nnz(); ++k) v[s.idx[k]] = s.val[k];
        return v;
    }

private:
    std::string name_;
    int dim_ = 0;
    bool unital_ = false;
    std::vector<std::string> labels_;
    std::vector<SparseVec<S>> table_;
};

template <class S>
using AlgebraPtr = std::shared_ptr<const Algebra<S>>;

struct ValidationReport {
    std::vector<std::array<int, 3>> associativity_defects;  // (i, j, k)
    std::vector<int> unit_defects;                           // basis indices with 1*e != e or e*1 != e
    bool ok() const { return associativity_defects.empty() && unit_defects.empty(); }
};

template <class S>
ValidationReport validate(const Algebra<S>& a) {
    ValidationReport rep;
    int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                auto l = a.multiply(a.multiply(a.basis_vec(i), a.basis_vec(j)), a.basis_vec(k));
                auto r = a.multiply(a.basis_vec(i), a.multiply(a.basis_vec(j), a.basis_vec(k)));
                if (l != r) rep.associativity_defects.push_back({i, j, k});
            }
    if (a.unital()) {
        for (int i = 0; i < n; ++i) {
            auto e = a.basis_vec(i);
            if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e) rep.unit_defects.push_back(i);
        }
    }
    return rep;
}

// Subalgebra (or re-based algebra) spanned by the given vectors of an ambient
// algebra. If unital is set, vectors[0] must act as the unit.
template <class S>
Algebra<S> from_basis(const std::string& name, const Algebra<S>& amb, const std::vector<typename Algebra<S>::Vec>& vecs,
                      bool unital, std::vector<std::string> labels = {}) {
    int n = int(vecs.size());
    std::vector<SparseVec<S>> cols;
    for (const auto& v : vecs) cols.push_back(Algebra<S>::to_sparse(v));
    Solver<S> solver(from_columns(amb.dim(), cols));
    if (solver.rank() != n) throw AlgebraError("basis vectors are linearly dependent");
    std::vector<typename Algebra<S>::Entry> st;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto c = solver.solve(Algebra<S>::to_sparse(amb.multiply(vecs[i], vecs[j])));
            if (!c) throw AlgebraError("span is not closed under multiplication");
            for (std::size_t k = 0; k < c->nnz(); ++k) st.emplace_back(i, j, c->idx[k], c->val[k]);
        }
    return Algebra<S>(name, n, unital, std::move(labels), st);
}

// Algebra spanned by square matrices (dense, row-major k x k lists).
template <class S>
Algebra<S> matrix_span_algebra(const std::string& name, int k, const std::vector<std::vector<S>>& mats, bool unital,
                               std::vector<std::string> labels) {
    // Ambient algebra: full matrix units, index r*k+c.
    std::vector<typename Algebra<S>::Entry> st;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c) st.emplace_back(a * k + b, b * k + c, a * k + c, S(1));
    Algebra<S> full("M" + std::to_string(k), k * k, false, {}, st);
    return from_basis(name, full, mats, unital, std::move(labels));
}

// Adjoins a new unit: C + A with (l, a)(m, b) = (lm, lb + ma + ab).
template <class S>
Algebra<S> unitalize(const Algebra<S>& a) {
    int n = a.dim();
    std::vector<typename Algebra<S>::Entry> st;
    st.emplace_back(0, 0, 0, S(1));
    for (int i = 0; i < n; ++i) {
        st.emplace_back(0, i + 1, i + 1, S(1));
        st.emplace_back(i + 1, 0, i + 1, S(1));
    }
    for (auto [i, j, k, c] : a.structure()) st.emplace_back(i + 1, j + 1, k + 1, c);
    std::vector<std::string> labels{"1"};
    for (const auto& l : a.labels()) labels.push_back(l);
    return Algebra<S>(a.name() + "~", n + 1, true, labels, st);
}

template <class S>
Algebra<S> direct_sum(const Algebra<S>& a, const Algebra<S>& b) {
    int n = a.dim(), m = b.dim();
    std::vector<typename Algebra<S>::Entry> st;
    for (auto [i, j, k, c] : a.structure()) st.emplace_back(i, j, k, c);
    for (auto [i, j, k, c] : b.structure()) st.emplace_back(i + n, j + n, k + n, c);
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back(l + "_1");
    for (const auto& l : b.labels()) labels.push_back(l + "_2");
    Algebra<S> plain(a.name() + "x" + b.name(), n + m, false, labels, st);
    if (!(a.unital() && b.unital())) return plain;
    // re-base so that (1, 1) is basis vector 0; (1, 0) replaces b's unit slot
    using Vec = typename Algebra<S>::Vec;
    std::vector<Vec> vecs;
    std::vector<std::string> nl;
    Vec u = plain.zero();
    u[0] = S(1);
    u[n] = S(1);
    vecs.push_back(u);
    nl.push_back("1");
    for (int i = 1; i < n; ++i) { vecs.push_back(plain.basis_vec(i)); nl.push_back(labels[i]); }
    vecs.push_back(plain.basis_vec(0));
    nl.push_back(labels[0]);
    for (int j = 1; j < m; ++j) { vecs.push_back(plain.basis_vec(n + j)); nl.push_back(labels[n + j]); }
    return from_basis(plain.name(), plain, vecs, true, nl);
}

// M_r(A); basis E_ij (x) e_k, re-based so that the identity matrix is vector 0
// when A is unital.
template <class S>
Algebra<S> matrix_algebra(const Algebra<S>& a, int r) {
    int d = a.dim();
    auto idx = [&](int i, int j, int k) { return (i * r + j) * d + k; };
    std::vector<typename Algebra<S>::Entry> st;
    std::vector<std::string> labels;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < d; ++k)
                labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + "." + a.labels()[k]);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int l = 0; l < r; ++l)
                for (auto [k1, k2, k3, c] : a.structure()) st.emplace_back(idx(i, j, k1), idx(j, l, k2), idx(i, l, k3), c);
    std::string name = "M" + std::to_string(r) + "(" + a.name() + ")";
    Algebra<S> plain(name, r * r * d, false, labels, st);
    if (!a.unital()) return plain;
    using Vec = typename Algebra<S>::Vec;
    std::vector<Vec> vecs;
    std::vector<std::string> nl;
    Vec u = plain.zero();
    for (int i = 0; i < r; ++i) u[idx(i, i, 0)] = S(1);
    vecs.push_back(u);
    nl.push_back("1");
    for (int t = 1; t < r * r * d; ++t) { vecs.push_back(plain.basis_vec(t)); nl.push_back(labels[t]); }
    return from_basis(name, plain, vecs, true, nl);
}

// A + M with M a bimodule given by left/right action matrices of each basis
// vector of A; (a, m)(a', m') = (aa', am' + ma').
template <class S>
Algebra<S> square_zero_extension(const Algebra<S>& a, const std::vector<SpMat<S>>& left,
                                 const std::vector<SpMat<S>>& right, const std::string& mname = "m") {
    int n = a.dim();
    if (int(left.size()) != n || int(right.size()) != n) throw AlgebraError("one action matrix per basis vector required");
    int m = int(left[0].rows());
    for (int i = 0; i < n; ++i)
        if (left[i].rows() != m || left[i].cols() != m || right[i].rows() != m || right[i].cols() != m)
            throw AlgebraError("action matrices must be square of the module dimension");
    // bimodule axioms
    auto comb = [&](const std::vector<SpMat<S>>& act, const SparseVec<S>& v) {
        SpMat<S> r(m, m);
        for (std::size_t k = 0; k < v.nnz(); ++k) r += act[v.idx[k]] * v.val[k];
        return r;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& p = a.mul(i, j);
            if (!mat_equal<S>(comb(left, p), SpMat<S>(left[i] * left[j])))
                throw AlgebraError("left action is not multiplicative");
            if (!mat_equal<S>(comb(right, p), SpMat<S>(right[j] * right[i])))
                throw AlgebraError("right action is not multiplicative");
            if (!mat_equal<S>(SpMat<S>(left[i] * right[j]), SpMat<S>(right[j] * left[i])))
                throw AlgebraError("left and right actions do not commute");
        }
    if (a.unital() && (!mat_equal<S>(left[0], identity<S>(m)) || !mat_equal<S>(right[0], identity<S>(m))))
        throw AlgebraError("unit must act as the identity on the bimodule");
    std::vector<typename Algebra<S>::Entry> st = a.structure();
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < m; ++c) {
            for (typename SpMat<S>::InnerIterator it(left[i], c); it; ++it)
                st.emplace_back(i, n + c, n + int(it.row()), it.value());
            for (typename SpMat<S>::InnerIterator it(right[i], c); it; ++it)
                st.emplace_back(n + c, i, n + int(it.row()), it.value());
        }
    std::vector<std::string> labels = a.labels();
    for (int c = 0; c < m; ++c) labels.push_back(mname + std::to_string(c));
    return Algebra<S>(a.name() + "+" + mname, n + m, a.unital(), labels, st);
}

// Linear span of vectors; helper for ideals.
template <class S>
std::vector<typename Algebra<S>::Vec> span_basis(int dim, const std::vector<typename Algebra<S>::Vec>& vs) {
    Echelon<S> e(dim);
    std::vector<typename Algebra<S>::Vec> out;
    for (const auto& v : vs)
        if (e.insert(Algebra<S>::to_sparse(v))) out.push_back(v);
    return out;
}

template <class S>
bool is_two_sided_ideal(const Algebra<S>& r, const std::vector<typename Algebra<S>::Vec>& basis) {
    Echelon<S> e(r.dim());
    for (const auto& v : basis) e.insert(Algebra<S>::to_sparse(v));
    for (const auto& v : basis)
        for (int i = 0; i < r.dim(); ++i) {
            if (!e.contains(Algebra<S>::to_sparse(r.multiply(r.basis_vec(i), v)))) return false;
            if (!e.contains(Algebra<S>::to_sparse(r.multiply(v, r.basis_vec(i))))) return false;
        }
    return true;
}

// Products of k elements of an ideal: basis of I^k.
template <class S>
std::vector<typename Algebra<S>::Vec> ideal_power(const Algebra<S>& r, const std::vector<typename Algebra<S>::Vec>& ideal,
                                                  int k) {
    if (k <= 1) return span_basis<S>(r.dim(), ideal);
    auto prev = ideal_power(r, ideal, k - 1);
    std::vector<typename Algebra<S>::Vec> prods;
    for (const auto& a : prev)
        for (const auto& b : ideal) prods.push_back(r.multiply(a, b));
    return span_basis<S>(r.dim(), prods);
}

template <class S>
struct Extension {
    Algebra<S> R;
    std::vector<typename Algebra<S>::Vec> ideal;    // basis of I inside R
    Algebra<S> I;                                   // I as a (possibly nonunital) algebra
    Algebra<S> A;                                   // R / I
    SpMat<S> inclusion;                             // dim R x dim I
    SpMat<S> projection;                            // dim A x dim R
    std::vector<int> complement;                    // basis vectors of R chosen as lifts of A's basis
};

// Quotient of R by the ideal spanned by gens (closure is verified, not forced).
template <class S>
Extension<S> quotient(const Algebra<S>& r, const std::vector<typename Algebra<S>::Vec>& gens, const std::string& name = "") {
    auto basis = span_basis<S>(r.dim(), gens);
    if (!is_two_sided_ideal(r, basis)) throw AlgebraError("spanning set is not a two-sided ideal");
    Extension<S> ext;
    ext.R = r;
    ext.ideal = basis;
    int ni = int(basis.size());
    Echelon<S> e(r.dim());
    for (const auto& v : basis) e.insert(Algebra<S>::to_sparse(v));
    for (int i = 0; i < r.dim(); ++i)
        if (e.insert(SparseVec<S>::unit(i), SparseVec<S>::unit(int(ext.complement.size()))))
            ext.complement.push_back(i);
    int na = int(ext.complement.size());
    bool unital = r.unital() && !ext.complement.empty() && ext.complement[0] == 0;
    // coordinates modulo I
    auto modI = [&](const typename Algebra<S>::Vec& v) {
        auto c = e.coordinates(Algebra<S>::to_sparse(v));
        return *c;
    };
    std::vector<typename Algebra<S>::Entry> st;
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            auto c = modI(r.multiply(r.basis_vec(ext.complement[i]), r.basis_vec(ext.complement[j])));
            for (std::size_t k = 0; k < c.nnz(); ++k) st.emplace_back(i, j, c.idx[k], c.val[k]);
        }
    std::vector<std::string> labels;
    for (int i : ext.complement) labels.push_back(r.labels()[i]);
    if (na > 0) ext.A = Algebra<S>(name.empty() ? r.name() + "/I" : name, na, unital, labels, st);
    std::vector<SparseVec<S>> pcols;
    for (int i = 0; i < r.dim(); ++i) pcols.push_back(modI(r.basis_vec(i)));
    ext.projection = from_columns(na, pcols);
    std::vector<SparseVec<S>> icols;
    for (const auto& v : basis) icols.push_back(Algebra<S>::to_sparse(v));
    ext.inclusion = from_columns(r.dim(), icols);
    if (ni > 0) ext.I = from_basis(r.name() + ".I", r, basis, false);
    return ext;
}

template <class S>
Algebra<S> truncated_polynomial(int k) {
    std::vector<typename Algebra<S>::Entry> st;
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) {
        labels.push_back(i == 0 ? "1" : "t" + (i == 1 ? std::string() : "^" + std::to_string(i)));
        for (int j = 0; i + j < k; ++j) st.emplace_back(i, j, i + j, S(1));
    }
    return Algebra<S>("C[t]/t^" + std::to_string(k), k, true, labels, st);
}

template <class S>
Algebra<S> builtin_algebra(const std::string& name) {
    using E = typename Algebra<S>::Entry;
    if (name == "C") return Algebra<S>("C", 1, true, {"1"}, {E{0, 0, 0, S(1)}});
    if (name == "C2")
        return Algebra<S>("C2", 2, true, {"1", "e"},
                          {E{0, 0, 0, S(1)}, E{0, 1, 1, S(1)}, E{1, 0, 1, S(1)}, E{1, 1, 1, S(1)}});
    if (name == "dual")
        return Algebra<S>("dual", 2, true, {"1", "eps"}, {E{0, 0, 0, S(1)}, E{0, 1, 1, S(1)}, E{1, 0, 1, S(1)}});
    auto m = [](int a, int b, int c, int d) { return std::vector<S>{S(a), S(b), S(c), S(d)}; };
    if (name == "M2")
        return matrix_span_algebra<S>("M2", 2, {m(1, 0, 0, 1), m(0, 1, 0, 0), m(0, 0, 1, 0), m(1, 0, 0, 0)}, true,
                                      {"1", "e12", "e21", "e11"});
    if (name == "upper2")
        return matrix_span_algebra<S>("upper2", 2, {m(1, 0, 0, 1), m(0, 1, 0, 0), m(1, 0, 0, 0)}, true,
                                      {"1", "e12", "e11"});
    if (name == "strict_upper2")
        return matrix_span_algebra<S>("strict_upper2", 2, {m(0, 1, 0, 0)}, false, {"e12"});
    throw AlgebraError("unknown built-in algebra: " + name);
}

inline std::vector<std::string> builtin_names() { return {"C", "C2", "dual", "M2", "upper2", "strict_upper2"}; }

// Algebra element with value semantics; the algebra must outlive it.
template <class S>
struct Element {
    const Algebra<S>* alg = nullptr;
    std::vector<S> x;

    static Element zero(const Algebra<S>& a) { return {&a, a.zero()}; }
    static Element one(const Algebra<S>& a) { return {&a, a.unit()}; }
    static Element basis(const Algebra<S>& a, int i) { return {&a, a.basis_vec(i)}; }

    Element& operator+=(const Element& o) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += o.x[i];
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] -= o.x[i];
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b) { return {a.alg, a.alg->multiply(a.x, b.x)}; }
    friend Element operator*(const S& s, Element a) {
        for (auto& v : a.x) v *= s;
        return a;
    }
    Element operator-() const { return S(-1) * *this; }
    friend bool operator==(const Element& a, const Element& b) { return a.x == b.x; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
    bool is_zero() const {
        for (const auto& v : x)
            if (!nch::is_zero(v)) return false;
        return true;
    }
};

// r x r matrix over any ring-like element type E (needs +, -, *, ==).
template <class E>
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(int r, const E& zero) : r_(r), a_(std::size_t(r) * r, zero) {}
    static RingMatrix identity(int r, const E& zero, const E& one) {
        RingMatrix m(r, zero);
        for (int i = 0; i < r; ++i) m(i, i) = one;
        return m;
    }
    static RingMatrix diag(const std::vector<E>& d, const E& zero) {
        RingMatrix m(int(d.size()), zero);
        for (std::size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
        return m;
    }
    // [[a, b], [c, d]] with equally sized square blocks
    static RingMatrix block(const RingMatrix& a, const RingMatrix& b, const RingMatrix& c, const RingMatrix& d) {
        int r = a.size();
        RingMatrix m(2 * r, a(0, 0) - a(0, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                m(i, j) = a(i, j);
                m(i, j + r) = b(i, j);
                m(i + r, j) = c(i, j);
                m(i + r, j + r) = d(i, j);
            }
        return m;
    }
    RingMatrix sub(int i0, int j0, int r) const {
        RingMatrix m(r, (*this)(0, 0) - (*this)(0, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
        return m;
    }

    int size() const { return r_; }
    E& operator()(int i, int j) { return a_[std::size_t(i) * r_ + j]; }
    const E& operator()(int i, int j) const { return a_[std::size_t(i) * r_ + j]; }

    friend RingMatrix operator+(RingMatrix a, const RingMatrix& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] = a.a_[i] + b.a_[i];
        return a;
    }
    friend RingMatrix operator-(RingMatrix a, const RingMatrix& b) {
        for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] = a.a_[i] - b.a_[i];
        return a;
    }
    friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
        if (a.r_ != b.r_) throw std::invalid_argument("matrix size mismatch");
        RingMatrix m(a.r_, a(0, 0) - a(0, 0));
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.r_; ++k)
                for (int j = 0; j < a.r_; ++j) m(i, j) = m(i, j) + a(i, k) * b(k, j);
        return m;
    }
    friend bool operator==(const RingMatrix& a, const RingMatrix& b) { return a.r_ == b.r_ && a.a_ == b.a_; }
    friend bool operator!=(const RingMatrix& a, const RingMatrix& b) { return !(a == b); }

    bool is_idempotent() const { return (*this) * (*this) == *this; }

private:
    int r_ = 0;
    std::vector<E> a_;
};

template <class S>
using MatrixOverAlgebra = RingMatrix<Element<S>>;

template <class S>
MatrixOverAlgebra<S> scalar_matrix(const Algebra<S>& a, const std::vector<std::vector<S>>& rows) {
    int r = int(rows.size());
    MatrixOverAlgebra<S> m(r, Element<S>::zero(a));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) m(i, j) = rows[i][j] * Element<S>::one(a);
    return m;
}

// Inverse over the algebra, solved through the left regular representation
// of M_r(A); throws if none exists.
template <class S>
MatrixOverAlgebra<S> invert(const MatrixOverAlgebra<S>& m) {
    const Algebra<S>& a = *m(0, 0).alg;
    if (!a.unital()) throw AlgebraError("inversion requires a unital algebra");
    int r = m.size(), d = a.dim();
    int n = r * r * d;
    auto flat = [&](int i, int j, int k) { return (i * r + j) * d + k; };
    std::vector<SparseVec<S>> cols(static_cast<std::size_t>(n));
    // column for E_kj (x) e_l : (m * that)(i, j) = m(i,k) e_l
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < r; ++j)
            for (int l = 0; l < d; ++l) {
                std::vector<std::pair<int, S>> terms;
                for (int i = 0; i < r; ++i) {
                    auto p = a.multiply(m(i, k).x, a.basis_vec(l));
                    for (int t = 0; t < d; ++t)
                        if (!is_zero(p[t])) terms.emplace_back(flat(i, j, t), p[t]);
                }
                cols[flat(k, j, l)] = make_sparse(std::move(terms));
            }
    Solver<S> solver(from_columns(n, cols));
    SparseVec<S> rhs;
    for (int i = 0; i < r; ++i) rhs.push(flat(i, i, 0), S(1));
    auto sol = solver.solve(rhs);
    if (!sol) throw AlgebraError("matrix is not invertible over " + a.name());
    MatrixOverAlgebra<S> inv(r, Element<S>::zero(a));
    for (std::size_t t = 0; t < sol->nnz(); ++t) {
        int f = sol->idx[t];
        inv(f / (r * d), (f / d) % r).x[f % d] += sol->val[t];
    }
    auto one = MatrixOverAlgebra<S>::identity(r, Element<S>::zero(a), Element<S>::one(a));
    if (inv * m != one || m * inv != one) throw AlgebraError("matrix has only a one-sided inverse");
    return inv;
}

}  // namespace nch
