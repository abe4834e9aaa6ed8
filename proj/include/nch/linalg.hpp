#pragma once
// Exact sparse linear algebra: sparse vectors, an incremental row-echelon
// structure (rank, kernel, solve, membership) and homology bases with
// coordinates, so that chain maps can be pushed down to homology.

#include "nch/scalar.hpp"

#include <Eigen/SparseCore>

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nch {

template <class S>
using SpMat = Eigen::SparseMatrix<S>;

template <class S>
using Trip = Eigen::Triplet<S>;

template <class S>
struct SparseVec {
    std::vector<int> idx;  // strictly increasing
    std::vector<S> val;    // never zero

    bool empty() const { return idx.empty(); }
    std::size_t nnz() const { return idx.size(); }

    S at(int i) const {
        auto it = std::lower_bound(idx.begin(), idx.end(), i);
        if (it == idx.end() || *it != i) return S(0);
        return val[it - idx.begin()];
    }
    void push(int i, S v) {
        if (!is_zero(v)) { idx.push_back(i); val.push_back(std::move(v)); }
    }
    static SparseVec unit(int i) {
        SparseVec e;
        e.idx.push_back(i);
        e.val.push_back(S(1));
        return e;
    }
    friend bool operator==(const SparseVec& a, const SparseVec& b) {
        return a.idx == b.idx && a.val == b.val;
    }
};

// Builds a sparse vector from unsorted (index, value) pairs, summing duplicates.
template <class S>
SparseVec<S> make_sparse(std::vector<std::pair<int, S>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<S> out;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        S acc(0);
        while (j < terms.size() && terms[j].first == terms[i].first) acc += terms[j++].second;
        out.push(terms[i].first, std::move(acc));
        i = j;
    }
    return out;
}

// x + a*y
template <class S>
SparseVec<S> axpy(const SparseVec<S>& x, const S& a, const SparseVec<S>& y) {
    SparseVec<S> r;
    r.idx.reserve(x.nnz() + y.nnz());
    r.val.reserve(x.nnz() + y.nnz());
    std::size_t i = 0, j = 0;
    while (i < x.nnz() || j < y.nnz()) {
        if (j == y.nnz() || (i < x.nnz() && x.idx[i] < y.idx[j])) {
            r.idx.push_back(x.idx[i]);
            r.val.push_back(x.val[i]);
            ++i;
        } else if (i == x.nnz() || y.idx[j] < x.idx[i]) {
            r.push(y.idx[j], a * y.val[j]);
            ++j;
        } else {
            r.push(x.idx[i], x.val[i] + a * y.val[j]);
            ++i;
            ++j;
        }
    }
    return r;
}

template <class S>
SparseVec<S> scaled(SparseVec<S> v, const S& a) {
    if (is_zero(a)) return {};
    for (auto& x : v.val) x *= a;
    return v;
}

template <class S>
std::vector<SparseVec<S>> columns(const SpMat<S>& m) {
    std::vector<SparseVec<S>> cols(m.cols());
    for (int k = 0; k < m.outerSize(); ++k)
        for (typename SpMat<S>::InnerIterator it(m, k); it; ++it)
            if (!is_zero(it.value())) {
                cols[it.col()].idx.push_back(it.row());
                cols[it.col()].val.push_back(it.value());
            }
    return cols;
}

template <class S>
SpMat<S> from_columns(int rows, const std::vector<SparseVec<S>>& cols) {
    std::vector<Trip<S>> t;
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t k = 0; k < cols[c].nnz(); ++k)
            t.emplace_back(cols[c].idx[k], int(c), cols[c].val[k]);
    SpMat<S> m(rows, int(cols.size()));
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

template <class S>
SpMat<S> identity(int n) {
    SpMat<S> m(n, n);
    m.setIdentity();
    return m;
}

template <class S>
SpMat<S> zero_matrix(int r, int c) { return SpMat<S>(r, c); }

template <class S>
SpMat<S> pruned(SpMat<S> m) {
    m.prune([](int, int, const S& v) { return !is_zero(v); });
    return m;
}

template <class S>
bool is_zero(const SpMat<S>& m) {
    for (int k = 0; k < m.outerSize(); ++k)
        for (typename SpMat<S>::InnerIterator it(m, k); it; ++it)
            if (!is_zero(it.value())) return false;
    return true;
}

template <class S>
bool mat_equal(const SpMat<S>& a, const SpMat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    SpMat<S> d = a - b;
    return is_zero(d);
}

// First nonzero entry of a - b as (row, col), smallest in (row, col) order.
template <class S>
std::optional<std::pair<int, int>> first_difference(const SpMat<S>& a, const SpMat<S>& b) {
    SpMat<S> d = a - b;
    std::optional<std::pair<int, int>> best;
    for (int k = 0; k < d.outerSize(); ++k)
        for (typename SpMat<S>::InnerIterator it(d, k); it; ++it) {
            std::pair<int, int> p{int(it.row()), int(it.col())};
            if (!is_zero(it.value()) && (!best || p < *best)) best = p;
        }
    return best;
}

template <class S>
SparseVec<S> apply(const SpMat<S>& m, const SparseVec<S>& v) {
    std::vector<std::pair<int, S>> terms;
    for (std::size_t k = 0; k < v.nnz(); ++k)
        for (typename SpMat<S>::InnerIterator it(m, v.idx[k]); it; ++it)
            terms.emplace_back(int(it.row()), it.value() * v.val[k]);
    return make_sparse(std::move(terms));
}

template <class S>
SpMat<S> power(const SpMat<S>& m, long e) {
    SpMat<S> result = identity<S>(int(m.rows()));
    SpMat<S> base = m;
    while (e > 0) {
        if (e & 1) result = pruned<S>(result * base);
        e >>= 1;
        if (e) base = pruned<S>(base * base);
    }
    return result;
}

// Row-echelon structure over exact scalars. Each stored row has leading
// coefficient 1 at a distinct pivot column; rows optionally carry a tag
// vector recording how they were produced.
template <class S>
class Echelon {
public:
    explicit Echelon(int dim = 0) : pivot_(std::size_t(dim), -1) {}

    int dim() const { return int(pivot_.size()); }
    int rank() const { return int(rows_.size()); }

    // Eliminates leading entries; tag is transformed alongside.
    void reduce(SparseVec<S>& v, SparseVec<S>& tag) const {
        while (!v.empty()) {
            int lead = v.idx[0];
            int r = pivot_[lead];
            if (r < 0) return;
            S a = -v.val[0];
            v = axpy(v, a, rows_[r]);
            if (!tags_[r].empty()) tag = axpy(tag, a, tags_[r]);
        }
    }

    bool contains(SparseVec<S> v) const {
        SparseVec<S> t;
        reduce(v, t);
        return v.empty();
    }

    // Returns true if v was independent of the stored rows.
    bool insert(SparseVec<S> v, SparseVec<S> tag = {}) {
        reduce(v, tag);
        if (v.empty()) {
            last_residual_tag_ = std::move(tag);
            return false;
        }
        S inv = S(1) / v.val[0];
        v = scaled(std::move(v), inv);
        tag = scaled(std::move(tag), inv);
        pivot_[v.idx[0]] = int(rows_.size());
        rows_.push_back(std::move(v));
        tags_.push_back(std::move(tag));
        return true;
    }

    // Tag left over from the last dependent insertion.
    const SparseVec<S>& last_residual_tag() const { return last_residual_tag_; }

    // Coordinates of v in terms of the tags: returns nullopt if v is not in
    // the span. For rows tagged by unit vectors this solves a linear system.
    std::optional<SparseVec<S>> coordinates(SparseVec<S> v) const {
        SparseVec<S> t;
        reduce(v, t);
        if (!v.empty()) return std::nullopt;
        return scaled(std::move(t), S(-1));
    }

    const std::vector<SparseVec<S>>& rows() const { return rows_; }
    std::vector<int> pivots() const {
        std::vector<int> p;
        for (const auto& r : rows_) p.push_back(r.idx[0]);
        return p;
    }

private:
    std::vector<int> pivot_;
    std::vector<SparseVec<S>> rows_;
    std::vector<SparseVec<S>> tags_;
    SparseVec<S> last_residual_tag_;
};

// Order in which vectors are fed to elimination: fewest nonzeros first,
// ties by original position.
template <class S>
std::vector<int> markowitz_order(const std::vector<SparseVec<S>>& vs) {
    std::vector<int> ord(vs.size());
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(),
                     [&](int a, int b) { return vs[a].nnz() < vs[b].nnz(); });
    return ord;
}

template <class S>
int rank_of(const std::vector<SparseVec<S>>& vs, int dim) {
    Echelon<S> e(dim);
    for (int i : markowitz_order(vs)) e.insert(vs[i]);
    return e.rank();
}

template <class S>
int rank(const SpMat<S>& m) {
    return rank_of(columns(m), int(m.rows()));
}

// Basis of the null space of m (vectors in the column index space).
template <class S>
std::vector<SparseVec<S>> kernel(const SpMat<S>& m) {
    Echelon<S> e(int(m.rows()));
    std::vector<SparseVec<S>> ker;
    auto cols = columns(m);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (!e.insert(cols[j], SparseVec<S>::unit(int(j)))) ker.push_back(e.last_residual_tag());
    }
    return ker;
}

// Solves m x = b exactly; nullopt if inconsistent.
template <class S>
class Solver {
public:
    explicit Solver(const SpMat<S>& m) : e_(int(m.rows())) {
        auto cols = columns(m);
        for (std::size_t j = 0; j < cols.size(); ++j) e_.insert(cols[j], SparseVec<S>::unit(int(j)));
    }
    std::optional<SparseVec<S>> solve(const SparseVec<S>& b) const { return e_.coordinates(b); }
    int rank() const { return e_.rank(); }

private:
    Echelon<S> e_;
};

// A chain complex C_lo .. C_hi with d[n]: C_n -> C_{n-1}.
template <class S>
struct ChainComplex {
    std::vector<int> dims;      // dims[n]
    std::vector<SpMat<S>> d;    // d[n] is dims[n-1] x dims[n]; d[0] is 0 x dims[0]

    int top() const { return int(dims.size()) - 1; }
    const SpMat<S>& diff(int n) const { return d.at(std::size_t(n)); }
};

// Homology in one degree with chosen representatives and a coordinate map.
template <class S>
class HomologyBasis {
public:
    HomologyBasis() = default;

    // d_out: C_n -> C_{n-1} (may have zero rows), d_in: C_{n+1} -> C_n.
    HomologyBasis(const SpMat<S>& d_out, const SpMat<S>& d_in, int dim) : ech_(dim), chain_dim_(dim) {
        for (auto& c : columns(d_in)) {
            if (ech_.insert(std::move(c))) ++boundary_rank_;
        }
        auto cycles = kernel(d_out);
        cycle_dim_ = int(cycles.size());
        for (auto& z : cycles) {
            SparseVec<S> tag = SparseVec<S>::unit(int(reps_.size()));
            if (ech_.insert(z, tag)) reps_.push_back(z);
        }
    }

    int dim() const { return int(reps_.size()); }
    int cycle_dim() const { return cycle_dim_; }
    int boundary_rank() const { return boundary_rank_; }
    int chain_dim() const { return chain_dim_; }
    const std::vector<SparseVec<S>>& reps() const { return reps_; }

    // Coordinates of the class of a cycle in terms of reps.
    std::vector<S> coords(const SparseVec<S>& cycle) const {
        auto c = ech_.coordinates(cycle);
        if (!c) throw std::logic_error("vector is not a cycle of the complex");
        std::vector<S> out(reps_.size(), S(0));
        for (std::size_t k = 0; k < c->nnz(); ++k) out[c->idx[k]] = c->val[k];
        return out;
    }

    bool is_boundary(const SparseVec<S>& v) const {
        auto c = ech_.coordinates(v);
        if (!c) return false;
        return c->empty();
    }

private:
    Echelon<S> ech_;
    std::vector<SparseVec<S>> reps_;
    int chain_dim_ = 0;
    int cycle_dim_ = 0;
    int boundary_rank_ = 0;
};

// Dense matrix over S, used for maps between (small) homology spaces.
template <class S>
using DenseMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
int dense_rank(const DenseMat<S>& m) {
    std::vector<SparseVec<S>> cols(m.cols());
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r) cols[c].push(r, m(r, c));
    return rank_of(cols, int(m.rows()));
}

template <class S>
bool dense_is_zero(const DenseMat<S>& m) {
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            if (!is_zero(m(r, c))) return false;
    return true;
}

template <class S>
DenseMat<S> dense_zero(int r, int c) {
    DenseMat<S> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = S(0);
    return m;
}

// Matrix of the map induced on homology by a chain-level map f: C_n -> D_m.
template <class S, class F>
DenseMat<S> induced_map(const HomologyBasis<S>& src, const HomologyBasis<S>& dst, F&& f) {
    DenseMat<S> m = dense_zero<S>(dst.dim(), src.dim());
    for (int j = 0; j < src.dim(); ++j) {
        auto c = dst.coords(f(src.reps()[j]));
        for (int i = 0; i < dst.dim(); ++i) m(i, j) = c[i];
    }
    return m;
}

// im(f) = ker(g) for f: U -> V, g: V -> W, given dim V.
template <class S>
bool exact_at(const DenseMat<S>& f, const DenseMat<S>& g, int dimV) {
    if (!dense_is_zero<S>(DenseMat<S>(g * f))) return false;
    return dense_rank(f) == dimV - dense_rank(g);
}

}  // namespace nch
