#pragma once
// Hochschild, cyclic (mixed b+B model and Connes' C^lambda model) and
// truncated periodic cyclic homology, with maps induced on homology and the
// SBI exactness checks.

#include "nch/forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nch {

template <class S>
struct HomologyResult {
    int degree = 0;
    int dim = 0;
    bool trusted = true;
    HomologyBasis<S> basis;
};

// Checks d_{n-1} d_n = 0 for 1 <= n <= top; throws on failure.
template <class S>
void require_square_zero(const ChainComplex<S>& c) {
    for (int n = 2; n <= c.top(); ++n) {
        SpMat<S> dd = c.diff(n - 1) * c.diff(n);
        if (!is_zero(dd)) throw std::logic_error("differential does not square to zero at degree " + std::to_string(n));
    }
}

// Homology in degrees 0..max_degree (needs the complex up to max_degree+1
// for full information; missing top differential is treated as zero).
template <class S>
std::vector<HomologyResult<S>> homology(const ChainComplex<S>& c, int max_degree, int trusted_top) {
    require_square_zero(c);
    std::vector<HomologyResult<S>> out;
    for (int n = 0; n <= max_degree && n <= c.top(); ++n) {
        SpMat<S> din = n + 1 <= c.top() ? c.diff(n + 1) : SpMat<S>(c.dims[n], 0);
        HomologyResult<S> r;
        r.degree = n;
        r.basis = HomologyBasis<S>(c.diff(n), din, c.dims[n]);
        r.dim = r.basis.dim();
        r.trusted = n <= trusted_top;
        out.push_back(std::move(r));
    }
    return out;
}

// Matrix of the map induced on homology by the chain map m; verifies that
// cycles go to cycles and boundaries (columns of src_in) go to boundaries.
template <class S>
struct HomologyMap {
    DenseMat<S> matrix;
    bool well_defined = true;
};

template <class S>
HomologyMap<S> map_on_homology(const HomologyBasis<S>& src, const HomologyBasis<S>& dst, const SpMat<S>& m,
                               const SpMat<S>& src_in) {
    HomologyMap<S> h;
    h.matrix = dense_zero<S>(dst.dim(), src.dim());
    for (int j = 0; j < src.dim(); ++j) {
        auto img = apply(m, src.reps()[j]);
        try {
            auto c = dst.coords(img);
            for (int i = 0; i < dst.dim(); ++i) h.matrix(i, j) = c[i];
        } catch (const std::logic_error&) {
            h.well_defined = false;
        }
    }
    for (auto& col : columns(src_in))
        if (!dst.is_boundary(apply(m, col))) h.well_defined = false;
    return h;
}

template <class S>
HomologyMap<S> map_on_homology(const HomologyResult<S>& src, const HomologyResult<S>& dst, const SpMat<S>& m,
                               const SpMat<S>& src_in) {
    return map_on_homology(src.basis, dst.basis, m, src_in);
}

template <class S>
ChainComplex<S> hochschild_complex(const FormComplex<S>& f) {
    ChainComplex<S> c;
    for (int n = 0; n <= f.top(); ++n) {
        c.dims.push_back(f.dim(n));
        c.d.push_back(f.b(n));
    }
    return c;
}

// Tot_n = sum_p u^p Omega^{n-2p}, D(u^p w) = u^p bw + u^{p-1} Bw.
template <class S>
class MixedComplex {
public:
    explicit MixedComplex(const FormComplex<S>& f);

    const ChainComplex<S>& complex() const { return c_; }
    int top() const { return c_.top(); }
    int offset(int n, int p) const { return off_.at(std::size_t(n)).at(std::size_t(p)); }
    // S : Tot_n -> Tot_{n-2}, drops u^0 and lowers the power of u
    SpMat<S> s_op(int n) const;
    // I : Omega^n -> Tot_n, inclusion as u^0
    SpMat<S> i_op(int n) const;
    // Connecting map Tot_n -> Omega^{n+1}: B applied to the u^0 part
    SpMat<S> b_conn(int n) const;
    // (p, local index) of a Tot_n coordinate
    std::pair<int, int> locate(int n, int idx) const;
    std::string label(int n, int idx) const;

private:
    const FormComplex<S>& f_;
    ChainComplex<S> c_;
    std::vector<std::vector<int>> off_;
};

// C^lambda_n = A^(x)(n+1) / (1 - lambda) with basis the lexicographically
// minimal rotations whose orbit survives the sign action.
template <class S>
class ConnesComplex {
public:
    ConnesComplex(const TensorComplex<S>& t, int top);

    const ChainComplex<S>& complex() const { return c_; }
    int top() const { return c_.top(); }
    // C_n -> C^lambda_n
    const SpMat<S>& proj(int n) const { return proj_.at(std::size_t(n)); }
    // C^lambda_n -> C_n (representative tuples)
    const SpMat<S>& section(int n) const { return sec_.at(std::size_t(n)); }
    const std::vector<int>& reps(int n) const { return reps_.at(std::size_t(n)); }
    std::string label(int n, int idx) const { return t_.label(n, reps_[n][idx]); }
    const TensorComplex<S>& tensors() const { return t_; }

private:
    const TensorComplex<S>& t_;
    ChainComplex<S> c_;
    std::vector<SpMat<S>> proj_, sec_;
    std::vector<std::vector<int>> reps_;
};

// Quotient complex by a subcomplex spanned by a subset of basis vectors
// (dropped[n]); throws if the span is not a subcomplex.
template <class S>
struct QuotientComplex {
    ChainComplex<S> complex;
    std::vector<SpMat<S>> proj;  // C_n -> quotient_n
};

template <class S>
QuotientComplex<S> quotient_by_basis(const ChainComplex<S>& c, const std::vector<std::vector<int>>& dropped);

enum class CyclicModel { mixed, connes };

struct DimsReport {
    std::vector<int> dims;
    std::vector<bool> trusted;
};

template <class S>
DimsReport dims_of(const std::vector<HomologyResult<S>>& hs) {
    DimsReport r;
    for (const auto& h : hs) {
        r.dims.push_back(h.dim);
        r.trusted.push_back(h.trusted);
    }
    return r;
}

// HH_n for n <= max_degree, truncation N = max_degree + 2.
template <class S>
std::vector<HomologyResult<S>> hochschild_homology(const Algebra<S>& a, int max_degree);

// HC_n for n <= max_degree with truncation N = max_degree + 2.
template <class S>
std::vector<HomologyResult<S>> cyclic_homology(const Algebra<S>& a, int max_degree, CyclicModel model);

// Exactness of ... -> HH_n -I-> HC_n -S-> HC_{n-2} -B-> HH_{n-1} -> ... for n <= nmax.
template <class S>
Assertions sbi_check(const Algebra<S>& a, int nmax);

struct PeriodicEstimate {
    int parity = 0;
    std::vector<int> tower_degrees;   // n along the S-tower
    std::vector<int> tower_dims;      // dim HC_n
    std::vector<bool> s_iso;          // S : HC_n -> HC_{n-2} iso at tower step
    bool stabilized = false;
    int estimate = -1;                // truncation-stabilized estimate
};

template <class S>
PeriodicEstimate periodic_approx(const Algebra<S>& a, int parity, int max_degree);

// Reduced cyclic homology: homology of C^lambda(A) / C^lambda(k).
template <class S>
struct ReducedCyclicReport {
    std::vector<int> hc_k, hc_a, hc_reduced;
    std::vector<int> rank_i, rank_pi;
    Assertions assertions;
};

template <class S>
ReducedCyclicReport<S> reduced_cyclic(const Algebra<S>& a, int nmax);

extern template class MixedComplex<Q>;
extern template class ConnesComplex<Q>;

}  // namespace nch
