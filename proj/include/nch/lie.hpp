#pragma once
// Chevalley-Eilenberg homology of gl_r(A), coinvariants under gl_r(k), the
// invariant functionals tr_sigma, and the cyclic-class subcomplex that
// carries cyclic homology.

#include "nch/homology.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nch {

// gl_r(A) with basis E_ij (x) e_k, index (i r + j) dim A + k, and bracket xy - yx.
class GlAlgebra {
public:
    GlAlgebra(Algebra<Q> a, int r);

    const Algebra<Q>& algebra() const { return a_; }
    int r() const { return r_; }
    int dim() const { return dim_; }
    int index(int i, int j, int k) const { return (i * r_ + j) * a_.dim() + k; }
    std::string label(int x) const;
    const SparseVec<Q>& bracket(int x, int y) const { return br_[std::size_t(x) * dim_ + y]; }
    // Lie generators of gl_r(k) inside gl_r(A): E_{i,i+1}, E_{i+1,i} tensored with 1
    // (the identity is central and acts by zero). Needs A unital.
    std::vector<int> scalar_generators() const;
    // Jacobi identity and antisymmetry on all basis triples
    bool is_lie() const;

private:
    Algebra<Q> a_;
    int r_, dim_;
    std::vector<SparseVec<Q>> br_;
};

// Basis of Lambda^n g: increasing n-subsets in lexicographic order.
class ExteriorPower {
public:
    ExteriorPower(int dim, int n);
    int n() const { return n_; }
    int size() const { return int(sets_.size()); }
    const std::vector<int>& set(int i) const { return sets_[std::size_t(i)]; }
    int index(const std::vector<int>& s) const { return idx_.at(s); }
    // sorts an index list in place; returns the permutation sign, 0 on a repeat
    static int normalize(std::vector<int>& s);

private:
    int n_;
    std::vector<std::vector<int>> sets_;
    std::map<std::vector<int>, int> idx_;
};

class CEComplex {
public:
    CEComplex(const GlAlgebra& g, int top);

    const GlAlgebra& lie() const { return g_; }
    const ChainComplex<Q>& complex() const { return c_; }
    const ExteriorPower& wedge(int n) const { return ext_[std::size_t(n)]; }
    // action of the basis vector x on Lambda^n
    SpMat<Q> theta(int x, int n) const;

private:
    const GlAlgebra& g_;
    std::vector<ExteriorPower> ext_;
    ChainComplex<Q> c_;
};

// Quotient of Lambda^* g by the gl_r(k)-action, with induced differential.
struct Coinvariants {
    ChainComplex<Q> complex;
    std::vector<Echelon<Q>> ech;  // per degree: relations, then complement units tagged by quotient coordinate
    std::vector<int> dims;
    SparseVec<Q> project(int n, const SparseVec<Q>& v) const;
};

Coinvariants coinvariants(const CEComplex& ce);

struct CEReport {
    std::string name;
    std::vector<int> full_dims, coinv_dims;
    Assertions assertions;
};

// H_n of Lambda gl_r(A) and of its coinvariants for n <= nmax.
CEReport ce_homology(const Algebra<Q>& a, int r, int nmax);

struct CoinvariantIdentity {
    std::string name;
    int r = 0, n = 0;
    int tensor_coinv = 0;  // dim (g^(x)n)_g
    int tensor_perm = 0;   // n! (dim A)^n
    int wedge_coinv = 0;   // dim (Lambda^n g)_g
    int wedge_perm = 0;    // dim (k[S_n] (x) A^(x)n)_{S_n} with the sign twist
    bool tensor_holds() const { return tensor_coinv == tensor_perm; }
    bool wedge_holds() const { return wedge_coinv == wedge_perm; }
};

CoinvariantIdentity coinvariant_identity(const Algebra<Q>& a, int r, int n);

// tr_sigma : g^(x)n -> A^(x)c (c = number of cycles of sigma)
SparseVec<Q> tr_sigma(const GlAlgebra& g, const std::vector<int>& sigma, const std::vector<int>& xs);
// gl_r(k)-invariance of tr_sigma on all basis tuples (or a seeded sample when large)
bool tr_sigma_invariant(const GlAlgebra& g, const std::vector<int>& sigma, std::uint64_t seed);

struct TraceSpanReport {
    int r = 0, n = 0;
    int functionals = 0;  // n!
    int rank = 0;
    int coinvariant_dim = 0;
    bool span() const { return rank == coinvariant_dim; }
    bool independent() const { return rank == functionals; }
};
// A = C: the tr_sigma as functionals on g^(x)n
TraceSpanReport trace_span(int r, int n);

struct CyclicClassReport {
    std::string name;
    int r = 0;
    std::vector<int> class_dims;   // dim of the cyclic-class span in (Lambda^n g)_g, n = 1..nmax+1
    std::vector<int> lambda_dims;  // dim C^lambda_{n-1}(A)
    std::vector<int> orbit_dims;   // signed Z_n-orbit count on A^(x)n
    std::vector<int> homology;     // H_n of the subcomplex, n = 1..nmax
    std::vector<int> hc;           // HC_{n-1}(A)
    Assertions assertions;
};

// r = nmax + 1 (stable range for the top degree used).
CyclicClassReport cyclic_class_homology(const Algebra<Q>& a, int nmax);

}  // namespace nch
