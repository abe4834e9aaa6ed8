#pragma once
// Cochains: scalar cyclic cochains on A^(x)(k+1), the R-valued cochain
// algebra on the bar construction (curvature, Chern-Simons and Chern forms),
// and supertraces on forms with the Fedosov product.

#include "nch/forms.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace nch {

using Vec = std::vector<Q>;

// Scalar k-cochain: dense values on the basis tuples of A^(x)(k+1).
struct Cochain {
    int degree = 0;
    Vec values;
};

Cochain zero_cochain(const TensorComplex<Q>& t, int k);
Cochain random_cochain(const TensorComplex<Q>& t, int k, std::mt19937_64& rng, int range = 3);
Cochain cochain_b(const TensorComplex<Q>& t, const Cochain& f);       // f o b
Cochain cochain_lambda(const TensorComplex<Q>& t, const Cochain& f);  // f o lambda
Cochain cochain_norm(const TensorComplex<Q>& t, const Cochain& f);    // f o N
bool is_cyclic_cocycle(const TensorComplex<Q>& t, const Cochain& f);
Q pair(const Cochain& f, const SparseVec<Q>& chain);
// Degree-0 cochain from a linear functional on A.
Cochain functional_cochain(const Vec& tau);

// Coordinates of sum over terms of (x_0 (x) ... (x) x_k) in A^(x)(k+1).
SparseVec<Q> tensor_chain(const TensorComplex<Q>& t, const std::vector<std::vector<Vec>>& terms);

// Dimensions of cyclic cohomology HC^n(A), n <= nmax, from the transposed
// cyclic complex.
std::vector<int> cyclic_cohomology_dims(const Algebra<Q>& a, int nmax);

// R-valued cochains on the bar construction: functions A^(x)k -> R.
struct RCochain {
    int arity = 0;
    std::vector<Vec> values;  // indexed by the lexicographic tuple index
};

class CochainAlgebra {
public:
    CochainAlgebra(Algebra<Q> a, Algebra<Q> r);

    const Algebra<Q>& source() const { return a_; }
    const Algebra<Q>& target() const { return r_; }
    const TupleSpace& space(int arity) const;

    RCochain zero(int arity) const;
    RCochain unit() const;  // arity 0, value 1_R
    RCochain from_map(const std::vector<Vec>& images) const;  // arity 1
    RCochain random(int arity, std::mt19937_64& rng, int range = 2) const;

    RCochain add(const RCochain& x, const RCochain& y, const Q& c = Q(1)) const;  // x + c y
    RCochain scale(const RCochain& x, const Q& c) const;
    RCochain multiply(const RCochain& x, const RCochain& y) const;
    // (b'f)(a_1..a_{k+1}) = sum_{i=1}^{k} (-1)^{k-i} f(.., a_i a_{i+1}, ..)
    RCochain delta(const RCochain& f) const;
    // [x, y] = xy - (-1)^{|x||y|} yx
    RCochain commutator(const RCochain& x, const RCochain& y) const;
    bool equal(const RCochain& x, const RCochain& y) const;

    // tau o x followed by the cyclic norm, as a scalar (arity-1)-cochain.
    Cochain trace_norm(const RCochain& x, const Vec& tau, const TensorComplex<Q>& t) const;

private:
    Vec eval_sparse(const RCochain& f, const std::vector<SparseVec<Q>>& args) const;
    Algebra<Q> a_, r_;
    mutable std::vector<TupleSpace> sp_;
};

// A based linear map rho: A -> R (rho(1) = 1) with its curvature.
class BasedLift {
public:
    BasedLift(const Algebra<Q>& a, const Algebra<Q>& r, std::vector<Vec> images);

    const Algebra<Q>& source() const { return *a_; }
    const Algebra<Q>& target() const { return *r_; }
    const std::vector<Vec>& images() const { return rho_; }
    Vec rho(const Vec& x) const;
    Vec rho_basis(int i) const { return rho_[i]; }
    // omega(a, b) = rho(ab) - rho(a) rho(b)
    Vec omega(int i, int j) const;
    bool is_homomorphism() const;

    // cs_{2n+1} on a basis tuple of A^(x)(2n+1):
    //   int_0^1 tau(rho (t b'rho - t^2 rho^2)^n / n!) N dt
    Q chern_simons(int n, const Vec& tau, const std::vector<int>& tuple) const;
    // ch_{2n+2} on a basis tuple of A^(x)(2n+2): tau(omega^{n+1}/(n+1)!) N
    Q chern(int n, const Vec& tau, const std::vector<int>& tuple) const;

    Cochain chern_simons_cochain(int n, const Vec& tau, const TensorComplex<Q>& t) const;
    Cochain chern_cochain(int n, const Vec& tau, const TensorComplex<Q>& t) const;

private:
    Q cs_term(int n, const Vec& tau, const std::vector<int>& x) const;
    Q ch_term(int n, const Vec& tau, const std::vector<int>& x) const;
    const Algebra<Q>* a_;
    const Algebra<Q>* r_;
    std::vector<Vec> rho_;
    std::vector<Vec> omega_;  // d*d table
};

std::vector<Vec> random_based_map(const Algebra<Q>& a, const Algebra<Q>& r, std::mt19937_64& rng, int range = 2);

// Curvature and Bianchi identity b'omega = -[rho, omega] in the cochain algebra.
Assertions curvature_checks(const CochainAlgebra& ca, const std::vector<Vec>& rho);
// delta^2 = 0 and delta(fg) = (-1)^q (delta f) g + f delta g on random triples.
Assertions cochain_algebra_checks(const CochainAlgebra& ca, std::mt19937_64& rng, int samples = 4);
// b cs_{2n+1} = ch_{2n+2} for n <= nmax, cyclicity of both.
Assertions transgression_checks(const BasedLift& lift, const Vec& tau, int nmax);

// Supertraces on Omega A (components tau_0..tau_N as dense functionals).
using FormFunctional = std::vector<Vec>;

struct SupertraceReport {
    int dim_fedosov = 0;    // (i)  vanishing on Fedosov supercommutators
    int dim_karoubi = 0;    // (ii) kappa-invariant, tau_{n-1} b = 2 tau_{n+1} d
    int dim_rescaled = 0;   // (iii) tau z kappa-invariant (b+B)-cocycle, degrees >= 1
    Assertions assertions;
};

SupertraceReport supertrace_check(const FormComplex<Q>& f, std::mt19937_64& rng);
bool vanishes_on_supercommutators(const FormComplex<Q>& f, const FormFunctional& tau, std::string* where = nullptr);
// f(1 - kappa) = 0 implies f bB = 0 and f P = f, on random kappa-invariant f.
Assertions kappa_invariant_checks(const FormComplex<Q>& f, std::mt19937_64& rng);

}  // namespace nch
