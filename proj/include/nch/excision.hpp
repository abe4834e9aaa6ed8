#pragma once
// Excision in cyclic homology: H-unitality of the kernel, the three
// computable exactness predicates of the long exact sequence, the weight
// decomposition of cyclic chains of square-zero extensions, the reduced
// sequence, and Lie derivatives along derivations.

#include "nch/homology.hpp"

#include <string>
#include <vector>

namespace nch {

struct HUnitalReport {
    std::string algebra;
    int N = 0;
    std::vector<int> dims;  // H_n(I^(x)(*+1), b') for trusted n
    bool h_unital = false;  // all trusted dims vanish
    Assertions assertions;
};

// b'-homology of the unreduced bar complex of I, trusted for n <= N - 1.
HUnitalReport h_unitality(const Algebra<Q>& I, int N);

struct ExcisionReport {
    std::string name;
    int window = 0;
    std::vector<int> hc_i, hc_r, hc_a;
    std::vector<int> rank_i, rank_pi;
    Assertions assertions;  // composite-zero, im = ker, connecting dimension
    bool all_pass() const;
};

// HC_q for q <= window through Connes' complex; the connecting-dimension
// identity is checked for q + 1 <= window.
ExcisionReport excision_check(const Extension<Q>& ext, int window, const std::string& name = "");

// Named extensions: "split" (C x M2 over M2), "square_zero" (upper2 over
// strict_upper2), "trivial" (I = 0 in M2).
Extension<Q> builtin_extension(const std::string& name);

// Cyclic complex of A + M graded by the number of M-letters.
struct GoodwillieReport {
    int p = 0;
    int N = 0;
    std::vector<int> weight_dims;   // dim C^lambda_n(A + M)(p)
    std::vector<int> source_dims;   // coinvariant dims of the cyclic tensor construction
    std::string convention;         // sign convention for which the comparison map is a chain isomorphism
    std::vector<std::string> conventions_tried;
    std::vector<bool> conventions_pass;
    Assertions assertions;
};

// M = A as a bimodule unless actions are given.
GoodwillieReport goodwillie_decomposition(const Algebra<Q>& A, int p, int N);
GoodwillieReport goodwillie_decomposition(const Algebra<Q>& A, const std::vector<SpMat<Q>>& left,
                                          const std::vector<SpMat<Q>>& right, int p, int N);

struct NotADerivation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// D as a dim x dim matrix acting on coordinates.
void require_derivation(const Algebra<Q>& a, const SpMat<Q>& D);
// Inner derivation [x, .]
SpMat<Q> inner_derivation(const Algebra<Q>& a, const std::vector<Q>& x);

// L_D on reduced forms Omega^n.
SpMat<Q> lie_derivative(const FormComplex<Q>& f, const SpMat<Q>& D, int n);

struct DerivationReport {
    std::string name;
    Assertions assertions;
};

// L_D commutes with b, d, kappa on Omega^{<= N}; L_D S = 0 on HC_n for
// 2 <= n <= nmax (mixed model); optionally L_D = 0 on HH_n.
DerivationReport derivation_check(const Algebra<Q>& a, const SpMat<Q>& D, int nmax, bool expect_zero_on_hh,
                                  const std::string& name);

}  // namespace nch
