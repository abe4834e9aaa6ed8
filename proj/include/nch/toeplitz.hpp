#pragma once
// Toeplitz operators with Laurent-polynomial symbols: truncated matrices on
// the circle basis, the exact trace cocycle, winding numbers by Schur-Cohn,
// and a finite-support operator model on the half line (Toeplitz part plus
// finitely supported matrix) used as the extension ring of the odd index.

#include "nch/kindex.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nch {

class Laurent {
public:
    Laurent() = default;
    Laurent(const Q& c) { set(0, c); }
    static Laurent monomial(int k, const Q& c = Q(1));
    static Laurent from_coeffs(const std::map<int, Q>& c);
    // "z^-1 + 2 + 3z^2", "1/3 - z", "2z^-2"
    static Laurent parse(const std::string& s);

    Q at(int k) const;
    void set(int k, const Q& c);
    const std::map<int, Q>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int min_degree() const;  // 0 for the zero symbol
    int max_degree() const;
    int width() const;       // max |k| over the support
    std::string str() const;

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator-(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Q& s, const Laurent& a);
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

private:
    std::map<int, Q> c_;
};

// T_sym + K on l^2(N), K finitely supported.
class HalfLineOperator {
public:
    HalfLineOperator() = default;
    HalfLineOperator(const Q& c) : sym_(c) {}
    static HalfLineOperator toeplitz(const Laurent& f);
    static HalfLineOperator finite(int i, int j, const Q& v);

    const Laurent& symbol() const { return sym_; }
    const std::map<std::pair<int, int>, Q>& finite_part() const { return fin_; }
    bool is_finite_rank() const { return sym_.is_zero(); }
    Q finite_trace() const;
    // operator trace; only defined on the finite-rank ideal
    Q trace() const;
    Q entry(int i, int j) const;

    friend HalfLineOperator operator+(const HalfLineOperator& a, const HalfLineOperator& b);
    friend HalfLineOperator operator-(const HalfLineOperator& a, const HalfLineOperator& b);
    friend HalfLineOperator operator*(const HalfLineOperator& a, const HalfLineOperator& b);
    friend HalfLineOperator operator*(const Q& s, const HalfLineOperator& a);
    friend bool operator==(const HalfLineOperator& a, const HalfLineOperator& b) {
        return a.sym_ == b.sym_ && a.fin_ == b.fin_;
    }
    friend bool operator!=(const HalfLineOperator& a, const HalfLineOperator& b) { return !(a == b); }

private:
    void add(int i, int j, const Q& v);
    Laurent sym_;
    std::map<std::pair<int, int>, Q> fin_;
};

// (T_f)_{jk} = f_{j-k} on Hardy indices 0..N
DenseMat<Q> toeplitz_matrix(const Laurent& f, int N);

// tr(f [e, g]) on the truncated circle basis z^-N..z^N
Q commutator_trace_truncated(const Laurent& f, const Laurent& g, int N);
// sum_k k f_{-k} g_k
Q commutator_trace_fourier(const Laurent& f, const Laurent& g);
int commutator_threshold(const Laurent& f, const Laurent& g);

// phi(f, g) = tr(T_f T_g - T_fg) - tr(T_g T_f - T_gf) on the operator model
Q cocycle_phi(const Laurent& f, const Laurent& g);

struct Winding {
    int value = 0;
    bool exact = true;
    std::string method;
};
// Number of zeros of p (p(0) != 0) in the open unit disk by the Schur-Cohn
// recursion; nullopt when the test degenerates.
std::optional<int> schur_cohn_inside(const Poly<Q>& p);
Winding winding_number(const Laurent& f);

struct ToeplitzIndexReport {
    Laurent f;
    Winding winding;
    std::vector<std::pair<int, Q>> per_n;  // truncation order of the parametrix, index
    bool stabilized = false;
    Q index;          // parametrix difference tr(1 - T_g T_f) - tr(1 - T_f T_g)
    Q phi_inverse;    // phi(g, f) with g the parametrix symbol
    std::string parametrix;  // "laurent", "analytic series", "anti-analytic series", "numeric"
    Assertions assertions;
};

// Sign convention recorded globally: index = -winding.
constexpr int index_sign_convention = -1;

ToeplitzIndexReport toeplitz_index(const Laurent& f, int n_lo, int n_hi);

// Odd higher trace on the operator model: R = {T_f + K}, I = finite rank,
// tau = operator trace, m = 1; u a Laurent monomial c z^k.
struct OddToeplitzReport {
    std::vector<IndexValue> values;
    Assertions assertions;
};
OddToeplitzReport odd_toeplitz_check(int power, int nmax);

Assertions toeplitz_property_checks(std::uint64_t seed, int samples = 10);

}  // namespace nch
