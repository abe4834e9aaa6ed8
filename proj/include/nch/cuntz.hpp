#pragma once
// The Cuntz algebra QA realized as Omega A with the Fedosov product:
// p(a0) q(a1)..q(an) <-> a0 da1..dan. The dihedral part of Q(C~) is
// handled in the closed basis {q(f)^k, p(f) q(f)^k} with coefficients that
// are polynomials in a formal parameter t.

#include "nch/forms.hpp"
#include "nch/polynomial.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nch {

// Element of QA, stored through mu.
class QElement {
public:
    QElement(const FormComplex<Q>& f, GradedChain<Q> c) : f_(&f), c_(std::move(c)) {}
    static QElement p(const FormComplex<Q>& f, const std::vector<Q>& a);
    static QElement q(const FormComplex<Q>& f, const std::vector<Q>& a);

    const GradedChain<Q>& chain() const { return c_; }
    // overflow beyond the truncation is dropped (forms of degree > N form an ideal)
    QElement operator*(const QElement& o) const;
    QElement operator+(const QElement& o) const { return {*f_, c_ + o.c_}; }
    QElement operator-(const QElement& o) const { return {*f_, c_ - o.c_}; }
    friend QElement operator*(const Q& s, const QElement& x) { return {*x.f_, s * x.c_}; }
    bool operator==(const QElement& o) const;
    // canonical automorphism: q -> -q
    QElement gamma() const;
    // folding map QA -> A: q -> 0
    std::vector<Q> fold() const;

private:
    const FormComplex<Q>* f_;
    GradedChain<Q> c_;
};

// p(1) = 1, q(1) = 0, generator relations on all basis pairs, gamma and the
// folding map multiplicative on seeded samples.
Assertions cuntz_relation_checks(const Algebra<Q>& a, int N, std::uint64_t seed, int samples = 6);

// sum_j t^j x_j with x_j in Omega(C~) (Fedosov product)
using TSeries = std::vector<GradedChain<Q>>;

struct SeriesRow {
    int degree = 0;
    std::string word;  // "q(f)^k" or "p(f)q(f)^k"
    Poly<Q> coeff;     // in t; constant for t-free series
};

class Dihedral {
public:
    explicit Dihedral(int N);
    int N() const { return N_; }
    const FormComplex<Q>& forms() const { return f_; }

    GradedChain<Q> one() const;
    GradedChain<Q> f() const;        // iota(2u - 1) = p(f) + q(f)
    GradedChain<Q> f_gamma() const;  // p(f) - q(f)
    GradedChain<Q> p_f() const;
    GradedChain<Q> q_f() const;
    // q(f)^k and p(f) q(f)^k
    const GradedChain<Q>& word(int k, bool with_p) const;

    GradedChain<Q> mul(const GradedChain<Q>& x, const GradedChain<Q>& y) const;
    GradedChain<Q> power(const GradedChain<Q>& x, int n) const;
    GradedChain<Q> exp(const GradedChain<Q>& x) const;  // x without constant term
    GradedChain<Q> gamma(const GradedChain<Q>& x) const;
    TSeries tmul(const TSeries& x, const TSeries& y) const;

    // coordinates in the closed basis; throws if x leaves the span
    std::vector<SeriesRow> coordinates(const GradedChain<Q>& x) const;
    std::vector<SeriesRow> coordinates(const TSeries& x) const;
    GradedChain<Q> from_rows(const std::vector<SeriesRow>& rows) const;  // t-free rows only

    GradedChain<Q> log_direct() const;     // -sum (2 f q(f))^n / n
    GradedChain<Q> log_closed() const;     // -sum 2^{2i-1}((i-1)!)^2/(2i-1)! p(f) q(f)^{2i-1}
    TSeries w_exp() const;                 // exp(t L / 2)
    TSeries w_formula() const;             // binomial formula
    GradedChain<Q> w_at(const TSeries& w, const Q& t) const;

private:
    int N_;
    FormComplex<Q> f_;
    std::vector<GradedChain<Q>> qk_, pqk_;
};

struct DihedralReport {
    int N = 0;
    std::vector<SeriesRow> L, W;
    Assertions assertions;
};

DihedralReport dihedral_checks(int N);

std::string series_table(const std::vector<SeriesRow>& rows);

}  // namespace nch
