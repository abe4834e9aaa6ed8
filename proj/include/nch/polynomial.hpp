#pragma once
// Dense univariate polynomials over an exact field.

#include "nch/scalar.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace nch {

template <class S>
class Poly {
public:
    Poly() = default;
    Poly(S c) { if (!is_zero(c)) c_.push_back(std::move(c)); }
    Poly(int c) : Poly(S(c)) {}
    explicit Poly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<S>{S(0), S(1)}); }
    static Poly monomial(int k, S a = S(1)) {
        std::vector<S> c(std::size_t(k) + 1, S(0));
        c[k] = std::move(a);
        return Poly(std::move(c));
    }

    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    bool zero() const { return c_.empty(); }
    S coeff(int k) const { return k >= 0 && k < int(c_.size()) ? c_[k] : S(0); }
    const std::vector<S>& coeffs() const { return c_; }
    S lead() const { return c_.empty() ? S(0) : c_.back(); }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const { return Poly() - *this; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return {};
        std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    S operator()(const S& x) const {
        S r(0);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        std::vector<S> c;
        for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * S(int(i)));
        return Poly(std::move(c));
    }
    // Antiderivative vanishing at 0.
    Poly integral() const {
        std::vector<S> c(c_.size() + 1, S(0));
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + 1] = c_[i] / S(int(i + 1));
        return Poly(std::move(c));
    }
    Poly pow(int e) const {
        Poly r(S(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }
    Poly compose(const Poly& g) const {
        Poly r;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * g + Poly(c_[i]);
        return r;
    }
    // coefficients reversed relative to degree: x^deg p(1/x)
    Poly reversed() const {
        std::vector<S> c(c_.rbegin(), c_.rend());
        return Poly(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<S> c_;
};

template <class S>
std::pair<Poly<S>, Poly<S>> divmod(const Poly<S>& a, const Poly<S>& b) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    Poly<S> q, r = a;
    while (!r.zero() && r.degree() >= b.degree()) {
        Poly<S> t = Poly<S>::monomial(r.degree() - b.degree(), r.lead() / b.lead());
        q += t;
        r -= t * b;
    }
    return {q, r};
}

template <class S>
Poly<S> monic(const Poly<S>& p) {
    if (p.zero()) return p;
    return p * Poly<S>(S(1) / p.lead());
}

// Returns (g, s, t) with s a + t b = g, g monic gcd.
template <class S>
std::tuple<Poly<S>, Poly<S>, Poly<S>> ext_gcd(Poly<S> a, Poly<S> b) {
    Poly<S> s0(S(1)), s1, t0, t1(S(1));
    while (!b.zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        Poly<S> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (a.zero()) return {a, s0, t0};
    Poly<S> inv(S(1) / a.lead());
    return {a * inv, s0 * inv, t0 * inv};
}

template <class S>
Poly<S> gcd(const Poly<S>& a, const Poly<S>& b) { return std::get<0>(ext_gcd(a, b)); }

// Horner evaluation at any element of a unital ring-like type.
template <class S, class R, class Mul, class Add>
R eval_in(const Poly<S>& p, const R& x, const R& one, Mul mul, Add add_scaled) {
    R r = add_scaled(one, S(-1), one);  // zero
    const auto& c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) r = add_scaled(mul(r, x), c[i], one);
    return r;
}

}  // namespace nch
