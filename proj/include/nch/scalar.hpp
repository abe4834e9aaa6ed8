#pragma once
// Exact scalars: GMP rationals and Gaussian rationals over them, plus the
// Eigen traits needed to store them in Eigen sparse/dense containers.

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nch {

using Q = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                        boost::multiprecision::et_off>;
using Z = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                        boost::multiprecision::et_off>;

template <class R>
struct Gaussian {
    R re{0};
    R im{0};

    Gaussian() = default;
    Gaussian(int v) : re(v) {}
    Gaussian(const R& r) : re(r) {}
    Gaussian(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
    Gaussian& operator*=(const Gaussian& o) {
        R r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o) {
        R n = o.re * o.re + o.im * o.im;
        if (n == 0) throw std::domain_error("division by zero");
        R r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = std::move(r);
        return *this;
    }
    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    Gaussian operator-() const { return {-re, -im}; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
    Gaussian conj() const { return {re, -im}; }
    friend R real(const Gaussian& a) { return a.re; }
    friend R imag(const Gaussian& a) { return a.im; }
    friend Gaussian conj(const Gaussian& a) { return a.conj(); }
};

using QI = Gaussian<Q>;

// Uniform access used by templated code.
template <class S> struct ScalarOps;

template <>
struct ScalarOps<Q> {
    static bool is_zero(const Q& x) { return x == 0; }
    static std::string str(const Q& x) { return x.str(); }
    static Q parse(std::string_view s);
};

template <>
struct ScalarOps<QI> {
    static bool is_zero(const QI& x) { return x.re == 0 && x.im == 0; }
    static std::string str(const QI& x);
    static QI parse(std::string_view s);
};

template <class S> inline bool is_zero(const S& x) { return ScalarOps<S>::is_zero(x); }
template <class S> inline std::string to_string(const S& x) { return ScalarOps<S>::str(x); }
template <class S> inline S parse_scalar(std::string_view s) { return ScalarOps<S>::parse(s); }

Q factorial(int n);
Q binomial(const Q& x, int k);   // x(x-1)...(x-k+1)/k!, x rational

}  // namespace nch

namespace Eigen {

template <>
struct NumTraits<nch::Q> : GenericNumTraits<nch::Q> {
    using Real = nch::Q;
    using NonInteger = nch::Q;
    using Nested = nch::Q;
    using Literal = nch::Q;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 40,
        MulCost = 80
    };
    static Real epsilon() { return 0; }
    static Real dummy_precision() { return 0; }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<nch::QI> : GenericNumTraits<nch::QI> {
    using Real = nch::Q;
    using NonInteger = nch::QI;
    using Nested = nch::QI;
    using Literal = nch::QI;
    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 20,
        AddCost = 80,
        MulCost = 320
    };
    static Real epsilon() { return 0; }
    static Real dummy_precision() { return 0; }
    static int digits10() { return 0; }
};

}  // namespace Eigen
