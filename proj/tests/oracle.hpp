#pragma once
// Independent reference computations for the tests: dense double matrices
// built by plain loops from the structure constants, ranks by full-pivot LU.
// Nothing here goes through the library's chain complexes or elimination.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXd;

// c[(i * d + j) * d + k] = coefficient of e_k in e_i e_j
struct Table {
    int d = 0;
    std::vector<double> c;
    double at(int i, int j, int k) const { return c[std::size_t((i * d + j) * d + k)]; }
};

inline int rank(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::FullPivLU<Mat> lu(m);
    lu.setThreshold(1e-9);
    return int(lu.rank());
}

inline long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline std::vector<int> digits(long idx, int len, int d) {
    std::vector<int> t(static_cast<std::size_t>(len));
    for (int s = len - 1; s >= 0; --s) {
        t[std::size_t(s)] = int(idx % d);
        idx /= d;
    }
    return t;
}

inline long number(const std::vector<int>& t, int d) {
    long r = 0;
    for (int x : t) r = r * d + x;
    return r;
}

// Hochschild b : A^(x)(n+1) -> A^(x)n
inline Mat hochschild_b(const Table& a, int n) {
    int d = a.d;
    Mat m = Mat::Zero(ipow(d, n), ipow(d, n + 1));
    if (n == 0) return m;
    for (long col = 0; col < m.cols(); ++col) {
        auto t = digits(col, n + 1, d);
        for (int i = 0; i <= n; ++i) {
            double sg = (i % 2) ? -1.0 : 1.0;
            int x = t[std::size_t(i)], y = t[std::size_t((i + 1) % (n + 1))];
            for (int k = 0; k < d; ++k) {
                double v = a.at(x, y, k);
                if (v == 0) continue;
                std::vector<int> u;
                if (i < n) {
                    for (int s = 0; s <= n; ++s) {
                        if (s == i) u.push_back(k);
                        else if (s != i + 1) u.push_back(t[std::size_t(s)]);
                    }
                } else {
                    u.push_back(k);
                    for (int s = 1; s < n; ++s) u.push_back(t[std::size_t(s)]);
                }
                m(number(u, d), col) += sg * v;
            }
        }
    }
    return m;
}

// 1 - t on A^(x)(n+1), t(a0,..,an) = (-1)^n (an, a0, .., a_{n-1})
inline Mat one_minus_t(int d, int n) {
    long N = ipow(d, n + 1);
    Mat m = Mat::Identity(N, N);
    double sg = (n % 2) ? -1.0 : 1.0;
    for (long col = 0; col < N; ++col) {
        auto t = digits(col, n + 1, d);
        std::vector<int> u{t.back()};
        for (int s = 0; s < n; ++s) u.push_back(t[std::size_t(s)]);
        m(number(u, d), col) -= sg;
    }
    return m;
}

inline std::vector<int> hh_dims(const Table& a, int nmax) {
    std::vector<int> out;
    for (int n = 0; n <= nmax; ++n) {
        long dim = ipow(a.d, n + 1);
        out.push_back(int(dim - rank(hochschild_b(a, n)) - rank(hochschild_b(a, n + 1))));
    }
    return out;
}

// homology of C / im(1 - t) with the induced b
inline std::vector<int> hc_dims(const Table& a, int nmax) {
    auto induced_rank = [&](int n) {
        if (n == 0) return 0;
        Mat K = one_minus_t(a.d, n - 1);
        Mat b = hochschild_b(a, n);
        Mat both(b.rows(), b.cols() + K.cols());
        both << b, K;
        return rank(both) - rank(K);
    };
    std::vector<int> out;
    for (int n = 0; n <= nmax; ++n) {
        long q = ipow(a.d, n + 1) - rank(one_minus_t(a.d, n));
        out.push_back(int(q - induced_rank(n) - induced_rank(n + 1)));
    }
    return out;
}

// winding number of a Laurent polynomial around the unit circle by summing
// principal-value phase increments on a fine grid
inline int winding(const std::vector<std::pair<int, double>>& f, int samples = 20000) {
    auto eval = [&](double th) {
        std::complex<double> s = 0;
        for (const auto& [k, c] : f) s += c * std::polar(1.0, k * th);
        return s;
    };
    const double pi = std::acos(-1.0);
    double total = 0;
    std::complex<double> prev = eval(0);
    for (int i = 1; i <= samples; ++i) {
        std::complex<double> cur = eval(2 * pi * i / samples);
        total += std::arg(cur / prev);
        prev = cur;
    }
    return int(std::lround(total / (2 * pi)));
}

}  // namespace oracle
