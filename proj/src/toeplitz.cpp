#include "nch/toeplitz.hpp"

#include <Eigen/Eigenvalues>

#include <cctype>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace nch {

// ---------------------------------------------------------------------------
// Laurent symbols

Laurent Laurent::monomial(int k, const Q& c) {
    Laurent l;
    l.set(k, c);
    return l;
}

Laurent Laurent::from_coeffs(const std::map<int, Q>& c) {
    Laurent l;
    for (const auto& [k, v] : c) l.set(k, l.at(k) + v);
    return l;
}

Q Laurent::at(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Q(0) : it->second;
}

void Laurent::set(int k, const Q& c) {
    if (c == 0)
        c_.erase(k);
    else
        c_[k] = c;
}

int Laurent::min_degree() const { return c_.empty() ? 0 : c_.begin()->first; }
int Laurent::max_degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }
int Laurent::width() const { return std::max(std::abs(min_degree()), std::abs(max_degree())); }

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : c_) {
        Q a = v;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        } else if (a < 0) {
            os << "-";
            a = -a;
        }
        first = false;
        bool unit = a == 1;
        if (!unit || k == 0) os << a.str();
        if (k != 0) {
            os << "z";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [k, v] : b.c_) r.set(k, r.at(k) + v);
    return r;
}

Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [k, v] : b.c_) r.set(k, r.at(k) - v);
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    std::map<int, Q> acc;
    for (const auto& [i, x] : a.c_)
        for (const auto& [j, y] : b.c_) acc[i + j] += x * y;
    Laurent r;
    for (const auto& [k, v] : acc) r.set(k, v);
    return r;
}

Laurent operator*(const Q& s, const Laurent& a) {
    Laurent r;
    for (const auto& [k, v] : a.c_) r.set(k, s * v);
    return r;
}

namespace {

[[noreturn]] void parse_error(const std::string& s, const std::string& why) {
    throw std::invalid_argument("cannot parse symbol \"" + s + "\": " + why);
}

}  // namespace

Laurent Laurent::parse(const std::string& s) {
    Laurent out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto read_int = [&]() -> std::optional<long> {
        skip();
        std::size_t st = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t ds = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == ds) {
            i = st;
            return std::nullopt;
        }
        return std::stol(s.substr(st, i - st));
    };
    skip();
    if (i == s.size()) parse_error(s, "empty");
    bool first = true;
    while (true) {
        skip();
        if (i == s.size()) break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            parse_error(s, "expected + or - at position " + std::to_string(i));
        }
        first = false;
        skip();
        Q coef(1);
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            auto num = read_int();
            coef = Q(*num);
            have_coef = true;
            skip();
            if (i < s.size() && s[i] == '/') {
                ++i;
                auto den = read_int();
                if (!den || *den == 0) parse_error(s, "bad denominator");
                coef /= Q(*den);
            }
            skip();
            if (i < s.size() && s[i] == '*') ++i;
            skip();
        }
        int k = 0;
        if (i < s.size() && s[i] == 'z') {
            ++i;
            k = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
                ++i;
                auto e = read_int();
                if (!e) parse_error(s, "bad exponent");
                k = int(*e);
            }
        } else if (!have_coef) {
            parse_error(s, "expected a coefficient or z at position " + std::to_string(i));
        }
        out.set(k, out.at(k) + Q(sign) * coef);
    }
    return out;
}

// ---------------------------------------------------------------------------
// half-line operators

HalfLineOperator HalfLineOperator::toeplitz(const Laurent& f) {
    HalfLineOperator h;
    h.sym_ = f;
    return h;
}

HalfLineOperator HalfLineOperator::finite(int i, int j, const Q& v) {
    HalfLineOperator h;
    h.add(i, j, v);
    return h;
}

void HalfLineOperator::add(int i, int j, const Q& v) {
    if (v == 0) return;
    auto key = std::make_pair(i, j);
    auto it = fin_.find(key);
    if (it == fin_.end()) {
        fin_.emplace(key, v);
        return;
    }
    it->second += v;
    if (it->second == 0) fin_.erase(it);
}

Q HalfLineOperator::finite_trace() const {
    Q s(0);
    for (const auto& [ij, v] : fin_)
        if (ij.first == ij.second) s += v;
    return s;
}

Q HalfLineOperator::trace() const {
    if (!is_finite_rank()) throw std::logic_error("trace of an operator with nonzero symbol " + sym_.str());
    return finite_trace();
}

Q HalfLineOperator::entry(int i, int j) const {
    auto it = fin_.find({i, j});
    return sym_.at(i - j) + (it == fin_.end() ? Q(0) : it->second);
}

HalfLineOperator operator+(const HalfLineOperator& a, const HalfLineOperator& b) {
    HalfLineOperator r = a;
    r.sym_ = a.sym_ + b.sym_;
    for (const auto& [ij, v] : b.fin_) r.add(ij.first, ij.second, v);
    return r;
}

HalfLineOperator operator-(const HalfLineOperator& a, const HalfLineOperator& b) { return a + Q(-1) * b; }

HalfLineOperator operator*(const Q& s, const HalfLineOperator& a) {
    HalfLineOperator r;
    r.sym_ = s * a.sym_;
    for (const auto& [ij, v] : a.fin_) r.add(ij.first, ij.second, s * v);
    return r;
}

HalfLineOperator operator*(const HalfLineOperator& a, const HalfLineOperator& b) {
    HalfLineOperator r;
    r.sym_ = a.sym_ * b.sym_;
    // T_a T_b - T_ab: (i, j) entry is -sum_{l < 0} a_{i-l} b_{l-j}
    for (const auto& [da, x] : a.sym_.coeffs())
        for (const auto& [db, y] : b.sym_.coeffs())
            for (int l = -1; l >= -std::max(0, da); --l) {
                int i = da + l, j = l - db;
                if (i >= 0 && j >= 0) r.add(i, j, -x * y);
            }
    // T_a L
    for (const auto& [kj, v] : b.fin_)
        for (const auto& [d, x] : a.sym_.coeffs())
            if (kj.first + d >= 0) r.add(kj.first + d, kj.second, x * v);
    // K T_b
    for (const auto& [ik, v] : a.fin_)
        for (const auto& [d, y] : b.sym_.coeffs())
            if (ik.second - d >= 0) r.add(ik.first, ik.second - d, v * y);
    // K L
    for (const auto& [ik, v] : a.fin_)
        for (const auto& [kj, w] : b.fin_)
            if (ik.second == kj.first) r.add(ik.first, kj.second, v * w);
    return r;
}

// ---------------------------------------------------------------------------
// truncated matrices and the trace cocycle

DenseMat<Q> toeplitz_matrix(const Laurent& f, int N) {
    if (N < f.width()) throw std::invalid_argument("N = " + std::to_string(N) + " is below the symbol width " + std::to_string(f.width()));
    DenseMat<Q> m = dense_zero<Q>(N + 1, N + 1);
    for (int j = 0; j <= N; ++j)
        for (int k = 0; k <= N; ++k) m(j, k) = f.at(j - k);
    return m;
}

Q commutator_trace_truncated(const Laurent& f, const Laurent& g, int N) {
    int d = 2 * N + 1;
    auto mult = [&](const Laurent& s) {
        DenseMat<Q> m = dense_zero<Q>(d, d);
        for (int j = -N; j <= N; ++j)
            for (int k = -N; k <= N; ++k) m(j + N, k + N) = s.at(j - k);
        return m;
    };
    DenseMat<Q> e = dense_zero<Q>(d, d);
    for (int j = 0; j <= N; ++j) e(j + N, j + N) = Q(1);
    DenseMat<Q> mf = mult(f), mg = mult(g);
    DenseMat<Q> c = e * mg - mg * e;
    DenseMat<Q> prod = mf * c;
    Q t(0);
    for (int i = 0; i < d; ++i) t += prod(i, i);
    return t;
}

Q commutator_trace_fourier(const Laurent& f, const Laurent& g) {
    Q s(0);
    for (const auto& [k, v] : g.coeffs()) s += Q(k) * f.at(-k) * v;
    return s;
}

int commutator_threshold(const Laurent& f, const Laurent& g) { return f.width() + g.width(); }

Q cocycle_phi(const Laurent& f, const Laurent& g) {
    using H = HalfLineOperator;
    H a = H::toeplitz(f) * H::toeplitz(g) - H::toeplitz(f * g);
    H b = H::toeplitz(g) * H::toeplitz(f) - H::toeplitz(g * f);
    return a.trace() - b.trace();
}

// ---------------------------------------------------------------------------
// winding numbers

namespace {

Poly<Q> reversed_poly(const Poly<Q>& p) {
    std::vector<Q> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Poly<Q>(c);
}

// f = z^j q with q(0) != 0
std::pair<int, Poly<Q>> split_symbol(const Laurent& f) {
    int j = f.min_degree();
    std::vector<Q> c(std::size_t(f.max_degree() - j + 1), Q(0));
    for (const auto& [k, v] : f.coeffs()) c[std::size_t(k - j)] = v;
    return {j, Poly<Q>(c)};
}

std::vector<std::complex<double>> numeric_roots(const Poly<Q>& p) {
    int n = p.degree();
    if (n <= 0) return {};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    double lead = p.lead().convert_to<double>();
    for (int i = 0; i < n; ++i) comp(0, i) = -p.coeff(n - 1 - i).convert_to<double>() / lead;
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp);
    std::vector<std::complex<double>> r;
    for (int i = 0; i < n; ++i) r.push_back(es.eigenvalues()(i));
    return r;
}

}  // namespace

std::optional<int> schur_cohn_inside(const Poly<Q>& p) {
    int n = p.degree();
    if (n <= 0) return 0;
    if (p.coeff(0) == 0) return std::nullopt;
    // zeros on the circle are common zeros of p and its reversal
    if (gcd(p, reversed_poly(p)).degree() > 0) return std::nullopt;
    Poly<Q> cur = p;
    int offset = 0;
    // track: inside(p) = offset + sign * inside(cur)
    int sign = 1;
    while (cur.degree() > 0) {
        int m = cur.degree();
        Q a0 = cur.coeff(0), am = cur.lead();
        Q delta = a0 * a0 - am * am;
        if (delta == 0) return std::nullopt;
        Poly<Q> t = Poly<Q>(a0) * cur - Poly<Q>(am) * reversed_poly(cur);
        if (delta < 0) {
            offset += sign * m;
            sign = -sign;
        }
        cur = t;
        if (cur.coeff(0) == 0) return std::nullopt;
    }
    return offset;
}

Winding winding_number(const Laurent& f) {
    if (f.is_zero()) throw std::invalid_argument("zero symbol is not invertible");
    auto [j, q] = split_symbol(f);
    Winding w;
    auto inside = schur_cohn_inside(q);
    if (inside) {
        w.value = j + *inside;
        w.method = "Schur-Cohn (exact)";
        return w;
    }
    auto roots = numeric_roots(q);
    double margin = 1.0;
    int count = 0;
    for (auto z : roots) {
        margin = std::min(margin, std::abs(std::abs(z) - 1.0));
        if (std::abs(z) < 1.0) ++count;
    }
    if (margin < 1e-8) throw std::domain_error("symbol " + f.str() + " vanishes on or too close to the unit circle");
    w.value = j + count;
    w.exact = false;
    std::ostringstream os;
    os << "companion eigenvalues (Schur-Cohn degenerate; distance to circle >= " << margin << ")";
    w.method = os.str();
    return w;
}

// ---------------------------------------------------------------------------
// the index on the operator model

namespace {

// s with s q = 1 mod z^{K+1}
Poly<Q> series_inverse(const Poly<Q>& q, int K) {
    std::vector<Q> s(std::size_t(K) + 1, Q(0));
    Q q0 = q.coeff(0);
    for (int k = 0; k <= K; ++k) {
        Q acc = k == 0 ? Q(1) : Q(0);
        for (int i = 1; i <= k && i <= q.degree(); ++i) acc -= q.coeff(i) * s[std::size_t(k - i)];
        s[std::size_t(k)] = acc / q0;
    }
    return Poly<Q>(s);
}

Laurent shifted(const Poly<Q>& p, int shift, bool invert_variable) {
    Laurent l;
    for (int k = 0; k <= p.degree(); ++k) l.set(invert_variable ? shift - k : shift + k, p.coeff(k));
    return l;
}

// tr(1 - T_g T_f) - tr(1 - T_f T_g); the Toeplitz parts must have zero diagonal.
std::optional<Q> parametrix_index(const Laurent& f, const Laurent& g) {
    using H = HalfLineOperator;
    H one(Q(1));
    H a = one - H::toeplitz(g) * H::toeplitz(f);
    H b = one - H::toeplitz(f) * H::toeplitz(g);
    if (a.symbol().at(0) != 0 || b.symbol().at(0) != 0) return std::nullopt;
    return a.finite_trace() - b.finite_trace();
}

}  // namespace

ToeplitzIndexReport toeplitz_index(const Laurent& f, int n_lo, int n_hi) {
    ToeplitzIndexReport rep;
    rep.f = f;
    rep.winding = winding_number(f);
    auto [j, q] = split_symbol(f);
    int D = q.degree();
    std::optional<int> inside = schur_cohn_inside(q);
    Laurent g_last;
    auto record = [&](int n, const Laurent& g) {
        auto v = parametrix_index(f, g);
        if (!v) throw std::logic_error("parametrix leaves a diagonal Toeplitz remainder");
        rep.per_n.emplace_back(n, *v);
        g_last = g;
    };
    if (D == 0) {
        rep.parametrix = "laurent";
        for (int n = n_lo; n <= n_hi; ++n) record(n, Laurent::monomial(-j, Q(1) / q.coeff(0)));
    } else if (inside && *inside == 0) {
        rep.parametrix = "analytic series";
        for (int n = n_lo; n <= n_hi; ++n) record(n, shifted(series_inverse(q, n), -j, false));
    } else if (inside && *inside == D) {
        // q(z) = z^D qr(1/z) with qr the reversal, zeros outside the disk
        rep.parametrix = "anti-analytic series";
        Poly<Q> qr = reversed_poly(q);
        for (int n = n_lo; n <= n_hi; ++n) record(n, shifted(series_inverse(qr, n), -j - D, true));
    } else {
        // zeros on both sides: Fourier coefficients of 1/f by a large DFT
        rep.parametrix = "numeric";
        const int M = 4096, K = 400;
        std::vector<std::complex<double>> vals(M);
        const double pi = std::acos(-1.0);
        for (int l = 0; l < M; ++l) {
            std::complex<double> z = std::polar(1.0, 2 * pi * l / M), s = 0;
            for (const auto& [k, v] : f.coeffs()) s += v.convert_to<double>() * std::pow(z, k);
            vals[std::size_t(l)] = 1.0 / s;
        }
        auto gk = [&](int k) {
            std::complex<double> s = 0;
            for (int l = 0; l < M; ++l) s += vals[std::size_t(l)] * std::polar(1.0, -2 * pi * l * k / M);
            return s / double(M);
        };
        std::complex<double> acc = 0;
        for (int k = 1; k <= K; ++k) acc += double(k) * (gk(k) * f.at(-k).convert_to<double>() - f.at(k).convert_to<double>() * gk(-k));
        double r = std::round(acc.real());
        if (std::abs(acc - r) > 1e-6) throw std::domain_error("numeric parametrix index is not within 1e-6 of an integer");
        rep.per_n.emplace_back(K, Q(long(r)));
        rep.index = Q(long(r));
        rep.stabilized = true;
    }
    if (rep.parametrix != "numeric") {
        rep.index = rep.per_n.back().second;
        rep.stabilized = rep.per_n.size() >= 2 && rep.per_n[rep.per_n.size() - 2].second == rep.index;
        rep.phi_inverse = cocycle_phi(g_last, f);
        rep.assertions.push_back({"index = -phi(g, f) for the parametrix symbol g", rep.index == -rep.phi_inverse,
                                  rep.index.str() + " vs " + rep.phi_inverse.str()});
    }
    const std::string tag = "f = " + f.str();
    rep.assertions.push_back({tag + ": index stabilized in the truncation order", rep.stabilized, ""});
    rep.assertions.push_back({tag + ": |index| = |winding|", abs(rep.index) == Q(std::abs(rep.winding.value)),
                              rep.index.str() + " vs " + std::to_string(rep.winding.value)});
    rep.assertions.push_back({tag + ": index = " + std::to_string(index_sign_convention) + " * winding",
                              rep.index == Q(index_sign_convention * rep.winding.value), ""});
    return rep;
}

// ---------------------------------------------------------------------------

OddToeplitzReport odd_toeplitz_check(int power, int nmax) {
    using H = HalfLineOperator;
    OddToeplitzReport rep;
    const std::string tag = "u = z^" + std::to_string(power);
    LiftData<Laurent, H> ld;
    ld.rho = [](const Laurent& a) { return H::toeplitz(a); };
    ld.tau = [](const H& x) { return x.trace(); };
    ld.zero = H(Q(0));
    ld.one = H(Q(1));
    // tau[R, I] = 0 on sample generators
    bool tr_ok = true;
    std::vector<H> rs{H::toeplitz(Laurent::monomial(1)), H::toeplitz(Laurent::monomial(-1)),
                      H::toeplitz(Laurent(Q(2)) + Laurent::monomial(2, Q(3))), H::finite(0, 1, Q(1)), H::finite(2, 0, Q(5))};
    for (const auto& a : rs)
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) {
                H b = H::finite(i, k, Q(1));
                if ((a * b - b * a).trace() != 0) tr_ok = false;
            }
    rep.assertions.push_back({"operator trace vanishes on [R, I] (sampled generators)", tr_ok, ""});

    Laurent u = Laurent::monomial(power), ui = Laurent::monomial(-power);
    RingMatrix<Laurent> um1(1, u - Laurent(Q(1))), uim1(1, ui - Laurent(Q(1)));
    RingMatrix<H> P(1, H::toeplitz(u)), Qm(1, H::toeplitz(ui));
    std::function<Q(const H&)> tf = ld.tau;
    Q expected(-power);
    for (int n = 1; n <= nmax; ++n) {
        IndexValue v{tag, n, odd_index_direct<H>(P, Qm, n, tf, ld.zero, ld.one), odd_index_paired(ld, um1, uim1, n)};
        std::string t = tag + ", n = " + std::to_string(n);
        rep.assertions.push_back({t + ": direct formula = <cn, Ch>", v.equal(), v.direct.str() + " vs " + v.paired.str()});
        rep.assertions.push_back({t + ": index = " + expected.str(), v.direct == expected, v.direct.str()});
        rep.values.push_back(v);
        auto c = connecting_idempotent<H>(P, Qm, n, ld.zero, ld.one, [](const H& x) { return x.is_finite_rank(); });
        for (auto& a : c.assertions) a.name = tag + ": " + a.name;
        append(rep.assertions, c.assertions);
        Q te = mtrace<H>(c.en - e0_of(1, ld.zero, ld.one), tf);
        rep.assertions.push_back({t + ": tau(e_n - e_0) = index", te == expected, te.str()});
        if (n == 1 && power == 1) {
            bool shape = c.x(0, 0) == ld.zero && c.y(0, 0) == H::finite(0, 0, Q(1));
            rep.assertions.push_back({tag + ": x = 0 and y = rank-one projection onto z^0", shape, ""});
        }
    }
    return rep;
}

Assertions toeplitz_property_checks(std::uint64_t seed, int samples) {
    Assertions out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(-3, 3), coef(-4, 4), cnt(1, 3);
    auto random_symbol = [&] {
        Laurent l;
        int k = cnt(rng);
        for (int i = 0; i < k; ++i) {
            int d = deg(rng);
            l.set(d, l.at(d) + Q(coef(rng)));
        }
        return l;
    };
    bool trunc = true, stable = true, phi_eq = true, anti = true, cyc = true, unit = true;
    std::string det;
    for (int s = 0; s < samples; ++s) {
        Laurent f = random_symbol(), g = random_symbol(), h = random_symbol();
        int thr = commutator_threshold(f, g);
        Q four = commutator_trace_fourier(f, g);
        Q first = commutator_trace_truncated(f, g, thr);
        if (first != four) {
            trunc = false;
            det = f.str() + " , " + g.str();
        }
        for (int N = thr + 1; N <= thr + 3; ++N)
            if (commutator_trace_truncated(f, g, N) != first) stable = false;
        if (cocycle_phi(f, g) != four) phi_eq = false;
        if (cocycle_phi(f, g) != -cocycle_phi(g, f)) anti = false;
        Q bphi = cocycle_phi(f * g, h) - cocycle_phi(f, g * h) + cocycle_phi(h * f, g);
        if (bphi != 0) cyc = false;
        if (cocycle_phi(Laurent(Q(1)), g) != 0) unit = false;
    }
    std::string ns = " (" + std::to_string(samples) + " random symbol pairs)";
    out.push_back({"truncated tr(f[e,g]) = sum_k k f_{-k} g_k" + ns, trunc, det});
    out.push_back({"truncated commutator trace constant for N >= threshold" + ns, stable, ""});
    out.push_back({"phi(f, g) = tr(f[e,g])" + ns, phi_eq, ""});
    out.push_back({"phi antisymmetric" + ns, anti, ""});
    out.push_back({"b phi = 0 on symbol triples" + ns, cyc, ""});
    out.push_back({"phi(1, g) = 0" + ns, unit, ""});
    return out;
}

}  // namespace nch
