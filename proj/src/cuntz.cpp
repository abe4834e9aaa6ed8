#include "nch/cuntz.hpp"

#include <random>
#include <sstream>

namespace nch {

QElement QElement::p(const FormComplex<Q>& f, const std::vector<Q>& a) { return {f, f.element(a)}; }

QElement QElement::q(const FormComplex<Q>& f, const std::vector<Q>& a) {
    return {f, f.apply_d(f.element(a), Overflow::drop)};
}

QElement QElement::operator*(const QElement& o) const { return {*f_, f_->fedosov(c_, o.c_, Overflow::drop)}; }

bool QElement::operator==(const QElement& o) const { return c_ == o.c_; }

QElement QElement::gamma() const { return {*f_, f_->parity_twist(c_)}; }

std::vector<Q> QElement::fold() const { return f_->algebra().to_dense(c_.part[0]); }

namespace {

GradedChain<Q> random_chain(const FormComplex<Q>& f, int maxdeg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-2, 2);
    GradedChain<Q> c(f.top());
    for (int n = 0; n <= maxdeg && n <= f.top(); ++n) {
        if (f.dim(n) == 0) continue;
        std::uniform_int_distribution<int> pick(0, f.dim(n) - 1);
        std::vector<std::pair<int, Q>> terms;
        for (int k = 0; k < 2; ++k) terms.emplace_back(pick(rng), Q(coef(rng)));
        c.part[std::size_t(n)] = make_sparse(std::move(terms));
    }
    return c;
}

}  // namespace

Assertions cuntz_relation_checks(const Algebra<Q>& a, int N, std::uint64_t seed, int samples) {
    FormComplex<Q> f(a, N);
    Assertions out;
    const std::string tag = a.name() + ": ";
    auto P = [&](const std::vector<Q>& x) { return QElement::p(f, x); };
    auto Qq = [&](const std::vector<Q>& x) { return QElement::q(f, x); };
    QElement one = P(a.unit());
    out.push_back({tag + "p(1) = 1", one.chain() == f.element(a.unit()), ""});
    out.push_back({tag + "q(1) = 0", Qq(a.unit()).chain().is_zero(), ""});
    bool pr = true, qr = true;
    std::string first_bad;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            auto ei = a.basis_vec(i), ej = a.basis_vec(j), eij = a.multiply(ei, ej);
            if (!(P(eij) == P(ei) * P(ej) + Qq(ei) * Qq(ej))) {
                pr = false;
                if (first_bad.empty()) first_bad = "(" + a.labels()[std::size_t(i)] + ", " + a.labels()[std::size_t(j)] + ")";
            }
            if (!(Qq(eij) == P(ei) * Qq(ej) + Qq(ei) * P(ej))) {
                qr = false;
                if (first_bad.empty()) first_bad = "(" + a.labels()[std::size_t(i)] + ", " + a.labels()[std::size_t(j)] + ")";
            }
        }
    out.push_back({tag + "p(a1 a2) = p(a1)p(a2) + q(a1)q(a2) on all basis pairs", pr, first_bad});
    out.push_back({tag + "q(a1 a2) = p(a1)q(a2) + q(a1)p(a2) on all basis pairs", qr, first_bad});
    std::mt19937_64 rng(seed);
    bool assoc = true, gam = true, fold = true;
    for (int s = 0; s < samples; ++s) {
        QElement x(f, random_chain(f, 2, rng)), y(f, random_chain(f, 2, rng)), z(f, random_chain(f, 2, rng));
        if (!((x * y) * z == x * (y * z))) assoc = false;
        if (!((x * y).gamma() == x.gamma() * y.gamma())) gam = false;
        if ((x * y).fold() != a.multiply(x.fold(), y.fold())) fold = false;
    }
    std::string ns = " (" + std::to_string(samples) + " seeded samples, N = " + std::to_string(N) + ")";
    out.push_back({tag + "Fedosov product associative mod degree > N" + ns, assoc, ""});
    out.push_back({tag + "gamma is multiplicative" + ns, gam, ""});
    out.push_back({tag + "folding map q -> 0 is multiplicative" + ns, fold, ""});
    return out;
}

// ---------------------------------------------------------------------------

namespace {

Algebra<Q> c_tilde() {
    using E = Algebra<Q>::Entry;
    return Algebra<Q>("C~", 2, true, {"1", "u"}, {E{0, 0, 0, Q(1)}, E{0, 1, 1, Q(1)}, E{1, 0, 1, Q(1)}, E{1, 1, 1, Q(1)}});
}

std::string word_name(int k, bool with_p) {
    std::string s = with_p ? "p(f)" : "";
    if (k == 0) return with_p ? s : "1";
    s += "q(f)";
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

}  // namespace

Dihedral::Dihedral(int N) : N_(N), f_(c_tilde(), N) {
    if (N < 2) throw std::invalid_argument("dihedral series need N >= 2");
    GradedChain<Q> q = q_f(), p = p_f();
    qk_.push_back(one());
    for (int k = 1; k <= N; ++k) qk_.push_back(mul(qk_.back(), q));
    for (int k = 0; k <= N; ++k) pqk_.push_back(mul(p, qk_[std::size_t(k)]));
}

GradedChain<Q> Dihedral::one() const { return f_.element(f_.algebra().unit()); }
GradedChain<Q> Dihedral::p_f() const { return f_.element({Q(-1), Q(2)}); }
GradedChain<Q> Dihedral::q_f() const { return f_.apply_d(p_f()); }
GradedChain<Q> Dihedral::f() const { return p_f() + q_f(); }
GradedChain<Q> Dihedral::f_gamma() const { return p_f() - q_f(); }

const GradedChain<Q>& Dihedral::word(int k, bool with_p) const {
    return with_p ? pqk_.at(std::size_t(k)) : qk_.at(std::size_t(k));
}

GradedChain<Q> Dihedral::mul(const GradedChain<Q>& x, const GradedChain<Q>& y) const {
    return f_.fedosov(x, y, Overflow::drop);
}

GradedChain<Q> Dihedral::power(const GradedChain<Q>& x, int n) const {
    GradedChain<Q> r = one();
    for (int i = 0; i < n; ++i) r = mul(r, x);
    return r;
}

GradedChain<Q> Dihedral::exp(const GradedChain<Q>& x) const {
    if (!x.part[0].empty()) throw std::invalid_argument("exp needs an element without degree-0 part");
    GradedChain<Q> r = one(), term = one();
    for (int k = 1; k <= N_; ++k) {
        term = Q(1, k) * mul(term, x);
        r += term;
    }
    return r;
}

GradedChain<Q> Dihedral::gamma(const GradedChain<Q>& x) const { return f_.parity_twist(x); }

TSeries Dihedral::tmul(const TSeries& x, const TSeries& y) const {
    TSeries r;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (i + j >= r.size()) r.resize(i + j + 1, f_.zero_chain());
            r[i + j] += mul(x[i], y[j]);
        }
    return r;
}

std::vector<SeriesRow> Dihedral::coordinates(const GradedChain<Q>& x) const {
    std::vector<SeriesRow> rows;
    for (int k = 0; k <= N_; ++k) {
        Echelon<Q> e(f_.dim(k));
        e.insert(qk_[std::size_t(k)].part[std::size_t(k)], SparseVec<Q>::unit(0));
        e.insert(pqk_[std::size_t(k)].part[std::size_t(k)], SparseVec<Q>::unit(1));
        auto c = e.coordinates(x.part[std::size_t(k)]);
        if (!c) throw std::logic_error("element leaves the span of q(f)^k, p(f)q(f)^k in degree " + std::to_string(k));
        for (int w = 0; w < 2; ++w)
            if (!is_zero(c->at(w))) rows.push_back({k, word_name(k, w == 1), Poly<Q>(c->at(w))});
    }
    return rows;
}

std::vector<SeriesRow> Dihedral::coordinates(const TSeries& x) const {
    std::map<std::pair<int, std::string>, Poly<Q>> acc;
    for (std::size_t j = 0; j < x.size(); ++j)
        for (auto& r : coordinates(x[j])) acc[{r.degree, r.word}] += Poly<Q>::monomial(int(j), r.coeff.coeff(0));
    std::vector<SeriesRow> rows;
    for (auto& [key, c] : acc)
        if (!c.zero()) rows.push_back({key.first, key.second, c});
    return rows;
}

GradedChain<Q> Dihedral::from_rows(const std::vector<SeriesRow>& rows) const {
    GradedChain<Q> r = f_.zero_chain();
    for (const auto& row : rows) {
        if (row.coeff.degree() > 0) throw std::invalid_argument("row depends on t");
        bool with_p = row.word.rfind("p(f)", 0) == 0;
        r += row.coeff.coeff(0) * word(row.degree, with_p);
    }
    return r;
}

GradedChain<Q> Dihedral::log_direct() const {
    GradedChain<Q> x = Q(2) * mul(f(), q_f());
    GradedChain<Q> r = f_.zero_chain(), pw = one();
    for (int n = 1; n <= N_; ++n) {
        pw = mul(pw, x);
        r -= Q(1, n) * pw;
    }
    return r;
}

GradedChain<Q> Dihedral::log_closed() const {
    GradedChain<Q> r = f_.zero_chain();
    for (int i = 1; 2 * i - 1 <= N_; ++i) {
        Q c = Q(factorial(i - 1)) * Q(factorial(i - 1)) / Q(factorial(2 * i - 1));
        for (int k = 0; k < 2 * i - 1; ++k) c *= 2;
        r -= c * word(2 * i - 1, true);
    }
    return r;
}

TSeries Dihedral::w_exp() const {
    GradedChain<Q> half = Q(1, 2) * log_closed();
    TSeries lt{f_.zero_chain(), half};
    TSeries r{one()}, term{one()};
    for (int k = 1; k <= N_; ++k) {
        term = tmul(term, lt);
        for (auto& c : term) c = Q(1, k) * c;
        for (std::size_t j = 0; j < term.size(); ++j) {
            if (j >= r.size()) r.resize(j + 1, f_.zero_chain());
            r[j] += term[j];
        }
    }
    return r;
}

TSeries Dihedral::w_formula() const {
    TSeries r{one()};
    auto add = [&](const Poly<Q>& c, const GradedChain<Q>& w) {
        for (int j = 0; j <= c.degree(); ++j) {
            if (std::size_t(j) >= r.size()) r.resize(std::size_t(j) + 1, f_.zero_chain());
            r[std::size_t(j)] += c.coeff(j) * w;
        }
    };
    Poly<Q> t = Poly<Q>::x();
    for (int n = 1; 2 * n - 1 <= N_; ++n) {
        // binom(t/2 + n - 1, 2n - 1)
        Poly<Q> b(Q(1));
        for (int j = 0; j <= 2 * n - 2; ++j) b = b * (Poly<Q>(Q(1, 2)) * t + Poly<Q>(Q(n - 1 - j)));
        Q scale = Q(n % 2 ? -1 : 1) / Q(factorial(2 * n - 1));
        for (int k = 0; k < 2 * n - 1; ++k) scale *= 2;
        Poly<Q> c = Poly<Q>(scale) * b;
        add(c, word(2 * n - 1, true));
        if (2 * n <= N_) add(c * Poly<Q>(Q(1, 2 * n)) * t, word(2 * n, false));
    }
    return r;
}

GradedChain<Q> Dihedral::w_at(const TSeries& w, const Q& t) const {
    GradedChain<Q> r = f_.zero_chain();
    Q tp(1);
    for (const auto& c : w) {
        r += tp * c;
        tp *= t;
    }
    return r;
}

namespace {

bool rows_equal(std::vector<SeriesRow> a, std::vector<SeriesRow> b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].degree != b[i].degree || a[i].word != b[i].word || a[i].coeff != b[i].coeff) return false;
    return true;
}

Q row_coeff(const std::vector<SeriesRow>& rows, int degree, const std::string& word) {
    for (const auto& r : rows)
        if (r.degree == degree && r.word == word) return r.coeff.coeff(0);
    return Q(0);
}

bool parity_in_t(const Poly<Q>& p, int parity) {
    for (int j = 0; j <= p.degree(); ++j)
        if (j % 2 != parity && !is_zero(p.coeff(j))) return false;
    return true;
}

}  // namespace

DihedralReport dihedral_checks(int N) {
    Dihedral D(N);
    DihedralReport rep;
    rep.N = N;
    const std::string tag = "Q(C~), N = " + std::to_string(N) + ": ";
    auto push = [&](const std::string& name, bool ok, const std::string& det = "") {
        rep.assertions.push_back({tag + name, ok, det});
    };
    GradedChain<Q> f = D.f(), fg = D.f_gamma(), one = D.one(), q = D.q_f(), p = D.p_f();
    push("f and f^gamma are involutions", D.mul(f, f) == one && D.mul(fg, fg) == one);
    push("p(f)^2 + q(f)^2 = 1", D.mul(p, p) + D.mul(q, q) == one);
    push("f f^gamma = 1 - 2 f q(f)", D.mul(f, fg) == one - Q(2) * D.mul(f, q));

    GradedChain<Q> Ld = D.log_direct(), Lc = D.log_closed();
    bool closed = true;
    try {
        rep.L = D.coordinates(Ld);
        D.coordinates(Lc);
    } catch (const std::logic_error&) {
        closed = false;
    }
    push("direct log series = closed form through degree " + std::to_string(N), Ld == Lc);
    Q c1 = row_coeff(rep.L, 1, "p(f)q(f)");
    push("coefficient of p(f)q(f) in L is -2", c1 == Q(-2), c1.str());
    if (N >= 3) {
        Q c3 = row_coeff(rep.L, 3, "p(f)q(f)^3");
        push("coefficient of p(f)q(f)^3 in L is -4/3", c3 == Q(-4, 3), c3.str());
    }
    push("L^gamma = -L", D.gamma(Ld) == Q(-1) * Ld);
    push("exp(L) = f f^gamma", D.exp(Ld) == D.mul(f, fg));

    TSeries we = D.w_exp(), wf = D.w_formula();
    std::vector<SeriesRow> re, rf;
    try {
        re = D.coordinates(we);
        rf = D.coordinates(wf);
    } catch (const std::logic_error&) {
        closed = false;
    }
    rep.W = re;
    push("W_t = exp(tL/2) matches the binomial formula (coefficients polynomial in t)", rows_equal(re, rf));
    push("W_0 = 1", D.w_at(we, Q(0)) == one);
    bool par = true;
    for (const auto& r : re)
        if (!parity_in_t(r.coeff, r.degree % 2)) par = false;
    push("p(W_-t) = p(W_t) and q(W_-t) = -q(W_t)", par);
    bool wg = true;
    for (std::size_t j = 0; j < we.size(); ++j)
        if (D.gamma(we[j]) != Q(j % 2 ? -1 : 1) * we[j]) wg = false;
    push("W_-t = W_t^gamma", wg);
    GradedChain<Q> W = D.w_at(we, Q(1)), Wi = D.w_at(we, Q(-1));
    push("W_1 W_-1 = 1", D.mul(W, Wi) == one);
    push("W^-1 f W = f^gamma mod degree > " + std::to_string(N), D.mul(D.mul(Wi, f), W) == fg);
    push("all series stay in the span of q(f)^k, p(f)q(f)^k", closed);
    return rep;
}

std::string series_table(const std::vector<SeriesRow>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << "  " << r.degree << "  " << r.word << "  ";
        if (r.coeff.degree() <= 0) {
            os << r.coeff.coeff(0).str();
        } else {
            bool first = true;
            for (int j = r.coeff.degree(); j >= 0; --j) {
                Q c = r.coeff.coeff(j);
                if (is_zero(c)) continue;
                if (!first) os << (c < 0 ? " - " : " + ");
                else if (c < 0) os << "-";
                Q a = c < 0 ? Q(-c) : c;
                first = false;
                if (a != 1 || j == 0) os << a.str();
                if (j > 0) os << (a != 1 ? " " : "") << "t" << (j > 1 ? "^" + std::to_string(j) : "");
            }
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace nch
