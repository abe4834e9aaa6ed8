#include "nch/forms.hpp"

#include <map>

namespace nch {

template class FormComplex<Q>;
template class TensorComplex<Q>;
template class FormComplex<QI>;
template class TensorComplex<QI>;

namespace {

template <class S>
SpMat<S> mul(const SpMat<S>& a, const SpMat<S>& b) {
    return pruned<S>(SpMat<S>(a * b));
}

// Block matrix [[m00, m01], [m10, m11]]; empty blocks are zero.
template <class S>
SpMat<S> block2(int r0, int r1, int c0, int c1, const SpMat<S>* m00, const SpMat<S>* m01, const SpMat<S>* m10,
                const SpMat<S>* m11) {
    std::vector<Trip<S>> t;
    auto put = [&](const SpMat<S>* m, int ro, int co) {
        if (!m) return;
        for (int k = 0; k < m->outerSize(); ++k)
            for (typename SpMat<S>::InnerIterator it(*m, k); it; ++it)
                t.emplace_back(int(it.row()) + ro, int(it.col()) + co, it.value());
    };
    put(m00, 0, 0);
    put(m01, 0, c0);
    put(m10, r0, 0);
    put(m11, r0, c0);
    SpMat<S> m(r0 + r1, c0 + c1);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

}  // namespace

template <class S>
Assertions operator_identities(const FormComplex<S>& f, const TensorComplex<S>& t) {
    Assertions out;
    int N = f.top();
    const std::string an = f.algebra().name();
    auto tag = [&](const std::string& what, int n) { return an + ": " + what + " on degree " + std::to_string(n); };
    auto check = [&](const std::string& what, int n, const SpMat<S>& l, const SpMat<S>& r) {
        out.push_back(matrix_assertion<S>(tag(what, n), l, r, [&](int c) { return f.label(n, c); }));
    };
    auto checkt = [&](const std::string& what, int n, const SpMat<S>& l, const SpMat<S>& r) {
        out.push_back(matrix_assertion<S>(an + ": " + what + " on C_" + std::to_string(n), l, r,
                                          [&](int c) { return t.label(n, c); }));
    };
    for (int n = 0; n <= N - 1; ++n) {
        const auto one = f.one(n);
        const auto& k = f.kappa(n);
        if (n >= 2) check("b^2 = 0", n, mul(f.b(n - 1), f.b(n)), SpMat<S>(f.dim(n - 2), f.dim(n)));
        if (n + 1 <= N - 1) check("d^2 = 0", n, mul(f.d(n + 1), f.d(n)), SpMat<S>(f.dim(n + 2), f.dim(n)));
        if (n + 1 <= N - 1) check("B^2 = 0", n, mul(f.B(n + 1), f.B(n)), SpMat<S>(f.dim(n + 2), f.dim(n)));
        SpMat<S> bB = mul(f.b(n + 1), f.B(n));
        SpMat<S> Bb = n >= 1 ? mul(f.B(n - 1), f.b(n)) : SpMat<S>(f.dim(n), f.dim(n));
        check("bB + Bb = 0", n, SpMat<S>(bB + Bb), SpMat<S>(f.dim(n), f.dim(n)));
        SpMat<S> bd = mul(f.b(n + 1), f.d(n));
        SpMat<S> db = n >= 1 ? mul(f.d(n - 1), f.b(n)) : SpMat<S>(f.dim(n), f.dim(n));
        check("bd + db = 1 - kappa", n, SpMat<S>(bd + db), SpMat<S>(one - k));
        if (n >= 1) check("kappa b = b kappa", n, mul(f.kappa(n - 1), f.b(n)), mul(f.b(n), k));
        check("kappa d = d kappa", n, mul(f.kappa(n + 1), f.d(n)), mul(f.d(n), k));
        check("B kappa = B", n, mul(f.B(n), k), f.B(n));
        check("kappa B = B", n, mul(f.kappa(n + 1), f.B(n)), f.B(n));
        check("kappa kappa^-1 = 1", n, mul(k, f.kappa_inv(n)), one);
        SpMat<S> kn = power(k, n), kn1 = mul(kn, k);
        check("kappa^n = 1 + b kappa^-1 d", n, kn, SpMat<S>(one + mul(f.b(n + 1), mul(f.kappa_inv(n + 1), f.d(n)))));
        check("kappa^(n+1) = 1 - db", n, kn1, SpMat<S>(one - db));
        check("kappa^(n(n+1)) = 1 + bB", n, power(k, long(n) * (n + 1)), SpMat<S>(one + bB));
        check("(kappa^n - 1)(kappa^(n+1) - 1) = 0", n, mul(SpMat<S>(kn - one), SpMat<S>(kn1 - one)),
              SpMat<S>(f.dim(n), f.dim(n)));
    }
    for (int n = 0; n <= std::min(N, t.top()); ++n) {
        if (n >= 2) {
            checkt("b^2 = 0", n, mul(t.b(n - 1), t.b(n)), SpMat<S>(t.dim(n - 2), t.dim(n)));
            checkt("b'^2 = 0", n, mul(t.bprime(n - 1), t.bprime(n)), SpMat<S>(t.dim(n - 2), t.dim(n)));
        }
        if (n >= 1) {
            checkt("b(lambda - 1) = (lambda - 1)b'", n, mul(t.b(n), SpMat<S>(t.lambda(n) - t.one(n))),
                   mul(SpMat<S>(t.lambda(n - 1) - t.one(n - 1)), t.bprime(n)));
            checkt("b'N = Nb", n, mul(t.bprime(n), t.norm(n)), mul(t.norm(n - 1), t.b(n)));
        }
    }
    return out;
}

template <class S>
Assertions harmonic_identities(const FormComplex<S>& f) {
    Assertions out;
    const std::string an = f.algebra().name();
    for (int n = 0; n <= f.top() - 1; ++n) {
        auto lab = [&](int c) { return f.label(n, c); };
        auto nm = [&](const std::string& w) { return an + ": " + w + " on degree " + std::to_string(n); };
        const auto& P = f.P(n);
        const auto& G = f.G(n);
        const auto& k = f.kappa(n);
        SpMat<S> one = f.one(n), zero(f.dim(n), f.dim(n));
        out.push_back(matrix_assertion<S>(nm("P^2 = P"), mul(P, P), P, lab));
        out.push_back(matrix_assertion<S>(nm("P kappa = kappa P"), mul(P, k), mul(k, P), lab));
        SpMat<S> bd = mul(f.b(n + 1), f.d(n));
        if (n >= 1) bd += mul(f.d(n - 1), f.b(n));
        SpMat<S> q = one - P;
        out.push_back(matrix_assertion<S>(nm("G(bd + db) = 1 on (1 - P)"), mul(mul(G, bd), q), q, lab));
        out.push_back(matrix_assertion<S>(nm("(bd + db)G = 1 - P"), mul(bd, G), q, lab));
        out.push_back(matrix_assertion<S>(nm("GP = 0"), mul(G, P), zero, lab));
        out.push_back(matrix_assertion<S>(nm("PG = 0"), mul(P, G), zero, lab));
        if (n >= 1) out.push_back(matrix_assertion<S>(nm("Pb = bP"), mul(f.P(n - 1), f.b(n)), mul(f.b(n), P), lab));
        out.push_back(matrix_assertion<S>(nm("Pd = dP"), mul(f.P(n + 1), f.d(n)), mul(f.d(n), P), lab));
        // kappa - 1 is nilpotent of order 2 on the image of P
        SpMat<S> km = k - one;
        out.push_back(matrix_assertion<S>(nm("(kappa - 1)^2 P = 0"), mul(mul(km, km), P), zero, lab));
    }
    return out;
}

template <class S>
Assertions xcomplex_identities(const FormComplex<S>& f) {
    using Comp = std::vector<std::pair<int, SpMat<S>>>;
    int N = f.top();
    auto nkappa2 = [&](int m, int terms) {  // sum_{j<terms} kappa^{2j} on Omega^m
        SpMat<S> k2 = mul(f.kappa(m), f.kappa(m));
        SpMat<S> acc(f.dim(m), f.dim(m)), x = f.one(m);
        for (int j = 0; j < terms; ++j) {
            acc += x;
            x = mul(k2, x);
        }
        return acc;
    };
    // components of beta on odd degree k
    auto beta = [&](int k) {
        Comp c;
        c.emplace_back(k - 1, f.b(k));
        if (k + 1 <= N) c.emplace_back(k + 1, SpMat<S>(-mul(SpMat<S>(f.one(k + 1) + f.kappa(k + 1)), f.d(k))));
        return c;
    };
    // components of natural delta on even degree k = 2n
    auto ndelta = [&](int k) {
        Comp c;
        if (k >= 2) c.emplace_back(k - 1, SpMat<S>(-mul(nkappa2(k - 1, k / 2), f.b(k))));
        if (k + 1 <= N) c.emplace_back(k + 1, f.B(k));
        return c;
    };
    auto compose = [&](const Comp& first, auto&& second) {
        std::map<int, SpMat<S>> acc;
        for (const auto& [deg, m] : first)
            for (const auto& [deg2, m2] : second(deg)) {
                SpMat<S> p = mul(m2, m);
                auto it = acc.find(deg2);
                if (it == acc.end()) acc.emplace(deg2, p);
                else it->second += p;
            }
        return acc;
    };
    Assertions out;
    const std::string an = f.algebra().name();
    for (int k = 0; k + 2 <= N; ++k) {
        auto lab = [&](int c) { return f.label(k, c); };
        if (k % 2 == 0) {
            auto r = compose(ndelta(k), beta);
            bool ok = true;
            std::string det;
            for (auto& [deg, m] : r) {
                auto a = matrix_assertion<S>("", m, SpMat<S>(m.rows(), m.cols()), lab);
                if (!a.pass && ok) { ok = false; det = "component to degree " + std::to_string(deg) + ": " + a.detail; }
            }
            out.push_back({an + ": beta natural-delta = 0 on degree " + std::to_string(k), ok, det});
        } else {
            auto r = compose(beta(k), ndelta);
            bool ok = true;
            std::string det;
            for (auto& [deg, m] : r) {
                auto a = matrix_assertion<S>("", m, SpMat<S>(m.rows(), m.cols()), lab);
                if (!a.pass && ok) { ok = false; det = "component to degree " + std::to_string(deg) + ": " + a.detail; }
            }
            out.push_back({an + ": natural-delta beta = 0 on degree " + std::to_string(k), ok, det});
        }
    }
    return out;
}

template <class S>
Assertions fedosov_identities(const FormComplex<S>& f, int max_triples) {
    Assertions out;
    int N = f.top();
    std::vector<std::pair<int, int>> basis;
    for (int n = 0; n <= N; ++n)
        for (int i = 0; i < f.dim(n); ++i) basis.emplace_back(n, i);
    auto one = f.element(f.algebra().unit());
    bool unit_ok = true;
    std::string unit_detail;
    for (auto [n, i] : basis) {
        auto x = f.basis_chain(n, i);
        if (f.fedosov(one, x, Overflow::drop) != x || f.fedosov(x, one, Overflow::drop) != x) {
            unit_ok = false;
            unit_detail = "fails at " + f.label(n, i);
            break;
        }
    }
    out.push_back({f.algebra().name() + ": 1 o x = x o 1 = x", unit_ok, unit_detail});
    int count = 0;
    bool ok = true;
    std::string det;
    for (auto [n1, i] : basis) {
        for (auto [n2, j] : basis) {
            if (n1 + n2 > N) continue;
            auto xy = f.fedosov(f.basis_chain(n1, i), f.basis_chain(n2, j), Overflow::drop);
            for (auto [n3, k] : basis) {
                if (n1 + n2 + n3 > N) continue;
                if (count++ >= max_triples) goto done;
                auto z = f.basis_chain(n3, k);
                auto l = f.fedosov(xy, z, Overflow::drop);
                auto r = f.fedosov(f.basis_chain(n1, i), f.fedosov(f.basis_chain(n2, j), z, Overflow::drop),
                                   Overflow::drop);
                if (l != r) {
                    ok = false;
                    det = "fails at " + f.label(n1, i) + " " + f.label(n2, j) + " " + f.label(n3, k);
                    goto done;
                }
            }
        }
    }
done:
    out.push_back({f.algebra().name() + ": Fedosov product associative on " + std::to_string(std::min(count, max_triples)) +
                       " basis triples (mod degree > " + std::to_string(N) + ")",
                   ok, det});
    return out;
}

template <class S>
Assertions tilde_block_identities(const Algebra<S>& a, int N) {
    FormComplex<S> f(unitalize(a), N);
    TensorComplex<S> t(a, N);
    int d = a.dim();
    // Phi_n : C_n(A) + C_{n-1}(A) -> Omega^n(A~)
    auto phi = [&](int n) {
        std::vector<Trip<S>> tr;
        int c0 = t.dim(n);
        for (int c = 0; c < c0; ++c) {
            auto x = t.space(n).tuple(c);
            for (auto& v : x) ++v;
            tr.emplace_back(f.space(n).index(x), c, S(1));
        }
        if (n == 0) tr.emplace_back(0, c0, S(1));  // C_{-1} = k, the unit of A~
        if (n >= 1)
            for (int c = 0; c < t.dim(n - 1); ++c) {
                auto x = t.space(n - 1).tuple(c);
                for (auto& v : x) ++v;
                x.insert(x.begin(), 0);
                tr.emplace_back(f.space(n).index(x), c0 + c, S(1));
            }
        SpMat<S> m(f.dim(n), f.dim(n));
        m.setFromTriplets(tr.begin(), tr.end());
        return m;
    };
    (void)d;
    auto cdim = [&](int n) { return n < -1 ? 0 : n == -1 ? 1 : t.dim(n); };
    Assertions out;
    const std::string an = a.name();
    auto lab = [&](int n) { return [&, n](int c) { return "block column " + std::to_string(c) + " of degree " + std::to_string(n); }; };
    for (int n = 0; n <= N; ++n) {
        SpMat<S> pn = phi(n);
        // b~ : degree n -> n-1
        if (n >= 1) {
            SpMat<S> oml = t.one(n - 1) - t.lambda(n - 1);
            SpMat<S> nbp;
            if (n >= 2) nbp = -t.bprime(n - 1);
            SpMat<S> blk = block2<S>(cdim(n - 1), cdim(n - 2), cdim(n), cdim(n - 1), &t.b(n), &oml, nullptr,
                                     n >= 2 ? &nbp : nullptr);
            out.push_back(matrix_assertion<S>(an + ": b~ = (b, 1 - lambda; 0, -b') on degree " + std::to_string(n),
                                              mul(f.b(n), pn), mul(phi(n - 1), blk), lab(n)));
            if (n >= 2)
                out.push_back(matrix_assertion<S>(an + ": b~^2 = 0 on degree " + std::to_string(n),
                                                  mul(f.b(n - 1), f.b(n)), SpMat<S>(f.dim(n - 2), f.dim(n)), lab(n)));
        }
        // kappa~
        {
            SpMat<S> low;
            const SpMat<S>* lowp = nullptr;
            const SpMat<S>* l1 = nullptr;
            SpMat<S> unit1 = identity<S>(1);
            if (n >= 1) {
                low = t.bprime(n) - t.b(n);
                lowp = &low;
                l1 = &t.lambda(n - 1);
            } else {
                l1 = &unit1;
            }
            SpMat<S> blk = block2<S>(cdim(n), cdim(n - 1), cdim(n), cdim(n - 1), &t.lambda(n), nullptr, lowp, l1);
            out.push_back(matrix_assertion<S>(an + ": kappa~ = (lambda, 0; b' - b, lambda) on degree " + std::to_string(n),
                                              mul(f.kappa(n), pn), mul(pn, blk), lab(n)));
        }
        if (n + 1 <= N) {
            SpMat<S> pn1 = phi(n + 1);
            SpMat<S> id = t.one(n);
            SpMat<S> dblk = block2<S>(cdim(n + 1), cdim(n), cdim(n), cdim(n - 1), nullptr, nullptr, &id, nullptr);
            out.push_back(matrix_assertion<S>(an + ": d~ = (0, 0; 1, 0) on degree " + std::to_string(n),
                                              mul(f.d(n), pn), mul(pn1, dblk), lab(n)));
            SpMat<S> Bblk = block2<S>(cdim(n + 1), cdim(n), cdim(n), cdim(n - 1), nullptr, nullptr, &t.norm(n), nullptr);
            out.push_back(matrix_assertion<S>(an + ": B~ = (0, 0; N, 0), N = sum_{i=0}^{n} lambda^i on degree " +
                                                  std::to_string(n),
                                              mul(f.B(n), pn), mul(pn1, Bblk), lab(n)));
        }
    }
    // Connes-Tsygan identities behind b~^2 = 0
    for (int n = 1; n <= N; ++n) {
        auto l = [&](int c) { return t.label(n, c); };
        out.push_back(matrix_assertion<S>(an + ": b(1 - lambda) = (1 - lambda)b' on C_" + std::to_string(n),
                                          mul(t.b(n), SpMat<S>(t.one(n) - t.lambda(n))),
                                          mul(SpMat<S>(t.one(n - 1) - t.lambda(n - 1)), t.bprime(n)), l));
        if (n >= 2)
            out.push_back(matrix_assertion<S>(an + ": b'^2 = 0 on C_" + std::to_string(n), mul(t.bprime(n - 1), t.bprime(n)),
                                              SpMat<S>(t.dim(n - 2), t.dim(n)), l));
    }
    return out;
}

template Assertions operator_identities<Q>(const FormComplex<Q>&, const TensorComplex<Q>&);
template Assertions harmonic_identities<Q>(const FormComplex<Q>&);
template Assertions xcomplex_identities<Q>(const FormComplex<Q>&);
template Assertions fedosov_identities<Q>(const FormComplex<Q>&, int);
template Assertions tilde_block_identities<Q>(const Algebra<Q>&, int);

template Assertions operator_identities<QI>(const FormComplex<QI>&, const TensorComplex<QI>&);
template Assertions harmonic_identities<QI>(const FormComplex<QI>&);
template Assertions xcomplex_identities<QI>(const FormComplex<QI>&);
template Assertions fedosov_identities<QI>(const FormComplex<QI>&, int);
template Assertions tilde_block_identities<QI>(const Algebra<QI>&, int);

}  // namespace nch
