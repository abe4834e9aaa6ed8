#include "nch/scalar.hpp"

#include <cctype>

namespace nch {

namespace {

std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

Q parse_rational(const std::string& t) {
    if (t.empty()) throw std::invalid_argument("empty scalar");
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        // decimal literal: exact conversion
        std::string digits = t.substr(0, dot) + t.substr(dot + 1);
        std::size_t frac = t.size() - dot - 1;
        Z den = 1;
        for (std::size_t i = 0; i < frac; ++i) den *= 10;
        try {
            return Q(Z(digits.empty() || digits == "-" ? digits + "0" : digits), den);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad scalar: " + t);
        }
    }
    for (char c : t)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("bad scalar: " + t);
    try {
        Q q(t[0] == '+' ? t.substr(1) : t);
        return q;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad scalar: " + t);
    }
}

}  // namespace

Q ScalarOps<Q>::parse(std::string_view s) { return parse_rational(strip(s)); }

std::string ScalarOps<QI>::str(const QI& x) {
    if (x.im == 0) return x.re.str();
    std::string im = x.im == 1 ? "" : x.im == -1 ? "-" : x.im.str();
    if (x.re == 0) return im + "i";
    std::string sign = x.im > 0 ? "+" : "";
    return x.re.str() + sign + im + "i";
}

QI ScalarOps<QI>::parse(std::string_view s) {
    std::string t = strip(s);
    if (t.empty()) throw std::invalid_argument("empty scalar");
    if (t.back() != 'i') return QI(parse_rational(t));
    t.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;)
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != '/') {
            split = k;
            break;
        }
    std::string re = split == std::string::npos ? "" : t.substr(0, split);
    std::string im = split == std::string::npos ? t : t.substr(split);
    Q imv;
    if (im.empty() || im == "+") imv = 1;
    else if (im == "-") imv = -1;
    else imv = parse_rational(im);
    return QI(re.empty() ? Q(0) : parse_rational(re), imv);
}

Q factorial(int n) {
    Z f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Q(f);
}

Q binomial(const Q& x, int k) {
    Q r = 1;
    for (int i = 0; i < k; ++i) r *= (x - i);
    return r / factorial(k);
}

}  // namespace nch
