#include "trisum/bipoly.hpp"
#include <sstream>

namespace trisum {

void BiPolyQ::add_term(long i, long j, const Rational& c) {
    if (c == 0) return;
    auto it = t_.find({i, j});
    if (it == t_.end()) {
        t_.emplace(Key{i, j}, c);
    } else {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

BiPolyQ BiPolyQ::monomial(long i, long j, const Rational& c) {
    BiPolyQ p;
    p.add_term(i, j, c);
    return p;
}

BiPolyQ BiPolyQ::binary_form(const std::vector<Integer>& a) {
    BiPolyQ p;
    long n = static_cast<long>(a.size()) - 1;
    for (long k = 0; k <= n; ++k) p.add_term(n - k, k, Rational(a[k]));
    return p;
}

long BiPolyQ::total_degree() const {
    long d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.first + k.second);
    return d;
}

bool BiPolyQ::is_homogeneous(long* deg) const {
    if (t_.empty()) {
        if (deg) *deg = -1;
        return true;
    }
    long d = t_.begin()->first.first + t_.begin()->first.second;
    for (const auto& [k, c] : t_)
        if (k.first + k.second != d) return false;
    if (deg) *deg = d;
    return true;
}

bool BiPolyQ::is_integral() const {
    for (const auto& [k, c] : t_)
        if (denom(c) != 1) return false;
    return true;
}

BiPolyQ BiPolyQ::operator+(const BiPolyQ& o) const {
    BiPolyQ r = *this;
    for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, c);
    return r;
}

BiPolyQ BiPolyQ::operator-(const BiPolyQ& o) const {
    BiPolyQ r = *this;
    for (const auto& [k, c] : o.t_) r.add_term(k.first, k.second, -c);
    return r;
}

BiPolyQ BiPolyQ::operator*(const BiPolyQ& o) const {
    BiPolyQ r;
    for (const auto& [k1, c1] : t_)
        for (const auto& [k2, c2] : o.t_)
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

BiPolyQ BiPolyQ::operator*(const Rational& k) const {
    BiPolyQ r;
    if (k == 0) return r;
    for (const auto& [key, c] : t_) r.t_.emplace(key, c * k);
    return r;
}

BiPolyQ BiPolyQ::pow(unsigned long e) const {
    BiPolyQ r = constant(1);
    BiPolyQ b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

BiPolyQ BiPolyQ::du() const {
    BiPolyQ r;
    for (const auto& [k, c] : t_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * Rational(k.first));
    return r;
}

BiPolyQ BiPolyQ::dv() const {
    BiPolyQ r;
    for (const auto& [k, c] : t_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, c * Rational(k.second));
    return r;
}

Rational BiPolyQ::eval(const Rational& uu, const Rational& vv) const {
    Rational r(0);
    for (const auto& [k, c] : t_) {
        Rational m = c;
        for (long i = 0; i < k.first; ++i) m *= uu;
        for (long j = 0; j < k.second; ++j) m *= vv;
        r += m;
    }
    return r;
}

PolyQ BiPolyQ::substitute(const PolyQ& g, const PolyQ& h) const {
    PolyQ r;
    for (const auto& [k, c] : t_) {
        PolyQ m = PolyQ::constant(c);
        m = m * g.pow(k.first);
        m = m * h.pow(k.second);
        r = r + m;
    }
    return r;
}

std::string BiPolyQ::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest u-degree first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [k, c] = *it;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational m = c < 0 ? Rational(-c) : c;
        bool has_var = k.first > 0 || k.second > 0;
        if (m != 1 || !has_var) os << m.get_str();
        if (k.first > 0) {
            os << "u";
            if (k.first > 1) os << "^" << k.first;
        }
        if (k.second > 0) {
            os << "v";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

Integer binary_form_disc(const BiPolyQ& F) {
    long deg = 0;
    if (!F.is_homogeneous(&deg) || deg != 3)
        throw std::domain_error("binary form must be a homogeneous cubic");
    if (!F.is_integral())
        throw std::domain_error("binary form must have integer coefficients");
    auto coeff = [&](long i, long j) -> Integer {
        auto it = F.terms().find({i, j});
        return it == F.terms().end() ? Integer(0) : numer(it->second);
    };
    Integer a = coeff(3, 0), b = coeff(2, 1), c = coeff(1, 2), d = coeff(0, 3);
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c -
           27 * a * a * d * d;
}

}  // namespace trisum
