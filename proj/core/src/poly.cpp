#include "trisum/poly.hpp"
#include <sstream>

namespace trisum {

void PolyZ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& PolyZ::operator[](size_t i) const {
    static const Integer zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const Integer& PolyZ::leading() const {
    if (c_.empty()) throw std::domain_error("zero polynomial");
    return c_.back();
}

PolyZ PolyZ::parse(const std::string& csv) {
    std::vector<Integer> v;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        v.emplace_back(tok);
    }
    return PolyZ(std::move(v));
}

PolyZ PolyZ::operator+(const PolyZ& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return PolyZ(std::move(r));
}

PolyZ PolyZ::operator-(const PolyZ& o) const {
    std::vector<Integer> r(std::max(c_.size(), o.c_.size()), Integer(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return PolyZ(std::move(r));
}

PolyZ PolyZ::operator*(const PolyZ& o) const {
    if (c_.empty() || o.c_.empty()) return PolyZ();
    std::vector<Integer> r(c_.size() + o.c_.size() - 1, Integer(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return PolyZ(std::move(r));
}

PolyZ PolyZ::operator*(const Integer& k) const {
    std::vector<Integer> r(c_);
    for (auto& x : r) x *= k;
    return PolyZ(std::move(r));
}

PolyZ PolyZ::operator-() const { return *this * Integer(-1); }

Integer PolyZ::eval(const Integer& x) const {
    Integer r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Integer PolyZ::eval_mod(const Integer& x, const Integer& m) const {
    Integer r(0);
    for (size_t i = c_.size(); i-- > 0;) r = mod_pos(r * x + c_[i], m);
    return r;
}

PolyZ PolyZ::derivative() const {
    if (c_.size() <= 1) return PolyZ();
    std::vector<Integer> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Integer(i);
    return PolyZ(std::move(r));
}

PolyZ PolyZ::pow(unsigned long e) const {
    PolyZ r({Integer(1)});
    PolyZ b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Integer PolyZ::content() const {
    Integer g(0);
    for (const auto& x : c_) g = igcd(g, x);
    return g;
}

PolyZ PolyZ::primitive_part() const {
    if (c_.empty()) return PolyZ();
    Integer g = content();
    if (leading() < 0) g = -g;
    std::vector<Integer> r(c_);
    for (auto& x : r) x = trisum::divexact(x, g);
    return PolyZ(std::move(r));
}

PolyZ PolyZ::divexact(const PolyZ& d) const {
    if (d.is_zero()) throw std::domain_error("zero polynomial");
    if (is_zero()) return PolyZ();
    if (degree() < d.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<Integer> rem(c_);
    std::vector<Integer> q(degree() - d.degree() + 1, Integer(0));
    for (long i = degree(); i >= d.degree(); --i) {
        const Integer& top = rem[i];
        if (top == 0) continue;
        if (!divides(d.leading(), top))
            throw std::domain_error("inexact polynomial division");
        Integer f = trisum::divexact(top, d.leading());
        q[i - d.degree()] = f;
        for (long j = 0; j <= d.degree(); ++j)
            rem[i - d.degree() + j] -= f * d[j];
    }
    for (const auto& x : rem)
        if (x != 0) throw std::domain_error("inexact polynomial division");
    return PolyZ(std::move(q));
}

void PolyZ::divmod_monic(const PolyZ& a, const PolyZ& d, PolyZ& q, PolyZ& r) {
    if (!d.is_monic()) throw std::domain_error("divisor not monic");
    std::vector<Integer> rem(a.c_);
    long dd = d.degree();
    if (a.degree() < dd) {
        q = PolyZ();
        r = a;
        return;
    }
    std::vector<Integer> qq(a.degree() - dd + 1, Integer(0));
    for (long i = a.degree(); i >= dd; --i) {
        Integer f = rem[i];
        if (f == 0) continue;
        qq[i - dd] = f;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d[j];
    }
    q = PolyZ(std::move(qq));
    r = PolyZ(std::move(rem));
}

std::string PolyZ::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Integer a = c_[i];
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Integer m = iabs(a);
        if (m != 1 || i == 0) os << m.get_str();
        if (i >= 1) {
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

std::string PolyZ::csv() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i].get_str();
    }
    return c_.empty() ? "0" : os.str();
}

namespace {

// pseudo-remainder: lc(d)^(deg a - deg d + 1) * a mod d, deg a >= deg d >= 0
PolyZ pseudo_rem(const PolyZ& a, const PolyZ& d) {
    long dd = d.degree();
    const Integer& lc = d.leading();
    std::vector<Integer> r(a.coeffs());
    auto deg_of = [](const std::vector<Integer>& v) {
        long k = static_cast<long>(v.size()) - 1;
        while (k >= 0 && v[k] == 0) --k;
        return k;
    };
    long e = a.degree() - dd + 1;
    long steps = 0;
    long dr = deg_of(r);
    while (dr >= dd) {
        Integer top = r[dr];
        for (long i = 0; i <= dr; ++i) r[i] *= lc;
        for (long j = 0; j <= dd; ++j) r[dr - dd + j] -= top * d[j];
        ++steps;
        dr = deg_of(r);
    }
    if (steps < e) {
        Integer f = ipow(lc, e - steps);
        for (auto& x : r) x *= f;
    }
    return PolyZ(std::move(r));
}

}  // namespace

PolyZ poly_gcd(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero()) return b.is_zero() ? PolyZ() : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    PolyZ f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        if (g.degree() == 0) return PolyZ::constant(igcd(a.content(), b.content()));
        PolyZ r = pseudo_rem(f, g).primitive_part();
        f = g;
        g = r;
    }
    PolyZ pp = f.primitive_part();
    Integer cg = igcd(a.content(), b.content());
    return pp * cg;
}

// Primitive PRS with exact scale tracking. Identities used:
//   Res(cA, B) = c^deg(B) Res(A, B)
//   Res(A, B) = (-1)^{deg A deg B} Res(B, A)
//   prem(A,B) = lc(B)^{m-n+1} A mod B  =>
//   Res(B, A) = lc(B)^{m - deg(prem) - (m-n+1) n} Res(B, prem)
Integer resultant(const PolyZ& p, const PolyZ& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("zero polynomial");
    PolyZ a = p, b = q;
    Rational acc(1);
    for (;;) {
        // pull out contents
        Integer ca = a.content(), cb = b.content();
        if (a.leading() < 0) ca = -ca;
        if (b.leading() < 0) cb = -cb;
        if (ca != 1) {
            acc *= Rational(ipow(ca, b.degree()));
            a = a.divexact(PolyZ::constant(ca));
        }
        if (cb != 1) {
            acc *= Rational(ipow(cb, a.degree()));
            b = b.divexact(PolyZ::constant(cb));
        }
        if (a.degree() < b.degree()) {
            if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
            std::swap(a, b);
        }
        if (b.degree() == 0) {
            // b = +-1 after content removal
            Rational res = acc * Rational(ipow(b.leading(), a.degree()));
            if (denom(res) != 1) throw std::logic_error("resultant: inexact scale");
            return numer(res);
        }
        long m = a.degree(), n = b.degree();
        PolyZ r = pseudo_rem(a, b);
        if (r.is_zero()) return Integer(0);
        if ((m & 1) && (n & 1)) acc = -acc;
        long ex = m - r.degree() - (m - n + 1) * n;
        Rational f(ipow(b.leading(), std::abs(ex)));
        acc *= (ex >= 0) ? f : Rational(1) / f;
        a = b;
        b = r;
    }
}

Integer resultant_sylvester(const PolyZ& p, const PolyZ& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("zero polynomial");
    long m = p.degree(), n = q.degree();
    long N = m + n;
    if (N == 0) return Integer(1);
    // Sylvester matrix, expanded by fraction-free (Bareiss) elimination
    std::vector<std::vector<Integer>> M(N, std::vector<Integer>(N, Integer(0)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) M[i][i + j] = p[m - j];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) M[n + i][i + j] = q[n - j];
    Integer prev(1);
    Integer sign(1);
    for (long k = 0; k < N - 1; ++k) {
        if (M[k][k] == 0) {
            long piv = -1;
            for (long i = k + 1; i < N; ++i)
                if (M[i][k] != 0) { piv = i; break; }
            if (piv < 0) return Integer(0);
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (long i = k + 1; i < N; ++i)
            for (long j = k + 1; j < N; ++j)
                M[i][j] = divexact(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
        prev = M[k][k];
    }
    return sign * M[N - 1][N - 1];
}

Integer poly_discriminant(const PolyZ& f) {
    if (f.degree() < 1) throw std::domain_error("constant polynomial");
    Integer r = resultant(f, f.derivative());
    long d = f.degree();
    Integer num = (((d * (d - 1) / 2) % 2) ? -r : r);
    return divexact(num, f.leading());
}

void PolyQ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& PolyQ::operator[](size_t i) const {
    static const Rational zero(0);
    return i < c_.size() ? c_[i] : zero;
}

PolyQ PolyQ::from(const PolyZ& p) {
    std::vector<Rational> r;
    r.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) r.emplace_back(x);
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (c_.empty() || o.c_.empty()) return PolyQ();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator*(const Rational& k) const {
    std::vector<Rational> r(c_);
    for (auto& x : r) x *= k;
    return PolyQ(std::move(r));
}

PolyQ PolyQ::operator-() const { return *this * Rational(-1); }

Rational PolyQ::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(i);
    return PolyQ(std::move(r));
}

PolyQ PolyQ::pow(unsigned long e) const {
    PolyQ r({Rational(1)});
    PolyQ b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

PolyQ PolyQ::compose(const PolyQ& g) const {
    PolyQ r;
    for (size_t i = c_.size(); i-- > 0;)
        r = r * g + PolyQ::constant(c_[i]);
    return r;
}

bool PolyQ::is_integral() const {
    for (const auto& x : c_)
        if (denom(x) != 1) return false;
    return true;
}

PolyZ PolyQ::to_polyz() const {
    std::vector<Integer> r;
    r.reserve(c_.size());
    for (const auto& x : c_) {
        if (denom(x) != 1) throw std::domain_error("non-integral coefficient");
        r.push_back(numer(x));
    }
    return PolyZ(std::move(r));
}

void PolyQ::clear_denominators(PolyZ& num, Integer& den) const {
    den = 1;
    for (const auto& x : c_) den = ilcm(den, denom(x));
    std::vector<Integer> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(numer(x) * trisum::divexact(den, denom(x)));
    num = PolyZ(std::move(r));
}

std::string PolyQ::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        Rational m = a < 0 ? Rational(-a) : a;
        if (m != 1 || i == 0) os << m.get_str();
        if (i >= 1) {
            os << var;
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace trisum
