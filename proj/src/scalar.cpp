#include "qriemann/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace qriemann {

namespace {

using Poly = std::vector<Int>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly scale(Poly p, const Int& k) {
    for (auto& c : p) c *= k;
    return p;
}

Int content(const Poly& p) {
    Int g = 0;
    for (const auto& c : p) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g; // 0 for the zero polynomial
}

Poly div_int(Poly p, const Int& k) {
    assert(k != 0);
    for (auto& c : p) {
        assert(c % k == 0);
        c /= k;
    }
    return p;
}

Poly primitive(const Poly& p) {
    Int c = content(p);
    if (c == 0 || c == 1) return p;
    return div_int(p, c);
}

// Classical pseudo-remainder: lc(b)^k * a reduced mod b over the
// integers.  Each pass cancels the top coefficient, so the degree
// drops strictly and the loop terminates.
Poly prem(Poly a, const Poly& b) {
    assert(!b.empty());
    while (!a.empty() && a.size() >= b.size()) {
        Int la = a.back();
        const Int& lb = b.back();
        size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= la * b[i];
        assert(a.back() == 0);
        trim(a);
    }
    return a;
}

Poly gcd_poly(Poly a, Poly b) {
    a = primitive(a);
    b = primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        Poly r = prem(a, b);
        a = std::move(b);
        b = primitive(r);
    }
    if (a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

// Exact division: q with a = q*b, integer coefficients throughout
// (valid by Gauss's lemma whenever b | a over the rationals and both
// sides are integral).
Poly divexact(Poly a, const Poly& b) {
    assert(!b.empty());
    if (a.empty()) return {};
    assert(a.size() >= b.size());
    Poly q(a.size() - b.size() + 1, Int(0));
    const Int& lb = b.back();
    for (size_t k = q.size(); k-- > 0;) {
        Int la = a[k + b.size() - 1];
        if (la == 0) continue;
        assert(la % lb == 0);
        Int ck = la / lb;
        q[k] = ck;
        for (size_t i = 0; i < b.size(); ++i) a[k + i] -= ck * b[i];
    }
    for (const auto& c : a) {
        (void)c;
        assert(c == 0);
    }
    return q;
}

double horner(const Poly& p, double x) {
    double v = 0.0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i].convert_to<double>();
    return v;
}

Int eval_one(const Poly& p) {
    Int s = 0;
    for (const auto& c : p) s += c;
    return s;
}

std::string int_str(const Int& v) { return v.str(); }

// One monomial coeff * s^j rendered in terms of q; j even gives an
// integer power of q, odd j gives q^(j/2).
std::string q_token(int j) {
    if (j == 0) return "1";
    if (j % 2 == 0) {
        int k = j / 2;
        if (k == 1) return "q";
        return "q^" + std::to_string(k);
    }
    return "q^(" + std::to_string(j) + "/2)";
}

std::string poly_str(const Poly& p) {
    std::string out;
    for (size_t j = 0; j < p.size(); ++j) {
        if (p[j] == 0) continue;
        Int c = p[j];
        bool neg = c < 0;
        if (neg) c = -c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? "-" : "+";
        }
        std::string tok = q_token(static_cast<int>(j));
        if (c == 1) {
            out += tok;
        } else if (tok == "1") {
            out += int_str(c);
        } else {
            out += int_str(c) + "*" + tok;
        }
    }
    return out;
}

} // namespace

std::string Rational::to_string() const {
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

QScalar::QScalar(int pow, Poly num, Poly den)
    : pow_(pow), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void QScalar::canonicalize() {
    trim(num_);
    trim(den_);
    if (den_.empty()) throw std::domain_error("QScalar: zero denominator");
    if (num_.empty()) {
        pow_ = 0;
        den_ = {Int(1)};
        return;
    }
    size_t i = 0;
    while (num_[i] == 0) ++i;
    size_t j = 0;
    while (den_[j] == 0) ++j;
    if (i) num_.erase(num_.begin(), num_.begin() + i);
    if (j) den_.erase(den_.begin(), den_.begin() + j);
    pow_ += static_cast<int>(i) - static_cast<int>(j);
    Poly g = gcd_poly(num_, den_);
    if (g.size() > 1 || g.back() != 1) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    Int cn = content(num_);
    Int cd = content(den_);
    Int cg = boost::multiprecision::gcd(cn, cd);
    if (cg > 1) {
        num_ = div_int(num_, cg);
        den_ = div_int(den_, cg);
    }
    if (den_[0] < 0) {
        for (auto& c : num_) c = -c;
        for (auto& c : den_) c = -c;
    }
}

QScalar QScalar::integer(long long v) { return integer(Int(v)); }

QScalar QScalar::integer(Int v) {
    QScalar r;
    if (v != 0) {
        r.num_ = {std::move(v)};
        r.den_ = {Int(1)};
    }
    return r;
}

QScalar QScalar::rational(Int num, Int den) {
    return QScalar(0, {std::move(num)}, {std::move(den)});
}

QScalar QScalar::s_power(int e) {
    QScalar r = one();
    r.pow_ = e;
    return r;
}

bool QScalar::is_one() const {
    return pow_ == 0 && num_ == Poly{Int(1)} && den_ == Poly{Int(1)};
}

bool QScalar::is_minus_one() const {
    return pow_ == 0 && num_ == Poly{Int(-1)} && den_ == Poly{Int(1)};
}

bool QScalar::leading_negative() const {
    for (const auto& c : num_)
        if (c != 0) return c < 0;
    return false;
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

QScalar& QScalar::operator*=(const QScalar& o) {
    if (is_zero() || o.is_zero()) return *this = QScalar();
    // Cross-reduce before multiplying to keep the factors small.
    Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
    Poly g1 = gcd_poly(n1, d2);
    if (g1.size() > 1 || g1.back() != 1) {
        n1 = divexact(n1, g1);
        d2 = divexact(d2, g1);
    }
    Poly g2 = gcd_poly(n2, d1);
    if (g2.size() > 1 || g2.back() != 1) {
        n2 = divexact(n2, g2);
        d1 = divexact(d1, g2);
    }
    *this = QScalar(pow_ + o.pow_, mul(n1, n2), mul(d1, d2));
    return *this;
}

QScalar& QScalar::operator+=(const QScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int p = std::min(pow_, o.pow_);
    Poly a = num_;
    if (pow_ > p) {
        a.insert(a.begin(), pow_ - p, Int(0));
    }
    Poly b = o.num_;
    if (o.pow_ > p) {
        b.insert(b.begin(), o.pow_ - p, Int(0));
    }
    *this = QScalar(p, add(mul(a, o.den_), mul(b, den_)), mul(den_, o.den_));
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar QScalar::inv() const {
    if (is_zero()) throw std::domain_error("QScalar: division by zero");
    return QScalar(-pow_, den_, num_);
}

QScalar& QScalar::operator/=(const QScalar& o) { return *this *= o.inv(); }

QScalar QScalar::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    QScalar r = one();
    QScalar b = *this;
    unsigned n = static_cast<unsigned>(e);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

double QScalar::eval_float(double q0) const {
    if (!(q0 > 0.0)) throw std::domain_error("QScalar: evaluation needs q > 0");
    if (is_zero()) return 0.0;
    double s = std::sqrt(q0);
    double d = horner(den_, s);
    if (d == 0.0 || !std::isfinite(d))
        throw std::domain_error("QScalar: pole at requested q");
    double n = horner(num_, s);
    return std::pow(s, pow_) * n / d;
}

Rational QScalar::eval_at_one() const {
    if (is_zero()) return {};
    Int d = eval_one(den_);
    if (d == 0) throw std::domain_error("QScalar: pole at q = 1");
    Int n = eval_one(num_);
    Int g = boost::multiprecision::gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return {std::move(n), std::move(d)};
}

std::string QScalar::to_string(bool product_context) const {
    if (is_zero()) return "0";
    bool neg = leading_negative();
    Poly n = num_;
    if (neg)
        for (auto& c : n) c = -c;
    Int ncont = content(n);
    Poly nprim = (ncont > 1) ? div_int(n, ncont) : n;
    Int dcont = content(den_);
    Poly dprim = (dcont > 1) ? div_int(den_, dcont) : den_;

    std::vector<std::string> toks;
    if (ncont != 1) toks.push_back(int_str(ncont));
    if (pow_ != 0) toks.push_back(q_token(pow_));
    bool npoly = nprim.size() > 1;
    bool have_den = dcont != 1 || dprim.size() > 1;
    if (npoly) {
        // A factored-out minus sign also forces parentheses: "-(1+q)",
        // never "-1+q".
        bool parens = product_context || neg || !toks.empty() || have_den;
        toks.push_back(parens ? "(" + poly_str(nprim) + ")" : poly_str(nprim));
    }
    if (toks.empty()) toks.push_back("1");

    std::string out = neg ? "-" : "";
    for (size_t i = 0; i < toks.size(); ++i) {
        if (i) out += "*";
        out += toks[i];
    }
    if (have_den) {
        std::vector<std::string> dt;
        if (dcont != 1) dt.push_back(int_str(dcont));
        if (dprim.size() > 1) dt.push_back("(" + poly_str(dprim) + ")");
        if (dt.size() == 1) {
            out += "/" + dt[0];
        } else {
            out += "/(" + dt[0] + "*" + dt[1] + ")";
        }
    }
    return out;
}

QScalar q_int(int two_n, bool inverse_base) {
    // (b^two_n - 1)/(b^2 - 1), b = q^{±1}; in s this is
    // (s^{±2 two_n} - 1)/(s^{±4} - 1).
    int sign = inverse_base ? -1 : 1;
    QScalar num = QScalar::s_power(sign * 2 * two_n) - QScalar::one();
    QScalar den = QScalar::s_power(sign * 4) - QScalar::one();
    if (num.is_zero()) return QScalar();
    return num / den;
}

QScalar qs_lambda() { return QScalar::q_power(1) - QScalar::q_power(-1); }

} // namespace qriemann
