#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace qriemann {

using Int = boost::multiprecision::cpp_int;

// Exact rational number, used for evaluation at q = 1.
struct Rational {
    Int num{0};
    Int den{1};

    std::string to_string() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

// Exact scalar: a rational function of s := q^(1/2) of the shape
//
//     s^pow * num(s) / den(s)
//
// where num and den are integer polynomials with nonzero constant
// terms, gcd(num, den) = 1, joint integer content 1 and den(0) > 0.
// Half powers of q are needed by q-integers with half-integer label
// and by the rho^(1/2) entries of quantum-group matrices; everything
// else lives in even powers of s.
class QScalar {
  public:
    QScalar() = default; // zero

    static QScalar integer(long long v);
    static QScalar integer(Int v);
    static QScalar rational(Int num, Int den); // den != 0
    static QScalar one() { return integer(1); }
    // q^e and s^e = q^(e/2).
    static QScalar q_power(int e) { return s_power(2 * e); }
    static QScalar s_power(int e);

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_minus_one() const;
    // True when the canonical sign factored out for printing is "-".
    bool leading_negative() const;

    QScalar operator-() const;
    QScalar& operator+=(const QScalar& o);
    QScalar& operator-=(const QScalar& o);
    QScalar& operator*=(const QScalar& o);
    QScalar& operator/=(const QScalar& o); // o == 0 -> std::domain_error

    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
    friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }

    QScalar inv() const; // zero -> std::domain_error
    QScalar pow(int e) const;

    friend bool operator==(const QScalar&, const QScalar&) = default;

    // Evaluate at q = q0 > 0. A vanishing denominator (or q0 <= 0)
    // raises std::domain_error.
    double eval_float(double q0) const;
    // Exact value at q = 1; a pole there raises std::domain_error.
    Rational eval_at_one() const;

    // Canonical text form, e.g. "-q^-1*(1-q^2)" or
    // "q^-1*(1+q+q^2)/(1+q)".  With product_context the polynomial
    // part keeps its parentheses even when it is the only token, so
    // the result can be concatenated with "*word".
    std::string to_string(bool product_context = false) const;

  private:
    using Poly = std::vector<Int>; // coefficients of s^0, s^1, ...

    QScalar(int pow, Poly num, Poly den);
    void canonicalize();

    int pow_ = 0;
    Poly num_;        // empty <=> zero
    Poly den_{Int(1)};
};

// [two_n/2] as a q-integer: (b^two_n - 1)/(b^2 - 1) with b = q or
// b = q^{-1}; integer label corresponds to even two_n.
QScalar q_int(int two_n, bool inverse_base = false);

// lambda = q - q^{-1}.
QScalar qs_lambda();

} // namespace qriemann
