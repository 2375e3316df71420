#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact element a + b*sqrt(q) of Q(sqrt(q)), q a fixed prime per session.
/// Since sqrt(q) is irrational the pair (a, b) is a canonical representation;
/// equality is structural.
class QSqrt {
public:
  QSqrt() : q_(0) {}  // zero with the field left unspecified
  QSqrt(unsigned q, Rational a, Rational b = 0)
      : q_(q), a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt zero(unsigned q) { return QSqrt(q, 0, 0); }
  static QSqrt one(unsigned q) { return QSqrt(q, 1, 0); }

  /// v^k where v = sqrt(q); exact for any integer k.
  static QSqrt vpow(unsigned q, long k);

  unsigned q() const { return q_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QSqrt operator-() const { return QSqrt(q_, -a_, -b_); }
  QSqrt operator+(const QSqrt& o) const;
  QSqrt operator-(const QSqrt& o) const { return *this + (-o); }
  QSqrt operator*(const QSqrt& o) const;
  QSqrt inverse() const;
  QSqrt operator/(const QSqrt& o) const { return *this * o.inverse(); }

  QSqrt& operator+=(const QSqrt& o) { return *this = *this + o; }
  QSqrt& operator-=(const QSqrt& o) { return *this = *this - o; }
  QSqrt& operator*=(const QSqrt& o) { return *this = *this * o; }

  bool operator==(const QSqrt& o) const {
    return a_ == o.a_ && b_ == o.b_ && (q_ == o.q_ || is_zero());
  }
  bool operator!=(const QSqrt& o) const { return !(*this == o); }

  /// Rendered as "a/b + c/d*sqrt(q)", omitting vanishing parts.
  std::string str() const;

private:
  unsigned match(const QSqrt& o) const;

  unsigned q_;
  Rational a_, b_;
};

/// [s]_v = (v^s - v^{-s}) / (v - v^{-1}); [0] = 0, [-s] = -[s].
QSqrt quantum_integer(unsigned q, long s);

/// [s]_v! = [1][2]...[s].
QSqrt quantum_factorial(unsigned q, long s);

/// [N t]_v = [N]! / ([t]! [N-t]!); requires 0 <= t <= N.
QSqrt quantum_binomial(unsigned q, long N, long t);

}  // namespace hb
