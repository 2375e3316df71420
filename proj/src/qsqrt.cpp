#include "hallbridge/qsqrt.hpp"

#include <sstream>

namespace hb {

unsigned QSqrt::match(const QSqrt& o) const {
  if (q_ == o.q_) return q_;
  if (q_ == 0) return o.q_;
  if (o.q_ == 0) return q_;
  throw ArithmeticError("mixing scalars from different fields Q(sqrt(q))");
}

QSqrt QSqrt::operator+(const QSqrt& o) const {
  return QSqrt(match(o), a_ + o.a_, b_ + o.b_);
}

QSqrt QSqrt::operator*(const QSqrt& o) const {
  unsigned q = match(o);
  // (a + b v)(c + d v) = ac + bd q + (ad + bc) v, v^2 = q
  return QSqrt(q, a_ * o.a_ + b_ * o.b_ * q, a_ * o.b_ + b_ * o.a_);
}

QSqrt QSqrt::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  // 1/(a + b v) = (a - b v)/(a^2 - b^2 q); denominator nonzero since
  // sqrt(q) is irrational for prime q.
  Rational den = a_ * a_ - b_ * b_ * Rational(q_);
  return QSqrt(q_, a_ / den, -b_ / den);
}

QSqrt QSqrt::vpow(unsigned q, long k) {
  if (k % 2 == 0) {
    long h = k / 2;
    Rational p = 1;
    for (long i = 0; i < (h >= 0 ? h : -h); ++i) p *= q;
    return QSqrt(q, h >= 0 ? p : 1 / p, 0);
  }
  // v^k = q^{(k-1)/2} * v for odd k; k-1 is even so the division is exact
  long h = (k - 1) / 2;
  Rational p = 1;
  for (long i = 0; i < (h >= 0 ? h : -h); ++i) p *= q;
  return QSqrt(q, 0, h >= 0 ? p : 1 / p);
}

namespace {
std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}
}  // namespace

std::string QSqrt::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (a_ != 0) out = rat_str(a_);
  if (b_ != 0) {
    if (!out.empty()) out += b_ > 0 ? " + " : " - ";
    else if (b_ < 0) out += "-";
    Rational mag = b_ > 0 ? b_ : Rational(-b_);
    if (mag != 1) out += rat_str(mag) + "*";
    out += "sqrt(" + std::to_string(q_) + ")";
  }
  return out;
}

QSqrt quantum_integer(unsigned q, long s) {
  if (s == 0) return QSqrt::zero(q);
  if (s < 0) return -quantum_integer(q, -s);
  // [s] = v^{s-1} + v^{s-3} + ... + v^{1-s}
  QSqrt sum = QSqrt::zero(q);
  for (long e = s - 1; e >= 1 - s; e -= 2) sum += QSqrt::vpow(q, e);
  return sum;
}

QSqrt quantum_factorial(unsigned q, long s) {
  QSqrt prod = QSqrt::one(q);
  for (long i = 2; i <= s; ++i) prod *= quantum_integer(q, i);
  return prod;
}

QSqrt quantum_binomial(unsigned q, long N, long t) {
  if (t < 0 || t > N) throw ArithmeticError("quantum_binomial: t out of range");
  return quantum_factorial(q, N) /
         (quantum_factorial(q, t) * quantum_factorial(q, N - t));
}

}  // namespace hb
