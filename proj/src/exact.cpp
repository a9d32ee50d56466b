#include "chiral/exact.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace chiral {

namespace {

// sign of u + v*sqrt(k) for rational u, v and a non-square k > 1
int sign_with_radical(const Rational& u, const Rational& v, int k) {
  const int su = sgn(u), sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  Rational d = u * u - k * (v * v);  // u^2 vs k v^2 settles the mixed case
  return su * sgn(d);
}

}  // namespace

Exact::Exact(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  c_[0] = r;
}

Exact::Exact(Rational c0, Rational c1, Rational c2, Rational c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  for (auto& c : c_) c.canonicalize();
}

Exact Exact::inv_sqrt2() { return Exact(Rational(0), Rational(1, 2), Rational(0), Rational(0)); }
Exact Exact::tau() { return Exact(Rational(1, 2), Rational(0), Rational(1, 2), Rational(0)); }
Exact Exact::sigma() { return Exact(Rational(1, 2), Rational(0), Rational(-1, 2), Rational(0)); }

Exact Exact::operator-() const {
  Exact r;
  for (int i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

Exact& Exact::operator+=(const Exact& o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Exact& Exact::operator-=(const Exact& o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Exact& Exact::operator*=(const Exact& o) {
  const Rational &a0 = c_[0], &a1 = c_[1], &a2 = c_[2], &a3 = c_[3];
  const Rational &b0 = o.c_[0], &b1 = o.c_[1], &b2 = o.c_[2], &b3 = o.c_[3];
  // expansion on the basis {1, sqrt2, sqrt5, sqrt10}
  Rational r0 = a0 * b0 + 2 * (a1 * b1) + 5 * (a2 * b2) + 10 * (a3 * b3);
  Rational r1 = a0 * b1 + a1 * b0 + 5 * (a2 * b3 + a3 * b2);
  Rational r2 = a0 * b2 + a2 * b0 + 2 * (a1 * b3 + a3 * b1);
  Rational r3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
  c_ = {std::move(r0), std::move(r1), std::move(r2), std::move(r3)};
  return *this;
}

Exact Exact::inverse() const {
  if (is_zero()) throw std::domain_error("Exact::inverse: division by zero");
  // Write a = u + v*sqrt5 with u, v in Q(sqrt2). Then
  //   1/a = (u - v*sqrt5) / (u^2 - 5 v^2),
  // and the denominator n = na + nb*sqrt2 is inverted inside Q(sqrt2).
  Rational na = c_[0] * c_[0] + 2 * (c_[1] * c_[1]) - 5 * (c_[2] * c_[2]) - 10 * (c_[3] * c_[3]);
  Rational nb = 2 * (c_[0] * c_[1]) - 10 * (c_[2] * c_[3]);
  Rational d = na * na - 2 * (nb * nb);
  Exact conj5(c_[0], c_[1], -c_[2], -c_[3]);
  Exact ninv(na / d, -nb / d, Rational(0), Rational(0));
  return conj5 * ninv;
}

int Exact::sign() const {
  // view as u + v*sqrt5 with u, v in Q(sqrt2)
  const int su = sign_with_radical(c_[0], c_[1], 2);
  const int sv = sign_with_radical(c_[2], c_[3], 2);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // mixed signs: compare u^2 against 5 v^2 inside Q(sqrt2)
  Rational ua = c_[0] * c_[0] + 2 * (c_[1] * c_[1]);
  Rational ub = 2 * (c_[0] * c_[1]);
  Rational va = c_[2] * c_[2] + 2 * (c_[3] * c_[3]);
  Rational vb = 2 * (c_[2] * c_[3]);
  return su * sign_with_radical(ua - 5 * va, ub - 5 * vb, 2);
}

double Exact::to_double() const {
  static const double k2 = std::sqrt(2.0);
  static const double k5 = std::sqrt(5.0);
  static const double k10 = std::sqrt(10.0);
  return c_[0].get_d() + c_[1].get_d() * k2 + c_[2].get_d() * k5 + c_[3].get_d() * k10;
}

std::string Exact::str() const {
  static const char* suffix[4] = {"", "r2", "r5", "r10"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    std::string term = c_[i].get_str();
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
    out += suffix[i];
  }
  return out.empty() ? "0" : out;
}

Exact abs(const Exact& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Exact& a) { return os << a.str(); }

}  // namespace chiral
