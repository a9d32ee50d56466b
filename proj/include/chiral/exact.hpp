#ifndef CHIRAL_EXACT_HPP
#define CHIRAL_EXACT_HPP

#include <gmpxx.h>

#include <array>
#include <iosfwd>
#include <string>

namespace chiral {

using Rational = mpq_class;

/// Element of the real quadratic-biquadratic field Q(sqrt2, sqrt5),
/// stored as c0 + c1*sqrt2 + c2*sqrt5 + c3*sqrt10 with rational
/// coefficients. Coefficients are always reduced, so equality is
/// componentwise; sign (and therefore ordering) is decided exactly,
/// never through a floating-point approximation.
class Exact {
 public:
  Exact() = default;
  Exact(int n) : c_{Rational(n), 0, 0, 0} {}
  Exact(long num, long den);
  explicit Exact(const Rational& r) : c_{r, 0, 0, 0} {}
  Exact(Rational c0, Rational c1, Rational c2, Rational c3);

  // named constants used throughout the constructions
  static Exact sqrt2() { return Exact(0, 1, 0, 0, Tag{}); }
  static Exact sqrt5() { return Exact(0, 0, 1, 0, Tag{}); }
  static Exact sqrt10() { return Exact(0, 0, 0, 1, Tag{}); }
  static Exact half() { return Exact(1, 2); }
  static Exact inv_sqrt2();  // sqrt2 / 2
  static Exact tau();        // golden ratio (1 + sqrt5) / 2
  static Exact sigma();      // conjugate (1 - sqrt5) / 2

  const Rational& coeff(int i) const { return c_[i]; }

  Exact operator-() const;
  Exact& operator+=(const Exact& o);
  Exact& operator-=(const Exact& o);
  Exact& operator*=(const Exact& o);

  friend Exact operator+(Exact a, const Exact& b) { return a += b; }
  friend Exact operator-(Exact a, const Exact& b) { return a -= b; }
  friend Exact operator*(Exact a, const Exact& b) { return a *= b; }
  friend Exact operator/(const Exact& a, const Exact& b) { return a * b.inverse(); }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Exact inverse() const;

  /// Exact sign: -1, 0 or +1, decided by conjugate squaring.
  int sign() const;
  bool is_zero() const;

  /// Nearest-binary64 image of the real value.
  double to_double() const;

  bool operator==(const Exact& o) const { return c_ == o.c_; }
  bool operator!=(const Exact& o) const { return c_ != o.c_; }
  bool operator<(const Exact& o) const { return (*this - o).sign() < 0; }
  bool operator>(const Exact& o) const { return o < *this; }
  bool operator<=(const Exact& o) const { return !(o < *this); }
  bool operator>=(const Exact& o) const { return !(*this < o); }

  /// Human-readable form, e.g. "1/2+1/2r5" for the golden ratio.
  std::string str() const;

 private:
  struct Tag {};
  Exact(int a, int b, int c, int d, Tag)
      : c_{Rational(a), Rational(b), Rational(c), Rational(d)} {}

  std::array<Rational, 4> c_{};  // basis {1, sqrt2, sqrt5, sqrt10}
};

inline bool Exact::is_zero() const {
  return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

Exact abs(const Exact& a);
std::ostream& operator<<(std::ostream& os, const Exact& a);

}  // namespace chiral

#endif
