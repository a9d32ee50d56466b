#ifndef CHIRAL_QUATERNION_HPP
#define CHIRAL_QUATERNION_HPP

#include <array>

#include "chiral/exact.hpp"

namespace chiral {

/// Quaternion q = w + x e1 + y e2 + z e3 over a generic scalar.
/// The imaginary units satisfy e_i e_j = -delta_ij + eps_ijk e_k.
/// Vertices of the solids are pure quaternions (w = 0).
template <class S>
struct Quaternion {
  S w{}, x{}, y{}, z{};

  Quaternion conj() const { return {w, -x, -y, -z}; }
  S norm2() const { return w * w + x * x + y * y + z * z; }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend Quaternion operator*(const S& s, const Quaternion& q) {
    return {s * q.w, s * q.x, s * q.y, s * q.z};
  }

  bool operator==(const Quaternion&) const = default;
};

/// Euclidean scalar product (p, q) = (p q̄ + q p̄) / 2, evaluated componentwise.
template <class S>
S dot(const Quaternion<S>& a, const Quaternion<S>& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

using Quat = Quaternion<Exact>;
using QuatD = Quaternion<double>;
using Vec3 = std::array<double, 3>;

/// Imaginary unit e_i (i in 1..3).
inline Quat unit(int i) {
  Quat q;
  (i == 1 ? q.x : i == 2 ? q.y : q.z) = Exact(1);
  return q;
}

inline Quat pure_quat(Exact x, Exact y, Exact z) {
  return {Exact(0), std::move(x), std::move(y), std::move(z)};
}

inline QuatD embed(const Quat& q) {
  return {q.w.to_double(), q.x.to_double(), q.y.to_double(), q.z.to_double()};
}

inline Vec3 vec3(const Quat& q) { return {q.x.to_double(), q.y.to_double(), q.z.to_double()}; }

}  // namespace chiral

#endif
