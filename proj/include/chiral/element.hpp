#ifndef CHIRAL_ELEMENT_HPP
#define CHIRAL_ELEMENT_HPP

#include <string>

#include "chiral/quaternion.hpp"

namespace chiral {

/// Orthogonal transformation encoded by a unit-quaternion pair:
///   [p, q]  (star = false)  acts as  v  ->  p v q       (proper rotation)
///   [p, q]* (star = true)   acts as  v  ->  p v̄ q       (rotary reflection)
/// [p, q] and [-p, -q] act identically; the stored representative keeps the
/// first nonzero component of p positive, so equality is componentwise.
struct GroupElement {
  Quat p, q;
  bool star = false;

  static GroupElement identity();
  /// Canonicalizes the sign convention; use for all construction.
  static GroupElement make(Quat p, Quat q, bool star);

  Quat apply(const Quat& v) const;
  /// The element acting as this-after-rhs.
  GroupElement compose(const GroupElement& rhs) const;
  GroupElement inverse() const;
  bool is_identity() const { return *this == identity(); }

  bool operator==(const GroupElement&) const = default;
};

/// Reflection in the plane orthogonal to a simple root: [a/sqrt2, -a/sqrt2]*.
/// The root must be pure with (a, a) = 2; throws std::invalid_argument otherwise.
GroupElement reflection_from_root(const Quat& alpha);

/// Smallest n >= 1 with g^n = identity; throws if n exceeds the bound.
int element_order(const GroupElement& g, int bound = 24);

/// Strict deterministic ordering (star, then p, then q, componentwise exact).
bool element_less(const GroupElement& a, const GroupElement& b);

/// binary64 image used by the floating-point orbit and witness kernels
struct ElementD {
  QuatD p, q;
  bool star = false;
};

ElementD embed(const GroupElement& g);
Vec3 apply(const ElementD& g, const Vec3& v);

}  // namespace chiral

#endif
