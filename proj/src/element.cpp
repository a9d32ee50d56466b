#include "chiral/element.hpp"

#include <stdexcept>

namespace chiral {

namespace {

int first_nonzero_sign(const Quat& p) {
  for (const Exact* c : {&p.w, &p.x, &p.y, &p.z}) {
    int s = c->sign();
    if (s != 0) return s;
  }
  return 0;
}

int compare(const Exact& a, const Exact& b) { return (a - b).sign(); }

int compare(const Quat& a, const Quat& b) {
  if (int c = compare(a.w, b.w)) return c;
  if (int c = compare(a.x, b.x)) return c;
  if (int c = compare(a.y, b.y)) return c;
  return compare(a.z, b.z);
}

}  // namespace

GroupElement GroupElement::identity() {
  Quat one{Exact(1), Exact(0), Exact(0), Exact(0)};
  return {one, one, false};
}

GroupElement GroupElement::make(Quat p, Quat q, bool star) {
  if (first_nonzero_sign(p) < 0) {
    p = -p;
    q = -q;
  }
  return {std::move(p), std::move(q), star};
}

Quat GroupElement::apply(const Quat& v) const {
  return star ? p * v.conj() * q : p * v * q;
}

GroupElement GroupElement::compose(const GroupElement& rhs) const {
  // [p,q][r,s]   : v -> p (r v s) q           = [pr, sq]
  // [p,q][r,s]*  : v -> p (r v̄ s) q           = [pr, sq]*
  // [p,q]*[r,s]  : v -> p (s̄ v̄ r̄) q           = [p s̄, r̄ q]*
  // [p,q]*[r,s]* : v -> p (s̄ v r̄) q           = [p s̄, r̄ q]
  if (!star) return make(p * rhs.p, rhs.q * q, rhs.star);
  return make(p * rhs.q.conj(), rhs.p.conj() * q, !rhs.star);
}

GroupElement GroupElement::inverse() const {
  if (!star) return make(p.conj(), q.conj(), false);
  return make(q, p, true);
}

GroupElement reflection_from_root(const Quat& alpha) {
  if (alpha.w.sign() != 0) throw std::invalid_argument("reflection_from_root: root must be pure");
  if (dot(alpha, alpha) != Exact(2))
    throw std::invalid_argument("reflection_from_root: root must have (a, a) = 2");
  Quat half = Exact::inv_sqrt2() * alpha;
  return GroupElement::make(half, -half, true);
}

int element_order(const GroupElement& g, int bound) {
  GroupElement acc = g;
  for (int n = 1; n <= bound; ++n) {
    if (acc.is_identity()) return n;
    acc = acc.compose(g);
  }
  throw std::runtime_error("element_order: bound exceeded");
}

bool element_less(const GroupElement& a, const GroupElement& b) {
  if (a.star != b.star) return !a.star;
  if (int c = compare(a.p, b.p)) return c < 0;
  return compare(a.q, b.q) < 0;
}

ElementD embed(const GroupElement& g) { return {embed(g.p), embed(g.q), g.star}; }

Vec3 apply(const ElementD& g, const Vec3& v) {
  QuatD vq{0.0, v[0], v[1], v[2]};
  QuatD r = g.star ? g.p * vq.conj() * g.q : g.p * vq * g.q;
  return {r.x, r.y, r.z};
}

}  // namespace chiral
