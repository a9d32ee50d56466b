#include "chiral/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace chiral {

namespace {

ExactMat3 gram(const std::array<Quat, 3>& roots) {
  ExactMat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = dot(roots[i], roots[j]);
  return m;
}

ExactMat3 invert(const ExactMat3& m) {
  Exact det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (det.is_zero()) throw std::domain_error("invert: singular Cartan matrix");
  Exact inv_det = det.inverse();
  ExactMat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // adjugate entry (j, i)
      int j1 = (j + 1) % 3, j2 = (j + 2) % 3;
      int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
      r[i][j] = inv_det * (m[j1][i1] * m[j2][i2] - m[j1][i2] * m[j2][i1]);
    }
  return r;
}

struct ElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    return element_less(a, b);
  }
};

}  // namespace

const char* to_string(DiagramId id) {
  switch (id) {
    case DiagramId::A1A1A1: return "A1A1A1";
    case DiagramId::A3: return "A3";
    case DiagramId::B3: return "B3";
    case DiagramId::H3: return "H3";
  }
  return "?";
}

bool parse_diagram(const std::string& name, DiagramId& out) {
  if (name == "A1A1A1" || name == "a1a1a1") out = DiagramId::A1A1A1;
  else if (name == "A3" || name == "a3") out = DiagramId::A3;
  else if (name == "B3" || name == "b3") out = DiagramId::B3;
  else if (name == "H3" || name == "h3") out = DiagramId::H3;
  else return false;
  return true;
}

const char* to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::full: return "full";
    case GroupTag::proper: return "proper";
    case GroupTag::pyritohedral: return "pyritohedral";
  }
  return "?";
}

CoxeterSystem build_system(DiagramId id) {
  const Exact s2 = Exact::sqrt2();
  const Exact tau = Exact::tau();
  const Exact sigma = Exact::sigma();
  const Quat e1 = unit(1), e2 = unit(2), e3 = unit(3);

  CoxeterSystem sys;
  sys.id = id;
  switch (id) {
    case DiagramId::A1A1A1:
      sys.roots = {s2 * e1, s2 * e2, s2 * e3};
      break;
    case DiagramId::A3:
      sys.roots = {e1 + e2, e3 - e2, e2 - e1};
      break;
    case DiagramId::B3:
      sys.roots = {e1 - e2, e2 - e3, s2 * e3};
      break;
    case DiagramId::H3:
      // The middle generator axis is (tau e1 + e2 + sigma e3)/2, a unit
      // vector; its root carries the sqrt2 scaling and the sign that makes
      // (a1, a2) = -tau.
      sys.roots = {s2 * e1, -(Exact::inv_sqrt2() * (tau * e1 + e2 + sigma * e3)), s2 * e2};
      break;
  }
  sys.cartan = gram(sys.roots);
  sys.cartan_inv = invert(sys.cartan);
  for (int i = 0; i < 3; ++i) {
    Quat w{};
    for (int j = 0; j < 3; ++j) w = w + sys.cartan_inv[i][j] * sys.roots[j];
    sys.weights[i] = w;
  }
  return sys;
}

std::array<GroupElement, 3> generators(const CoxeterSystem& sys) {
  return {reflection_from_root(sys.roots[0]), reflection_from_root(sys.roots[1]),
          reflection_from_root(sys.roots[2])};
}

bool FiniteGroup::contains(const GroupElement& g) const {
  return std::binary_search(elements.begin(), elements.end(), g, ElementLess{});
}

FiniteGroup generate_group(DiagramId id, std::span<const GroupElement> gens,
                           std::size_t safety_bound) {
  std::set<GroupElement, ElementLess> seen;
  std::deque<GroupElement> frontier;
  seen.insert(GroupElement::identity());
  frontier.push_back(GroupElement::identity());
  while (!frontier.empty()) {
    GroupElement g = frontier.front();
    frontier.pop_front();
    for (const GroupElement& s : gens) {
      GroupElement h = g.compose(s);
      if (seen.insert(h).second) {
        if (seen.size() > safety_bound)
          throw std::runtime_error("generate_group: closure exceeded safety bound");
        frontier.push_back(std::move(h));
      }
    }
  }
  FiniteGroup group;
  group.diagram = id;
  group.tag = GroupTag::full;
  group.elements.assign(seen.begin(), seen.end());
  return group;
}

FiniteGroup coxeter_group(DiagramId id) {
  CoxeterSystem sys = build_system(id);
  auto gens = generators(sys);
  return generate_group(id, gens);
}

FiniteGroup proper_subgroup(const FiniteGroup& g) {
  FiniteGroup sub;
  sub.diagram = g.diagram;
  sub.tag = GroupTag::proper;
  for (const GroupElement& e : g.elements)
    if (!e.star) sub.elements.push_back(e);
  return sub;  // element_less sorts star=false first, order is preserved
}

FiniteGroup pyritohedral_group() {
  FiniteGroup rotations = proper_subgroup(coxeter_group(DiagramId::A3));
  FiniteGroup group;
  group.diagram = DiagramId::A3;
  group.tag = GroupTag::pyritohedral;
  group.elements = rotations.elements;
  for (const GroupElement& e : rotations.elements)
    group.elements.push_back(GroupElement::make(e.p, e.q, true));
  std::sort(group.elements.begin(), group.elements.end(), ElementLess{});
  return group;
}

std::vector<ElementD> embed(const FiniteGroup& g) {
  std::vector<ElementD> out;
  out.reserve(g.elements.size());
  for (const GroupElement& e : g.elements) out.push_back(embed(e));
  return out;
}

std::vector<RelationCheck> verify_relations(const CoxeterSystem& sys) {
  int ea = 0, eb = 0;
  switch (sys.id) {
    case DiagramId::A1A1A1: ea = 2; eb = 2; break;
    case DiagramId::A3: ea = 3; eb = 3; break;
    case DiagramId::B3: ea = 3; eb = 4; break;
    case DiagramId::H3: ea = 5; eb = 3; break;
  }
  auto gens = generators(sys);
  GroupElement a = gens[0].compose(gens[1]);
  GroupElement b = gens[1].compose(gens[2]);
  GroupElement ab = a.compose(b);
  std::vector<RelationCheck> checks;
  auto add = [&checks](std::string name, int expected, const GroupElement& g) {
    int got = element_order(g);
    checks.push_back({std::move(name), expected, got, got == expected});
  };
  add("order(r1 r2)", ea, a);
  add("order(r2 r3)", eb, b);
  add("order(r1 r2 r2 r3)", 2, ab);
  return checks;
}

std::vector<Quat> binary_tetrahedral_units() {
  const Exact h = Exact::half();
  std::vector<Quat> units;
  for (int s : {1, -1}) {
    Exact v = Exact(s);
    units.push_back({v, Exact(0), Exact(0), Exact(0)});
    units.push_back({Exact(0), v, Exact(0), Exact(0)});
    units.push_back({Exact(0), Exact(0), v, Exact(0)});
    units.push_back({Exact(0), Exact(0), Exact(0), v});
  }
  for (int s0 : {1, -1})
    for (int s1 : {1, -1})
      for (int s2 : {1, -1})
        for (int s3 : {1, -1})
          units.push_back({Exact(s0) * h, Exact(s1) * h, Exact(s2) * h, Exact(s3) * h});
  return units;
}

std::vector<Quat> binary_octahedral_coset_units() {
  const Exact k = Exact::inv_sqrt2();
  std::vector<Quat> units;
  for (int i = 1; i <= 3; ++i)
    for (int s0 : {1, -1})
      for (int si : {1, -1}) {
        Quat q = Exact(si) * unit(i);
        q.w = Exact(s0);
        units.push_back(k * q);
      }
  for (int i = 1; i <= 3; ++i)
    for (int si : {1, -1})
      for (int sj : {1, -1}) {
        int j = i % 3 + 1;
        Quat q = Exact(si) * unit(i) + Exact(sj) * unit(j);
        units.push_back(k * q);
      }
  return units;
}

}  // namespace chiral
