#ifndef CHIRAL_COXETER_HPP
#define CHIRAL_COXETER_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "chiral/element.hpp"

namespace chiral {

enum class DiagramId { A1A1A1, A3, B3, H3 };

const char* to_string(DiagramId id);
bool parse_diagram(const std::string& name, DiagramId& out);

using ExactMat3 = std::array<std::array<Exact, 3>, 3>;

/// Rank-3 Coxeter diagram with quaternionic simple roots.
/// Invariants: (a_i, a_j) = C_ij, (a_i, w_j) = delta_ij, w_i = (C^-1)_ij a_j,
/// and C * C^-1 = identity, all exactly. Roots are scaled so every Cartan
/// diagonal is 2; for H3 this puts a sqrt2 on the unit-norm generator axes.
struct CoxeterSystem {
  DiagramId id;
  std::array<Quat, 3> roots;
  ExactMat3 cartan;
  ExactMat3 cartan_inv;
  std::array<Quat, 3> weights;
};

CoxeterSystem build_system(DiagramId id);

/// The three reflections [a_i/sqrt2, -a_i/sqrt2]*.
std::array<GroupElement, 3> generators(const CoxeterSystem& sys);

enum class GroupTag { full, proper, pyritohedral };

const char* to_string(GroupTag tag);

/// Finite group as a canonical action set: sorted, deduplicated
/// [p, q] / [p, q]* pairs. Subgroup questions are set questions.
struct FiniteGroup {
  DiagramId diagram;
  GroupTag tag = GroupTag::full;
  std::vector<GroupElement> elements;  // sorted by element_less

  std::size_t order() const { return elements.size(); }
  bool contains(const GroupElement& g) const;
};

/// Breadth-first closure of the generators under composition.
/// Throws std::runtime_error if the closure exceeds safety_bound elements.
FiniteGroup generate_group(DiagramId id, std::span<const GroupElement> gens,
                           std::size_t safety_bound = 1200);

/// Convenience: full Coxeter group of a diagram.
FiniteGroup coxeter_group(DiagramId id);

/// Index-2 subgroup of proper rotations (star = false).
FiniteGroup proper_subgroup(const FiniteGroup& g);

/// Order-24 group {[T, T̄]} + {[T, T̄]*}: the proper tetrahedral rotations
/// together with their rotary-reflection copies.
FiniteGroup pyritohedral_group();

std::vector<ElementD> embed(const FiniteGroup& g);

struct RelationCheck {
  std::string relation;
  int expected = 0;
  int computed = 0;
  bool pass = false;
};

/// Orders of a = r1 r2, b = r2 r3 and ab against the diagram's presentation.
std::vector<RelationCheck> verify_relations(const CoxeterSystem& sys);

/// The 24 binary tetrahedral units: +-1, +-e_i, (+-1 +- e1 +- e2 +- e3)/2.
std::vector<Quat> binary_tetrahedral_units();
/// The 24 coset units T' = O \ T: (+-1 +- e_i)/sqrt2 and (+-e_i +- e_j)/sqrt2.
std::vector<Quat> binary_octahedral_coset_units();

}  // namespace chiral

#endif
