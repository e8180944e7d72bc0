#pragma once

#include "atlas/exact_linalg.hpp"
#include "atlas/root_system.hpp"

#include <map>
#include <vector>

namespace atlas {

/// Weights are written in fundamental-weight coordinates (Dynkin labels).
using Weight = IntVector;

struct WeightMultiplicityTable {
  Weight highest_weight;
  std::map<Weight, long> entries;

  long dimension() const;
  long multiplicity(const Weight& w) const;
};

/// Freudenthal's recursion. Throws std::invalid_argument for a non-dominant
/// or wrongly sized highest weight.
WeightMultiplicityTable weight_multiplicities(const RootSystem& rs, const Weight& hw);

/// Weyl dimension formula.
Integer weyl_dimension(const RootSystem& rs, const Weight& hw);

/// The highest weight of the adjoint representation (the highest root in
/// Dynkin labels).
Weight adjoint_highest_weight(const RootSystem& rs);

/// Row j pairs a weight with the coroot of subsystem[j]:
///   (R * mu)_j = <mu, gamma_j^vee>.
/// Throws std::invalid_argument when the given roots are not linearly
/// independent roots of rs.
IntMatrix restriction_matrix(const RootSystem& rs, const std::vector<Root>& subsystem);

struct BranchComponent {
  Weight highest_weight;     // subsystem Dynkin labels
  RationalVector charges;    // torus charges
  long multiplicity = 0;
  long dimension = 0;        // of one copy
};

struct BranchingResult {
  CartanType sub_type;
  std::vector<Root> sub_simple_roots;  // Bourbaki order of sub_type
  std::size_t torus_dim = 0;
  /// Torus basis in simple-coroot coordinates.
  std::vector<RationalVector> torus_basis;
  long parent_dimension = 0;
  std::vector<BranchComponent> components;

  long total_dimension() const;
};

/// Decompose a representation of rs under the reductive subalgebra spanned
/// by the Cartan subalgebra and the root subsystem generated by `subsystem`
/// (simple roots in any order). Components are extracted highest weight
/// first; a negative residual multiplicity throws std::logic_error.
BranchingResult branch(const RootSystem& rs, const std::vector<Root>& subsystem,
                       const Weight& hw);
BranchingResult branch_adjoint(const RootSystem& rs, const std::vector<Root>& subsystem);

/// Centralizer of the coweight element with the given marks, branched.
struct CentralizerBranching {
  IntVector marks;
  CartanElement h;
  RootSubsystem subsystem;
  BranchingResult branching;
};

CentralizerBranching branch_adjoint_to_centralizer(const RootSystem& rs, const IntVector& marks);

}  // namespace atlas
