#pragma once

#include "atlas/chevalley.hpp"
#include "atlas/exact_linalg.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace atlas {

struct Sl2Triple {
  AlgebraElement x;
  AlgebraElement y;
  AlgebraElement h;
};

/// Thrown when [X, Y] = H has no solution in the eigenvalue -2 space.
class TripleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// H must lie in the Cartan subalgebra with integral root pairings, and X
/// must satisfy [H, X] = 2X. Throws TripleError when no Y exists.
Sl2Triple complete_triple(const ChevalleyAlgebra& a, const AlgebraElement& x,
                          const AlgebraElement& h);

/// Exact check of [H,X] = 2X, [H,Y] = -2Y, [X,Y] = H.
bool triple_relations_hold(const ChevalleyAlgebra& a, const Sl2Triple& t);

struct TripleCentralizer {
  std::vector<RationalVector> basis;
  std::size_t dim = 0;
};

/// Joint kernel of ad X, ad Y and ad H.
TripleCentralizer triple_centralizer(const ChevalleyAlgebra& a, const Sl2Triple& t);

struct IsotypicDecomposition {
  std::size_t k_dim = 0;
  /// k -> dim A_k for k >= 1 (zero entries omitted). The copy of S^2 formed
  /// by the triple itself is not counted in A_2.
  std::map<long, std::size_t> multiplicities;
  /// dim of the ad(H)-eigenspace of each eigenvalue.
  std::map<long, std::size_t> eigenspace_dims;
  std::size_t w_dim = 0;
};

/// Eigenspace dimensions are read off the root grading of H. Throws
/// std::logic_error if the bookkeeping produces a negative multiplicity.
IsotypicDecomposition isotypic_decomposition(const ChevalleyAlgebra& a, const Sl2Triple& t);

/// The unique k >= 2 with A_k nonzero, or 0 if there is none. Throws
/// std::logic_error when several are nonzero.
long bundle_degree(const IsotypicDecomposition& d);

/// Basis of ker ad(X) within the ad(H)-eigenspace of eigenvalue k, without
/// the triple's own X when k == 2: the highest-weight vectors of A_k S^k.
std::vector<RationalVector> highest_weight_space(const ChevalleyAlgebra& a, const Sl2Triple& t,
                                                 long k);

/// Matrices of ad(z), z running over `acting`, restricted to the span of
/// `space` (which must be invariant).
std::vector<RationalMatrix> restricted_action(const ChevalleyAlgebra& a,
                                              const std::vector<RationalVector>& acting,
                                              const std::vector<RationalVector>& space);

/// dim of {C : C M = M C for every M}.
std::size_t commutant_dim(const std::vector<RationalMatrix>& action_matrices);

}  // namespace atlas
