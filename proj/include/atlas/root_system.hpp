#pragma once

#include "atlas/exact_linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atlas {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// One simple factor, e.g. {Family::E, 8}.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;
  bool operator==(const SimpleType&) const = default;
  auto operator<=>(const SimpleType&) const = default;

  /// Throws std::invalid_argument when the rank is not allowed for the family.
  void validate() const;
  /// dim of the simple Lie algebra.
  int dimension() const;
  int num_positive_roots() const;
};

/// A simple type or a product of simple types ("A2xA1").
struct CartanType {
  std::vector<SimpleType> components;

  CartanType() = default;
  CartanType(SimpleType s) : components{s} {}  // NOLINT(implicit)
  explicit CartanType(std::vector<SimpleType> cs) : components(std::move(cs)) {}

  /// Accepts "E8", "a3", "A2xA1", "A2+A1", "B2*A1".
  static CartanType parse(std::string_view text);

  int rank() const;
  int dimension() const;
  bool is_simple() const { return components.size() == 1; }
  const SimpleType& simple() const;
  std::string name() const;
  bool operator==(const CartanType&) const = default;
};

/// Cartan matrix in Bourbaki numbering with the convention
///   A[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i).
IntMatrix cartan_matrix(const SimpleType& t);
IntMatrix cartan_matrix(const CartanType& t);

/// A root in the simple-root basis.
using Root = IntVector;

long height(const Root& r);
Root negate(const Root& r);

/// An element of the Cartan subalgebra written in the basis of simple
/// coroots h_1..h_rank (the Chevalley Cartan basis).
struct CartanElement {
  RationalVector coords;
};

struct RootSubsystem {
  /// Every root (both signs) of the subsystem.
  std::vector<Root> roots;
  /// Simple roots of the subsystem, Bourbaki-ordered per component of `type`.
  std::vector<Root> simple_roots;
  CartanType type;
  /// Dimension of the central torus of the reductive centralizer.
  int torus_dim = 0;

  /// dim of the reductive algebra: |roots| + ambient rank.
  int algebra_dim(int ambient_rank) const {
    return static_cast<int>(roots.size()) + ambient_rank;
  }
};

/// Integer-exact root data. Roots are stored in the simple-root basis, and
/// the positive roots are sorted by height and then lexicographically.
class RootSystem {
 public:
  explicit RootSystem(const CartanType& t);

  const CartanType& cartan_type() const { return type_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_positive() const { return positive_.size(); }
  /// Positive roots followed by their negatives in the same order.
  std::vector<Root> all_roots() const;
  int dimension() const { return rank() + 2 * static_cast<int>(positive_.size()); }

  /// Highest root of a simple type; throws for products.
  const Root& highest_root() const;
  /// One highest root per simple component.
  const std::vector<Root>& highest_roots() const { return highest_; }
  /// Index of the simple component that contains simple node i.
  int component_of_node(int i) const { return node_component_[static_cast<std::size_t>(i)]; }
  int component_of_root(const Root& r) const;

  const Integer& det_cartan() const { return det_; }
  /// adj(A): inv_cartan_times_det * A == det_cartan * identity.
  const IntMatrix& inv_cartan_times_det() const { return adj_; }

  /// Half squared length of simple root i; short roots have value 1.
  long node_length(int i) const { return d_[static_cast<std::size_t>(i)]; }
  /// Symmetric W-invariant form with (short, short) == 2.
  long inner(const Root& a, const Root& b) const;
  /// <beta, alpha_i^vee>.
  long pairing(const Root& beta, int i) const;
  /// alpha^vee in the simple coroot basis (integral).
  IntVector coroot(const Root& alpha) const;
  bool is_root(const Root& r) const;
  bool is_long(const Root& r) const;
  /// Position in positive_roots() of r or -r, and the sign (+1/-1).
  std::optional<std::pair<std::size_t, int>> locate(const Root& r) const;

  /// <beta, h> for a Cartan element h.
  Rational pairing(const Root& beta, const CartanElement& h) const;

 private:
  CartanType type_;
  IntMatrix cartan_;
  std::vector<long> d_;
  std::vector<Root> positive_;
  std::map<Root, std::size_t> index_;
  std::vector<Root> highest_;
  std::vector<int> node_component_;
  Integer det_;
  IntMatrix adj_;
};

/// The h with <alpha_i, h> == marks[i] for every simple root.
CartanElement coweight_element(const RootSystem& rs, const IntVector& marks);

/// Roots of the centralizer of h and the Cartan type of that subsystem.
RootSubsystem root_centralizer_subsystem(const RootSystem& rs, const CartanElement& h);

/// Simple roots of the closed subsystem spanned by the given roots (which
/// must be closed under negation and root addition inside rs).
std::vector<Root> subsystem_simple_roots(const RootSystem& rs, const std::vector<Root>& roots);

/// Identify the Cartan type of a Cartan matrix (Kac convention). `order`
/// receives, for each Bourbaki node of the concatenated result, the index
/// of the input node that plays that role.
CartanType identify_cartan_type(const IntMatrix& a, std::vector<std::size_t>* order = nullptr);

}  // namespace atlas
