#pragma once

#include "atlas/chevalley.hpp"
#include "atlas/root_system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace atlas {

/// Jordan-block sizes, weakly decreasing.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);
  /// Accepts "2,2,1,1", "2 2 1 1", "2^2,1^2" and "(2,2,1,1)".
  static Partition parse(const std::string& text);

  int total() const;
  Partition dual() const;
  /// Number of parts equal to k.
  int multiplicity(int k) const;
  std::string to_string() const;
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

struct WeightedDynkinDiagram {
  IntVector marks;
  std::string to_string() const;
  bool operator==(const WeightedDynkinDiagram&) const = default;
};

/// A classical partition (with the very-even flag and I/II variant for
/// D_n), or a weighted Dynkin diagram for exceptional types.
struct OrbitLabel {
  std::optional<Partition> partition;
  bool very_even = false;
  int variant = 1;  // 1 or 2; only meaningful when very_even
  std::optional<WeightedDynkinDiagram> diagram;

  static OrbitLabel classical(Partition p, bool very_even = false);
  static OrbitLabel exceptional(IntVector marks);
  bool is_classical() const { return partition.has_value(); }
  std::string to_string() const;
  bool operator==(const OrbitLabel&) const = default;
};

/// Size of the natural representation of a classical simple type.
int natural_dimension(const SimpleType& t);
bool is_classical(const SimpleType& t);

bool is_valid_partition(const SimpleType& t, const Partition& p);
/// Every valid partition of the natural dimension, in decreasing
/// lexicographic order. Throws std::invalid_argument for exceptional types.
std::vector<Partition> valid_partitions(const CartanType& t);
/// Very even D_n partitions label two orbits.
bool is_very_even(const SimpleType& t, const Partition& p);

/// Complex dimension of the nilpotent orbit (classical formula through the
/// dual partition). Throws std::invalid_argument for an invalid partition.
long orbit_dimension(const CartanType& t, const Partition& p);
/// Complex dimension from a weighted diagram: dim g - dim g_0 - dim g_1.
long orbit_dimension(const RootSystem& rs, const WeightedDynkinDiagram& w);
long orbit_dimension(const CartanType& t, const OrbitLabel& label);

/// Partial-sum dominance. Throws std::invalid_argument on unequal totals.
bool dominates(const Partition& p, const Partition& q);

struct HasseDiagram {
  CartanType type;
  std::vector<Partition> nodes;
  std::vector<long> dimensions;
  std::vector<bool> very_even;
  /// (lower, upper) node indices of each covering relation.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

HasseDiagram hasse_diagram(const CartanType& t);

WeightedDynkinDiagram weighted_diagram(const CartanType& t, const OrbitLabel& label);

/// dim of the ad(h)-eigenspace with eigenvalue k, h the coweight of w.
long grading_dimension(const RootSystem& rs, const WeightedDynkinDiagram& w, long k);

struct RepresentativeResult {
  AlgebraElement x;
  CartanElement h;
  int attempts = 0;
  long coefficient_range = 0;
};

/// Random element of the ad(h) eigenvalue-2 space, accepted once its
/// centralizer has dimension dim g_0 + dim g_1. Coefficients start in
/// [-3, 3] and the range doubles after every three rejections. Throws
/// std::runtime_error once the retry budget is exhausted, or at once for the
/// zero diagram.
RepresentativeResult representative_with_data(const ChevalleyAlgebra& a,
                                              const WeightedDynkinDiagram& w,
                                              std::uint64_t seed, int max_attempts = 12);
AlgebraElement representative(const ChevalleyAlgebra& a, const WeightedDynkinDiagram& w,
                              std::uint64_t seed);

OrbitLabel minimal_orbit(const CartanType& t);
std::vector<OrbitLabel> next_to_minimal(const CartanType& t);

/// e_theta, the alternative representative of the minimal orbit.
AlgebraElement highest_root_vector(const ChevalleyAlgebra& a);

}  // namespace atlas
