#pragma once

#include "atlas/chevalley.hpp"
#include "atlas/cohomogeneity.hpp"
#include "atlas/root_system.hpp"

#include <string>
#include <vector>

namespace atlas {

/// A Dynkin diagram with crossed nodes (0-based Bourbaki indices).
struct PaintedDiagram {
  CartanType cartan_type;
  std::vector<int> crossed;

  PaintedDiagram() = default;
  PaintedDiagram(CartanType t, std::vector<int> nodes);

  std::size_t length() const { return crossed.size(); }
  /// Marks of the coweight: 1 on crossed nodes, 0 elsewhere.
  IntVector indicator() const;
  /// e.g. "C3[x..]" with crossed nodes drawn as x.
  std::string to_string() const;
  bool operator==(const PaintedDiagram&) const = default;
};

struct IsotropySummary {
  /// Roots of m (both signs).
  std::vector<Root> m_roots;
  /// Classes of positive m-roots; each class with its negatives spans one
  /// real irreducible summand.
  std::vector<std::vector<Root>> kostant_classes;
  std::size_t num_summands = 0;
};

std::vector<Root> isotropy_roots(const RootSystem& rs, const PaintedDiagram& pd);
IsotropySummary kostant_summands(const RootSystem& rs, const PaintedDiagram& pd);

/// Cohomogeneity of the adjoint orbit of the crossed-node coweight. An
/// empty diagram gives the zero orbit (a point) and cohomogeneity 0.
CohomReport flag_cohom(const ChevalleyAlgebra& a, const PaintedDiagram& pd,
                       const SampleConfig& cfg = {});

/// Node classes under diagram automorphisms; the first entry of each class
/// is its representative.
std::vector<std::vector<int>> node_classes(const SimpleType& t);

/// Non-redundant simple types of rank <= max_rank:
/// A1.., B2.., C3.., D4.., G2, F4, E6.., in that order.
std::vector<SimpleType> scan_types(int max_rank);

struct ScanEntry {
  PaintedDiagram diagram;
  std::size_t num_summands = 0;
  CohomReport report;
};

/// Every length-1 diagram (one per automorphism class) over scan_types.
std::vector<ScanEntry> scan_length_one(int max_rank, const SampleConfig& cfg = {});

/// Length-1 diagrams with flag_cohom == target. Longer diagrams are not
/// scanned: they have cohomogeneity at least 3.
std::vector<PaintedDiagram> classify_ss_low_cohom(int max_rank, std::size_t target,
                                                  const SampleConfig& cfg = {});

}  // namespace atlas
