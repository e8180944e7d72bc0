#pragma once

#include "atlas/cohomogeneity.hpp"
#include "atlas/flag_manifolds.hpp"
#include "atlas/nilpotent_orbits.hpp"
#include "atlas/sl2_decomp.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace atlas {

/// One computed quantity with the value it is checked against.
struct Fact {
  std::string name;
  long computed = 0;
  std::optional<long> expected;
  /// "==", ">=" or "<=".
  std::string relation = "==";
  /// Operation that produced the computed value.
  std::string source;

  bool holds() const;
};

struct TableRow {
  std::string label;
  std::vector<Fact> facts;
  /// "machine-verified", "external data" or "geometric, external".
  std::string provenance = "machine-verified";
  std::string note;
  /// Conjunction of the facts' checks.
  bool match() const;
};

struct ClassificationTable {
  std::string title;
  std::vector<TableRow> rows;
  bool all_match() const;
};

using Progress = std::function<void(const std::string&)>;

/// Label parsing shared by the CLI and the data file: a partition for
/// classical types ("3,1^4", optional ":II" for the second very even
/// orbit) or marks for any type ("wdd:0,1", or plain marks for
/// exceptional types).
OrbitLabel parse_orbit_label(const CartanType& t, const std::string& text);

/// Types with a next-to-minimal row: A2..A6, B3, B4, C2..C4, D4, D5, G2,
/// F4, E6, E7, E8.
std::vector<SimpleType> table1_types();

struct Table1Expectation {
  long cohomogeneity = 0;
  long k_dim = 0;
  long w_dim = 0;
};

/// Expected cohomogeneity, dim k and dim W of a next-to-minimal orbit.
Table1Expectation table1_expectation(const SimpleType& t, const OrbitLabel& label);

/// Representative, sl2 triple and isotypic data of one nilpotent orbit.
struct OrbitAnalysis {
  OrbitLabel label;
  WeightedDynkinDiagram diagram;
  long formula_orbit_dim = 0;
  long representative_orbit_dim = 0;
  Sl2Triple triple;
  std::size_t triple_centralizer_dim = 0;
  IsotypicDecomposition decomposition;
  long bundle_degree = 0;
  /// Commutant of k acting on the highest-weight vectors of the W block.
  std::size_t w_commutant_dim = 0;
  std::uint64_t seed = 0;
};

/// Retries with derived seeds when the triple cannot be completed.
OrbitAnalysis analyze_orbit(const ChevalleyAlgebra& a, const OrbitLabel& label,
                            std::uint64_t seed);

ClassificationTable reproduce_table1(const SampleConfig& cfg = {},
                                     const std::vector<SimpleType>& types = table1_types(),
                                     const Progress& progress = {});

/// Cohomogeneity of each minimal orbit through e_theta.
ClassificationTable minimal_orbit_table(const std::vector<SimpleType>& types,
                                        const SampleConfig& cfg = {},
                                        const Progress& progress = {});
/// A1..A4, B2..B4, C2..C4, D4, G2, F4, E6.
std::vector<SimpleType> minimal_orbit_types();

struct SemisimpleFamilyMember {
  PaintedDiagram diagram;
  std::string family;
  /// Generic stabilizer dimension of the orbit.
  long stabilizer_dim = 0;
};

/// The admissible instances of the five cohomogeneity-two families whose
/// type appears in scan_types(max_rank), keyed by class representative.
std::vector<SemisimpleFamilyMember> cohom_two_families(int max_rank);
/// A_n node 1 for n <= max_rank.
std::vector<SemisimpleFamilyMember> cohom_one_family(int max_rank);

struct SemisimpleScanResult {
  ClassificationTable table;
  std::vector<PaintedDiagram> target_one;
  std::vector<PaintedDiagram> target_two;
};

SemisimpleScanResult reproduce_thm_ss_c2(int max_rank, const SampleConfig& cfg = {},
                                         const Progress& progress = {});

/// X = h + e_{alpha_1} in A_n with <alpha_i, h> = 0 for i < n.
AlgebraElement mixed_orbit_element(const ChevalleyAlgebra& a);
AlgebraElement mixed_orbit_semisimple_part(const ChevalleyAlgebra& a);
CohomReport mixed_orbit_cohom(int n, const SampleConfig& cfg = {});

/// One factor of a product orbit: a nilpotent orbit or the semisimple orbit
/// of a painted diagram.
struct OrbitSpec {
  SimpleType type;
  std::optional<OrbitLabel> nilpotent;
  std::vector<int> crossed;

  static OrbitSpec nilpotent_orbit(SimpleType t, OrbitLabel l);
  static OrbitSpec minimal(SimpleType t);
  static OrbitSpec flag(SimpleType t, std::vector<int> nodes);
  std::string to_string() const;
};

struct ProductCohomReport {
  std::vector<CohomReport> components;
  std::size_t component_sum = 0;
  CohomReport direct;
  bool additive = false;
};

ProductCohomReport product_orbit_cohom(const std::vector<OrbitSpec>& components,
                                       const SampleConfig& cfg = {});

/// Element of the factor algebra embedded into the product algebra.
AlgebraElement embed_factor(const ChevalleyAlgebra& product, std::size_t factor,
                            const ChevalleyAlgebra& part, const AlgebraElement& x);

struct SharedOrbitInstance {
  CartanType big;
  CartanType small;
  std::string small_orbit;
};

struct SharedOrbitPair {
  std::string id;
  std::string big_algebra;
  std::string small_algebra;
  std::optional<int> covering_degree;
  bool next_to_minimal = true;
  std::string note;
  std::vector<SharedOrbitInstance> instances;
};

/// Throws std::runtime_error if the file is missing or malformed.
std::vector<SharedOrbitPair> load_shared_orbit_pairs(const std::string& path);

struct Tables23 {
  ClassificationTable table2;
  ClassificationTable table3;
};

Tables23 assemble_tables_2_3(const std::vector<SharedOrbitPair>& pairs,
                             const SampleConfig& cfg = {}, const Progress& progress = {});

}  // namespace atlas
