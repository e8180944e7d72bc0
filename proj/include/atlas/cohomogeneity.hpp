#pragma once

#include "atlas/chevalley.hpp"
#include "atlas/nilpotent_orbits.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace atlas {

struct SampleConfig {
  std::uint64_t seed = 20240611;
  std::size_t num_samples = 5;
  /// Number of root unipotents applied; unset selects 2 * (number of
  /// positive roots). Zero steps return x0 unchanged.
  std::optional<std::size_t> unipotent_steps;
  long coefficient_range = 3;
  /// Recompute the complex centralizer dimension of every sample and throw
  /// if it differs from that of x0. Expensive for large algebras.
  bool verify_samples = false;
};

struct SampleRecord {
  std::uint64_t seed = 0;
  std::size_t real_orbit_dim = 0;
};

struct CohomReport {
  std::size_t cohomogeneity = 0;
  std::size_t orbit_real_dim = 0;
  /// Real dimension of the acting compact group (or of the acting algebra).
  std::size_t group_dim = 0;
  std::vector<SampleRecord> samples;
  std::size_t max_sample_dim = 0;
  bool samples_agree = true;
  std::string certification;

  /// dim of the generic stabilizer: group_dim - max_sample_dim.
  std::size_t generic_stabilizer_dim() const { return group_dim - max_sample_dim; }
};

/// exp(ad(t e_root)) x for complex t = t_re + i t_im. A polynomial in t
/// because ad(e_root) is nilpotent.
AlgebraElement apply_root_unipotent(const ChevalleyAlgebra& a, const AlgebraElement& x,
                                    const Root& root, const Rational& t_re,
                                    const Rational& t_im = 0);

/// Ad(a) Ad(n) x0 with n a product of positive-root unipotents in shuffled
/// order with Gaussian-integer parameters, and a a diagonal torus element
/// with positive rational entries. The seed fully determines the point.
AlgebraElement sample_orbit_point(const ChevalleyAlgebra& a, const AlgebraElement& x0,
                                  const SampleConfig& cfg);

/// Seed used for sample i of a run.
std::uint64_t sample_seed(std::uint64_t seed, std::size_t i);

/// Real dimension of span_R{[u, x] : u in the compact basis}.
std::size_t real_orbit_dim(const ChevalleyAlgebra& a, const AlgebraElement& x);

CohomReport cohom_adjoint(const ChevalleyAlgebra& a, const AlgebraElement& x0,
                          const SampleConfig& cfg = {});

/// Pool the samples of two runs on the same orbit.
CohomReport pool_reports(const CohomReport& a, const CohomReport& b);

/// Cohomogeneity of a linear action given by a basis of the acting algebra.
CohomReport cohom_linear_rep(const std::vector<RationalMatrix>& action_matrices,
                             std::size_t rep_dim, const SampleConfig& cfg = {});

/// Representative of the labelled nilpotent orbit followed by cohom_adjoint.
CohomReport cohom_nilpotent(const ChevalleyAlgebra& a, const OrbitLabel& label,
                            const SampleConfig& cfg = {});

struct MonotonicityReport {
  std::vector<OrbitLabel> labels;
  std::vector<CohomReport> reports;
  bool strictly_increasing = true;
};

/// Labels are ordered from smallest to largest in the closure order.
MonotonicityReport check_monotonicity(const ChevalleyAlgebra& a,
                                      const std::vector<OrbitLabel>& labels,
                                      const SampleConfig& cfg = {});

}  // namespace atlas
