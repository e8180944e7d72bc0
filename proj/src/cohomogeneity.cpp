#include "atlas/cohomogeneity.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace atlas {

AlgebraElement apply_root_unipotent(const ChevalleyAlgebra& a, const AlgebraElement& x,
                                    const Root& root, const Rational& t_re,
                                    const Rational& t_im) {
  const AlgebraElement e = a.root_vector(root).times(t_re, t_im);
  AlgebraElement out = x;
  AlgebraElement term = x;
  for (long k = 1;; ++k) {
    term = a.bracket(e, term);
    if (term.is_zero()) break;
    term = term.times(Rational(1) / k);
    out = out + term;
  }
  return out;
}

std::uint64_t sample_seed(std::uint64_t seed, std::size_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(i)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

long draw(std::mt19937_64& rng, long range) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
}

}  // namespace

AlgebraElement sample_orbit_point(const ChevalleyAlgebra& a, const AlgebraElement& x0,
                                  const SampleConfig& cfg) {
  const RootSystem& rs = a.root_system();
  const std::size_t P = rs.num_positive();
  const std::size_t steps = cfg.unipotent_steps.value_or(2 * P);
  const long range = std::max(1L, cfg.coefficient_range);
  std::mt19937_64 rng(cfg.seed);

  AlgebraElement x = x0;
  std::vector<std::size_t> order(P);
  std::size_t done = 0;
  while (done < steps) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = P; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    for (std::size_t k = 0; k < P && done < steps; ++k, ++done) {
      long tr = 0, ti = 0;
      while (tr == 0 && ti == 0) {
        tr = draw(rng, range);
        ti = draw(rng, range);
      }
      x = apply_root_unipotent(a, x, rs.positive_roots()[order[k]], tr, ti);
    }
  }
  if (steps == 0) return x;

  // Torus factor: e_alpha scales by prod c_i^{n_i}.
  std::vector<Rational> c(a.rank());
  for (auto& ci : c) {
    ci = static_cast<long>(rng() % static_cast<std::uint64_t>(range)) + 1;
    if (rng() % 2) ci = 1 / ci;
  }
  for (std::size_t k = a.rank(); k < a.dim(); ++k) {
    const Root alpha = a.root_of(k);
    Rational f = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const long e = alpha[i];
      for (long j = 0; j < (e < 0 ? -e : e); ++j) {
        if (e < 0) f /= c[i];
        else f *= c[i];
      }
    }
    x.re[k] *= f;
    x.im[k] *= f;
  }
  return x;
}

std::size_t real_orbit_dim(const ChevalleyAlgebra& a, const AlgebraElement& x) {
  const std::size_t n = a.dim();
  if (x.is_zero()) return 0;
  const CompactFormBasis basis = compact_form_basis(a);
  RationalMatrix m(n, 2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    const AlgebraElement b = a.bracket(basis.elements[j], x);
    for (std::size_t k = 0; k < n; ++k) {
      m(j, k) = b.re[k];
      m(j, n + k) = b.im[k];
    }
  }
  return rank_rational(m);
}

namespace {

void finish(CohomReport& r) {
  r.max_sample_dim = 0;
  r.samples_agree = true;
  for (const auto& s : r.samples) {
    if (s.real_orbit_dim > r.orbit_real_dim)
      throw std::logic_error("sampled orbit dimension exceeds the orbit dimension");
    r.max_sample_dim = std::max(r.max_sample_dim, s.real_orbit_dim);
    if (s.real_orbit_dim != r.samples.front().real_orbit_dim) r.samples_agree = false;
  }
  r.cohomogeneity = r.orbit_real_dim - r.max_sample_dim;
  r.certification =
      "exact rank at each sampled point; the cohomogeneity is an upper bound on the "
      "generic-orbit codimension, sharp up to genericity of the " +
      std::to_string(r.samples.size()) + " samples" +
      (r.samples_agree ? "" : " (samples disagree; maximum taken)");
}

}  // namespace

CohomReport cohom_adjoint(const ChevalleyAlgebra& a, const AlgebraElement& x0,
                          const SampleConfig& cfg) {
  if (x0.is_zero()) throw std::invalid_argument("cohom_adjoint needs a nonzero element");
  CohomReport r;
  const std::size_t cent = centralizer_dim(a, x0);
  r.orbit_real_dim = 2 * (a.dim() - cent);
  r.group_dim = a.dim();
  for (std::size_t i = 0; i < std::max<std::size_t>(1, cfg.num_samples); ++i) {
    SampleConfig c = cfg;
    c.seed = sample_seed(cfg.seed, i);
    const AlgebraElement x = sample_orbit_point(a, x0, c);
    if (cfg.verify_samples && centralizer_dim(a, x) != cent)
      throw std::logic_error("sampled point left the orbit");
    r.samples.push_back({c.seed, real_orbit_dim(a, x)});
  }
  finish(r);
  return r;
}

CohomReport pool_reports(const CohomReport& a, const CohomReport& b) {
  if (a.orbit_real_dim != b.orbit_real_dim || a.group_dim != b.group_dim)
    throw std::invalid_argument("reports describe different orbits");
  CohomReport r = a;
  r.samples.insert(r.samples.end(), b.samples.begin(), b.samples.end());
  finish(r);
  return r;
}

CohomReport cohom_linear_rep(const std::vector<RationalMatrix>& action_matrices,
                             std::size_t rep_dim, const SampleConfig& cfg) {
  for (const auto& m : action_matrices)
    if (m.rows() != rep_dim || m.cols() != rep_dim)
      throw std::invalid_argument("action matrix has the wrong size");
  CohomReport r;
  r.orbit_real_dim = rep_dim;
  r.group_dim = action_matrices.size();
  const long range = std::max(1L, cfg.coefficient_range);
  for (std::size_t i = 0; i < std::max<std::size_t>(1, cfg.num_samples); ++i) {
    const std::uint64_t seed = sample_seed(cfg.seed, i);
    std::mt19937_64 rng(seed);
    RationalVector v(rep_dim);
    for (auto& x : v) x = draw(rng, range);
    std::vector<RationalVector> rows;
    for (const auto& m : action_matrices) rows.push_back(m * v);
    r.samples.push_back({seed, rank_of_rows(rows, rep_dim)});
  }
  finish(r);
  return r;
}

CohomReport cohom_nilpotent(const ChevalleyAlgebra& a, const OrbitLabel& label,
                            const SampleConfig& cfg) {
  const WeightedDynkinDiagram w = weighted_diagram(a.root_system().cartan_type(), label);
  return cohom_adjoint(a, representative(a, w, cfg.seed), cfg);
}

MonotonicityReport check_monotonicity(const ChevalleyAlgebra& a,
                                      const std::vector<OrbitLabel>& labels,
                                      const SampleConfig& cfg) {
  MonotonicityReport out;
  out.labels = labels;
  for (const auto& l : labels) out.reports.push_back(cohom_nilpotent(a, l, cfg));
  for (std::size_t i = 1; i < out.reports.size(); ++i)
    if (out.reports[i].cohomogeneity <= out.reports[i - 1].cohomogeneity)
      out.strictly_increasing = false;
  return out;
}

}  // namespace atlas
