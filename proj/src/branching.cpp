#include "atlas/branching.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace atlas {

long WeightMultiplicityTable::dimension() const {
  long total = 0;
  for (const auto& [w, m] : entries) total += m;
  return total;
}

long WeightMultiplicityTable::multiplicity(const Weight& w) const {
  auto it = entries.find(w);
  return it == entries.end() ? 0 : it->second;
}

namespace {

Weight root_labels(const RootSystem& rs, const Root& a) {
  Weight out(static_cast<std::size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i) out[static_cast<std::size_t>(i)] = rs.pairing(a, i);
  return out;
}

// Coordinates of a weight in the simple-root basis, scaled by det(A).
IntVector root_coords_times_det(const RootSystem& rs, const Weight& w) {
  const auto& adj = rs.inv_cartan_times_det();
  const std::size_t r = w.size();
  IntVector c(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c[i] += adj[i][j] * w[j];
  return c;
}

// (mu, nu) * det(A), using (alpha_i, nu) = d_i * nu_i.
Integer form_times_det(const RootSystem& rs, const Weight& mu, const Weight& nu) {
  const IntVector c = root_coords_times_det(rs, mu);
  Integer s = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    s += Integer(c[i]) * rs.node_length(static_cast<int>(i)) * nu[i];
  return s;
}

Weight plus(const Weight& a, const Weight& b, long k = 1) {
  Weight out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += k * b[i];
  return out;
}

}  // namespace

WeightMultiplicityTable weight_multiplicities(const RootSystem& rs, const Weight& hw) {
  const std::size_t r = static_cast<std::size_t>(rs.rank());
  if (hw.size() != r) throw std::invalid_argument("highest weight has wrong length");
  for (long x : hw)
    if (x < 0) throw std::invalid_argument("highest weight is not dominant");

  std::vector<Weight> pos;
  for (const Root& a : rs.positive_roots()) pos.push_back(root_labels(rs, a));
  std::vector<Weight> simple;
  for (std::size_t i = 0; i < r; ++i) {
    Root e(r, 0);
    e[i] = 1;
    simple.push_back(root_labels(rs, e));
  }
  const Weight rho(r, 1);
  const Weight top = plus(hw, rho);
  const Integer top_norm = form_times_det(rs, top, top);

  WeightMultiplicityTable table;
  table.highest_weight = hw;
  table.entries[hw] = 1;
  std::vector<Weight> layer{hw};
  while (!layer.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : layer)
      for (const Weight& s : simple) {
        Weight mu = plus(w, s, -1);
        if (table.entries.count(mu) || std::find(next.begin(), next.end(), mu) != next.end())
          continue;
        next.push_back(std::move(mu));
      }
    std::vector<Weight> kept;
    for (Weight& mu : next) {
      Integer sum = 0;
      for (const Weight& a : pos) {
        Weight shifted = plus(mu, a);
        for (;;) {
          const long m = table.multiplicity(shifted);
          if (m == 0) break;
          sum += m * form_times_det(rs, shifted, a);
          shifted = plus(shifted, a);
        }
      }
      const Weight mr = plus(mu, rho);
      const Integer denom = top_norm - form_times_det(rs, mr, mr);
      if (sgn(sum) == 0) continue;
      if (sgn(denom) <= 0) throw std::logic_error("Freudenthal denominator vanished");
      const Integer twice = 2 * sum;
      if (twice % denom != 0) throw std::logic_error("non-integral weight multiplicity");
      const Integer m = twice / denom;
      if (sgn(m) <= 0) throw std::logic_error("negative weight multiplicity");
      table.entries[mu] = m.get_si();
      kept.push_back(std::move(mu));
    }
    layer = std::move(kept);
  }
  return table;
}

Integer weyl_dimension(const RootSystem& rs, const Weight& hw) {
  Rational out = 1;
  for (const Root& a : rs.positive_roots()) {
    long num = 0, den = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const long w = a[i] * rs.node_length(static_cast<int>(i));
      num += (hw[i] + 1) * w;
      den += w;
    }
    out *= Rational(num) / den;
  }
  if (out.get_den() != 1) throw std::logic_error("non-integral Weyl dimension");
  return out.get_num();
}

Weight adjoint_highest_weight(const RootSystem& rs) {
  return root_labels(rs, rs.highest_root());
}

IntMatrix restriction_matrix(const RootSystem& rs, const std::vector<Root>& subsystem) {
  const std::size_t r = static_cast<std::size_t>(rs.rank());
  std::vector<RationalVector> rows;
  IntMatrix out;
  for (const Root& g : subsystem) {
    if (g.size() != r || !rs.is_root(g))
      throw std::invalid_argument("subsystem element is not a root");
    out.push_back(rs.coroot(g));
    RationalVector v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = g[i];
    rows.push_back(std::move(v));
  }
  if (rank_of_rows(rows, r) != subsystem.size())
    throw std::invalid_argument("subsystem roots are linearly dependent");
  return out;
}

long BranchingResult::total_dimension() const {
  long total = 0;
  for (const auto& c : components) total += c.multiplicity * c.dimension;
  return total;
}

namespace {

struct SubData {
  CartanType type;
  std::vector<Root> simple;  // Bourbaki order
  std::optional<RootSystem> rs;
};

SubData sub_data(const RootSystem& rs, const std::vector<Root>& subsystem) {
  SubData out;
  const std::size_t k = subsystem.size();
  if (k == 0) return out;
  IntMatrix c(k, IntVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const long num = 2 * rs.inner(subsystem[i], subsystem[j]);
      const long den = rs.inner(subsystem[i], subsystem[i]);
      c[i][j] = num / den;
      if (i != j && c[i][j] > 0)
        throw std::invalid_argument("subsystem roots do not form a simple system");
    }
  std::vector<std::size_t> order;
  out.type = identify_cartan_type(c, &order);
  for (std::size_t idx : order) out.simple.push_back(subsystem[idx]);
  const IntMatrix expect = cartan_matrix(out.type);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (c[order[i]][order[j]] != expect[i][j])
        throw std::logic_error("subsystem Cartan matrix does not match its type");
  out.rs.emplace(out.type);
  return out;
}

Rational sub_height(const SubData& s, const Weight& w) {
  if (!s.rs) return 0;
  const IntVector c = root_coords_times_det(*s.rs, w);
  Rational h = 0;
  for (long x : c) h += x;
  return h / Rational(s.rs->det_cartan());
}

BranchingResult branch_impl(const RootSystem& rs, const std::vector<Root>& subsystem,
                            const Weight& hw, const std::vector<RationalVector>& preferred) {
  const std::size_t r = static_cast<std::size_t>(rs.rank());
  if (!subsystem.empty()) (void)restriction_matrix(rs, subsystem);
  const SubData sub = sub_data(rs, subsystem);

  BranchingResult out;
  out.sub_type = sub.type;
  out.sub_simple_roots = sub.simple;
  const IntMatrix restrict = sub.simple.empty() ? IntMatrix{} : restriction_matrix(rs, sub.simple);

  // Center of the reductive subalgebra: h with <gamma, h> = 0 on the subsystem.
  RationalMatrix ann(sub.simple.size(), r);
  for (std::size_t j = 0; j < sub.simple.size(); ++j)
    for (std::size_t l = 0; l < r; ++l) ann(j, l) = rs.pairing(sub.simple[j], static_cast<int>(l));
  std::vector<RationalVector> basis;
  for (const auto& v : preferred) {
    basis.push_back(v);
    if (rank_of_rows(basis, r) != basis.size()) basis.pop_back();
  }
  for (auto& v : kernel_basis(ann)) {
    basis.push_back(v);
    if (rank_of_rows(basis, r) != basis.size()) basis.pop_back();
  }
  if (basis.size() != r - sub.simple.size()) throw std::logic_error("torus basis has wrong size");
  out.torus_basis = basis;
  out.torus_dim = basis.size();

  const WeightMultiplicityTable table = weight_multiplicities(rs, hw);
  out.parent_dimension = table.dimension();

  using Key = std::pair<Weight, RationalVector>;
  std::map<Key, long> residual;
  for (const auto& [mu, m] : table.entries) {
    Weight res(restrict.size(), 0);
    for (std::size_t j = 0; j < restrict.size(); ++j)
      for (std::size_t l = 0; l < r; ++l) res[j] += restrict[j][l] * mu[l];
    RationalVector ch(basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t)
      for (std::size_t l = 0; l < r; ++l) ch[t] += basis[t][l] * mu[l];
    residual[{res, ch}] += m;
  }

  std::map<Weight, WeightMultiplicityTable> cache;
  for (;;) {
    const Key* best = nullptr;
    Rational best_h;
    for (const auto& [key, m] : residual) {
      if (m == 0) continue;
      const Rational h = sub_height(sub, key.first);
      if (!best || h > best_h) {
        best = &key;
        best_h = h;
      }
    }
    if (!best) break;
    const Key top = *best;
    for (long x : top.first)
      if (x < 0) throw std::logic_error("highest remaining weight is not dominant");
    const long copies = residual[top];
    long dim = 1;
    if (sub.rs) {
      auto it = cache.find(top.first);
      if (it == cache.end()) it = cache.emplace(top.first, weight_multiplicities(*sub.rs, top.first)).first;
      dim = it->second.dimension();
      for (const auto& [nu, m] : it->second.entries) {
        long& slot = residual[{nu, top.second}];
        slot -= copies * m;
        if (slot < 0) throw std::logic_error("negative residual multiplicity in branching");
      }
    } else {
      residual[top] -= copies;
    }
    out.components.push_back({top.first, top.second, copies, dim});
  }
  if (out.total_dimension() != out.parent_dimension)
    throw std::logic_error("branching does not conserve dimension");
  return out;
}

}  // namespace

BranchingResult branch(const RootSystem& rs, const std::vector<Root>& subsystem,
                       const Weight& hw) {
  return branch_impl(rs, subsystem, hw, {});
}

BranchingResult branch_adjoint(const RootSystem& rs, const std::vector<Root>& subsystem) {
  return branch_impl(rs, subsystem, adjoint_highest_weight(rs), {});
}

CentralizerBranching branch_adjoint_to_centralizer(const RootSystem& rs, const IntVector& marks) {
  CentralizerBranching out;
  out.marks = marks;
  out.h = coweight_element(rs, marks);
  out.subsystem = root_centralizer_subsystem(rs, out.h);
  std::vector<RationalVector> preferred;
  if (!is_zero(out.h.coords)) preferred.push_back(out.h.coords);
  out.branching = branch_impl(rs, out.subsystem.simple_roots, adjoint_highest_weight(rs), preferred);
  return out;
}

}  // namespace atlas
