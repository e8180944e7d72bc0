#include "atlas/flag_manifolds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace atlas {

PaintedDiagram::PaintedDiagram(CartanType t, std::vector<int> nodes)
    : cartan_type(std::move(t)), crossed(std::move(nodes)) {
  std::sort(crossed.begin(), crossed.end());
  crossed.erase(std::unique(crossed.begin(), crossed.end()), crossed.end());
  for (int k : crossed)
    if (k < 0 || k >= cartan_type.rank())
      throw std::invalid_argument("crossed node out of range for " + cartan_type.name());
}

IntVector PaintedDiagram::indicator() const {
  IntVector m(static_cast<std::size_t>(cartan_type.rank()), 0);
  for (int k : crossed) m[static_cast<std::size_t>(k)] = 1;
  return m;
}

std::string PaintedDiagram::to_string() const {
  std::string s = cartan_type.name() + "[";
  const IntVector m = indicator();
  for (long x : m) s += x ? 'x' : '.';
  return s + "]";
}

namespace {

bool touches_crossed(const Root& r, const PaintedDiagram& pd) {
  for (int k : pd.crossed)
    if (r[static_cast<std::size_t>(k)] != 0) return true;
  return false;
}

}  // namespace

std::vector<Root> isotropy_roots(const RootSystem& rs, const PaintedDiagram& pd) {
  std::vector<Root> out;
  for (const Root& r : rs.all_roots())
    if (touches_crossed(r, pd)) out.push_back(r);
  return out;
}

IsotropySummary kostant_summands(const RootSystem& rs, const PaintedDiagram& pd) {
  IsotropySummary out;
  out.m_roots = isotropy_roots(rs, pd);
  std::vector<Root> pos;
  for (const Root& r : rs.positive_roots())
    if (touches_crossed(r, pd)) pos.push_back(r);

  std::vector<std::size_t> parent(pos.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      Root d(pos[i].size());
      for (std::size_t k = 0; k < d.size(); ++k) d[k] = pos[i][k] - pos[j][k];
      if (rs.is_root(d) && !touches_crossed(d, pd)) parent[find(i)] = find(j);
    }
  std::map<std::size_t, std::vector<Root>> classes;
  for (std::size_t i = 0; i < pos.size(); ++i) classes[find(i)].push_back(pos[i]);
  for (auto& [k, v] : classes) out.kostant_classes.push_back(std::move(v));
  out.num_summands = out.kostant_classes.size();
  return out;
}

CohomReport flag_cohom(const ChevalleyAlgebra& a, const PaintedDiagram& pd,
                       const SampleConfig& cfg) {
  if (pd.crossed.empty()) {
    CohomReport r;
    r.group_dim = a.dim();
    r.max_sample_dim = 0;
    r.certification = "zero orbit";
    return r;
  }
  const CartanElement h = coweight_element(a.root_system(), pd.indicator());
  return cohom_adjoint(a, a.cartan_element(h), cfg);
}

std::vector<std::vector<int>> node_classes(const SimpleType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> out;
  switch (t.family) {
    case Family::A:
      for (int k = 0; k < (n + 1) / 2; ++k) {
        if (k == n - 1 - k) out.push_back({k});
        else out.push_back({k, n - 1 - k});
      }
      return out;
    case Family::D:
      if (n == 4) return {{0, 2, 3}, {1}};
      for (int k = 0; k < n - 2; ++k) out.push_back({k});
      out.push_back({n - 2, n - 1});
      return out;
    case Family::E:
      if (n == 6) return {{0, 5}, {1}, {2, 4}, {3}};
      break;
    default: break;
  }
  for (int k = 0; k < n; ++k) out.push_back({k});
  return out;
}

std::vector<SimpleType> scan_types(int max_rank) {
  std::vector<SimpleType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n});
  return out;
}

std::vector<ScanEntry> scan_length_one(int max_rank, const SampleConfig& cfg) {
  std::vector<ScanEntry> out;
  for (const SimpleType& t : scan_types(max_rank)) {
    const ChevalleyAlgebra a{RootSystem(CartanType(t))};
    for (const auto& cls : node_classes(t)) {
      PaintedDiagram pd(CartanType(t), {cls.front()});
      ScanEntry e{pd, kostant_summands(a.root_system(), pd).num_summands, flag_cohom(a, pd, cfg)};
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<PaintedDiagram> classify_ss_low_cohom(int max_rank, std::size_t target,
                                                  const SampleConfig& cfg) {
  if (target != 1 && target != 2) throw std::invalid_argument("target must be 1 or 2");
  std::vector<PaintedDiagram> out;
  for (const auto& e : scan_length_one(max_rank, cfg))
    if (e.report.cohomogeneity == target) out.push_back(e.diagram);
  return out;
}

}  // namespace atlas
