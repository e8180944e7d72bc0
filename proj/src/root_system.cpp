#include "atlas/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace atlas {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::string SimpleType::name() const { return family_letter(family) + std::to_string(rank); }

void SimpleType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw std::invalid_argument("invalid rank for type " + name());
}

int SimpleType::num_positive_roots() const {
  const int n = rank;
  switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

int SimpleType::dimension() const { return rank + 2 * num_positive_roots(); }

CartanType CartanType::parse(std::string_view text) {
  CartanType out;
  std::size_t i = 0;
  auto skip_sep = [&] {
    while (i < text.size() && (text[i] == 'x' || text[i] == 'X' || text[i] == '+' ||
                               text[i] == '*' || std::isspace(static_cast<unsigned char>(text[i]))))
      ++i;
  };
  skip_sep();
  while (i < text.size()) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (c < 'A' || c > 'G') throw std::invalid_argument("bad Cartan type: " + std::string(text));
    ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw std::invalid_argument("missing rank in Cartan type: " + std::string(text));
    SimpleType s{static_cast<Family>(c - 'A'), std::stoi(std::string(text.substr(i, j - i)))};
    s.validate();
    out.components.push_back(s);
    i = j;
    skip_sep();
  }
  if (out.components.empty()) throw std::invalid_argument("empty Cartan type");
  return out;
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

int CartanType::dimension() const {
  int d = 0;
  for (const auto& c : components) d += c.dimension();
  return d;
}

const SimpleType& CartanType::simple() const {
  if (!is_simple()) throw std::logic_error("Cartan type " + name() + " is not simple");
  return components.front();
}

std::string CartanType::name() const {
  std::string s;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (k) s += "x";
    s += components[k].name();
  }
  return s.empty() ? "0" : s;
}

IntMatrix cartan_matrix(const SimpleType& t) {
  t.validate();
  const int n = t.rank;
  IntMatrix a(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n), 0));
  auto at = [&](int i, int j) -> long& {
    return a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  };
  for (int i = 1; i <= n; ++i) at(i, i) = 2;
  auto bond = [&](int i, int j) { at(i, j) = at(j, i) = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      at(n, n - 1) = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      at(n - 1, n) = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      at(3, 2) = -2;  // alpha_1, alpha_2 long
      break;
    case Family::G:
      bond(1, 2);
      at(1, 2) = -3;  // alpha_1 short
      break;
  }
  return a;
}

IntMatrix cartan_matrix(const CartanType& t) {
  const auto n = static_cast<std::size_t>(t.rank());
  IntMatrix a(n, IntVector(n, 0));
  std::size_t off = 0;
  for (const auto& c : t.components) {
    const IntMatrix b = cartan_matrix(c);
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) a[off + i][off + j] = b[i][j];
    off += b.size();
  }
  return a;
}

long height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0L); }

Root negate(const Root& r) {
  Root out(r);
  for (auto& x : out) x = -x;
  return out;
}

namespace {

// d_i = (alpha_i, alpha_i)/2 normalised so the shortest root of each
// component has d = 1.
std::vector<long> symmetrizer(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, 0);
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    d[s] = 1;
    comp[s] = ncomp;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0 || comp[j] >= 0) continue;
        // d_i a_ij = d_j a_ji
        d[j] = d[i] * a[i][j] / a[j][i];
        comp[j] = ncomp;
        q.push(j);
      }
    }
    ++ncomp;
  }
  std::vector<long> out(n);
  for (int c = 0; c < ncomp; ++c) {
    Rational lo = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c && (lo < 0 || d[i] < lo)) lo = d[i];
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == c) {
        const Rational v = d[i] / lo;
        if (v.get_den() != 1) throw std::logic_error("non-integral symmetrizer");
        out[i] = v.get_num().get_si();
      }
  }
  return out;
}

std::vector<int> node_components(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::queue<std::size_t> q;
    q.push(s);
    comp[s] = c;
    while (!q.empty()) {
      const std::size_t i = q.front();
      q.pop();
      for (std::size_t j = 0; j < n; ++j)
        if (a[i][j] != 0 && comp[j] < 0) {
          comp[j] = c;
          q.push(j);
        }
    }
    ++c;
  }
  return comp;
}

bool root_less(const Root& a, const Root& b) {
  const long ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

}  // namespace

RootSystem::RootSystem(const CartanType& t) : type_(t), cartan_(cartan_matrix(t)) {
  for (const auto& c : t.components) c.validate();
  const std::size_t n = cartan_.size();
  d_ = symmetrizer(cartan_);
  node_component_ = node_components(cartan_);

  // Closure under adding simple roots using root strings.
  std::set<Root> seen;
  std::vector<Root> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Root r(n, 0);
    r[i] = 1;
    seen.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        long p = 0;
        Root down = beta;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        const long q = p - pairing(beta, static_cast<int>(i));
        if (q > 0) {
          Root up = beta;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  positive_.assign(seen.begin(), seen.end());
  std::sort(positive_.begin(), positive_.end(), root_less);
  for (std::size_t k = 0; k < positive_.size(); ++k) index_[positive_[k]] = k;

  const int ncomp = node_component_.empty()
                        ? 0
                        : *std::max_element(node_component_.begin(), node_component_.end()) + 1;
  highest_.assign(static_cast<std::size_t>(ncomp), Root{});
  for (const Root& r : positive_) {
    const int c = component_of_root(r);
    auto& h = highest_[static_cast<std::size_t>(c)];
    if (h.empty() || height(r) > height(h)) h = r;
  }

  det_ = determinant(cartan_);
  adj_.assign(n, IntVector(n, 0));
  // adj(A)_{ij} = (-1)^{i+j} M_{ji}
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        IntVector row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(cartan_[r][c]);
        minor.push_back(row);
      }
      const Integer m = determinant(minor);
      adj_[i][j] = ((i + j) % 2 ? -1 : 1) * m.get_si();
    }
}

std::vector<Root> RootSystem::all_roots() const {
  std::vector<Root> out = positive_;
  for (const Root& r : positive_) out.push_back(negate(r));
  return out;
}

const Root& RootSystem::highest_root() const {
  if (highest_.size() != 1) throw std::logic_error("highest_root() needs a simple type");
  return highest_.front();
}

int RootSystem::component_of_root(const Root& r) const {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) return node_component_[i];
  throw std::invalid_argument("zero vector is not a root");
}

long RootSystem::inner(const Root& a, const Root& b) const {
  long s = 0;
  const std::size_t n = cartan_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b[j] != 0 && cartan_[i][j] != 0) s += a[i] * b[j] * d_[i] * cartan_[i][j];
  }
  return s;
}

long RootSystem::pairing(const Root& beta, int i) const {
  long s = 0;
  const auto& row = cartan_[static_cast<std::size_t>(i)];
  for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * beta[j];
  return s;
}

IntVector RootSystem::coroot(const Root& alpha) const {
  const long len = inner(alpha, alpha) / 2;
  IntVector out(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const long num = alpha[i] * d_[i];
    if (num % len != 0) throw std::logic_error("non-integral coroot");
    out[i] = num / len;
  }
  return out;
}

bool RootSystem::is_root(const Root& r) const { return locate(r).has_value(); }

bool RootSystem::is_long(const Root& r) const {
  const int c = component_of_root(r);
  long longest = 0;
  for (std::size_t i = 0; i < d_.size(); ++i)
    if (node_component_[i] == c) longest = std::max(longest, d_[i]);
  return inner(r, r) / 2 == longest;
}

std::optional<std::pair<std::size_t, int>> RootSystem::locate(const Root& r) const {
  if (r.size() != cartan_.size()) return std::nullopt;
  if (auto it = index_.find(r); it != index_.end()) return std::make_pair(it->second, 1);
  if (auto it = index_.find(negate(r)); it != index_.end()) return std::make_pair(it->second, -1);
  return std::nullopt;
}

Rational RootSystem::pairing(const Root& beta, const CartanElement& h) const {
  Rational s = 0;
  for (std::size_t k = 0; k < h.coords.size(); ++k)
    if (sgn(h.coords[k]) != 0) s += h.coords[k] * pairing(beta, static_cast<int>(k));
  return s;
}

CartanElement coweight_element(const RootSystem& rs, const IntVector& marks) {
  const auto n = static_cast<std::size_t>(rs.rank());
  if (marks.size() != n) throw std::invalid_argument("coweight_element: marks length != rank");
  // coords = (A^T)^{-1} marks = adj(A)^T marks / det
  CartanElement h{RationalVector(n)};
  const auto& adj = rs.inv_cartan_times_det();
  for (std::size_t k = 0; k < n; ++k) {
    Rational s = 0;
    for (std::size_t i = 0; i < n; ++i) s += adj[i][k] * marks[i];
    h.coords[k] = s / Rational(rs.det_cartan());
  }
  return h;
}

std::vector<Root> subsystem_simple_roots(const RootSystem& rs, const std::vector<Root>& roots) {
  std::vector<Root> pos;
  for (const Root& r : roots)
    if (height(r) > 0) pos.push_back(r);
  std::sort(pos.begin(), pos.end(), root_less);
  const std::set<Root> pos_set(pos.begin(), pos.end());
  std::vector<Root> simple;
  for (const Root& r : pos) {
    bool decomposable = false;
    for (const Root& s : pos) {
      if (height(s) >= height(r)) break;
      Root diff(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) diff[i] = r[i] - s[i];
      if (pos_set.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  (void)rs;
  return simple;
}

namespace {

struct Component {
  std::vector<std::size_t> nodes;
};

std::vector<std::size_t> neighbours(const IntMatrix& a, std::size_t i,
                                    const std::vector<std::size_t>& nodes) {
  std::vector<std::size_t> out;
  for (std::size_t j : nodes)
    if (j != i && a[i][j] != 0) out.push_back(j);
  return out;
}

// Walk a path graph starting at an end node.
std::vector<std::size_t> walk_path(const IntMatrix& a, std::size_t start,
                                   const std::vector<std::size_t>& nodes) {
  std::vector<std::size_t> order{start};
  std::size_t prev = start, cur = start;
  while (true) {
    std::size_t nxt = cur;
    for (std::size_t j : neighbours(a, cur, nodes))
      if (j != prev) nxt = j;
    if (nxt == cur) break;
    order.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return order;
}

std::pair<SimpleType, std::vector<std::size_t>> identify_component(
    const IntMatrix& a, const std::vector<std::size_t>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return {{Family::A, 1}, nodes};

  std::vector<std::size_t> ends, branch;
  bool multiple = false;
  for (std::size_t i : nodes) {
    const auto nb = neighbours(a, i, nodes);
    if (nb.size() == 1) ends.push_back(i);
    if (nb.size() == 3) branch.push_back(i);
    for (std::size_t j : nb)
      if (a[i][j] * a[j][i] > 1) multiple = true;
  }

  if (!branch.empty()) {
    const std::size_t b = branch.front();
    // Arms: paths from the branch node to each end.
    std::vector<std::vector<std::size_t>> arms;
    for (std::size_t start : neighbours(a, b, nodes)) {
      std::vector<std::size_t> arm{start};
      std::size_t prev = b, cur = start;
      while (true) {
        std::size_t nxt = cur;
        for (std::size_t j : neighbours(a, cur, nodes))
          if (j != prev) nxt = j;
        if (nxt == cur) break;
        arm.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
      arms.push_back(arm);
    }
    std::sort(arms.begin(), arms.end(),
              [](const auto& x, const auto& y) { return x.size() < y.size() || (x.size() == y.size() && x < y); });
    if (arms[0].size() == 1 && arms[1].size() == 1) {
      // D_n: long arm gives nodes 1..n-2 (ending at the branch node).
      std::vector<std::size_t> order(arms[2].rbegin(), arms[2].rend());
      order.push_back(b);
      order.push_back(arms[0][0]);
      order.push_back(arms[1][0]);
      return {{Family::D, n}, order};
    }
    // E_n: arms of lengths 1, 2, n-4.
    std::vector<std::size_t> order(static_cast<std::size_t>(n));
    order[1] = arms[0][0];
    order[2] = arms[1][0];
    order[0] = arms[1][1];
    order[3] = b;
    for (std::size_t k = 0; k < arms[2].size(); ++k) order[4 + k] = arms[2][k];
    return {{Family::E, n}, order};
  }

  if (!multiple) {
    const std::size_t start = std::min(ends[0], ends[1]);
    return {{Family::A, n}, walk_path(a, start, nodes)};
  }

  // Path with one multiple bond: B, C, F or G.
  std::size_t x = 0, y = 0;
  for (std::size_t i : nodes)
    for (std::size_t j : nodes)
      if (i != j && a[i][j] * a[j][i] > 1) {
        x = i;
        y = j;
      }
  const long mult = a[x][y] * a[y][x];
  // |a[s][l]| > 1 means s is the short end of the bond.
  std::size_t shortn = std::labs(a[x][y]) > 1 ? x : y;
  std::size_t longn = shortn == x ? y : x;
  if (mult == 3) return {{Family::G, 2}, {shortn, longn}};
  if (n == 4 && neighbours(a, shortn, nodes).size() == 2 && neighbours(a, longn, nodes).size() == 2) {
    // F4: long end first.
    for (std::size_t e : ends) {
      auto order = walk_path(a, e, nodes);
      if (order[1] == longn) return {{Family::F, 4}, order};
    }
  }
  if (n == 2) return {{Family::B, 2}, {longn, shortn}};
  // B_n: short node at the end. C_n: long node at the end.
  for (std::size_t e : ends) {
    auto order = walk_path(a, e, nodes);
    if (order.back() == shortn && order[order.size() - 2] == longn) return {{Family::B, n}, order};
    if (order.back() == longn && order[order.size() - 2] == shortn) return {{Family::C, n}, order};
  }
  throw std::logic_error("unrecognised Dynkin diagram");
}

}  // namespace

CartanType identify_cartan_type(const IntMatrix& a, std::vector<std::size_t>* order) {
  const auto comp = node_components(a);
  const int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::pair<SimpleType, std::vector<std::size_t>>> parts;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < comp.size(); ++i)
      if (comp[i] == c) nodes.push_back(i);
    parts.push_back(identify_component(a, nodes));
  }
  std::stable_sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    if (x.first.rank != y.first.rank) return x.first.rank > y.first.rank;
    return x.first.family < y.first.family;
  });
  CartanType t;
  if (order) order->clear();
  for (auto& [s, o] : parts) {
    t.components.push_back(s);
    if (order) order->insert(order->end(), o.begin(), o.end());
  }
  return t;
}

RootSubsystem root_centralizer_subsystem(const RootSystem& rs, const CartanElement& h) {
  RootSubsystem out;
  for (const Root& r : rs.all_roots())
    if (sgn(rs.pairing(r, h)) == 0) out.roots.push_back(r);
  const std::vector<Root> simple = subsystem_simple_roots(rs, out.roots);
  const std::size_t k = simple.size();
  IntMatrix a(k, IntVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      a[i][j] = 2 * rs.inner(simple[i], simple[j]) / rs.inner(simple[i], simple[i]);
  std::vector<std::size_t> order;
  out.type = identify_cartan_type(a, &order);
  for (std::size_t idx : order) out.simple_roots.push_back(simple[idx]);
  out.torus_dim = rs.rank() - static_cast<int>(k);
  return out;
}

}  // namespace atlas
