#include "atlas/nilpotent_orbits.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace atlas {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text) s += (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') ? ' ' : c;
  std::istringstream in(s);
  std::vector<int> parts;
  std::string tok;
  while (in >> tok) {
    const auto caret = tok.find('^');
    try {
      const int part = std::stoi(tok.substr(0, caret));
      const int rep = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
      if (rep < 0) throw std::invalid_argument("negative exponent");
      for (int k = 0; k < rep; ++k) parts.push_back(part);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("cannot parse partition '" + text + "'");
    }
  }
  if (parts.empty()) throw std::invalid_argument("empty partition");
  return Partition(std::move(parts));
}

int Partition::total() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

Partition Partition::dual() const {
  std::vector<int> out;
  if (parts.empty()) return Partition{};
  for (int k = 1; k <= parts.front(); ++k) {
    int c = 0;
    for (int x : parts) c += x >= k;
    out.push_back(c);
  }
  return Partition(std::move(out));
}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), k));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

std::string WeightedDynkinDiagram::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < marks.size(); ++i) os << (i ? "," : "") << marks[i];
  os << ']';
  return os.str();
}

OrbitLabel OrbitLabel::classical(Partition p, bool very_even) {
  OrbitLabel l;
  l.partition = std::move(p);
  l.very_even = very_even;
  return l;
}

OrbitLabel OrbitLabel::exceptional(IntVector marks) {
  OrbitLabel l;
  l.diagram = WeightedDynkinDiagram{std::move(marks)};
  return l;
}

std::string OrbitLabel::to_string() const {
  if (partition) {
    std::string s = partition->to_string();
    if (very_even) s += variant == 2 ? "II" : "I";
    return s;
  }
  if (diagram) return diagram->to_string();
  return "()";
}

bool is_classical(const SimpleType& t) {
  return t.family == Family::A || t.family == Family::B || t.family == Family::C ||
         t.family == Family::D;
}

int natural_dimension(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B: return 2 * t.rank + 1;
    case Family::C:
    case Family::D: return 2 * t.rank;
    default: throw std::invalid_argument("no natural representation for " + t.name());
  }
}

bool is_valid_partition(const SimpleType& t, const Partition& p) {
  if (p.total() != natural_dimension(t)) return false;
  for (int k : p.parts) {
    const bool even = k % 2 == 0;
    const int m = p.multiplicity(k);
    if ((t.family == Family::B || t.family == Family::D) && even && m % 2 != 0) return false;
    if (t.family == Family::C && !even && m % 2 != 0) return false;
  }
  return true;
}

bool is_very_even(const SimpleType& t, const Partition& p) {
  if (t.family != Family::D || !is_valid_partition(t, p)) return false;
  for (int k : p.parts)
    if (k % 2 != 0) return false;
  return true;
}

namespace {

const SimpleType& classical_simple(const CartanType& t) {
  if (!t.is_simple() || !is_classical(t.simple()))
    throw std::invalid_argument("expected a classical simple type, got " + t.name());
  return t.simple();
}

void all_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    all_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> valid_partitions(const CartanType& t) {
  const SimpleType& s = classical_simple(t);
  const int n = natural_dimension(s);
  std::vector<Partition> all;
  std::vector<int> cur;
  all_partitions(n, n, cur, all);
  std::vector<Partition> out;
  for (auto& p : all)
    if (is_valid_partition(s, p)) out.push_back(std::move(p));
  return out;
}

long orbit_dimension(const CartanType& t, const Partition& p) {
  const SimpleType& s = classical_simple(t);
  if (!is_valid_partition(s, p))
    throw std::invalid_argument("partition " + p.to_string() + " is not valid for " + t.name());
  const long n = natural_dimension(s);
  long sq = 0;
  for (int x : p.dual().parts) sq += static_cast<long>(x) * x;
  long odd = 0;
  for (int x : p.parts) odd += x % 2;
  switch (s.family) {
    case Family::A: return n * n - sq;
    case Family::B:
    case Family::D: return n * (n - 1) / 2 - (sq - odd) / 2;
    case Family::C: return n * (n + 1) / 2 - (sq + odd) / 2;
    default: break;
  }
  throw std::logic_error("unreachable");
}

long grading_dimension(const RootSystem& rs, const WeightedDynkinDiagram& w, long k) {
  if (w.marks.size() != static_cast<std::size_t>(rs.rank()))
    throw std::invalid_argument("diagram has wrong number of marks");
  long count = k == 0 ? rs.rank() : 0;
  for (const Root& a : rs.positive_roots()) {
    long g = 0;
    for (std::size_t i = 0; i < a.size(); ++i) g += a[i] * w.marks[i];
    if (k == 0 && g == 0) count += 2;
    else if (g == k || -g == k) ++count;
  }
  return count;
}

long orbit_dimension(const RootSystem& rs, const WeightedDynkinDiagram& w) {
  return rs.dimension() - grading_dimension(rs, w, 0) - grading_dimension(rs, w, 1);
}

long orbit_dimension(const CartanType& t, const OrbitLabel& label) {
  if (label.partition) return orbit_dimension(t, *label.partition);
  if (label.diagram) return orbit_dimension(RootSystem(t), *label.diagram);
  throw std::invalid_argument("empty orbit label");
}

bool dominates(const Partition& p, const Partition& q) {
  if (p.total() != q.total()) throw std::invalid_argument("partitions of different totals");
  const std::size_t len = std::max(p.parts.size(), q.parts.size());
  long sp = 0, sq = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sp += i < p.parts.size() ? p.parts[i] : 0;
    sq += i < q.parts.size() ? q.parts[i] : 0;
    if (sp < sq) return false;
  }
  return true;
}

HasseDiagram hasse_diagram(const CartanType& t) {
  const SimpleType& s = classical_simple(t);
  HasseDiagram out;
  out.type = t;
  out.nodes = valid_partitions(t);
  std::reverse(out.nodes.begin(), out.nodes.end());
  const std::size_t n = out.nodes.size();
  for (const auto& p : out.nodes) {
    out.dimensions.push_back(orbit_dimension(t, p));
    out.very_even.push_back(is_very_even(s, p));
  }
  auto below = [&](std::size_t i, std::size_t j) {
    return i != j && dominates(out.nodes[j], out.nodes[i]);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!below(i, j)) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (below(i, k) && below(k, j)) cover = false;
      if (cover) out.covers.emplace_back(i, j);
    }
  return out;
}

WeightedDynkinDiagram weighted_diagram(const CartanType& t, const OrbitLabel& label) {
  if (label.diagram) {
    if (label.diagram->marks.size() != static_cast<std::size_t>(t.rank()))
      throw std::invalid_argument("diagram has wrong number of marks for " + t.name());
    return *label.diagram;
  }
  if (!label.partition) throw std::invalid_argument("empty orbit label");
  const SimpleType& s = classical_simple(t);
  const Partition& p = *label.partition;
  if (!is_valid_partition(s, p))
    throw std::invalid_argument("partition " + p.to_string() + " is not valid for " + t.name());
  std::vector<long> ev;
  for (int k : p.parts)
    for (int j = k - 1; j >= 1 - k; j -= 2) ev.push_back(j);
  std::sort(ev.begin(), ev.end(), std::greater<>());
  const std::size_t n = static_cast<std::size_t>(s.rank);
  IntVector marks(n);
  if (s.family == Family::A) {
    for (std::size_t i = 0; i < n; ++i) marks[i] = ev[i] - ev[i + 1];
    return {marks};
  }
  for (std::size_t i = 0; i + 1 < n; ++i) marks[i] = ev[i] - ev[i + 1];
  switch (s.family) {
    case Family::B: marks[n - 1] = ev[n - 1]; break;
    case Family::C: marks[n - 1] = 2 * ev[n - 1]; break;
    case Family::D:
      marks[n - 1] = ev[n - 2] + ev[n - 1];
      if (label.very_even && label.variant == 2) std::swap(marks[n - 2], marks[n - 1]);
      break;
    default: break;
  }
  return {marks};
}

RepresentativeResult representative_with_data(const ChevalleyAlgebra& a,
                                              const WeightedDynkinDiagram& w,
                                              std::uint64_t seed, int max_attempts) {
  const RootSystem& rs = a.root_system();
  std::vector<std::size_t> grade2;
  for (const Root& r : rs.positive_roots()) {
    long g = 0;
    for (std::size_t i = 0; i < r.size(); ++i) g += r[i] * w.marks[i];
    if (g == 2) grade2.push_back(a.root_index(r));
  }
  if (grade2.empty())
    throw std::runtime_error("diagram " + w.to_string() + " has an empty degree-2 space");
  const std::size_t want =
      static_cast<std::size_t>(grading_dimension(rs, w, 0) + grading_dimension(rs, w, 1));

  std::mt19937_64 rng(seed);
  long range = 3;
  RepresentativeResult out;
  out.h = coweight_element(rs, w.marks);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    if (attempt > 1 && (attempt - 1) % 3 == 0) range *= 2;
    AlgebraElement x(a.dim());
    for (std::size_t idx : grade2) {
      long c = 0;
      while (c == 0) c = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
      x.re[idx] = c;
    }
    if (centralizer_dim(a, x) == want) {
      out.x = std::move(x);
      out.attempts = attempt;
      out.coefficient_range = range;
      return out;
    }
  }
  throw std::runtime_error("no representative accepted for diagram " + w.to_string() +
                           " on " + rs.cartan_type().name() + "; the diagram is probably wrong");
}

AlgebraElement representative(const ChevalleyAlgebra& a, const WeightedDynkinDiagram& w,
                              std::uint64_t seed) {
  return representative_with_data(a, w, seed).x;
}

namespace {

Partition with_ones(std::vector<int> head, int total) {
  int s = 0;
  for (int x : head) s += x;
  for (; s < total; ++s) head.push_back(1);
  return Partition(std::move(head));
}

IntVector unit_marks(int rank, int node) {
  IntVector m(static_cast<std::size_t>(rank), 0);
  m[static_cast<std::size_t>(node - 1)] = 1;
  return m;
}

}  // namespace

OrbitLabel minimal_orbit(const CartanType& t) {
  if (!t.is_simple()) throw std::invalid_argument("minimal_orbit needs a simple type");
  const SimpleType& s = t.simple();
  s.validate();
  const int n = s.rank;
  switch (s.family) {
    case Family::A:
    case Family::C: return OrbitLabel::classical(with_ones({2}, natural_dimension(s)));
    case Family::B:
    case Family::D: return OrbitLabel::classical(with_ones({2, 2}, natural_dimension(s)));
    case Family::G: return OrbitLabel::exceptional(unit_marks(2, 2));
    case Family::F: return OrbitLabel::exceptional(unit_marks(4, 1));
    case Family::E:
      if (n == 6) return OrbitLabel::exceptional(unit_marks(6, 2));
      if (n == 7) return OrbitLabel::exceptional(unit_marks(7, 1));
      return OrbitLabel::exceptional(unit_marks(8, 8));
  }
  throw std::logic_error("unreachable");
}

std::vector<OrbitLabel> next_to_minimal(const CartanType& t) {
  if (!t.is_simple()) throw std::invalid_argument("next_to_minimal needs a simple type");
  const SimpleType& s = t.simple();
  s.validate();
  const int n = s.rank;
  const int total = is_classical(s) ? natural_dimension(s) : 0;
  std::vector<OrbitLabel> out;
  switch (s.family) {
    case Family::A:
      if (n == 2) out.push_back(OrbitLabel::classical(Partition({3})));
      if (n >= 3) out.push_back(OrbitLabel::classical(with_ones({2, 2}, total)));
      break;
    case Family::B:
      out.push_back(OrbitLabel::classical(with_ones({3}, total)));
      if (n >= 4) out.push_back(OrbitLabel::classical(with_ones({2, 2, 2, 2}, total)));
      break;
    case Family::C: out.push_back(OrbitLabel::classical(with_ones({2, 2}, total))); break;
    case Family::D:
      out.push_back(OrbitLabel::classical(with_ones({3}, total)));
      if (n >= 4) {
        Partition p = with_ones({2, 2, 2, 2}, total);
        const bool ve = is_very_even(s, p);
        out.push_back(OrbitLabel::classical(std::move(p), ve));
      }
      break;
    case Family::G: out.push_back(OrbitLabel::exceptional(unit_marks(2, 1))); break;
    case Family::F: out.push_back(OrbitLabel::exceptional(unit_marks(4, 4))); break;
    case Family::E:
      if (n == 6) out.push_back(OrbitLabel::exceptional({1, 0, 0, 0, 0, 1}));
      if (n == 7) out.push_back(OrbitLabel::exceptional(unit_marks(7, 6)));
      if (n == 8) out.push_back(OrbitLabel::exceptional(unit_marks(8, 1)));
      break;
  }
  return out;
}

AlgebraElement highest_root_vector(const ChevalleyAlgebra& a) {
  return a.root_vector(a.root_system().highest_root());
}

}  // namespace atlas
