#include "atlas/classify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace atlas {

bool Fact::holds() const {
  if (!expected) return true;
  if (relation == ">=") return computed >= *expected;
  if (relation == "<=") return computed <= *expected;
  return computed == *expected;
}

bool TableRow::match() const {
  return std::all_of(facts.begin(), facts.end(), [](const Fact& f) { return f.holds(); });
}

bool ClassificationTable::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.match(); });
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

IntVector parse_marks(const std::string& text) {
  std::string s;
  for (char c : text) s += (c == ',' || c == '[' || c == ']' || c == '(' || c == ')') ? ' ' : c;
  std::istringstream in(s);
  IntVector out;
  long v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::invalid_argument("cannot parse marks '" + text + "'");
  return out;
}

long as_long(std::size_t v) { return static_cast<long>(v); }

// Runs f(0..n-1) on a small worker pool and returns the results in index
// order. The first exception thrown by any task is rethrown.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{0}))> {
  using T = decltype(f(std::size_t{0}));
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<T> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

Progress serialized(const Progress& p, std::mutex& m) {
  if (!p) return {};
  return [&p, &m](const std::string& s) {
    std::lock_guard<std::mutex> lock(m);
    p(s);
  };
}

Fact fact(std::string name, long computed, std::optional<long> expected, std::string source,
          std::string relation = "==") {
  return Fact{std::move(name), computed, expected, std::move(relation), std::move(source)};
}

}  // namespace

OrbitLabel parse_orbit_label(const CartanType& t, const std::string& raw) {
  const std::string text = trim(raw);
  if (!t.is_simple()) throw std::invalid_argument("orbit labels need a simple type");
  const SimpleType& s = t.simple();
  if (text == "min" || text == "minimal") return minimal_orbit(t);
  if (text == "ntm" || text == "next-to-minimal") {
    auto l = next_to_minimal(t);
    if (l.empty()) throw std::invalid_argument(t.name() + " has no next-to-minimal orbit");
    return l.front();
  }
  if (text.rfind("wdd:", 0) == 0 || !is_classical(s)) {
    const std::string body = text.rfind("wdd:", 0) == 0 ? text.substr(4) : text;
    IntVector marks = parse_marks(body);
    if (marks.size() != static_cast<std::size_t>(s.rank))
      throw std::invalid_argument("expected " + std::to_string(s.rank) + " marks for " + t.name());
    return OrbitLabel::exceptional(std::move(marks));
  }
  std::string body = text;
  int variant = 1;
  if (const auto colon = body.find(':'); colon != std::string::npos) {
    const std::string v = trim(body.substr(colon + 1));
    if (v == "II") variant = 2;
    else if (v != "I") throw std::invalid_argument("unknown very even variant '" + v + "'");
    body = body.substr(0, colon);
  } else if (body.size() > 1 && body.back() == 'I') {
    const auto cut = body.find_last_not_of('I');
    const std::string v = body.substr(cut + 1);
    if (v != "I" && v != "II") throw std::invalid_argument("unknown very even variant '" + v + "'");
    variant = v == "II" ? 2 : 1;
    body = body.substr(0, cut + 1);
  }
  Partition p = Partition::parse(body);
  if (!is_valid_partition(s, p))
    throw std::invalid_argument("partition " + p.to_string() + " is not valid for " + t.name());
  const bool ve = is_very_even(s, p);
  OrbitLabel l = OrbitLabel::classical(std::move(p), ve);
  if (ve) l.variant = variant;
  return l;
}

std::vector<SimpleType> table1_types() {
  return {{Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::A, 5}, {Family::A, 6},
          {Family::B, 3}, {Family::B, 4}, {Family::C, 2}, {Family::C, 3}, {Family::C, 4},
          {Family::D, 4}, {Family::D, 5}, {Family::G, 2}, {Family::F, 4}, {Family::E, 6},
          {Family::E, 7}, {Family::E, 8}};
}

Table1Expectation table1_expectation(const SimpleType& t, const OrbitLabel& label) {
  const long n = t.rank;
  switch (t.family) {
    case Family::A:
      if (n == 2) return {4, 0, 3};
      // su(2) + su(n-3) + u(1), i.e. s(u(2) + u(n-3)) next to su(2).
      return {2, 3 + (n - 3) * (n - 3), 3};
    case Family::B:
    case Family::D: {
      const long N = natural_dimension(t);
      if (!label.partition) break;
      if (label.partition->parts.front() == 3) return {2, (N - 3) * (N - 4) / 2, N - 3};
      return {2, 10 + (N - 8) * (N - 9) / 2, 5};
    }
    case Family::C: return {2, 1 + (n - 2) * (2 * n - 3), 2};
    case Family::G: return {2, 3, 4};
    case Family::F: return {2, 15, 6};
    case Family::E:
      if (n == 6) return {2, 22, 7};
      if (n == 7) return {2, 39, 9};
      return {2, 78, 13};
  }
  throw std::invalid_argument("no expectation for " + t.name() + " " + label.to_string());
}

OrbitAnalysis analyze_orbit(const ChevalleyAlgebra& a, const OrbitLabel& label,
                            std::uint64_t seed) {
  const CartanType& t = a.root_system().cartan_type();
  OrbitAnalysis out;
  out.label = label;
  out.diagram = weighted_diagram(t, label);
  out.formula_orbit_dim = orbit_dimension(t, label);
  for (int attempt = 0;; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : sample_seed(seed, 1000 + static_cast<std::size_t>(attempt));
    const RepresentativeResult rep = representative_with_data(a, out.diagram, s);
    try {
      out.triple = complete_triple(a, rep.x, a.cartan_element(rep.h));
      out.seed = s;
      break;
    } catch (const TripleError&) {
      if (attempt >= 4) throw;
    }
  }
  out.representative_orbit_dim = as_long(a.dim() - centralizer_dim(a, out.triple.x));
  const TripleCentralizer k = triple_centralizer(a, out.triple);
  out.triple_centralizer_dim = k.dim;
  out.decomposition = isotypic_decomposition(a, out.triple);
  out.bundle_degree = bundle_degree(out.decomposition);
  if (out.bundle_degree > 0) {
    const auto space = highest_weight_space(a, out.triple, out.bundle_degree);
    if (k.basis.empty()) {
      out.w_commutant_dim = space.size() * space.size();
    } else {
      out.w_commutant_dim = commutant_dim(restricted_action(a, k.basis, space));
    }
  }
  return out;
}

ClassificationTable reproduce_table1(const SampleConfig& cfg, const std::vector<SimpleType>& types,
                                     const Progress& progress) {
  ClassificationTable table;
  table.title = "Next-to-minimal nilpotent orbits";
  std::mutex lock;
  const Progress report = serialized(progress, lock);
  auto rows_of = [&](std::size_t i) {
    const SimpleType& t = types[i];
    std::vector<TableRow> rows;
    const ChevalleyAlgebra a{RootSystem(CartanType(t))};
    for (const OrbitLabel& label : next_to_minimal(CartanType(t))) {
      if (report) report(t.name() + " " + label.to_string());
      const OrbitAnalysis an = analyze_orbit(a, label, cfg.seed);
      const CohomReport rep = cohom_adjoint(a, an.triple.x, cfg);
      const Table1Expectation exp = table1_expectation(t, label);
      TableRow row;
      row.label = t.name() + " " + label.to_string();
      row.facts.push_back(fact("cohomogeneity", as_long(rep.cohomogeneity), exp.cohomogeneity,
                               "cohom_adjoint"));
      row.facts.push_back(fact("k_dim", as_long(an.triple_centralizer_dim), exp.k_dim,
                               "triple_centralizer"));
      row.facts.push_back(fact("k_dim_from_grading", as_long(an.decomposition.k_dim), exp.k_dim,
                               "isotypic_decomposition"));
      row.facts.push_back(fact("w_dim", as_long(an.decomposition.w_dim), exp.w_dim,
                               "isotypic_decomposition"));
      row.facts.push_back(fact("orbit_dim", an.representative_orbit_dim, an.formula_orbit_dim,
                               "centralizer_dim(representative) vs orbit_dimension"));
      row.facts.push_back(fact("w_commutant_dim", as_long(an.w_commutant_dim), 2, "commutant_dim",
                               "<="));
      row.note = "diagram " + an.diagram.to_string() + ", W block S^" +
                 std::to_string(an.bundle_degree) + ", samples agree: " +
                 (rep.samples_agree ? "yes" : "no");
      rows.push_back(std::move(row));
    }
    return rows;
  };
  for (auto& rows : parallel_map(types.size(), rows_of))
    for (auto& r : rows) table.rows.push_back(std::move(r));
  return table;
}

std::vector<SimpleType> minimal_orbit_types() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2},
          {Family::B, 3}, {Family::B, 4}, {Family::C, 2}, {Family::C, 3}, {Family::C, 4},
          {Family::D, 4}, {Family::G, 2}, {Family::F, 4}, {Family::E, 6}};
}

ClassificationTable minimal_orbit_table(const std::vector<SimpleType>& types,
                                        const SampleConfig& cfg, const Progress& progress) {
  ClassificationTable table;
  table.title = "Minimal nilpotent orbits";
  std::mutex lock;
  const Progress report = serialized(progress, lock);
  auto row_of = [&](std::size_t i) {
    const SimpleType& t = types[i];
    if (report) report(t.name() + " minimal");
    const ChevalleyAlgebra a{RootSystem(CartanType(t))};
    const AlgebraElement x = highest_root_vector(a);
    const CohomReport rep = cohom_adjoint(a, x, cfg);
    TableRow row;
    row.label = t.name() + " " + minimal_orbit(CartanType(t)).to_string();
    row.facts.push_back(fact("cohomogeneity", as_long(rep.cohomogeneity), 1, "cohom_adjoint(e_theta)"));
    row.facts.push_back(fact("orbit_dim", as_long(rep.orbit_real_dim / 2),
                             orbit_dimension(CartanType(t), minimal_orbit(CartanType(t))),
                             "centralizer_dim(e_theta) vs orbit_dimension"));
    return row;
  };
  table.rows = parallel_map(types.size(), row_of);
  return table;
}

namespace {

void add_member(std::vector<SemisimpleFamilyMember>& out, const std::vector<SimpleType>& allowed,
                SimpleType t, int node, std::string family, long stab) {
  if (std::find(allowed.begin(), allowed.end(), t) == allowed.end()) return;
  PaintedDiagram pd(CartanType(t), {node});
  for (auto& m : out)
    if (m.diagram == pd) {
      if (m.stabilizer_dim != stab)
        throw std::logic_error("inconsistent stabilizer dimensions for " + pd.to_string());
      m.family += "; " + family;
      return;
    }
  out.push_back({pd, std::move(family), stab});
}

std::string fmt(const char* pattern, long a, long b = 0) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

}  // namespace

std::vector<SemisimpleFamilyMember> cohom_two_families(int max_rank) {
  const auto allowed = scan_types(max_rank);
  std::vector<SemisimpleFamilyMember> out;
  for (long n = 1; n + 1 <= max_rank; ++n) {
    const std::string name = fmt("Sp(%ld)/U(1)Sp(%ld)", n + 1, n);
    const long stab = (n - 1) * (2 * n - 1);
    if (n == 1) add_member(out, allowed, {Family::B, 2}, 1, name, stab);
    else add_member(out, allowed, {Family::C, static_cast<int>(n + 1)}, 0, name, stab);
  }
  for (long n = 2; n + 1 <= max_rank; ++n)
    add_member(out, allowed, {Family::A, static_cast<int>(n + 1)}, 1,
               fmt("SU(%ld)/S(U(%ld)xU(2))", n + 2, n), (n - 2) * (n - 2) + 1);
  for (long n = 3; n <= 2 * max_rank; ++n) {
    const std::string name = fmt("SO(%ld)/SO(%ld)xSO(2)", n + 2, n);
    const long stab = (n - 2) * (n - 3) / 2;
    if (n % 2 == 1) {
      add_member(out, allowed, {Family::B, static_cast<int>((n + 1) / 2)}, 0, name, stab);
    } else {
      const int k = static_cast<int>((n + 2) / 2);
      if (k == 3) add_member(out, allowed, {Family::A, 3}, 1, name, stab);
      else add_member(out, allowed, {Family::D, k}, 0, name, stab);
    }
  }
  add_member(out, allowed, {Family::D, 5}, 3, "SO(10)/U(5)", 7);
  add_member(out, allowed, {Family::E, 6}, 0, "E6/Spin(10)SO(2)", 16);
  return out;
}

std::vector<SemisimpleFamilyMember> cohom_one_family(int max_rank) {
  std::vector<SemisimpleFamilyMember> out;
  for (long n = 1; n <= max_rank; ++n)
    out.push_back({PaintedDiagram(CartanType(SimpleType{Family::A, static_cast<int>(n)}), {0}),
                   fmt("T*CP(%ld)", n), (n - 1) * (n - 1)});
  return out;
}

SemisimpleScanResult reproduce_thm_ss_c2(int max_rank, const SampleConfig& cfg,
                                         const Progress& progress) {
  const auto two = cohom_two_families(max_rank);
  const auto one = cohom_one_family(max_rank);
  auto lookup = [](const std::vector<SemisimpleFamilyMember>& v, const PaintedDiagram& pd)
      -> const SemisimpleFamilyMember* {
    for (const auto& m : v)
      if (m.diagram == pd) return &m;
    return nullptr;
  };
  SemisimpleScanResult out;
  out.table.title = "Length-one painted diagrams";
  std::vector<PaintedDiagram> seen;
  std::mutex lock;
  const Progress report = serialized(progress, lock);
  const std::vector<SimpleType> types = scan_types(max_rank);
  struct Scanned {
    PaintedDiagram pd;
    std::size_t summands;
    CohomReport rep;
  };
  auto scan_type = [&](std::size_t i) {
    const SimpleType& t = types[i];
    if (report) report(t.name());
    const ChevalleyAlgebra a{RootSystem(CartanType(t))};
    std::vector<Scanned> v;
    for (const auto& cls : node_classes(t)) {
      const PaintedDiagram pd(CartanType(t), {cls.front()});
      v.push_back({pd, kostant_summands(a.root_system(), pd).num_summands, flag_cohom(a, pd, cfg)});
    }
    return v;
  };
  for (const auto& scanned : parallel_map(types.size(), scan_type)) {
    for (const auto& [pd, summands, rep] : scanned) {
      seen.push_back(pd);
      if (rep.cohomogeneity == 1) out.target_one.push_back(pd);
      if (rep.cohomogeneity == 2) out.target_two.push_back(pd);
      TableRow row;
      row.label = pd.to_string();
      const long c = as_long(rep.cohomogeneity);
      row.facts.push_back(fact("cohom_minus_summands", c - as_long(summands), 0,
                               "flag_cohom - kostant_summands", ">="));
      if (const auto* m = lookup(two, pd)) {
        row.facts.push_back(fact("cohomogeneity", c, 2, "flag_cohom"));
        row.facts.push_back(fact("principal_stabilizer_dim", as_long(rep.generic_stabilizer_dim()),
                                 m->stabilizer_dim, "flag_cohom"));
        row.note = m->family;
      } else if (const auto* m1 = lookup(one, pd)) {
        row.facts.push_back(fact("cohomogeneity", c, 1, "flag_cohom"));
        row.facts.push_back(fact("principal_stabilizer_dim", as_long(rep.generic_stabilizer_dim()),
                                 m1->stabilizer_dim, "flag_cohom"));
        row.note = m1->family;
      } else {
        row.facts.push_back(fact("cohomogeneity", c, 3, "flag_cohom", ">="));
      }
      out.table.rows.push_back(std::move(row));
    }
  }
  for (const auto* list : {&two, &one})
    for (const auto& m : *list)
      if (std::find(seen.begin(), seen.end(), m.diagram) == seen.end()) {
        TableRow row;
        row.label = m.diagram.to_string();
        row.note = "expected family member was not scanned: " + m.family;
        row.facts.push_back(fact("scanned", 0, 1, "scan_length_one"));
        out.table.rows.push_back(std::move(row));
      }
  return out;
}

AlgebraElement mixed_orbit_semisimple_part(const ChevalleyAlgebra& a) {
  const CartanType& t = a.root_system().cartan_type();
  if (!t.is_simple() || t.simple().family != Family::A)
    throw std::invalid_argument("mixed orbit is defined in type A");
  const int n = t.rank();
  IntVector marks(static_cast<std::size_t>(n), 0);
  marks.back() = n + 1;  // h = diag(1, ..., 1, -n)
  return a.cartan_element(coweight_element(a.root_system(), marks));
}

AlgebraElement mixed_orbit_element(const ChevalleyAlgebra& a) {
  Root a1(a.rank(), 0);
  a1[0] = 1;
  return mixed_orbit_semisimple_part(a) + a.root_vector(a1);
}

CohomReport mixed_orbit_cohom(int n, const SampleConfig& cfg) {
  if (n < 3) throw std::invalid_argument("mixed_orbit_cohom needs n >= 3");
  const ChevalleyAlgebra a{RootSystem(CartanType(SimpleType{Family::A, n}))};
  return cohom_adjoint(a, mixed_orbit_element(a), cfg);
}

OrbitSpec OrbitSpec::nilpotent_orbit(SimpleType t, OrbitLabel l) {
  OrbitSpec s;
  s.type = t;
  s.nilpotent = std::move(l);
  return s;
}

OrbitSpec OrbitSpec::minimal(SimpleType t) {
  return nilpotent_orbit(t, minimal_orbit(CartanType(t)));
}

OrbitSpec OrbitSpec::flag(SimpleType t, std::vector<int> nodes) {
  OrbitSpec s;
  s.type = t;
  s.crossed = std::move(nodes);
  return s;
}

std::string OrbitSpec::to_string() const {
  if (nilpotent) return type.name() + " " + nilpotent->to_string();
  return PaintedDiagram(CartanType(type), crossed).to_string();
}

AlgebraElement embed_factor(const ChevalleyAlgebra& product, std::size_t factor,
                            const ChevalleyAlgebra& part, const AlgebraElement& x) {
  const CartanType& pt = product.root_system().cartan_type();
  if (factor >= pt.components.size()) throw std::invalid_argument("factor index out of range");
  std::size_t offset = 0;
  for (std::size_t i = 0; i < factor; ++i) offset += static_cast<std::size_t>(pt.components[i].rank);
  if (part.root_system().cartan_type() != CartanType(pt.components[factor]))
    throw std::invalid_argument("factor algebra does not match the product");
  AlgebraElement out(product.dim());
  for (std::size_t k = 0; k < part.dim(); ++k) {
    std::size_t target;
    if (part.is_cartan_index(k)) {
      target = offset + k;
    } else {
      const Root r = part.root_of(k);
      Root big(product.rank(), 0);
      for (std::size_t i = 0; i < r.size(); ++i) big[offset + i] = r[i];
      target = product.root_index(big);
    }
    out.re[target] = x.re[k];
    out.im[target] = x.im[k];
  }
  return out;
}

ProductCohomReport product_orbit_cohom(const std::vector<OrbitSpec>& components,
                                       const SampleConfig& cfg) {
  if (components.empty()) throw std::invalid_argument("no components");
  std::vector<SimpleType> types;
  for (const auto& c : components) types.push_back(c.type);
  const ChevalleyAlgebra product{RootSystem(CartanType(types))};
  ProductCohomReport out;
  AlgebraElement x(product.dim());
  for (std::size_t i = 0; i < components.size(); ++i) {
    const OrbitSpec& c = components[i];
    const ChevalleyAlgebra part{RootSystem(CartanType(c.type))};
    AlgebraElement xi;
    if (c.nilpotent) {
      xi = representative(part, weighted_diagram(CartanType(c.type), *c.nilpotent), cfg.seed);
    } else {
      const PaintedDiagram pd(CartanType(c.type), c.crossed);
      xi = part.cartan_element(coweight_element(part.root_system(), pd.indicator()));
    }
    out.components.push_back(cohom_adjoint(part, xi, cfg));
    out.component_sum += out.components.back().cohomogeneity;
    x = x + embed_factor(product, i, part, xi);
  }
  out.direct = cohom_adjoint(product, x, cfg);
  out.additive = out.direct.cohomogeneity == out.component_sum;
  return out;
}

std::vector<SharedOrbitPair> load_shared_orbit_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("shared-orbit data file not found: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed shared-orbit data file " + path + ": " + e.what());
  }
  std::vector<SharedOrbitPair> out;
  try {
    for (const auto& p : j.at("pairs")) {
      SharedOrbitPair s;
      s.id = p.at("id").get<std::string>();
      s.big_algebra = p.at("big").get<std::string>();
      s.small_algebra = p.at("small").get<std::string>();
      if (!p.at("covering_degree").is_null()) s.covering_degree = p.at("covering_degree").get<int>();
      s.next_to_minimal = p.at("next_to_minimal").get<bool>();
      s.note = p.value("small_orbit", "");
      for (const auto& inst : p.at("instances"))
        s.instances.push_back({CartanType::parse(inst.at("big").get<std::string>()),
                               CartanType::parse(inst.at("small").get<std::string>()),
                               inst.at("small_orbit").get<std::string>()});
      out.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed shared-orbit data file " + path + ": " + e.what());
  }
  return out;
}

namespace {

struct RowSpec {
  const char* space;
  const char* group;
  const char* support;  // "geometric", "product" or a pair id
};

std::vector<Fact> pair_support(const SharedOrbitPair& pair, const SampleConfig& cfg,
                               const Progress& progress) {
  std::vector<Fact> facts;
  for (const auto& inst : pair.instances) {
    if (progress) progress(pair.id + " " + inst.big.name() + "/" + inst.small.name());
    const ChevalleyAlgebra big{RootSystem(inst.big)};
    const ChevalleyAlgebra small{RootSystem(inst.small)};
    const OrbitLabel label = parse_orbit_label(inst.small, inst.small_orbit);
    const std::string tag = inst.big.name() + "/" + inst.small.name();
    facts.push_back(fact(tag + " minimal cohomogeneity",
                         as_long(cohom_adjoint(big, highest_root_vector(big), cfg).cohomogeneity), 1,
                         "cohom_adjoint(e_theta)"));
    facts.push_back(fact(tag + " shared orbit dimension", orbit_dimension(inst.small, label),
                         orbit_dimension(inst.big, minimal_orbit(inst.big)), "orbit_dimension"));
    if (pair.next_to_minimal) {
      const auto ntm = next_to_minimal(inst.small);
      const bool listed = std::find(ntm.begin(), ntm.end(), label) != ntm.end();
      facts.push_back(fact(tag + " small orbit is next-to-minimal", listed ? 1 : 0, 1,
                           "next_to_minimal"));
      facts.push_back(fact(tag + " small orbit cohomogeneity",
                           as_long(cohom_nilpotent(small, label, cfg).cohomogeneity),
                           table1_expectation(inst.small.simple(), label).cohomogeneity,
                           "cohom_adjoint"));
    }
  }
  return facts;
}

std::vector<Fact> product_support(const SampleConfig& cfg, const Progress& progress) {
  std::vector<Fact> facts;
  const std::vector<std::vector<OrbitSpec>> cases = {
      {OrbitSpec::minimal({Family::A, 1}), OrbitSpec::minimal({Family::A, 1})},
      {OrbitSpec::minimal({Family::C, 2}), OrbitSpec::minimal({Family::A, 1})}};
  for (const auto& c : cases) {
    std::string tag;
    for (const auto& s : c) tag += (tag.empty() ? "" : " x ") + s.to_string();
    if (progress) progress(tag);
    const ProductCohomReport r = product_orbit_cohom(c, cfg);
    facts.push_back(fact(tag + " cohomogeneity", as_long(r.direct.cohomogeneity),
                         as_long(r.component_sum), "product_orbit_cohom"));
    facts.push_back(fact(tag + " component sum", as_long(r.component_sum), 2,
                         "product_orbit_cohom"));
  }
  return facts;
}

ClassificationTable build_table(const std::string& title, const std::vector<RowSpec>& specs,
                                const std::map<std::string, const SharedOrbitPair*>& pairs,
                                std::map<std::string, std::vector<Fact>>& cache,
                                const SampleConfig& cfg, const Progress& progress) {
  ClassificationTable t;
  t.title = title;
  for (const auto& s : specs) {
    TableRow row;
    row.label = std::string(s.space) + " | " + s.group;
    const std::string support = s.support;
    if (support == "geometric") {
      row.provenance = "geometric, external";
      row.note = "no open orbit argument; not machine-checkable";
    } else if (support == "product") {
      row.provenance = "geometric, external";
      row.note = "cone over a product of minimal orbits; additivity checked";
      if (!cache.count(support)) cache[support] = product_support(cfg, progress);
      row.facts = cache[support];
    } else {
      auto it = pairs.find(support);
      if (it == pairs.end()) throw std::runtime_error("shared-orbit pair '" + support + "' missing from data");
      row.provenance = "external data";
      row.note = "shared-orbit pair " + support + " (" + it->second->big_algebra + " over " +
                 it->second->small_algebra + " " + it->second->note + ")";
      if (!cache.count(support)) cache[support] = pair_support(*it->second, cfg, progress);
      row.facts = cache[support];
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

Tables23 assemble_tables_2_3(const std::vector<SharedOrbitPair>& pairs, const SampleConfig& cfg,
                             const Progress& progress) {
  std::map<std::string, const SharedOrbitPair*> by_id;
  for (const auto& p : pairs) by_id[p.id] = &p;
  std::map<std::string, std::vector<Fact>> cache;
  Tables23 out;
  out.table2 = build_table(
      "Compact quaternionic Kaehler manifolds of cohomogeneity one under a simple group",
      {{"HP(n)", "Sp(n)", "geometric"},
       {"HP(n)", "SU(n+1)", "geometric"},
       {"Gr2(C^n)", "SU(n-1)", "geometric"},
       {"Gr2(C^2n)", "Sp(n)", "sl2n_spn"},
       {"Gr4~(R^n), n even", "SO(n-1)", "so2m_so2m-1"},
       {"Gr4~(R^n), n odd", "SO(n-1)", "so2m+1_so2m"},
       {"Gr4~(R^7)", "G2", "so7_g2"},
       {"G2/SO(4)", "SU(3)", "g2_sl3"},
       {"F4/Sp(3)Sp(1)", "Spin(9)", "f4_so9"},
       {"E6/SU(6)Sp(1)", "F4", "e6_f4"}},
      by_id, cache, cfg, progress);
  out.table3 = build_table(
      "Compact 3-Sasakian manifolds of cohomogeneity one",
      {{"S^(4n+3)", "Sp(r) x Sp(n+1-r)", "product"},
       {"RP(4n+3)", "Sp(r) x Sp(n+1-r)", "product"},
       {"SO(n+1)/SO(n-3)Sp(1), n odd", "SO(n)", "so2m_so2m-1"},
       {"SO(n+1)/SO(n-3)Sp(1), n even", "SO(n)", "so2m+1_so2m"},
       {"SU(2n)/S(U(2n-2)U(1))", "Sp(n)", "sl2n_spn"},
       {"SO(7)/SO(4)Sp(1)", "G2", "so7_g2"},
       {"F4/Sp(3)", "Spin(9)", "f4_so9"},
       {"E6/SU(6)", "F4", "e6_f4"}},
      by_id, cache, cfg, progress);
  return out;
}

}  // namespace atlas
