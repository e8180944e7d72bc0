// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
#include "atlas/branching.hpp"
#include "atlas/classify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace atlas;

namespace {

// All quantities are exact integers; no numerical slack is allowed.
constexpr long kIntegerTolerance = 0;
constexpr int kJacobiSamples = 1000;
constexpr std::uint64_t kSeed = 20240611;

bool close(long a, long b) { return std::labs(a - b) <= kIntegerTolerance; }

ChevalleyAlgebra algebra(const std::string& name) { return ChevalleyAlgebra{RootSystem(CartanType::parse(name))}; }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

std::set<std::string> names(const std::vector<PaintedDiagram>& ds) {
  std::set<std::string> out;
  for (const auto& d : ds) out.insert(d.to_string());
  return out;
}

std::vector<std::vector<int>> subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << rank); ++mask) {
    std::vector<int> s;
    for (int k = 0; k < rank; ++k)
      if (mask & (1u << k)) s.push_back(k);
    out.push_back(s);
  }
  return out;
}

void minimal_orbits(Outcome& o) {
  const ClassificationTable t = minimal_orbit_table(minimal_orbit_types());
  for (const auto& row : t.rows) o.require(row.match(), row.label);
  o.detail << " " << t.rows.size() << " types";
}

void next_to_minimal_table(Outcome& o) {
  const ClassificationTable t = reproduce_table1();
  for (const auto& row : t.rows) o.require(row.match(), row.label);
  o.detail << " " << t.rows.size() << " orbits";
}

void semisimple_low_cohom(Outcome& o) {
  constexpr int kMaxRank = 6;
  const SemisimpleScanResult r = reproduce_thm_ss_c2(kMaxRank);
  for (const auto& row : r.table.rows) o.require(row.match(), row.label);
  std::vector<PaintedDiagram> one, two;
  for (const auto& m : cohom_one_family(kMaxRank)) one.push_back(m.diagram);
  for (const auto& m : cohom_two_families(kMaxRank)) two.push_back(m.diagram);
  o.require(names(r.target_one) == names(one), "cohomogeneity one set");
  o.require(names(r.target_two) == names(two), "cohomogeneity two set");
  o.detail << " rank<=" << kMaxRank << ", " << r.target_one.size() << " + " << r.target_two.size()
           << " diagrams";
}

void length_two_diagrams(Outcome& o) {
  std::size_t count = 0;
  for (const SimpleType& t : scan_types(4)) {
    const ChevalleyAlgebra a{RootSystem(CartanType(t))};
    for (const auto& nodes : subsets(t.rank)) {
      if (nodes.size() != 2) continue;
      const PaintedDiagram d(CartanType(t), nodes);
      ++count;
      o.require(kostant_summands(a.root_system(), d).num_summands >= 3, d.to_string() + " summands");
      o.require(flag_cohom(a, d).cohomogeneity >= 3, d.to_string() + " cohomogeneity");
    }
  }
  o.detail << " " << count << " diagrams";
}

void monotonicity(Outcome& o) {
  std::size_t covers = 0, inclusions = 0;
  for (const char* name : {"A3", "A4", "B2", "C2", "C3"}) {
    const auto a = algebra(name);
    const HasseDiagram h = hasse_diagram(a.root_system().cartan_type());
    for (const auto& [lo, hi] : h.covers) {
      if (h.nodes[lo].parts.front() == 1) continue;
      ++covers;
      const auto chain = check_monotonicity(
          a, {OrbitLabel::classical(h.nodes[lo], h.very_even[lo]),
              OrbitLabel::classical(h.nodes[hi], h.very_even[hi])});
      o.require(chain.strictly_increasing, std::string(name) + " " + h.nodes[lo].to_string() + " < " +
                                               h.nodes[hi].to_string());
    }
  }
  for (const SimpleType& t : scan_types(3)) {
    const ChevalleyAlgebra a{RootSystem(CartanType(t))};
    std::map<std::vector<int>, long> cohom;
    cohom[{}] = 0;
    for (const auto& nodes : subsets(t.rank))
      cohom[nodes] = static_cast<long>(flag_cohom(a, PaintedDiagram(CartanType(t), nodes)).cohomogeneity);
    for (const auto& [big, cb] : cohom)
      for (const auto& [small, cs] : cohom) {
        if (small.size() >= big.size() || !std::includes(big.begin(), big.end(), small.begin(), small.end()))
          continue;
        ++inclusions;
        o.require(cb >= cs + static_cast<long>(big.size() - small.size()),
                  PaintedDiagram(CartanType(t), big).to_string());
      }
  }
  o.detail << " " << covers << " covers, " << inclusions << " inclusions";
}

void mixed_orbit(Outcome& o) {
  for (int n : {3, 4}) {
    const long c = static_cast<long>(mixed_orbit_cohom(n).cohomogeneity);
    o.require(close(c, 5), "n=" + std::to_string(n) + " gives " + std::to_string(c));
  }
}

void products(Outcome& o) {
  const auto mm = product_orbit_cohom({OrbitSpec::minimal({Family::A, 1}), OrbitSpec::minimal({Family::A, 1})});
  o.require(close(static_cast<long>(mm.direct.cohomogeneity), 2) && mm.additive, "A1 min x A1 min");
  const auto fm = product_orbit_cohom({OrbitSpec::flag({Family::A, 2}, {0}), OrbitSpec::minimal({Family::A, 1})});
  o.require(close(static_cast<long>(fm.direct.cohomogeneity), 2) && fm.additive, "A2 flag x A1 min");
}

void branching(Outcome& o) {
  const RootSystem e8(CartanType::parse("E8"));
  const auto cb = branch_adjoint_to_centralizer(e8, {1, 0, 0, 0, 0, 0, 0, 0});
  const ChevalleyAlgebra a(e8);
  o.require(close(cb.subsystem.algebra_dim(8), static_cast<long>(centralizer_dim(a, a.cartan_element(cb.h)))),
            "E8 centralizer dimension");
  o.require(close(cb.branching.total_dimension(), 248), "E8 total dimension");
  const RootSystem g2(CartanType::parse("G2"));
  std::multiset<long> dims;
  for (const auto& c : branch_adjoint(g2, {{0, 1}, {3, 1}}).components)
    for (long m = 0; m < c.multiplicity; ++m) dims.insert(c.dimension);
  o.require(dims == std::multiset<long>{8, 3, 3}, "G2 over long A2");
}

void lie_algebra_sanity(Outcome& o) {
  std::mt19937_64 rng(kSeed);
  for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
    const auto a = algebra(name);
    const std::size_t n = a.dim();
    auto unit = [n](std::size_t i) {
      RationalVector v(n);
      v[i] = 1;
      return v;
    };
    std::size_t bad = 0;
    for (int t = 0; t < kJacobiSamples; ++t) {
      const RationalVector x = unit(rng() % n), y = unit(rng() % n), z = unit(rng() % n);
      const RationalVector j = add(add(a.bracket(a.bracket(x, y), z), a.bracket(a.bracket(y, z), x)),
                                   a.bracket(a.bracket(z, x), y));
      if (!is_zero(j)) ++bad;
      if (t < 20 && a.killing(a.bracket(x, y), z) != a.killing(x, a.bracket(y, z))) ++bad;
    }
    o.require(bad == 0, std::string(name) + " Jacobi/Killing");
    const CartanType& ct = a.root_system().cartan_type();
    for (const OrbitLabel& l : next_to_minimal(ct)) {
      const OrbitAnalysis an = analyze_orbit(a, l, kSeed);
      o.require(triple_relations_hold(a, an.triple), std::string(name) + " triple");
      const std::size_t c = centralizer_dim(a, an.triple.x);
      o.require(centralizer_dim(a, an.triple.x.times(4)) == c, std::string(name) + " scaling");
    }
  }
  const HasseDiagram c2 = hasse_diagram(CartanType::parse("C2"));
  // 1^4 < 2,1,1 < 2,2 < 4
  o.require(c2.nodes.size() == 4 && c2.covers.size() == 3, "C2 Hasse diagram is a chain");
}

void shared_orbit_tables(Outcome& o) {
  const auto pairs = load_shared_orbit_pairs(ATLAS_DATA_DIR "/shared_orbits.json");
  const Tables23 t = assemble_tables_2_3(pairs);
  for (const auto* table : {&t.table2, &t.table3})
    for (const auto& row : table->rows) o.require(row.match(), row.label);
  o.detail << " " << t.table2.rows.size() << " + " << t.table3.rows.size() << " rows";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"1 minimal orbits have cohomogeneity one", minimal_orbits},
      {"2 next-to-minimal orbits", next_to_minimal_table},
      {"3 semisimple orbits of cohomogeneity one and two", semisimple_low_cohom},
      {"4 length-two diagrams have cohomogeneity at least three", length_two_diagrams},
      {"5 monotonicity along closures and crossed sets", monotonicity},
      {"6 mixed orbit has cohomogeneity five", mixed_orbit},
      {"7 products of orbits are additive", products},
      {"8 branching and centralizers", branching},
      {"9 structure constants, triples and closure order", lie_algebra_sanity},
      {"tables23 shared-orbit tables", shared_orbit_tables},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s%s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
