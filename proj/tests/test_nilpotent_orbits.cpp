#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas/nilpotent_orbits.hpp"

#include <algorithm>

using namespace atlas;

namespace {

ChevalleyAlgebra algebra(const char* name) { return ChevalleyAlgebra{RootSystem(CartanType::parse(name))}; }

std::vector<std::string> names(const std::vector<Partition>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// Number of orbits counting each very even partition twice.
std::size_t orbit_count(const CartanType& t) {
  std::size_t n = 0;
  for (const auto& p : valid_partitions(t)) n += is_very_even(t.simple(), p) ? 2 : 1;
  return n;
}

}  // namespace

TEST_CASE("partition parsing and duals") {
  CHECK(Partition::parse("2^2,1^2").parts == std::vector<int>{2, 2, 1, 1});
  CHECK(Partition::parse("(3, 1, 1)").parts == std::vector<int>{3, 1, 1});
  CHECK(Partition::parse("1,3").parts == std::vector<int>{3, 1});
  CHECK(Partition::parse("4 2 2").dual().parts == std::vector<int>{3, 3, 1, 1});
  CHECK(Partition({5}).dual().parts == std::vector<int>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("0,1"), std::invalid_argument);
}

TEST_CASE("valid partitions") {
  CHECK(names(valid_partitions(CartanType::parse("C2"))) ==
        std::vector<std::string>{"(4)", "(2,2)", "(2,1,1)", "(1,1,1,1)"});
  CHECK(names(valid_partitions(CartanType::parse("A2"))) ==
        std::vector<std::string>{"(3)", "(2,1)", "(1,1,1)"});
  CHECK(names(valid_partitions(CartanType::parse("B2"))) ==
        std::vector<std::string>{"(5)", "(3,1,1)", "(2,2,1)", "(1,1,1,1,1)"});
  CHECK_THROWS_AS(valid_partitions(CartanType::parse("G2")), std::invalid_argument);
}

TEST_CASE("orbit counts") {
  // Partition counts, and the classical orbit counts including the zero orbit.
  CHECK(orbit_count(CartanType::parse("A4")) == 7);
  CHECK(orbit_count(CartanType::parse("A6")) == 15);
  CHECK(orbit_count(CartanType::parse("B3")) == 7);
  CHECK(orbit_count(CartanType::parse("C3")) == 8);
  CHECK(orbit_count(CartanType::parse("D4")) == 12);
  CHECK(orbit_count(CartanType::parse("B4")) == 13);
  CHECK(orbit_count(CartanType::parse("C4")) == 14);
}

TEST_CASE("very even partitions") {
  const SimpleType d4{Family::D, 4}, d6{Family::D, 6};
  CHECK(is_very_even(d4, Partition({2, 2, 2, 2})));
  CHECK(is_very_even(d4, Partition({4, 4})));
  CHECK_FALSE(is_very_even(d4, Partition({3, 3, 1, 1})));
  CHECK(is_very_even(d6, Partition({2, 2, 2, 2, 2, 2})));
  CHECK_FALSE(is_very_even(SimpleType{Family::C, 4}, Partition({4, 4})));
}

TEST_CASE("orbit dimensions from partitions") {
  for (int n = 1; n <= 6; ++n) {
    const CartanType t(SimpleType{Family::A, n});
    std::vector<int> parts(static_cast<std::size_t>(n - 1), 1);
    parts.insert(parts.begin(), 2);
    CHECK(orbit_dimension(t, Partition(parts)) == 2 * n);
    CHECK(orbit_dimension(t, Partition(std::vector<int>(static_cast<std::size_t>(n + 1), 1))) == 0);
  }
  CHECK(orbit_dimension(CartanType::parse("C2"), Partition({2, 2})) == 6);
  CHECK(orbit_dimension(CartanType::parse("C2"), Partition({4})) == 8);
  CHECK_THROWS_AS(orbit_dimension(CartanType::parse("C2"), Partition({3, 1})), std::invalid_argument);
}

TEST_CASE("partition and diagram dimension formulas agree") {
  for (const char* name : {"A3", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "D5"}) {
    const CartanType t = CartanType::parse(name);
    const RootSystem rs(t);
    for (const auto& p : valid_partitions(t)) {
      const OrbitLabel l = OrbitLabel::classical(p, is_very_even(t.simple(), p));
      CAPTURE(name);
      CAPTURE(p.to_string());
      CHECK(orbit_dimension(rs, weighted_diagram(t, l)) == orbit_dimension(t, p));
    }
  }
}

TEST_CASE("principal orbit dimension is dim g minus rank") {
  for (const char* name : {"A4", "B3", "C4", "D5"}) {
    const CartanType t = CartanType::parse(name);
    const Partition top = valid_partitions(t).front();
    CHECK(orbit_dimension(t, top) == t.dimension() - t.rank());
    const auto w = weighted_diagram(t, OrbitLabel::classical(top));
    CHECK(std::all_of(w.marks.begin(), w.marks.end(), [](long m) { return m == 2; }));
  }
}

TEST_CASE("weighted diagrams") {
  const CartanType a2 = CartanType::parse("A2");
  CHECK(weighted_diagram(a2, OrbitLabel::classical(Partition({2, 1}))).marks == IntVector{1, 1});
  CHECK(weighted_diagram(a2, OrbitLabel::classical(Partition({3}))).marks == IntVector{2, 2});
  CHECK(weighted_diagram(CartanType::parse("A1"), OrbitLabel::classical(Partition({2}))).marks == IntVector{2});
  CHECK(weighted_diagram(CartanType::parse("B3"), OrbitLabel::classical(Partition({3, 1, 1, 1, 1}))).marks ==
        IntVector{2, 0, 0});
  CHECK(weighted_diagram(CartanType::parse("C3"), OrbitLabel::classical(Partition({2, 2, 1, 1}))).marks ==
        IntVector{0, 1, 0});
  OrbitLabel ve = OrbitLabel::classical(Partition({2, 2, 2, 2}), true);
  const auto w1 = weighted_diagram(CartanType::parse("D4"), ve);
  ve.variant = 2;
  const auto w2 = weighted_diagram(CartanType::parse("D4"), ve);
  CHECK(w1.marks == IntVector{0, 0, 0, 2});
  CHECK(w2.marks == IntVector{0, 0, 2, 0});
}

TEST_CASE("weighted diagram eigenvalues are symmetric") {
  for (const char* name : {"B4", "C3", "D5", "F4", "E6"}) {
    const CartanType t = CartanType::parse(name);
    const RootSystem rs(t);
    for (const auto& l : next_to_minimal(t)) {
      const auto w = weighted_diagram(t, l);
      for (long k = 1; k <= 6; ++k) CHECK(grading_dimension(rs, w, k) == grading_dimension(rs, w, -k));
    }
  }
}

TEST_CASE("dominance") {
  CHECK(dominates(Partition({3, 1, 1, 1}), Partition({2, 2, 1, 1})));
  CHECK(dominates(Partition({2, 2}), Partition({2, 2})));
  CHECK_FALSE(dominates(Partition({2, 2, 1, 1}), Partition({3, 1, 1, 1})));
  CHECK_FALSE(dominates(Partition({3, 3}), Partition({4, 1, 1})));
  CHECK_FALSE(dominates(Partition({4, 1, 1}), Partition({3, 3})));
  CHECK_THROWS_AS(dominates(Partition({2}), Partition({1})), std::invalid_argument);
}

TEST_CASE("Hasse diagram of C2 is a chain") {
  const HasseDiagram h = hasse_diagram(CartanType::parse("C2"));
  CHECK(names(h.nodes) == std::vector<std::string>{"(1,1,1,1)", "(2,1,1)", "(2,2)", "(4)"});
  using Edge = std::pair<std::size_t, std::size_t>;
  CHECK(h.covers == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("orbit dimension strictly increases along covers") {
  for (const char* name : {"A4", "B3", "C3", "D4", "B4"}) {
    const HasseDiagram h = hasse_diagram(CartanType::parse(name));
    for (const auto& [lo, hi] : h.covers) CHECK(h.dimensions[lo] < h.dimensions[hi]);
  }
}

TEST_CASE("minimal orbit is below every nonzero orbit") {
  for (const char* name : {"A3", "B3", "C3", "D4", "D5"}) {
    const CartanType t = CartanType::parse(name);
    const Partition min = *minimal_orbit(t).partition;
    for (const auto& p : valid_partitions(t))
      if (p.parts.front() > 1) CHECK(dominates(p, min));
  }
}

TEST_CASE("minimal and next-to-minimal labels") {
  CHECK(minimal_orbit(CartanType::parse("A5")).partition->to_string() == "(2,1,1,1,1)");
  CHECK(next_to_minimal(CartanType::parse("A5")).front().partition->to_string() == "(2,2,1,1)");
  const auto b4 = next_to_minimal(CartanType::parse("B4"));
  REQUIRE(b4.size() == 2);
  CHECK(b4[0].partition->to_string() == "(3,1,1,1,1,1,1)");
  CHECK(b4[1].partition->to_string() == "(2,2,2,2,1)");
  CHECK(next_to_minimal(CartanType::parse("C3")).front().partition->to_string() == "(2,2,1,1)");
  CHECK(next_to_minimal(CartanType::parse("A2")).front().partition->to_string() == "(3)");
  CHECK(next_to_minimal(CartanType::parse("B3")).size() == 1);
  CHECK(next_to_minimal(CartanType::parse("D4")).size() == 2);
  CHECK(next_to_minimal(CartanType::parse("D6")).size() == 2);
  CHECK_FALSE(next_to_minimal(CartanType::parse("D6"))[1].very_even);
}

TEST_CASE("next-to-minimal orbits cover the minimal orbit") {
  // Checked against the Hasse diagram for classical types.
  for (const char* name : {"A3", "A5", "B3", "B4", "C3", "C4", "D4", "D5"}) {
    const CartanType t = CartanType::parse(name);
    const HasseDiagram h = hasse_diagram(t);
    const Partition min = *minimal_orbit(t).partition;
    const std::size_t imin = static_cast<std::size_t>(
        std::find(h.nodes.begin(), h.nodes.end(), min) - h.nodes.begin());
    std::vector<Partition> above;
    for (const auto& [lo, hi] : h.covers)
      if (lo == imin) above.push_back(h.nodes[hi]);
    std::vector<Partition> listed;
    for (const auto& l : next_to_minimal(t)) listed.push_back(*l.partition);
    std::sort(above.begin(), above.end());
    std::sort(listed.begin(), listed.end());
    CAPTURE(name);
    CHECK(above == listed);
  }
}

TEST_CASE("minimal orbit diagram is the highest coroot") {
  for (const char* name : {"A4", "B3", "C3", "D5", "G2", "F4", "E6", "E7", "E8"}) {
    const CartanType t = CartanType::parse(name);
    const RootSystem rs(t);
    const auto w = weighted_diagram(t, minimal_orbit(t));
    const IntVector theta_vee = rs.coroot(rs.highest_root());
    // <alpha_i, theta^vee> = sum_j A[j][i] theta^vee_j.
    for (int i = 0; i < rs.rank(); ++i) {
      long s = 0;
      for (int j = 0; j < rs.rank(); ++j)
        s += rs.cartan()[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * theta_vee[static_cast<std::size_t>(j)];
      CHECK(w.marks[static_cast<std::size_t>(i)] == s);
    }
  }
}

TEST_CASE("representatives") {
  const auto a1 = algebra("A1");
  const AlgebraElement x = representative(a1, WeightedDynkinDiagram{{2}}, 1);
  CHECK(centralizer_dim(a1, x) == 1);
  CHECK(x.re[0] == 0);
  CHECK(x.re[2] == 0);

  const auto a2 = algebra("A2");
  CHECK(a2.dim() - centralizer_dim(a2, representative(a2, WeightedDynkinDiagram{{1, 1}}, 1)) == 4);

  const auto e8 = algebra("E8");
  const CartanType t = CartanType::parse("E8");
  const AlgebraElement m = representative(e8, weighted_diagram(t, minimal_orbit(t)), 1);
  CHECK(e8.dim() - centralizer_dim(e8, m) == 58);
}

TEST_CASE("representatives realize every classical orbit") {
  for (const char* name : {"A3", "B3", "C3", "D4", "C2"}) {
    const auto a = algebra(name);
    const CartanType& t = a.root_system().cartan_type();
    for (const auto& p : valid_partitions(t)) {
      const OrbitLabel l = OrbitLabel::classical(p, is_very_even(t.simple(), p));
      if (p.parts.front() == 1) {
        CHECK_THROWS_AS(representative(a, weighted_diagram(t, l), 5), std::runtime_error);
        continue;
      }
      const AlgebraElement x = representative(a, weighted_diagram(t, l), 5);
      CAPTURE(name);
      CAPTURE(p.to_string());
      CHECK(static_cast<long>(a.dim() - centralizer_dim(a, x)) == orbit_dimension(t, p));
      // ad(X) is nilpotent of index at most 2 * (largest part).
      CHECK(matrix_power(a.ad_matrix(x), static_cast<unsigned>(2 * p.parts.front())).is_zero());
      CHECK(centralizer_dim(a, x.times(4)) == centralizer_dim(a, x));
    }
  }
}
