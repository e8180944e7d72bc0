#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas/nilpotent_orbits.hpp"
#include "atlas/sl2_decomp.hpp"

#include <map>

using namespace atlas;

namespace {

ChevalleyAlgebra algebra(const char* name) { return ChevalleyAlgebra{RootSystem(CartanType::parse(name))}; }

Sl2Triple triple_for(const ChevalleyAlgebra& a, const OrbitLabel& l, std::uint64_t seed = 5) {
  const WeightedDynkinDiagram w = weighted_diagram(a.root_system().cartan_type(), l);
  const RepresentativeResult rep = representative_with_data(a, w, seed);
  return complete_triple(a, rep.x, a.cartan_element(rep.h));
}

// Reductive centralizer of a classical nilpotent with the given partition:
// products of GL, Sp and O factors indexed by part multiplicities.
long reductive_centralizer_dim(Family f, const Partition& p) {
  std::map<int, long> mult;
  for (int part : p.parts) ++mult[part];
  long dim = 0;
  for (const auto& [part, r] : mult) {
    if (f == Family::A) {
      dim += r * r;
      continue;
    }
    const bool symplectic_factor = (f == Family::C) == (part % 2 == 1);
    dim += symplectic_factor ? (r / 2) * (r + 1) : r * (r - 1) / 2;
  }
  return f == Family::A ? dim - 1 : dim;
}

RationalMatrix rotation(std::size_t n, std::size_t i, std::size_t j) {
  RationalMatrix m(n, n);
  m(i, j) = -1;
  m(j, i) = 1;
  return m;
}

}  // namespace

TEST_CASE("the triple of sl2 is the standard one") {
  const auto a = algebra("A1");
  const Sl2Triple t = complete_triple(a, a.basis_element(1), a.basis_element(0));
  CHECK(t.y == a.basis_element(2));
  CHECK(triple_relations_hold(a, t));
  CHECK(triple_centralizer(a, t).dim == 0);
}

TEST_CASE("minimal orbit of sl3") {
  const auto a = algebra("A2");
  const Sl2Triple t = triple_for(a, minimal_orbit(CartanType::parse("A2")));
  CHECK(triple_centralizer(a, t).dim == 1);
  const IsotypicDecomposition d = isotypic_decomposition(a, t);
  CHECK(d.k_dim == 1);
  CHECK(d.multiplicities == std::map<long, std::size_t>{{1, 2}});
  CHECK(d.w_dim == 0);
  CHECK(bundle_degree(d) == 0);
}

TEST_CASE("principal orbit of sl3") {
  const auto a = algebra("A2");
  const Sl2Triple t = triple_for(a, OrbitLabel::classical(Partition::parse("3")));
  const IsotypicDecomposition d = isotypic_decomposition(a, t);
  CHECK(d.k_dim == 0);
  CHECK(d.multiplicities == std::map<long, std::size_t>{{4, 1}});
  CHECK(bundle_degree(d) == 4);
  CHECK(d.w_dim == 3);
}

TEST_CASE("next-to-minimal orbit of E8") {
  // The centralizer of 2A1 is B6.
  const auto a = algebra("E8");
  const auto ntm = next_to_minimal(CartanType::parse("E8"));
  REQUIRE(ntm.size() == 1);
  const Sl2Triple t = triple_for(a, ntm.front());
  CHECK(triple_relations_hold(a, t));
  CHECK(triple_centralizer(a, t).dim == 78);
  const IsotypicDecomposition d = isotypic_decomposition(a, t);
  CHECK(d.k_dim == 78);
  CHECK(d.w_dim == 13);
  CHECK(bundle_degree(d) == 2);
}

TEST_CASE("isotypic bookkeeping") {
  for (const char* name : {"A4", "B3", "C3", "D4", "G2", "F4"}) {
    const auto a = algebra(name);
    const CartanType& ct = a.root_system().cartan_type();
    for (const OrbitLabel& l : next_to_minimal(ct)) {
      const Sl2Triple t = triple_for(a, l);
      const IsotypicDecomposition d = isotypic_decomposition(a, t);
      CAPTURE(name);
      CAPTURE(l.to_string());
      std::size_t total = 3 + d.k_dim, highest = 1 + d.k_dim;
      for (const auto& [k, m] : d.multiplicities) {
        total += m * static_cast<std::size_t>(k + 1);
        highest += m;
      }
      CHECK(total == a.dim());
      // Each irreducible summand contributes one vector to ker ad X.
      CHECK(highest == centralizer_dim(a, t.x));
      for (const auto& [k, m] : d.eigenspace_dims) CHECK(d.eigenspace_dims.at(-k) == m);
      CHECK(d.k_dim == triple_centralizer(a, t).dim);
    }
  }
}

TEST_CASE("reductive centralizers of classical orbits") {
  for (const char* name : {"A3", "A4", "B3", "C3", "C4", "D4"}) {
    const auto a = algebra(name);
    const CartanType& ct = a.root_system().cartan_type();
    const Family f = ct.simple().family;
    for (const Partition& p : valid_partitions(ct)) {
      if (p.parts.front() == 1) continue;
      const OrbitLabel l = OrbitLabel::classical(p, is_very_even(ct.simple(), p));
      const Sl2Triple t = triple_for(a, l);
      CAPTURE(name);
      CAPTURE(p.to_string());
      CHECK(static_cast<long>(triple_centralizer(a, t).dim) == reductive_centralizer_dim(f, p));
      CHECK(static_cast<long>(isotypic_decomposition(a, t).k_dim) == reductive_centralizer_dim(f, p));
    }
  }
}

TEST_CASE("commutants") {
  std::vector<RationalMatrix> so3 = {rotation(3, 0, 1), rotation(3, 0, 2), rotation(3, 1, 2)};
  CHECK(commutant_dim(so3) == 1);
  CHECK(commutant_dim({RationalMatrix(2, 2)}) == 4);
  CHECK(commutant_dim({rotation(2, 0, 1)}) == 2);
  CHECK_THROWS_AS(commutant_dim({}), std::invalid_argument);
  CHECK_THROWS_AS(commutant_dim({RationalMatrix(2, 2), RationalMatrix(3, 3)}), std::invalid_argument);
}

TEST_CASE("highest-weight spaces carry the centralizer action") {
  const auto a = algebra("C3");
  const Sl2Triple t = triple_for(a, OrbitLabel::classical(Partition::parse("2,2,1,1")));
  const auto k = triple_centralizer(a, t);
  const auto d = isotypic_decomposition(a, t);
  const long deg = bundle_degree(d);
  REQUIRE(deg == 2);
  const auto space = highest_weight_space(a, t, deg);
  CHECK(space.size() == d.multiplicities.at(deg));
  const auto action = restricted_action(a, k.basis, space);
  CHECK(action.size() == k.dim);
  CHECK(commutant_dim(action) <= 2);
}

TEST_CASE("invalid input") {
  const auto a = algebra("A2");
  const AlgebraElement e1 = a.root_vector({1, 0});
  // H = 0 does not satisfy [H, X] = 2X.
  CHECK_THROWS_AS(complete_triple(a, e1, AlgebraElement(a.dim())), std::invalid_argument);
  // H off the Cartan subalgebra.
  CHECK_THROWS_AS(complete_triple(a, e1, e1), std::invalid_argument);
  // X = 0 at a valid grading cannot reach H.
  const AlgebraElement h = a.cartan_element(coweight_element(a.root_system(), {2, 0}));
  CHECK_THROWS_AS(complete_triple(a, AlgebraElement(a.dim()), h), TripleError);
  // A nongeneric grade-2 element: e_{a1} under the principal grading (2,2).
  const AlgebraElement hp = a.cartan_element(coweight_element(a.root_system(), {2, 2}));
  CHECK_THROWS_AS(complete_triple(a, e1, hp), TripleError);
  IsotypicDecomposition d;
  d.multiplicities = {{2, 1}, {4, 1}};
  CHECK_THROWS_AS(bundle_degree(d), std::logic_error);
}
