#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas/classify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

using namespace atlas;

namespace {

ChevalleyAlgebra algebra(const char* name) { return ChevalleyAlgebra{RootSystem(CartanType::parse(name))}; }

std::filesystem::path write_temp(const std::string& name, const std::string& contents) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << contents;
  return p;
}

std::set<std::string> names(const std::vector<PaintedDiagram>& ds) {
  std::set<std::string> out;
  for (const auto& d : ds) out.insert(d.to_string());
  return out;
}

Fact make_fact(long computed, std::optional<long> expected, const char* relation = "==") {
  Fact f;
  f.name = "x";
  f.computed = computed;
  f.expected = expected;
  f.relation = relation;
  return f;
}

}  // namespace

TEST_CASE("facts and rows") {
  CHECK(make_fact(3, 3).holds());
  CHECK_FALSE(make_fact(3, 2).holds());
  CHECK(make_fact(3, 2, ">=").holds());
  CHECK_FALSE(make_fact(3, 2, "<=").holds());
  CHECK(make_fact(3, std::nullopt).holds());
  TableRow row;
  row.facts = {make_fact(1, 1), make_fact(1, 2)};
  CHECK_FALSE(row.match());
  row.facts.pop_back();
  CHECK(row.match());
}

TEST_CASE("orbit label parsing") {
  const CartanType c3 = CartanType::parse("C3");
  CHECK(parse_orbit_label(c3, "2,2,1,1") == OrbitLabel::classical(Partition::parse("2,2,1,1")));
  CHECK(parse_orbit_label(c3, " 2^2,1^2 ") == OrbitLabel::classical(Partition::parse("2,2,1,1")));
  CHECK(parse_orbit_label(c3, "min") == minimal_orbit(c3));
  CHECK(parse_orbit_label(c3, "next-to-minimal") == next_to_minimal(c3).front());
  CHECK(parse_orbit_label(c3, "wdd:0,1,0").diagram.has_value());

  const CartanType d4 = CartanType::parse("D4");
  const OrbitLabel one = parse_orbit_label(d4, "2,2,2,2:I");
  const OrbitLabel two = parse_orbit_label(d4, "2,2,2,2II");
  CHECK(one.very_even);
  CHECK(one.variant == 1);
  CHECK(two.variant == 2);
  CHECK(parse_orbit_label(d4, "2,2,2,2") == one);

  const CartanType g2 = CartanType::parse("G2");
  CHECK(parse_orbit_label(g2, "1,0") == OrbitLabel::exceptional({1, 0}));

  CHECK_THROWS_AS(parse_orbit_label(c3, "3,1,1,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_orbit_label(d4, "2,2,2,2:III"), std::invalid_argument);
  CHECK_THROWS_AS(parse_orbit_label(g2, "1,0,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_orbit_label(g2, "1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_orbit_label(CartanType::parse("A1"), "ntm"), std::invalid_argument);
  CHECK_THROWS_AS(parse_orbit_label(CartanType::parse("A1xA1"), "min"), std::invalid_argument);
}

TEST_CASE("next-to-minimal expectations") {
  const auto ntm = [](const char* name) {
    const CartanType t = CartanType::parse(name);
    return table1_expectation(t.simple(), next_to_minimal(t).front());
  };
  CHECK(ntm("A2").cohomogeneity == 4);
  CHECK(ntm("A5").k_dim == 7);
  CHECK(ntm("C3").k_dim == 4);
  CHECK(ntm("E8").w_dim == 13);
  for (const SimpleType& t : table1_types())
    for (const OrbitLabel& l : next_to_minimal(CartanType(t))) {
      const Table1Expectation e = table1_expectation(t, l);
      CAPTURE(t.name());
      // k + W + the triple's own S^2 fit inside g.
      CHECK(e.k_dim + e.w_dim + 3 <= CartanType(t).dimension());
    }
}

TEST_CASE("orbit analysis") {
  const auto a = algebra("G2");
  const OrbitAnalysis an = analyze_orbit(a, next_to_minimal(CartanType::parse("G2")).front(), 7);
  CHECK(an.representative_orbit_dim == an.formula_orbit_dim);
  CHECK(an.triple_centralizer_dim == 3);
  CHECK(an.decomposition.w_dim == 4);
  CHECK(an.bundle_degree == 3);
  CHECK(an.w_commutant_dim <= 2);
}

TEST_CASE("shared-orbit data loader") {
  const auto pairs = load_shared_orbit_pairs(ATLAS_DATA_DIR "/shared_orbits.json");
  CHECK(pairs.size() >= 5);
  for (const auto& p : pairs) {
    CAPTURE(p.id);
    if (p.next_to_minimal) CHECK_FALSE(p.instances.empty());
    else CHECK(p.covering_degree.has_value());
  }
  CHECK_THROWS_AS(load_shared_orbit_pairs("/nonexistent/shared_orbits.json"), std::runtime_error);
  const auto bad = write_temp("atlas_bad.json", "{\"pairs\": [");
  CHECK_THROWS_AS(load_shared_orbit_pairs(bad.string()), std::runtime_error);
  const auto missing = write_temp("atlas_missing.json", "{\"pairs\": [{\"id\": \"x\"}]}");
  CHECK_THROWS_AS(load_shared_orbit_pairs(missing.string()), std::runtime_error);
  std::filesystem::remove(bad);
  std::filesystem::remove(missing);
}

TEST_CASE("mixed orbit") {
  for (int n : {3, 4}) {
    CAPTURE(n);
    CHECK(mixed_orbit_cohom(n).cohomogeneity == 5);
    const auto a = ChevalleyAlgebra{RootSystem(CartanType(SimpleType{Family::A, n}))};
    // The semisimple part alone gives the projective space CP^n.
    CHECK(cohom_adjoint(a, mixed_orbit_semisimple_part(a)).cohomogeneity == 1);
  }
  CHECK_THROWS_AS(mixed_orbit_cohom(2), std::invalid_argument);
  CHECK_THROWS_AS(mixed_orbit_semisimple_part(algebra("B3")), std::invalid_argument);
}

TEST_CASE("product orbits") {
  const auto mm = product_orbit_cohom({OrbitSpec::minimal({Family::A, 1}), OrbitSpec::minimal({Family::A, 1})});
  CHECK(mm.component_sum == 2);
  CHECK(mm.direct.cohomogeneity == 2);
  CHECK(mm.additive);

  const auto fm = product_orbit_cohom({OrbitSpec::flag({Family::A, 2}, {0}), OrbitSpec::minimal({Family::A, 1})});
  CHECK(fm.components.size() == 2);
  CHECK(fm.direct.cohomogeneity == 2);
  CHECK(fm.additive);

  const auto single = product_orbit_cohom({OrbitSpec::minimal({Family::C, 3})});
  const auto c3 = algebra("C3");
  CHECK(single.direct.cohomogeneity == cohom_adjoint(c3, highest_root_vector(c3)).cohomogeneity);
  CHECK_THROWS_AS(product_orbit_cohom({}), std::invalid_argument);
}

TEST_CASE("embedding a factor") {
  const ChevalleyAlgebra product{RootSystem(CartanType::parse("A2xA1"))};
  const auto a1 = algebra("A1");
  const AlgebraElement e = embed_factor(product, 1, a1, a1.basis_element(1));
  CHECK(e == product.root_vector({0, 0, 1}));
  CHECK_THROWS_AS(embed_factor(product, 2, a1, a1.basis_element(1)), std::invalid_argument);
  CHECK_THROWS_AS(embed_factor(product, 0, a1, a1.basis_element(1)), std::invalid_argument);
}

TEST_CASE("family generators") {
  std::set<std::string> one;
  for (const auto& m : cohom_one_family(4)) one.insert(m.diagram.to_string());
  CHECK(one == std::set<std::string>{"A1[x]", "A2[x.]", "A3[x..]", "A4[x...]"});
  std::set<std::string> two;
  for (const auto& m : cohom_two_families(4)) {
    two.insert(m.diagram.to_string());
    CHECK(m.stabilizer_dim >= 0);
  }
  CHECK(two == std::set<std::string>{"A3[.x.]", "A4[.x..]", "B2[x.]", "B2[.x]", "B3[x..]", "B4[x...]",
                                     "C3[x..]", "C4[x...]", "D4[x...]"});
}

TEST_CASE("semisimple scan up to rank 4") {
  const SemisimpleScanResult r = reproduce_thm_ss_c2(4);
  CHECK(r.table.all_match());
  CHECK(names(r.target_one) == std::set<std::string>{"A1[x]", "A2[x.]", "A3[x..]", "A4[x...]"});
  std::set<std::string> expected;
  for (const auto& m : cohom_two_families(4)) expected.insert(m.diagram.to_string());
  CHECK(names(r.target_two) == expected);
  const SemisimpleScanResult again = reproduce_thm_ss_c2(4);
  CHECK(again.target_two == r.target_two);
  CHECK(again.table.rows.size() == r.table.rows.size());
}

TEST_CASE("minimal orbit table") {
  const ClassificationTable t =
      minimal_orbit_table({{Family::A, 2}, {Family::B, 3}, {Family::G, 2}});
  CHECK(t.rows.size() == 3);
  CHECK(t.all_match());
}

TEST_CASE("tables 2 and 3 carry provenance") {
  const auto pairs = load_shared_orbit_pairs(ATLAS_DATA_DIR "/shared_orbits.json");
  const Tables23 t = assemble_tables_2_3(pairs);
  CHECK(t.table2.rows.size() == 10);
  CHECK(t.table3.rows.size() == 8);
  CHECK(t.table2.all_match());
  CHECK(t.table3.all_match());
  const std::set<std::string> tags = {"machine-verified", "external data", "geometric, external"};
  for (const auto* table : {&t.table2, &t.table3})
    for (const auto& row : table->rows) {
      CAPTURE(row.label);
      CHECK(tags.count(row.provenance) == 1);
      if (row.provenance == "external data") CHECK_FALSE(row.facts.empty());
    }
  std::vector<SharedOrbitPair> partial(pairs.begin(), pairs.begin() + 1);
  CHECK_THROWS_AS(assemble_tables_2_3(partial), std::runtime_error);
}
