#include "atlas/branching.hpp"
#include "atlas/classify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace atlas;

namespace {

json rational(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

json rationals(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rational(q));
  return out;
}

json integers(const IntVector& v) { return json(std::vector<long>(v.begin(), v.end())); }

json element(const AlgebraElement& x) {
  json out = {{"re", rationals(x.re)}};
  if (!x.is_real()) out["im"] = rationals(x.im);
  return out;
}

json report(const CohomReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) samples.push_back({{"seed", s.seed}, {"real_orbit_dim", s.real_orbit_dim}});
  return {{"cohomogeneity", r.cohomogeneity},
          {"orbit_real_dim", r.orbit_real_dim},
          {"group_dim", r.group_dim},
          {"max_sample_dim", r.max_sample_dim},
          {"generic_stabilizer_dim", r.generic_stabilizer_dim()},
          {"samples_agree", r.samples_agree},
          {"certification", r.certification},
          {"samples", samples}};
}

json table(const ClassificationTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json facts = json::array();
    for (const auto& f : r.facts) {
      json jf = {{"name", f.name}, {"computed", f.computed}};
      jf["expected"] = f.expected ? json(*f.expected) : json(nullptr);
      jf["relation"] = f.relation;
      jf["source"] = f.source;
      jf["holds"] = f.holds();
      facts.push_back(jf);
    }
    rows.push_back({{"label", r.label},
                    {"provenance", r.provenance},
                    {"match", r.match()},
                    {"note", r.note},
                    {"facts", facts}});
  }
  return {{"title", t.title}, {"all_match", t.all_match()}, {"rows", rows}};
}

std::vector<long> parse_list(const std::string& text) {
  std::string s;
  for (char c : text) s += (c == ',' || c == '[' || c == ']') ? ' ' : c;
  std::istringstream in(s);
  std::vector<long> out;
  long v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw std::invalid_argument("cannot parse list '" + text + "'");
  return out;
}

std::vector<int> one_based_nodes(const std::string& text, int rank) {
  std::vector<int> out;
  for (long k : parse_list(text)) {
    if (k < 1 || k > rank) throw std::invalid_argument("node " + std::to_string(k) + " out of range 1.." + std::to_string(rank));
    out.push_back(static_cast<int>(k - 1));
  }
  return out;
}

SimpleType simple_type(const std::string& text) {
  const CartanType t = CartanType::parse(text);
  if (!t.is_simple()) throw std::invalid_argument("this command needs a simple type");
  return t.simple();
}

json roots_summary(const CartanType& t) {
  const RootSystem rs(t);
  json cartan = json::array();
  for (const auto& row : rs.cartan()) cartan.push_back(integers(row));
  json pos = json::array();
  for (const auto& r : rs.positive_roots()) pos.push_back(integers(r));
  json highest = json::array();
  for (const auto& r : rs.highest_roots()) highest.push_back(integers(r));
  json lengths = json::array();
  for (int i = 0; i < rs.rank(); ++i) lengths.push_back(rs.node_length(i));
  return {{"type", t.name()},
          {"rank", rs.rank()},
          {"dimension", rs.dimension()},
          {"num_positive_roots", rs.num_positive()},
          {"cartan_matrix", cartan},
          {"det_cartan", rs.det_cartan().get_str()},
          {"node_lengths", lengths},
          {"highest_roots", highest},
          {"positive_roots", pos}};
}

json orbit_entry(const CartanType& t, const OrbitLabel& l, bool minimal, bool ntm) {
  return {{"label", l.to_string()},
          {"diagram", integers(weighted_diagram(t, l).marks)},
          {"dimension", orbit_dimension(t, l)},
          {"minimal", minimal},
          {"next_to_minimal", ntm}};
}

json orbits_list(const CartanType& t) {
  const SimpleType& s = t.simple();
  const OrbitLabel min = minimal_orbit(t);
  const auto ntm = next_to_minimal(t);
  auto is_ntm = [&](const OrbitLabel& l) { return std::find(ntm.begin(), ntm.end(), l) != ntm.end(); };
  json orbits = json::array();
  if (is_classical(s)) {
    for (const auto& p : valid_partitions(t)) {
      if (p.parts.front() == 1) continue;
      const bool ve = is_very_even(s, p);
      for (int variant = 1; variant <= (ve ? 2 : 1); ++variant) {
        OrbitLabel l = OrbitLabel::classical(p, ve);
        l.variant = variant;
        orbits.push_back(orbit_entry(t, l, l == min, is_ntm(l)));
      }
    }
  } else {
    orbits.push_back(orbit_entry(t, min, true, false));
    for (const auto& l : ntm) orbits.push_back(orbit_entry(t, l, false, true));
  }
  return {{"type", t.name()}, {"complete", is_classical(s)}, {"orbits", orbits}};
}

std::string hasse_dot(const HasseDiagram& h) {
  std::ostringstream os;
  os << "digraph \"" << h.type.name() << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << h.nodes[i].to_string() << (h.very_even[i] ? " I,II" : "")
       << "\\ndim " << h.dimensions[i] << "\"];\n";
  for (const auto& [lo, hi] : h.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

json hasse_json(const HasseDiagram& h) {
  json nodes = json::array();
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
    nodes.push_back({{"id", i},
                     {"partition", h.nodes[i].to_string()},
                     {"dimension", h.dimensions[i]},
                     {"very_even", static_cast<bool>(h.very_even[i])}});
  json covers = json::array();
  for (const auto& [lo, hi] : h.covers) covers.push_back({{"lower", lo}, {"upper", hi}});
  return {{"type", h.type.name()}, {"nodes", nodes}, {"covers", covers}};
}

json decomposition(const ChevalleyAlgebra& a, const OrbitAnalysis& an) {
  json eig = json::object();
  for (const auto& [k, m] : an.decomposition.eigenspace_dims) eig[std::to_string(k)] = m;
  json mult = json::object();
  for (const auto& [k, m] : an.decomposition.multiplicities) mult[std::to_string(k)] = m;
  const CentralizerBranching cb =
      branch_adjoint_to_centralizer(a.root_system(), an.diagram.marks);
  return {{"type", a.root_system().cartan_type().name()},
          {"label", an.label.to_string()},
          {"diagram", integers(an.diagram.marks)},
          {"orbit_dim", an.formula_orbit_dim},
          {"representative_orbit_dim", an.representative_orbit_dim},
          {"seed", an.seed},
          {"k_dim", an.triple_centralizer_dim},
          {"grade_zero_type", cb.subsystem.type.components.empty() ? "" : cb.subsystem.type.name()},
          {"grade_zero_torus_dim", cb.subsystem.torus_dim},
          {"eigenspace_dims", eig},
          {"multiplicities", mult},
          {"w_dim", an.decomposition.w_dim},
          {"w_degree", an.bundle_degree},
          {"w_commutant_dim", an.w_commutant_dim},
          {"triple", {{"x", element(an.triple.x)}, {"y", element(an.triple.y)}, {"h", element(an.triple.h)}}}};
}

json branching(const RootSystem& rs, const BranchingResult& b) {
  json comps = json::array();
  for (const auto& c : b.components)
    comps.push_back({{"highest_weight", integers(c.highest_weight)},
                     {"charges", rationals(c.charges)},
                     {"multiplicity", c.multiplicity},
                     {"dimension", c.dimension}});
  json simple = json::array();
  for (const auto& r : b.sub_simple_roots) simple.push_back(integers(r));
  json torus = json::array();
  for (const auto& v : b.torus_basis) torus.push_back(rationals(v));
  return {{"type", rs.cartan_type().name()},
          {"sub_type", b.sub_type.components.empty() ? "" : b.sub_type.name()},
          {"sub_simple_roots", simple},
          {"torus_dim", b.torus_dim},
          {"torus_basis", torus},
          {"parent_dimension", b.parent_dimension},
          {"total_dimension", b.total_dimension()},
          {"components", comps}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomogeneity of adjoint orbits under compact real forms"};
  app.require_subcommand(1);

  SampleConfig cfg;
  bool progress = false;
  app.add_option("--seed", cfg.seed, "Base seed of the orbit sampler")->capture_default_str();
  app.add_option("--samples", cfg.num_samples, "Number of random orbit points")->capture_default_str();
  app.add_flag("--progress", progress, "Report progress on stderr");
  Progress report_progress = [&](const std::string& s) {
    if (progress) std::cerr << "[atlas] " << s << "\n";
  };

  std::string type_text, label, format = "json", cross, sub, weight, data_path = ATLAS_DATA_DIR "/shared_orbits.json";
  int max_rank = 6;

  auto* roots = app.add_subcommand("roots", "Root system summary");
  roots->add_option("type", type_text)->required();

  auto* orbits = app.add_subcommand("orbits", "Nilpotent orbits");
  orbits->require_subcommand(1);
  auto* orbits_list_cmd = orbits->add_subcommand("list", "Orbit labels and dimensions");
  orbits_list_cmd->add_option("type", type_text)->required();
  auto* hasse = orbits->add_subcommand("hasse", "Closure order of a classical type");
  hasse->add_option("type", type_text)->required();
  hasse->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}))->capture_default_str();

  auto* cohom = app.add_subcommand("cohom", "Cohomogeneity of an adjoint orbit");
  cohom->require_subcommand(1);
  auto* cohom_orbit = cohom->add_subcommand("orbit", "Nilpotent orbit");
  cohom_orbit->add_option("type", type_text)->required();
  cohom_orbit->add_option("--label", label, "Partition, 'wdd:<marks>', 'min' or 'ntm'")->required();
  auto* cohom_flag = cohom->add_subcommand("flag", "Semisimple orbit of a painted diagram");
  cohom_flag->add_option("type", type_text)->required();
  cohom_flag->add_option("--cross", cross, "Crossed nodes, 1-based, comma separated")->required();
  auto* cohom_mixed = cohom->add_subcommand("mixed", "Orbit of h + e_{alpha_1} in A_n");
  int mixed_n = 3;
  cohom_mixed->add_option("n", mixed_n)->required();

  auto* decomp = app.add_subcommand("decomp", "sl2 isotypic decomposition of a nilpotent orbit");
  decomp->add_option("type", type_text)->required();
  decomp->add_option("--label", label)->required();

  auto* branch_cmd = app.add_subcommand("branch", "Branch a representation to a subalgebra");
  branch_cmd->add_option("type", type_text)->required();
  branch_cmd->add_option("--sub", sub,
                         "Simple-root nodes of a Levi subalgebra (1-based, e.g. 2,3) or "
                         "'coweight:<marks>' for the centralizer of a coweight, or "
                         "'roots:<root>;<root>;...' in simple-root coordinates")
      ->required();
  branch_cmd->add_option("--weight", weight, "Highest weight in Dynkin labels (default adjoint)");

  auto* classify = app.add_subcommand("classify", "Classification drivers");
  classify->require_subcommand(1);
  auto* c_table1 = classify->add_subcommand("table1", "Next-to-minimal orbits");
  auto* c_minimal = classify->add_subcommand("minimal", "Minimal orbits");
  auto* c_ss = classify->add_subcommand("ss-c2", "Semisimple orbits of cohomogeneity one and two");
  c_ss->add_option("--max-rank", max_rank)->capture_default_str();
  auto* c_t23 = classify->add_subcommand("tables23", "Quaternionic Kaehler and 3-Sasakian tables");
  c_t23->add_option("--data", data_path, "Shared-orbit data file")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*roots) {
      emit(roots_summary(CartanType::parse(type_text)));
    } else if (*orbits_list_cmd) {
      emit(orbits_list(CartanType(simple_type(type_text))));
    } else if (*hasse) {
      const HasseDiagram h = hasse_diagram(CartanType(simple_type(type_text)));
      if (format == "dot") std::cout << hasse_dot(h);
      else emit(hasse_json(h));
    } else if (*cohom_orbit) {
      const CartanType t(simple_type(type_text));
      const ChevalleyAlgebra a{RootSystem(t)};
      const OrbitLabel l = parse_orbit_label(t, label);
      json out = {{"type", t.name()}, {"label", l.to_string()},
                  {"diagram", integers(weighted_diagram(t, l).marks)}};
      out.update(report(cohom_nilpotent(a, l, cfg)));
      emit(out);
    } else if (*cohom_flag) {
      const CartanType t(simple_type(type_text));
      const ChevalleyAlgebra a{RootSystem(t)};
      const PaintedDiagram pd(t, one_based_nodes(cross, t.rank()));
      json out = {{"diagram", pd.to_string()},
                  {"kostant_summands", kostant_summands(a.root_system(), pd).num_summands}};
      out.update(report(flag_cohom(a, pd, cfg)));
      emit(out);
    } else if (*cohom_mixed) {
      json out = {{"type", "A" + std::to_string(mixed_n)}};
      out.update(report(mixed_orbit_cohom(mixed_n, cfg)));
      emit(out);
    } else if (*decomp) {
      const CartanType t(simple_type(type_text));
      const ChevalleyAlgebra a{RootSystem(t)};
      emit(decomposition(a, analyze_orbit(a, parse_orbit_label(t, label), cfg.seed)));
    } else if (*branch_cmd) {
      const CartanType t = CartanType::parse(type_text);
      const RootSystem rs(t);
      const Weight hw = weight.empty() ? adjoint_highest_weight(rs) : Weight(parse_list(weight));
      if (sub.rfind("coweight:", 0) == 0) {
        const auto marks = parse_list(sub.substr(9));
        const CentralizerBranching cb = branch_adjoint_to_centralizer(rs, IntVector(marks.begin(), marks.end()));
        BranchingResult b = weight.empty() ? cb.branching : branch(rs, cb.subsystem.simple_roots, hw);
        json out = branching(rs, b);
        out["marks"] = integers(cb.marks);
        out["h"] = rationals(cb.h.coords);
        out["centralizer_dim"] = cb.subsystem.algebra_dim(rs.rank());
        emit(out);
      } else if (sub.rfind("roots:", 0) == 0) {
        std::vector<Root> simple;
        std::istringstream in(sub.substr(6));
        for (std::string part; std::getline(in, part, ';');) {
          const auto r = parse_list(part);
          simple.emplace_back(r.begin(), r.end());
        }
        emit(branching(rs, branch(rs, simple, hw)));
      } else {
        std::vector<Root> simple;
        for (int k : one_based_nodes(sub, rs.rank())) {
          Root r(static_cast<std::size_t>(rs.rank()), 0);
          r[static_cast<std::size_t>(k)] = 1;
          simple.push_back(r);
        }
        emit(branching(rs, branch(rs, simple, hw)));
      }
    } else if (*c_table1) {
      const auto t = reproduce_table1(cfg, table1_types(), report_progress);
      emit(table(t));
      return t.all_match() ? 0 : 1;
    } else if (*c_minimal) {
      const auto t = minimal_orbit_table(minimal_orbit_types(), cfg, report_progress);
      emit(table(t));
      return t.all_match() ? 0 : 1;
    } else if (*c_ss) {
      const auto r = reproduce_thm_ss_c2(max_rank, cfg, report_progress);
      json one = json::array(), two = json::array();
      for (const auto& pd : r.target_one) one.push_back(pd.to_string());
      for (const auto& pd : r.target_two) two.push_back(pd.to_string());
      json out = table(r.table);
      out["max_rank"] = max_rank;
      out["cohomogeneity_one"] = one;
      out["cohomogeneity_two"] = two;
      emit(out);
      return r.table.all_match() ? 0 : 1;
    } else if (*c_t23) {
      const auto pairs = load_shared_orbit_pairs(data_path);
      const auto minimal = minimal_orbit_table(minimal_orbit_types(), cfg, report_progress);
      const auto t1 = reproduce_table1(cfg, table1_types(), report_progress);
      const auto t23 = assemble_tables_2_3(pairs, cfg, report_progress);
      const bool ok = minimal.all_match() && t1.all_match() && t23.table2.all_match() &&
                      t23.table3.all_match();
      emit({{"all_match", ok},
            {"table2", table(t23.table2)},
            {"table3", table(t23.table3)},
            {"supporting", {{"minimal_orbits", table(minimal)}, {"table1", table(t1)}}}});
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "atlas: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
