#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "evenlat/evenlat.hpp"

using namespace evenlat;

namespace {

struct Options {
  bool json = false;
  long budget = 10000;
  std::string data_dir = EVENLAT_DATA_DIR;
};

int emit(const Options& opt, const Json& j, const std::string& text) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
  return 0;
}

Lattice load_lattice(const std::string& path) { return lattice_from_json(read_json_file(path)); }

std::string type_line(const RootSystemType& t) { return t.to_string() + " (" + std::to_string(t.root_count()) + " roots)"; }

int cmd_genus(const Options& opt, const std::string& path) {
  Lattice l = load_lattice(path);
  GenusSymbol g = genus_symbol(l);
  FqfSymbol q = normalize_symbol(g.discriminant());
  std::string text = to_string(q) + "\n";
  if (to_string(q, true) != to_string(q)) text += "signed: " + to_string(q, true) + "\n";
  text += "signature: (" + std::to_string(g.signature.plus) + "," + std::to_string(g.signature.minus) + ")\n";
  return emit(opt, genus_json(g), text);
}

int cmd_discform(const Options& opt, const std::string& path) {
  Lattice l = load_lattice(path);
  FiniteQuadraticForm f = discriminant_form(l);
  std::string text = "invariants:";
  for (const auto& d : f.orders) text += " " + d.get_str();
  if (f.trivial()) text += " (trivial)";
  text += "\n";
  for (std::size_t i = 0; i < f.ngens(); ++i) text += "q(g" + std::to_string(i + 1) + ") = " + f.q[i].get_str() + "\n";
  text += "symbol: " + to_string(normalize_symbol(fqf_symbol(f))) + "\n";
  return emit(opt, form_json(f), text);
}

int cmd_roots(const Options& opt, const std::string& path) {
  RootSystem rs = root_system(load_lattice(path));
  Json roots = Json::array();
  for (const auto& r : rs.roots) roots.push_back(vector_json(r));
  Json j{{"type", rs.type.to_string()}, {"root_count", rs.roots.size()}, {"roots", roots},
         {"simple_roots", matrix_json(rs.simple.transpose())}};
  return emit(opt, j, type_line(rs.type) + "\n");
}

int cmd_count(const Options& opt, const std::string& path, long norm) {
  auto v = vectors_of_norm(load_lattice(path), Int(norm));
  Json vs = Json::array();
  for (const auto& x : v) vs.push_back(vector_json(x));
  return emit(opt, Json{{"norm", norm}, {"count", v.size()}, {"vectors", vs}}, std::to_string(v.size()) + "\n");
}

int cmd_complement(const Options& opt, const std::string& path) {
  Sublattice c = orthogonal_complement(sublattice_from_json(read_json_file(path)));
  std::ostringstream ss;
  ss << "rank " << c.rank() << "\n" << c.gram();
  return emit(opt, sublattice_json(c), ss.str() + "\n");
}

int cmd_saturate(const Options& opt, const std::string& path) {
  Sublattice s = saturate(sublattice_from_json(read_json_file(path)));
  std::ostringstream ss;
  ss << "basis (columns)\n" << s.basis;
  return emit(opt, sublattice_json(s), ss.str() + "\n");
}

Json niemeier_report_json(const NiemeierReport& r) {
  return Json{{"even", r.even}, {"unimodular", r.unimodular}, {"rank24", r.rank24}, {"root_count", r.root_count},
              {"type", r.type.to_string()}, {"ok", r.ok()}};
}

std::string niemeier_report_text(const NiemeierReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  return std::string("even: ") + yn(r.even) + "\nunimodular: " + yn(r.unimodular) + "\nrank 24: " + yn(r.rank24) +
         "\nroots: " + type_line(r.type) + "\n" + (r.ok() ? "all checks pass\n" : "checks FAILED\n");
}

int cmd_niemeier_build(const Options& opt, int j) {
  NiemeierLattice nl = build_niemeier(j);
  Json out{{"j", j}, {"type", nl.type.to_string()}, {"gram", matrix_json(nl.lattice.gram())},
           {"simple_roots", matrix_json(nl.simple_roots.transpose())}};
  std::ostringstream ss;
  ss << "N_" << j << ": " << type_line(nl.type) << "\n" << nl.lattice.gram();
  return emit(opt, out, ss.str() + "\n");
}

int cmd_niemeier_verify(const Options& opt, const std::string& what) {
  Lattice l;
  bool is_index = !what.empty() && std::all_of(what.begin(), what.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (is_index)
    l = build_niemeier(std::stoi(what)).lattice;
  else
    l = load_lattice(what);
  NiemeierReport r = verify_niemeier(l);
  emit(opt, niemeier_report_json(r), niemeier_report_text(r));
  return r.ok() ? 0 : 1;
}

int cmd_marking(const Options& opt, const std::string& path) {
  MarkingResult r = marking_pipeline(marking_from_json(read_json_file(path)));
  std::string text = "rk S_G = " + std::to_string(r.s_g.rank());
  if (r.s_g.rank()) text += ", q_S_G = " + to_string(normalize_symbol(r.s_g_genus.discriminant()));
  text += "\nrk S = " + std::to_string(r.s.rank()) + ", q_S = " + to_string(normalize_symbol(r.s_genus.discriminant())) +
          "\ncomplement: rank " + std::to_string(r.complement.rank()) + ", roots " + r.complement_roots.to_string() +
          ", norm -4 vectors " + std::to_string(r.minus4_count) + "\n";
  for (const auto& w : r.warnings) text += "warning: " + w + "\n";
  return emit(opt, marking_result_json(r), text);
}

int cmd_aut(const Options& opt, const std::string& path) {
  IsometryGroup g = isometry_group(load_lattice(path));
  Json gens = Json::array();
  for (const auto& m : g.generators) gens.push_back(matrix_json(m));
  Json j{{"order", int_json(g.order)}, {"proper_order", int_json(g.proper_order)}, {"weyl_order", int_json(g.weyl_order)},
         {"generators", gens}};
  return emit(opt, j,
              "|O| = " + g.order.get_str() + "\n|O+| = " + g.proper_order.get_str() + "\n|W| = " + g.weyl_order.get_str() + "\n");
}

int cmd_oq(const Options& opt, const std::string& path, const std::string& symbol) {
  FiniteQuadraticForm f = symbol.empty() ? discriminant_form(load_lattice(path)) : materialize(parse_symbol(symbol));
  FqfGroupReport r = oq_group(f, opt.budget);
  Json j{{"order", int_json(r.order)}, {"form", form_json(f)}};
  return emit(opt, j, "|O(q)| = " + r.order.get_str() + "\n");
}

int cmd_ms(const Options& opt, const std::string& path) {
  StrongCount s = strong_component_count(load_lattice(path), opt.budget);
  Json j{{"Oq", int_json(s.oq_order)}, {"O", int_json(s.o_order)}, {"O_plus", int_json(s.proper_order)},
         {"W", int_json(s.weyl_order)}, {"W_plus", int_json(s.weyl_plus)}, {"Ms", int_json(s.ms)}};
  return emit(opt, j,
              "|O(q_T)| = " + s.oq_order.get_str() + "\n|O(T)| = " + s.o_order.get_str() + "\n|W(T)| = " +
                  s.weyl_order.get_str() + "\nM_s = " + s.ms.get_str() + "\n");
}

// Subgroup spec for dcosets: "trivial", "full", "O", "O+" or an explicit list of maps.
std::vector<FormMap> subgroup_generators(const Json& spec, const Lattice& l, const FiniteQuadraticForm& f,
                                         const DiscriminantData& data, const Int& budget) {
  if (spec.is_array()) {
    std::vector<FormMap> out;
    for (const auto& m : spec) out.push_back(form_map_from_json(m));
    return out;
  }
  if (!spec.is_string()) throw InvalidInput("subgroup must be a list of maps or one of trivial, full, O, O+");
  std::string s = spec.get<std::string>();
  if (s == "trivial") return {};
  if (s == "full") return oq_group(f, budget).elements;
  if (s == "O" || s == "O+") {
    IsometryGroup g = isometry_group(l);
    std::vector<FormMap> out;
    for (const auto& e : g.elements)
      if (s == "O" || determinant(e) == 1) out.push_back(discriminant_action(l, data, e));
    return out;
  }
  throw InvalidInput("unknown subgroup '" + s + "'");
}

int cmd_dcosets(const Options& opt, const std::string& path) {
  Json in = read_json_file(path);
  if (!in.is_object() || !in.contains("lattice")) throw InvalidInput("dcosets JSON needs \"lattice\", \"a\" and \"b\"");
  Lattice l = lattice_from_json(in["lattice"]);
  DiscriminantData data = discriminant_data(l);
  const FiniteQuadraticForm& f = data.form;
  auto a = subgroup_generators(in.value("a", Json("trivial")), l, f, data, opt.budget);
  auto b = subgroup_generators(in.value("b", Json("trivial")), l, f, data, opt.budget);
  Int n = double_coset_count(f, a, b, opt.budget);
  return emit(opt, Json{{"double_cosets", int_json(n)}}, n.get_str() + "\n");
}

int cmd_table_check(const Options& opt, const std::string& suite) {
  std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  bool ok = true;
  Json all = Json::array();
  std::string text;
  for (const auto& s : suites) {
    VerificationReport r = run_suite(s, opt.data_dir, opt.budget);
    ok = ok && r.ok();
    all.push_back(r.to_json());
    text += r.to_text();
  }
  emit(opt, suites.size() == 1 ? all[0] : all, text);
  return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Even lattices, discriminant forms, genus symbols and Niemeier markings"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_option("--budget", opt.budget, "Enumeration ceiling for finite-form groups")->check(CLI::PositiveNumber);
  app.add_option("--data-dir", opt.data_dir, "Directory holding the expected-table JSON files");

  std::string file, symbol, what, suite;
  long norm = 0;
  int j = 0;
  std::function<int()> run;

  auto with_file = [&](const std::string& name, const std::string& help, std::function<int()> fn) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("file", file, "Input JSON")->required();
    sc->callback([&run, fn] { run = fn; });
    return sc;
  };
  with_file("genus", "Genus symbol of an even lattice", [&] { return cmd_genus(opt, file); });
  with_file("discform", "Discriminant quadratic form", [&] { return cmd_discform(opt, file); });
  with_file("roots", "Root system of a definite lattice", [&] { return cmd_roots(opt, file); });
  with_file("count", "Vectors of a given norm in a definite lattice", [&] { return cmd_count(opt, file, norm); })
      ->add_option("--norm", norm, "Norm to enumerate")
      ->required();
  with_file("complement", "Orthogonal complement of a sublattice", [&] { return cmd_complement(opt, file); });
  with_file("saturate", "Primitive closure of a sublattice", [&] { return cmd_saturate(opt, file); });
  with_file("marking", "Marking pipeline on a Niemeier lattice", [&] { return cmd_marking(opt, file); });
  with_file("aut", "Isometry group of a definite lattice", [&] { return cmd_aut(opt, file); });
  with_file("ms", "Strong component count M_s for a positive definite rank-3 lattice", [&] { return cmd_ms(opt, file); });
  with_file("dcosets", "Double cosets A\\O(q)/B", [&] { return cmd_dcosets(opt, file); });

  auto* oq = app.add_subcommand("oq", "Order of O(q) for a lattice's discriminant form or a symbol");
  oq->add_option("file", file, "Lattice JSON");
  oq->add_option("--symbol", symbol, "Discriminant form symbol instead of a lattice");
  oq->callback([&] {
    if (file.empty() == symbol.empty()) throw CLI::ValidationError("oq", "give exactly one of a file or --symbol");
    run = [&] { return cmd_oq(opt, file, symbol); };
  });

  auto* nm = app.add_subcommand("niemeier", "Rooted Niemeier lattices");
  nm->require_subcommand(1);
  auto* nb = nm->add_subcommand("build", "Build N_j");
  nb->add_option("j", j, "Index 1..23")->required();
  nb->callback([&] { run = [&] { return cmd_niemeier_build(opt, j); }; });
  auto* nv = nm->add_subcommand("verify", "Verify N_j or a lattice file");
  nv->add_option("what", what, "Index 1..23 or lattice JSON")->required();
  nv->callback([&] { run = [&] { return cmd_niemeier_verify(opt, what); }; });

  auto* tc = app.add_subcommand("table-check", "Verify the embedded expected tables");
  tc->add_option("suite", suite, "Suite name or 'all'")
      ->required()
      ->check(CLI::IsMember([] {
        auto v = suite_names();
        v.push_back("all");
        return v;
      }()));
  tc->callback([&] { run = [&] { return cmd_table_check(opt, suite); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return run();
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  }
}
