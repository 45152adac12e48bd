#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "evenlat/moduli.hpp"
#include "evenlat/niemeier.hpp"

namespace evenlat {

using Json = nlohmann::json;

/// Parses a JSON document; syntax errors become InvalidInput carrying the byte offset.
inline Json parse_json_text(const std::string& text, const std::string& origin = "<input>") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

inline Int json_int(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    Int x;
    if (x.set_str(v.get<std::string>(), 10) == 0) return x;
  }
  throw InvalidInput(where + ": expected an integer");
}

inline Json int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline IntMatrix matrix_from_json(const Json& v, const std::string& where = "matrix") {
  if (!v.is_array()) throw InvalidInput(where + ": expected an array of rows");
  const std::size_t r = v.size();
  std::size_t c = r == 0 ? 0 : (v[0].is_array() ? v[0].size() : 0);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!v[i].is_array() || v[i].size() != c) throw InvalidInput(where + ": row " + std::to_string(i) + " has the wrong length");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = json_int(v[i][j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

inline Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

/// Lattice document: `{"gram": [[...]], "names": [...]}` or a bare Gram array.
inline Lattice lattice_from_json(const Json& v) {
  if (v.is_array()) return Lattice(matrix_from_json(v, "gram"));
  if (!v.is_object() || !v.contains("gram")) throw InvalidInput("lattice JSON needs a \"gram\" field");
  IntMatrix g = matrix_from_json(v["gram"], "gram");
  std::vector<std::string> names;
  if (v.contains("names")) names = v["names"].get<std::vector<std::string>>();
  return Lattice(g, names);
}

inline Json lattice_json(const Lattice& l) { return Json{{"gram", matrix_json(l.gram())}}; }

/// Sublattice document: ambient lattice plus basis columns given as rows of coordinates.
inline Sublattice sublattice_from_json(const Json& v) {
  if (!v.is_object() || !v.contains("ambient") || !v.contains("vectors"))
    throw InvalidInput("sublattice JSON needs \"ambient\" and \"vectors\"");
  Lattice amb = lattice_from_json(v["ambient"]);
  IntMatrix rows = matrix_from_json(v["vectors"], "vectors");
  if (rows.rows() > 0 && rows.cols() != amb.rank()) throw InvalidInput("vectors: wrong coordinate count");
  if (rows.rows() == 0) return Sublattice{amb, IntMatrix(amb.rank(), 0)};
  return Sublattice{amb, rows.transpose()};
}

inline Json sublattice_json(const Sublattice& s) {
  return Json{{"ambient", lattice_json(s.ambient)}, {"vectors", matrix_json(s.basis.transpose())}, {"gram", matrix_json(s.gram())}};
}

inline Json inertia_json(const Inertia& in) { return Json::array({in.plus, in.minus}); }

inline Json genus_json(const GenusSymbol& g) {
  return Json{{"signature", inertia_json(g.signature)},
              {"rank", g.rank()},
              {"discriminant", to_string(normalize_symbol(g.discriminant()))},
              {"discriminant_signed", to_string(normalize_symbol(g.discriminant()), true)}};
}

inline Json form_json(const FiniteQuadraticForm& f) {
  Json gens = Json::array();
  for (const auto& o : f.orders) gens.push_back(int_json(o));
  Json q = Json::array(), b = Json::array();
  for (std::size_t i = 0; i < f.ngens(); ++i) {
    q.push_back(f.q[i].get_str());
    Json row = Json::array();
    for (std::size_t j = 0; j < f.ngens(); ++j) row.push_back(f.b(i, j).get_str());
    b.push_back(row);
  }
  return Json{{"invariants", gens}, {"q", q}, {"b", b}, {"symbol", to_string(normalize_symbol(fqf_symbol(f)))}};
}

inline Orbits orbits_from_json(const Json& v) {
  if (!v.is_array()) throw InvalidInput("orbits must be an array of arrays");
  Orbits o;
  for (const auto& row : v) {
    if (!row.is_array()) throw InvalidInput("orbits must be an array of arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InvalidInput("orbit entries must be integers");
      r.push_back(x.get<int>());
    }
    o.push_back(r);
  }
  return o;
}

inline MarkingInput marking_from_json(const Json& v) {
  if (!v.is_object()) throw InvalidInput("marking JSON must be an object");
  MarkingInput m;
  if (v.contains("j")) m.j = v["j"].get<int>();
  if (!v.contains("orbits")) throw InvalidInput("marking JSON needs \"orbits\"");
  m.orbits = orbits_from_json(v["orbits"]);
  if (!v.contains("alpha") || !v["alpha"].is_number_integer()) throw InvalidInput("marking JSON needs an integer \"alpha\"");
  m.alpha = v["alpha"].get<int>();
  return m;
}

inline Json marking_json(const MarkingInput& in) { return Json{{"j", in.j}, {"orbits", in.orbits}, {"alpha", in.alpha}}; }

inline Json marking_result_json(const MarkingResult& r) {
  Json out;
  out["s_g_basis"] = matrix_json(r.s_g.basis.transpose());
  out["s_g_rank"] = r.s_g.rank();
  out["s_g_genus"] = r.s_g.rank() ? genus_json(r.s_g_genus) : Json(nullptr);
  out["s_basis"] = matrix_json(r.s.basis.transpose());
  out["s_genus"] = genus_json(r.s_genus);
  out["complement_basis"] = matrix_json(r.complement.basis.transpose());
  out["complement_rank"] = r.complement.rank();
  out["complement_roots"] = r.complement_roots.to_string();
  out["minus4_count"] = r.minus4_count;
  out["s_g_root_free"] = r.s_g_root_free;
  out["rank_relation"] = r.rank_relation;
  out["complement_form_matches"] = r.complement_form_matches;
  out["warnings"] = r.warnings;
  return out;
}

inline Json form_map_json(const FormMap& m) { return Json(m); }

inline FormMap form_map_from_json(const Json& v) {
  if (!v.is_array()) throw InvalidInput("a form map is an array of generator images");
  return v.get<FormMap>();
}

} // namespace evenlat
