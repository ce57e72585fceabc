#include "finq/json_io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "finq/errors.hpp"
#include "finq/permutation.hpp"

namespace finq::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing JSON field \"") + key + "\"");
  return j.at(key);
}

std::size_t to_size(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw InputError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

json complex_pair(const Cyclotomic& x) {
  const auto z = to_float(x);
  return json::array({z.real(), z.imag()});
}

template <typename Grid, typename Fn>
json grid_to_json(const Grid& g, Fn&& f) {
  json rows = json::array();
  for (const auto& row : g) {
    json r = json::array();
    for (const auto& x : row) r.push_back(f(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

const json& square3(const json& j) {
  const auto& e = field(j, "entries");
  if (!e.is_array() || e.size() != 3) throw InputError("table entries must be a 3x3 array");
  for (const auto& row : e) {
    if (!row.is_array() || row.size() != 3) throw InputError("table entries must be a 3x3 array");
  }
  return e;
}

}  // namespace

json to_json(const Rational& q) { return finq::to_string(q); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("rational must be a string \"p/q\" or an integer");
}

json to_json(const Cyclotomic& x, bool with_float) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
  json out{{"conductor", x.conductor()}, {"coeffs", std::move(coeffs)}};
  if (with_float) out["float"] = complex_pair(x);
  return out;
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return Cyclotomic(rational_from_json(j));
  const auto n = to_size(field(j, "conductor"), "conductor");
  if (n == 0 || n > (1u << 20)) throw InputError("conductor out of range");
  const auto& cs = field(j, "coeffs");
  if (!cs.is_array()) throw InputError("coeffs must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : cs) coeffs.push_back(rational_from_json(c));
  return minimize_conductor(Cyclotomic::from_reduced(static_cast<std::uint32_t>(n), std::move(coeffs)));
}

json to_json(const CycMatrix& m, bool with_float) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j), with_float));
    rows.push_back(std::move(r));
  }
  return {{"cols", m.cols()}, {"entries", std::move(rows)}, {"rows", m.rows()}};
}

CycMatrix matrix_from_json(const json& j) {
  const auto rows = to_size(field(j, "rows"), "rows");
  const auto cols = to_size(field(j, "cols"), "cols");
  const auto& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows) throw InputError("entries do not match the row count");
  CycMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!e[i].is_array() || e[i].size() != cols) throw InputError("entries do not match the column count");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = cyclotomic_from_json(e[i][k]);
  }
  return m;
}

json classes_to_json(const FiniteGroup& group, const ClassDecomposition& classes) {
  json out = json::array();
  for (const auto& c : classes.classes) {
    out.push_back({{"order", c.element_order},
                   {"representative", to_cycles(group.element(c.representative()))},
                   {"size", c.size()}});
  }
  return out;
}

json group_report(const FiniteGroup& group, const ClassDecomposition& classes, const ClassAlgebra& algebra) {
  json gens = json::array();
  for (auto g : group.generators()) gens.push_back(to_cycles(group.element(g)));
  json coeffs = json::array();
  for (std::size_t i = 0; i < classes.count(); ++i) {
    json a = json::array();
    for (std::size_t k = 0; k < classes.count(); ++k) {
      json b = json::array();
      for (std::size_t l = 0; l < classes.count(); ++l) b.push_back(algebra(i, k, l));
      a.push_back(std::move(b));
    }
    coeffs.push_back(std::move(a));
  }
  return {{"class_coefficients", std::move(coeffs)},
          {"classes", classes_to_json(group, classes)},
          {"degree", group.degree()},
          {"exponent", exponent(group)},
          {"generators", std::move(gens)},
          {"order", group.order()}};
}

json to_json(const CharacterTable& table, const FiniteGroup& group, bool with_float) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_json(x, with_float));
    rows.push_back(std::move(r));
  }
  return {{"classes", classes_to_json(group, table.classes)},
          {"dimensions", table.dimensions},
          {"exponent", table.exponent},
          {"order", table.group_order},
          {"prime", table.prime},
          {"rows", std::move(rows)}};
}

json to_json(const Decomposition& dec, const FiniteGroup& group, bool with_float) {
  json blocks = json::array();
  for (const auto& b : dec.blocks) {
    blocks.push_back({{"character", b.character},
                      {"dimension", b.dimension},
                      {"multiplicity", b.multiplicity},
                      {"offset", b.offset}});
  }
  return {{"block_sizes", dec.block_sizes()},
          {"blocks", std::move(blocks)},
          {"character_table", to_json(dec.table, group, with_float)},
          {"degree", dec.transform.rows()},
          {"transform", to_json(dec.transform, with_float)}};
}

json to_json(const NatState& n) { return json(n); }

NatState nat_state_from_json(const json& j) {
  if (!j.is_array()) throw InputError("state must be an integer array");
  NatState out;
  for (const auto& x : j) out.push_back(to_size(x, "state component"));
  return out;
}

json to_json(const std::vector<InterferencePair>& pairs) {
  json out = json::array();
  for (const auto& p : pairs) out.push_back({{"m", p.m}, {"n", p.n}});
  return out;
}

json to_json(const MixTable& t) {
  json out;
  if (t.is_exact()) {
    out["provenance"] = "exact";
    json rows = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
      json r = json::array();
      for (std::size_t k = 0; k < 3; ++k) r.push_back(to_json(t.exact_entry(i, k)));
      rows.push_back(std::move(r));
    }
    out["entries"] = std::move(rows);
  } else {
    out["provenance"] = "measured";
    out["source"] = t.source();
    json rows = json::array();
    for (std::size_t i = 0; i < 3; ++i) rows.push_back({t.entry(i, 0), t.entry(i, 1), t.entry(i, 2)});
    out["entries"] = std::move(rows);
  }
  return out;
}

json to_json(const PatternReport& r) {
  return {{"bimaximal", r.bimaximal}, {"e3_absent", r.e3_absent}, {"trimaximal", r.trimaximal}};
}

json to_json(const Deviation& d) {
  json out{{"value", d.value}};
  if (d.exact) out["exact"] = to_json(*d.exact);
  return out;
}

MixTable mix_table_from_json(const json& j) {
  const auto& e = square3(j);
  if (j.contains("provenance") && j.at("provenance") == "exact") {
    RationalGrid grid;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 3; ++k) grid[i][k] = rational_from_json(e[i][k]);
    }
    return MixTable::exact(grid);
  }
  RealGrid grid;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (!e[i][k].is_number()) throw InputError("measured entries must be numbers");
      grid[i][k] = e[i][k].get<double>();
    }
  }
  const std::string source = j.contains("source") && j.at("source").is_string() ? j.at("source").get<std::string>() : "";
  const std::string kind = j.contains("kind") ? j.at("kind").get<std::string>() : "magnitudes";
  if (kind == "magnitudes") return moduli_squared(grid, source);
  if (kind == "moduli_squared") return MixTable::measured(grid, source);
  throw InputError("unknown table kind \"" + kind + "\"");
}

MixTable mix_table_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return mix_table_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace finq::io
