#include "cstar/harness/descriptor.hpp"

#include <cmath>
#include <fstream>

namespace cstar::harness {

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x == 0.0 ? 0.0 : x;
  double magnitude = std::pow(10.0, digits - 1 - int(std::floor(std::log10(std::abs(x)))));
  return std::round(x * magnitude) / magnitude;
}

json matrix_to_json(const Mat& m, int significant_digits) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      double re = m(r, c).real(), im = m(r, c).imag();
      if (significant_digits > 0) {
        re = round_significant(re, significant_digits);
        im = round_significant(im, significant_digits);
      }
      row.push_back(json::array({re, im}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a matrix");
  int rows = int(j.size());
  int cols = int(j[0].size());
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || int(j[r].size()) != cols)
      throw InputError(where + ": ragged matrix rows");
    for (int c = 0; c < cols; ++c) {
      const json& e = j[r][c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw InputError(where + ": entries must be [re, im] pairs");
      m(r, c) = Cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

json element_to_json(const AlgebraElement& a, int significant_digits) {
  json blocks = json::array();
  for (int i = 0; i < a.shape().blocks(); ++i)
    blocks.push_back(matrix_to_json(a.block(i), significant_digits));
  return json{{"blocks", blocks}};
}

SystemDescriptor SystemDescriptor::from_json(const json& j) {
  SystemDescriptor d;
  if (!j.is_object()) throw InputError("descriptor: expected a JSON object");
  if (!j.contains("blocks") || !j["blocks"].is_array())
    throw InputError("blocks: expected an array of positive integers");
  for (const auto& b : j["blocks"]) {
    if (!b.is_number_integer() || b.get<int>() < 1)
      throw InputError("blocks: expected an array of positive integers");
    d.blocks.push_back(b.get<int>());
  }
  if (!j.contains("group") || !j["group"].is_object())
    throw InputError("group: expected an object with \"abelian\" or \"table\"");
  const json& g = j["group"];
  if (g.contains("abelian")) {
    std::vector<int> factors;
    for (const auto& f : g["abelian"]) {
      if (!f.is_number_integer() || f.get<int>() < 2)
        throw InputError("group.abelian: factors must be integers >= 2");
      factors.push_back(f.get<int>());
    }
    d.abelian_factors = factors;
  } else if (g.contains("table")) {
    std::vector<std::vector<int>> table;
    for (const auto& row : g["table"]) {
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw InputError("group.table: entries must be integers");
        r.push_back(v.get<int>());
      }
      table.push_back(std::move(r));
    }
    d.table = table;
  } else {
    throw InputError("group: expected an object with \"abelian\" or \"table\"");
  }
  if (!j.contains("action") || !j["action"].is_object())
    throw InputError("action: expected an object keyed by element index");
  for (const auto& [key, val] : j["action"].items()) {
    int g_idx;
    try {
      g_idx = std::stoi(key);
    } catch (...) {
      throw InputError("action." + key + ": key must be an element index");
    }
    Entry e;
    const std::string where = "action." + key;
    if (!val.is_object() || !val.contains("perm") || !val.contains("unitary"))
      throw InputError(where + ": expected {\"perm\":..., \"unitary\":...}");
    for (const auto& p : val["perm"]) {
      if (!p.is_number_integer()) throw InputError(where + ".perm: entries must be integers");
      e.perm.push_back(p.get<int>());
    }
    int bi = 0;
    for (const auto& u : val["unitary"])
      e.unitary.push_back(matrix_from_json(u, where + ".unitary[" + std::to_string(bi++) + "]"));
    d.action.emplace(g_idx, std::move(e));
  }
  return d;
}

json SystemDescriptor::to_json() const {
  json j;
  j["blocks"] = blocks;
  if (abelian_factors)
    j["group"] = json{{"abelian", *abelian_factors}};
  else
    j["group"] = json{{"table", *table}};
  json act = json::object();
  for (const auto& [g, e] : action) {
    json unitary = json::array();
    for (const auto& u : e.unitary) unitary.push_back(matrix_to_json(u));
    act[std::to_string(g)] = json{{"perm", e.perm}, {"unitary", unitary}};
  }
  j["action"] = act;
  return j;
}

SystemDescriptor SystemDescriptor::from_action(const GroupAction& action) {
  SystemDescriptor d;
  d.blocks = action.shape().dims;
  if (action.group().abelian())
    d.abelian_factors = action.group().abelian()->factors();
  else
    d.table = action.group().table();
  for (int g = 0; g < action.group().order(); ++g) {
    if (g == action.group().identity()) continue;
    Entry e;
    e.perm = action.alpha(g).perm();
    for (int i = 0; i < action.shape().blocks(); ++i) e.unitary.push_back(action.alpha(g).unitary(i));
    d.action.emplace(g, std::move(e));
  }
  return d;
}

GroupAction SystemDescriptor::build(const Tolerance& tol) const {
  std::shared_ptr<const FiniteGroup> group;
  try {
    if (abelian_factors)
      group = std::make_shared<FiniteGroup>(
          abelian_factors->empty() ? FiniteGroup::trivial()
                                   : FiniteGroup::from_abelian_factors(*abelian_factors));
    else if (table)
      group = std::make_shared<FiniteGroup>(FiniteGroup::from_table(*table));
    else
      throw InputError("group: missing");
  } catch (const InputError& e) {
    throw InputError(std::string("group: ") + e.what());
  }

  BlockShape shape;
  try {
    shape = BlockShape(blocks);
  } catch (const Error& e) {
    throw InputError(std::string("blocks: ") + e.what());
  }

  std::map<int, Automorphism> generators;
  for (const auto& [g, e] : action) {
    if (g < 0 || g >= group->order())
      throw InputError("action." + std::to_string(g) + ": element index out of range");
    try {
      generators.emplace(g, Automorphism(shape, e.perm, e.unitary, tol));
    } catch (const Error& err) {
      throw InputError("action." + std::to_string(g) + ": " + err.what());
    }
  }
  try {
    return GroupAction::from_generators(group, shape, generators, tol);
  } catch (const InputError&) {
    throw;
  } catch (const Error& err) {
    throw InputError(std::string("action: ") + err.what());
  }
}

SystemDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  return SystemDescriptor::from_json(j);
}

void save_descriptor(const SystemDescriptor& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open output file: " + path);
  out << d.to_json().dump(1) << "\n";
}

}  // namespace cstar::harness
