#include "hcot/io.hpp"

#include <fstream>
#include <sstream>

#include "hcot/errors.hpp"

namespace hcot {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& msg) {
  throw InputError(where + ": " + msg);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

Mat matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const PrimeField& f,
                     const std::string& where) {
  Mat m(rows, cols, f);
  if (!j.is_array()) bad(where, "expected a matrix (list of rows)");
  if (rows == 0 || cols == 0) {
    for (const auto& r : j)
      if (!r.is_array() || !r.empty()) bad(where, "expected an empty matrix for this shape");
    if (rows == 0 && !j.empty()) bad(where, "expected 0 rows");
    if (cols == 0 && !j.empty() && j.size() != rows) bad(where, "wrong number of rows");
    return m;
  }
  if (j.size() != rows)
    bad(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string w = where + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != cols)
      bad(w, "expected a row of " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.reduce(as_int(j[r][c], w + "/" + std::to_string(c)));
  }
  return m;
}

json matrix_to_json(const Mat& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    a.push_back(row);
  }
  return a;
}

template <class F>
auto wrap_library(const std::string& where, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": malformed JSON");
  }
}

AlgebraPtr algebra_from_json(const json& j, const std::string& where) {
  auto p = as_int(field(j, "p", where), where + "/p");
  if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p)))
    bad(where + "/p", "p must be a prime below 65536");
  auto bound = as_int(field(j, "L", where), where + "/L");
  if (bound < 1 || bound > 64) bad(where + "/L", "L must be between 1 and 64");
  auto nv = as_int(field(j, "vertices", where), where + "/vertices");
  if (nv < 1 || nv > 256) bad(where + "/vertices", "vertex count must be between 1 and 256");
  Quiver q{static_cast<int>(nv), {}};
  const json& arrows = field(j, "arrows", where);
  if (!arrows.is_array()) bad(where + "/arrows", "expected a list");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string w = where + "/arrows/" + std::to_string(i);
    const json& a = arrows[i];
    if (!a.is_array() || a.size() != 3) bad(w, "expected [id, source, target]");
    Arrow ar{static_cast<int>(as_int(a[0], w)), static_cast<int>(as_int(a[1], w)),
             static_cast<int>(as_int(a[2], w))};
    if (ar.source < 0 || ar.source >= nv || ar.target < 0 || ar.target >= nv)
      bad(w, "vertex out of range");
    for (const auto& o : q.arrows)
      if (o.id == ar.id) bad(w, "duplicate arrow id " + std::to_string(ar.id));
    q.arrows.push_back(ar);
  }
  std::vector<Relation> rels;
  auto rj = j.find("relations");
  if (rj != j.end()) {
    if (!rj->is_array()) bad(where + "/relations", "expected a list");
    for (std::size_t i = 0; i < rj->size(); ++i) {
      const std::string w = where + "/relations/" + std::to_string(i);
      const json& r = (*rj)[i];
      if (!r.is_array()) bad(w, "expected a list of [coeff, [arrow ids]] terms");
      Relation rel;
      for (std::size_t t = 0; t < r.size(); ++t) {
        const std::string wt = w + "/" + std::to_string(t);
        if (!r[t].is_array() || r[t].size() != 2 || !r[t][1].is_array())
          bad(wt, "expected [coeff, [arrow ids]]");
        RelationTerm term{as_int(r[t][0], wt), {}};
        for (const auto& id : r[t][1]) term.arrow_ids.push_back(static_cast<int>(as_int(id, wt)));
        rel.terms.push_back(std::move(term));
      }
      rels.push_back(std::move(rel));
    }
  }
  return wrap_library(where, [&] {
    return build_algebra(q, rels, static_cast<int>(bound), static_cast<std::uint32_t>(p));
  });
}

AlgebraPtr load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path), path); }

Module module_from_json(const AlgebraPtr& a, const json& j, const std::string& where) {
  const json& dv = field(j, "dim_vector", where);
  if (!dv.is_array() || dv.size() != static_cast<std::size_t>(a->vertex_count()))
    bad(where + "/dim_vector", "expected " + std::to_string(a->vertex_count()) + " entries");
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < dv.size(); ++v) {
    auto d = as_int(dv[v], where + "/dim_vector/" + std::to_string(v));
    if (d < 0 || d > 4096) bad(where + "/dim_vector/" + std::to_string(v), "bad dimension");
    dims.push_back(static_cast<std::size_t>(d));
  }
  const json empty = json::object();
  auto ait = j.find("arrows");
  const json& arrows = ait == j.end() ? empty : *ait;
  if (!arrows.is_object()) bad(where + "/arrows", "expected an object keyed by arrow id");
  for (auto it = arrows.begin(); it != arrows.end(); ++it) {
    bool known = false;
    for (std::size_t x = 0; x < a->arrow_count(); ++x)
      if (std::to_string(a->arrow(x).id) == it.key()) known = true;
    if (!known) bad(where + "/arrows/" + it.key(), "unknown arrow id");
  }
  std::vector<Mat> mats;
  for (std::size_t x = 0; x < a->arrow_count(); ++x) {
    const auto& ar = a->arrow(x);
    const std::string key = std::to_string(ar.id);
    const std::size_t r = dims[ar.target], c = dims[ar.source];
    auto it = arrows.find(key);
    if (it == arrows.end()) {
      if (r && c) bad(where + "/arrows", "missing matrix for arrow " + key);
      mats.push_back(Mat(r, c, a->field()));
    } else {
      mats.push_back(matrix_from_json(*it, r, c, a->field(), where + "/arrows/" + key));
    }
  }
  std::string label;
  if (auto l = j.find("label"); l != j.end()) {
    if (!l->is_string()) bad(where + "/label", "expected a string");
    label = l->get<std::string>();
  }
  return wrap_library(where, [&] { return Module(a, dims, mats, label); });
}

Module load_module(const AlgebraPtr& a, const std::string& path) {
  return module_from_json(a, read_json_file(path), path);
}

json module_to_json(const Module& m) {
  json j;
  j["dim_vector"] = m.dims();
  json arrows = json::object();
  for (std::size_t x = 0; x < m.algebra()->arrow_count(); ++x)
    arrows[std::to_string(m.algebra()->arrow(x).id)] = matrix_to_json(m.arrow_mat(x));
  j["arrows"] = arrows;
  if (!m.label().empty()) j["label"] = m.label();
  return j;
}

ModuleMap map_from_json(const Module& s, const Module& t, const json& j, const std::string& where) {
  const int nv = s.algebra()->vertex_count();
  if (!j.is_array() || j.size() != static_cast<std::size_t>(nv))
    bad(where, "expected one matrix per vertex (" + std::to_string(nv) + ")");
  std::vector<Mat> mats;
  for (int v = 0; v < nv; ++v)
    mats.push_back(matrix_from_json(j[v], t.dim(v), s.dim(v), s.field(),
                                    where + "/" + std::to_string(v)));
  return wrap_library(where, [&] { return ModuleMap(s, t, mats); });
}

json map_to_json(const ModuleMap& f) {
  json a = json::array();
  for (const auto& m : f.vertex_mats()) a.push_back(matrix_to_json(m));
  return a;
}

NSequence sequence_from_json(const AlgebraPtr& a, const json& j, const std::string& where) {
  NSequence s;
  auto n = as_int(field(j, "n", where), where + "/n");
  if (n < 1 || n > 64) bad(where + "/n", "n must be between 1 and 64");
  s.n = static_cast<std::size_t>(n);
  const json& ms = field(j, "modules", where);
  if (!ms.is_array() || ms.size() != s.n + 2)
    bad(where + "/modules", "expected n + 2 = " + std::to_string(s.n + 2) + " modules");
  for (std::size_t i = 0; i < ms.size(); ++i)
    s.objects.push_back(module_from_json(a, ms[i], where + "/modules/" + std::to_string(i)));
  const json& fs = field(j, "maps", where);
  if (!fs.is_array() || fs.size() != s.n + 1)
    bad(where + "/maps", "expected n + 1 = " + std::to_string(s.n + 1) + " maps");
  for (std::size_t i = 0; i < fs.size(); ++i)
    s.maps.push_back(map_from_json(s.objects[i], s.objects[i + 1], fs[i],
                                   where + "/maps/" + std::to_string(i)));
  wrap_library(where, [&] {
    s.validate();
    return 0;
  });
  return s;
}

NSequence load_sequence(const AlgebraPtr& a, const std::string& path) {
  return sequence_from_json(a, read_json_file(path), path);
}

json sequence_to_json(const NSequence& s) {
  json j;
  j["n"] = s.n;
  json ms = json::array(), fs = json::array();
  for (const auto& m : s.objects) ms.push_back(module_to_json(m));
  for (const auto& f : s.maps) fs.push_back(map_to_json(f));
  j["modules"] = ms;
  j["maps"] = fs;
  return j;
}

}  // namespace hcot
