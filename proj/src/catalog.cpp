#include "hcot/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hcot/errors.hpp"

namespace hcot {

namespace {

Module interval_module(const AlgebraPtr& a, int i, int j, const std::string& label) {
  std::vector<std::size_t> dims(a->vertex_count(), 0);
  for (int v = i; v <= j; ++v) dims[v] = 1;
  std::vector<Mat> mats;
  for (std::size_t x = 0; x < a->arrow_count(); ++x) {
    const auto& ar = a->arrow(x);
    Mat m(dims[ar.target], dims[ar.source], a->field());
    if (dims[ar.target] && dims[ar.source]) m(0, 0) = 1;
    mats.push_back(m);
  }
  return Module(a, dims, mats, label);
}

std::map<std::string, long> parse_params(const std::string& text, const std::string& full) {
  std::map<std::string, long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw InputError("catalog name '" + full + "': expected key=value, got '" + item + "'");
    try {
      std::size_t used = 0;
      long v = std::stol(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument("trailing");
      out[item.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw InputError("catalog name '" + full + "': '" + item + "' is not an integer parameter");
    }
  }
  return out;
}

long take(std::map<std::string, long>& ps, const std::string& key, const std::string& full,
          std::optional<long> def = std::nullopt) {
  auto it = ps.find(key);
  if (it == ps.end()) {
    if (def) return *def;
    throw InputError("catalog name '" + full + "': missing parameter " + key);
  }
  long v = it->second;
  ps.erase(it);
  return v;
}

std::uint32_t checked_prime(long p, const std::string& full) {
  if (p < 2 || p > 65521 || !is_prime(static_cast<std::uint64_t>(p)))
    throw InputError("catalog name '" + full + "': p must be a prime below 65536");
  return static_cast<std::uint32_t>(p);
}

}  // namespace

Universe nakayama_universe(const NakayamaSpec& spec) {
  if (spec.m < 1 || spec.l < 2) throw ContractViolation("nakayama_universe: need m >= 1, l >= 2");
  Quiver q{spec.m, {}};
  for (int i = 0; i + 1 < spec.m; ++i) q.arrows.push_back({i, i, i + 1});
  std::vector<Relation> rels;
  for (int s = 0; s + spec.l <= spec.m - 1; ++s) {
    RelationTerm t{1, {}};
    for (int k = 0; k < spec.l; ++k) t.arrow_ids.push_back(s + k);
    rels.push_back({{t}});
  }
  Universe u;
  u.algebra = build_algebra(q, rels, spec.l, spec.p);
  u.completeness = Completeness::Complete;
  u.name = "nakayama:m=" + std::to_string(spec.m) + ",l=" + std::to_string(spec.l) +
           ",p=" + std::to_string(spec.p);
  const int m = spec.m;
  for (int len = 1; len <= spec.l; ++len)
    for (int i = 0; i + len <= m; ++i) {
      const int j = i + len - 1;
      std::string label;
      if (i == j) label = "S" + std::to_string(i + 1);
      else if (j == std::min(i + spec.l - 1, m - 1)) label = "P" + std::to_string(i + 1);
      else if (i == std::max(0, j - spec.l + 1)) label = "I" + std::to_string(j + 1);
      else label = "M" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      u.indecomposables.push_back(interval_module(u.algebra, i, j, label));
    }
  return u;
}

Universe semisimple_universe(int v, std::uint32_t p) {
  if (v < 1) throw ContractViolation("semisimple_universe: need v >= 1");
  Universe u;
  u.algebra = build_algebra(Quiver{v, {}}, {}, 2, p);
  u.completeness = Completeness::Complete;
  u.name = "semisimple:v=" + std::to_string(v) + ",p=" + std::to_string(p);
  for (int i = 0; i < v; ++i) u.indecomposables.push_back(simple_module(u.algebra, i));
  return u;
}

Universe truncated_universe(int l, std::uint32_t p) {
  if (l < 2) throw ContractViolation("truncated_universe: need l >= 2");
  Quiver q{1, {{0, 0, 0}}};
  RelationTerm t{1, std::vector<int>(l, 0)};
  Universe u;
  u.algebra = build_algebra(q, {{{t}}}, l, p);
  u.completeness = Completeness::Complete;
  u.name = "truncated:l=" + std::to_string(l) + ",p=" + std::to_string(p);
  for (int k = 1; k <= l; ++k) {
    Mat x(k, k, u.algebra->field());
    for (int r = 0; r + 1 < k; ++r) x(r + 1, r) = 1;
    std::string label = k == 1 ? "S" : k == l ? "P" : "J" + std::to_string(k);
    u.indecomposables.push_back(Module(u.algebra, {std::size_t(k)}, {x}, label));
  }
  return u;
}

Universe universe_by_name(const std::string& name) {
  auto colon = name.find(':');
  const std::string kind = name.substr(0, colon);
  auto ps = parse_params(colon == std::string::npos ? "" : name.substr(colon + 1), name);
  auto finish = [&](Universe u) {
    if (!ps.empty())
      throw InputError("catalog name '" + name + "': unknown parameter " + ps.begin()->first);
    return u;
  };
  if (kind == "nakayama") {
    NakayamaSpec s;
    s.m = static_cast<int>(take(ps, "m", name));
    s.l = static_cast<int>(take(ps, "l", name));
    s.p = checked_prime(take(ps, "p", name, 2), name);
    if (s.m < 1 || s.m > 64 || s.l < 2 || s.l > 64)
      throw InputError("catalog name '" + name + "': need 1 <= m <= 64 and 2 <= l <= 64");
    return finish(nakayama_universe(s));
  }
  if (kind == "semisimple") {
    long v = take(ps, "v", name);
    auto p = checked_prime(take(ps, "p", name, 2), name);
    if (v < 1 || v > 64) throw InputError("catalog name '" + name + "': need 1 <= v <= 64");
    return finish(semisimple_universe(static_cast<int>(v), p));
  }
  if (kind == "truncated") {
    long l = take(ps, "l", name);
    auto p = checked_prime(take(ps, "p", name, 2), name);
    if (l < 2 || l > 64) throw InputError("catalog name '" + name + "': need 2 <= l <= 64");
    return finish(truncated_universe(static_cast<int>(l), p));
  }
  throw InputError("unknown catalog algebra '" + name +
                   "' (expected nakayama:..., semisimple:... or truncated:...)");
}

Subcat subcat_from_mask(const Universe& u, std::uint64_t mask) {
  Subcat s;
  for (std::size_t i = 0; i < u.indecomposables.size(); ++i)
    if (mask >> i & 1u) s.generators.push_back(u.indecomposables[i]);
  return s;
}

// ---------------------------------------------------------------- oracle

namespace {

struct OracleTables {
  std::size_t size = 0;
  std::size_t n = 0;
  // ext[a][b]: Ext^i(U_a, U_b) != 0 for some 0 < i < n
  std::vector<std::vector<bool>> ext;
  // image[a][b][v]: span of all images of maps U_a -> U_b at vertex v
  std::vector<std::vector<std::vector<Mat>>> image, coimage;
  std::uint64_t required = 0;
};

OracleTables build_tables(const Universe& u, std::size_t n, bool with_traces) {
  OracleTables t;
  t.size = u.indecomposables.size();
  t.n = n;
  const auto& us = u.indecomposables;
  t.ext.assign(t.size, std::vector<bool>(t.size, false));
  for (std::size_t a = 0; a < t.size; ++a)
    for (std::size_t b = 0; b < t.size; ++b)
      for (std::size_t i = 1; i < n && !t.ext[a][b]; ++i)
        t.ext[a][b] = ext_dim_via_coresolution(us[a], us[b], i) != 0;
  for (std::size_t a = 0; a < t.size; ++a)
    if (is_projective(us[a]) || is_injective(us[a])) t.required |= std::uint64_t{1} << a;
  if (!with_traces) return t;
  const int nv = u.algebra->vertex_count();
  t.image.assign(t.size, std::vector<std::vector<Mat>>(t.size));
  t.coimage = t.image;
  for (std::size_t a = 0; a < t.size; ++a)
    for (std::size_t b = 0; b < t.size; ++b) {
      auto hb = hom_basis(us[a], us[b]).basis;
      for (int v = 0; v < nv; ++v) {
        std::vector<Mat> cols;
        for (const auto& h : hb) cols.push_back(h.at(v));
        t.image[a][b].push_back(Mat::hstack(cols, us[b].dim(v), u.algebra->field()));
      }
      // maps U_b -> U_a, stacked by rows, detect embeddings of U_b
      auto hc = hom_basis(us[b], us[a]).basis;
      for (int v = 0; v < nv; ++v) {
        std::vector<Mat> rows;
        for (const auto& h : hc) rows.push_back(h.at(v));
        t.coimage[a][b].push_back(Mat::vstack(rows, us[b].dim(v), u.algebra->field()));
      }
    }
  return t;
}

bool perp_condition(const OracleTables& t, std::uint64_t mask) {
  for (std::size_t x = 0; x < t.size; ++x) {
    const bool in = mask >> x & 1u;
    bool right = true, left = true;
    for (std::size_t s = 0; s < t.size; ++s) {
      if (!(mask >> s & 1u)) continue;
      if (t.ext[s][x]) right = false;
      if (t.ext[x][s]) left = false;
    }
    if (right != in || left != in) return false;
  }
  return true;
}

bool trace_condition(const Universe& u, const OracleTables& t, std::uint64_t mask) {
  const int nv = u.algebra->vertex_count();
  const auto& f = u.algebra->field();
  for (std::size_t x = 0; x < t.size; ++x) {
    const Module& m = u.indecomposables[x];
    for (int v = 0; v < nv; ++v) {
      if (m.dim(v) == 0) continue;
      std::vector<Mat> cols, rows;
      for (std::size_t s = 0; s < t.size; ++s) {
        if (!(mask >> s & 1u)) continue;
        cols.push_back(t.image[s][x][v]);
        rows.push_back(t.coimage[s][x][v]);
      }
      if (rank(Mat::hstack(cols, m.dim(v), f)) != m.dim(v)) return false;
      if (rank(Mat::vstack(rows, m.dim(v), f)) != m.dim(v)) return false;
    }
  }
  return true;
}

}  // namespace

OracleResult brute_force_nct_search(const Universe& u, std::size_t n) {
  const std::size_t size = u.indecomposables.size();
  if (size > 20) throw UniverseTooLarge("brute_force_nct_search: " + std::to_string(size) +
                                        " indecomposables (limit 20)");
  if (n == 0) throw ContractViolation("brute_force_nct_search: n must be positive");
  const bool full = size <= 12;
  OracleTables t = build_tables(u, n, full);
  OracleResult r;
  const std::uint64_t all = (std::uint64_t{1} << size) - 1;
  std::uint64_t free = all & ~t.required;
  // iterate submasks of `free` in increasing order
  std::vector<std::uint64_t> subsets;
  for (std::uint64_t s = 0;; s = (s - free) & free) {
    subsets.push_back(s | t.required);
    if (s == free) break;
  }
  std::sort(subsets.begin(), subsets.end());
  for (auto mask : subsets) {
    ++r.subsets_checked;
    if (perp_condition(t, mask)) r.masks.push_back(mask);
  }
  if (full) {
    std::vector<std::uint64_t> unconstrained;
    for (std::uint64_t mask = 0; mask <= all; ++mask)
      if (perp_condition(t, mask) && trace_condition(u, t, mask)) unconstrained.push_back(mask);
    r.unconstrained_checked = true;
    r.unconstrained_agrees = unconstrained == r.masks;
  }
  for (auto mask : r.masks) r.hits.push_back(subcat_from_mask(u, mask));
  return r;
}

}  // namespace hcot
