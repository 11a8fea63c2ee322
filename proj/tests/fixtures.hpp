#pragma once

#include "hcot/algebra.hpp"
#include "hcot/module.hpp"

namespace fx {

inline hcot::AlgebraPtr a3_rad2(std::uint32_t p = 2) {
  hcot::Quiver q{3, {{0, 0, 1}, {1, 1, 2}}};
  return hcot::build_algebra(q, {{{{1, {0, 1}}}}}, 2, p);
}

inline hcot::AlgebraPtr dual_numbers(std::uint32_t p = 2) {
  hcot::Quiver q{1, {{0, 0, 0}}};
  return hcot::build_algebra(q, {{{{1, {0, 0}}}}}, 2, p);
}

inline hcot::AlgebraPtr semisimple(int v, std::uint32_t p = 2) {
  hcot::Quiver q{v, {}};
  return hcot::build_algebra(q, {}, 2, p);
}

}  // namespace fx

namespace fx {

/// Linear A_m quiver with all paths of length l as relations.
inline hcot::AlgebraPtr nakayama(int m, int l, std::uint32_t p = 2) {
  hcot::Quiver q{m, {}};
  for (int i = 0; i + 1 < m; ++i) q.arrows.push_back({i, i, i + 1});
  std::vector<hcot::Relation> rels;
  for (int s = 0; s + l <= m - 1; ++s) {
    hcot::RelationTerm t{1, {}};
    for (int k = 0; k < l; ++k) t.arrow_ids.push_back(s + k);
    rels.push_back({{t}});
  }
  return hcot::build_algebra(q, rels, l, p);
}

/// Interval module supported on vertices i..j (0-based) of a linear quiver.
inline hcot::Module interval(const hcot::AlgebraPtr& a, int i, int j) {
  std::vector<std::size_t> dims(a->vertex_count(), 0);
  for (int v = i; v <= j; ++v) dims[v] = 1;
  std::vector<hcot::Mat> mats;
  for (std::size_t x = 0; x < a->arrow_count(); ++x) {
    const auto& ar = a->arrow(x);
    hcot::Mat m(dims[ar.target], dims[ar.source], a->field());
    if (dims[ar.target] && dims[ar.source]) m(0, 0) = 1;
    mats.push_back(m);
  }
  return hcot::Module(a, dims, mats,
                      "M" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
}

inline std::vector<hcot::Module> intervals(const hcot::AlgebraPtr& a, int l) {
  std::vector<hcot::Module> out;
  const int m = a->vertex_count();
  for (int len = 1; len <= l; ++len)
    for (int i = 0; i + len <= m; ++i) out.push_back(interval(a, i, i + len - 1));
  return out;
}

inline hcot::AlgebraPtr kronecker(std::uint32_t p = 3) {
  hcot::Quiver q{2, {{0, 0, 1}, {1, 0, 1}}};
  return hcot::build_algebra(q, {}, 2, p);
}

inline hcot::Module kronecker_module(const hcot::AlgebraPtr& a, hcot::Scalar x, hcot::Scalar y) {
  return hcot::Module(a, {1, 1},
                      {hcot::Mat::from_rows({{x}}, a->field()),
                       hcot::Mat::from_rows({{y}}, a->field())});
}

}  // namespace fx
