#include <string>

#include "hcot/errors.hpp"
#include "hcot/module.hpp"

namespace hcot {

namespace {

std::size_t position(const std::vector<std::size_t>& v, std::size_t x) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == x) return i;
  throw ContractViolation("basis path missing from its vertex block");
}

void check_vertex(const AlgebraPtr& a, int v) {
  if (!a || v < 0 || v >= a->vertex_count())
    throw ContractViolation("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Module projective_module(const AlgebraPtr& algebra, int v) {
  check_vertex(algebra, v);
  const auto& A = *algebra;
  const int V = A.vertex_count();
  std::vector<std::size_t> dims(V);
  for (int j = 0; j < V; ++j) dims[j] = A.basis_between(v, j).size();
  std::vector<Mat> mats;
  for (std::size_t x = 0; x < A.arrow_count(); ++x) {
    const int i = A.arrow(x).source, j = A.arrow(x).target;
    const auto& from = A.basis_between(v, i);
    const auto& to = A.basis_between(v, j);
    Mat m(to.size(), from.size(), A.field());
    for (std::size_t c = 0; c < from.size(); ++c) {
      auto arrows = A.basis()[from[c]].arrows;
      arrows.push_back(x);
      auto nf = A.normal_form(arrows, v);
      for (std::size_t b = 0; b < nf.size(); ++b)
        if (nf[b]) m(position(to, b), c) = nf[b];
    }
    mats.push_back(std::move(m));
  }
  return Module(algebra, dims, std::move(mats), "P" + std::to_string(v + 1));
}

Module injective_module(const AlgebraPtr& algebra, int v) {
  check_vertex(algebra, v);
  const auto& A = *algebra;
  const int V = A.vertex_count();
  std::vector<std::size_t> dims(V);
  for (int j = 0; j < V; ++j) dims[j] = A.basis_between(j, v).size();
  std::vector<Mat> mats;
  for (std::size_t x = 0; x < A.arrow_count(); ++x) {
    const int i = A.arrow(x).source, j = A.arrow(x).target;
    const auto& from = A.basis_between(i, v);
    const auto& to = A.basis_between(j, v);
    // (x.phi)(q) = phi(x then q)
    Mat m(to.size(), from.size(), A.field());
    for (std::size_t r = 0; r < to.size(); ++r) {
      std::vector<std::size_t> arrows{x};
      const auto& q = A.basis()[to[r]].arrows;
      arrows.insert(arrows.end(), q.begin(), q.end());
      auto nf = A.normal_form(arrows, i);
      for (std::size_t b = 0; b < nf.size(); ++b)
        if (nf[b]) m(r, position(from, b)) = nf[b];
    }
    mats.push_back(std::move(m));
  }
  return Module(algebra, dims, std::move(mats), "I" + std::to_string(v + 1));
}

Module simple_module(const AlgebraPtr& algebra, int v) {
  check_vertex(algebra, v);
  const auto& A = *algebra;
  std::vector<std::size_t> dims(A.vertex_count(), 0);
  dims[v] = 1;
  std::vector<Mat> mats;
  for (std::size_t x = 0; x < A.arrow_count(); ++x)
    mats.emplace_back(dims[A.arrow(x).target], dims[A.arrow(x).source], A.field());
  return Module(algebra, dims, std::move(mats), "S" + std::to_string(v + 1));
}

std::vector<Module> projective_modules(const AlgebraPtr& algebra) {
  std::vector<Module> out;
  for (int v = 0; v < algebra->vertex_count(); ++v) out.push_back(projective_module(algebra, v));
  return out;
}

std::vector<Module> injective_modules(const AlgebraPtr& algebra) {
  std::vector<Module> out;
  for (int v = 0; v < algebra->vertex_count(); ++v) out.push_back(injective_module(algebra, v));
  return out;
}

Module regular_module(const AlgebraPtr& algebra) {
  return direct_sum(projective_modules(algebra), algebra).sum.with_label("Λ");
}

}  // namespace hcot
