#include "hcot/homology.hpp"

#include "hcot/errors.hpp"

namespace hcot {

namespace {

std::string join_labels(const std::vector<Module>& ms) {
  std::string s;
  for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? "+" : "") + ms[i].display_name();
  return s.empty() ? "0" : s;
}

}  // namespace

ModuleMap projective_cover(const Module& m) {
  const auto& alg = m.algebra();
  const auto& A = *alg;
  const auto& f = m.field();
  auto rad = radical_spans(m);
  std::vector<int> gen_vertex;
  std::vector<Mat> gen_vec;
  for (int v = 0; v < A.vertex_count(); ++v) {
    Mat span = rad[v];
    std::size_t r = rank(span);
    for (std::size_t e = 0; e < m.dim(v); ++e) {
      Mat unit(m.dim(v), 1, f);
      unit(e, 0) = 1;
      Mat next = Mat::hstack({span, unit}, m.dim(v), f);
      std::size_t r2 = rank(next);
      if (r2 > r) {
        span = next;
        r = r2;
        gen_vertex.push_back(v);
        gen_vec.push_back(unit);
      }
    }
  }
  std::vector<Module> parts;
  for (int v : gen_vertex) parts.push_back(projective_module(alg, v));
  auto ds = direct_sum(parts, alg);
  Module cover = ds.sum.with_label(join_labels(parts));
  std::vector<Mat> mats;
  for (int j = 0; j < A.vertex_count(); ++j) {
    std::vector<Mat> cols;
    for (std::size_t k = 0; k < gen_vertex.size(); ++k)
      for (auto b : A.basis_between(gen_vertex[k], j))
        cols.push_back(m.path_matrix(A.basis()[b].arrows, gen_vertex[k]) * gen_vec[k]);
    mats.push_back(Mat::hstack(cols, m.dim(j), f));
  }
  return ModuleMap(cover, m, std::move(mats));
}

ModuleMap injective_envelope(const Module& m) {
  ModuleMap pc = projective_cover(dual(m));
  ModuleMap d = dual(pc);
  std::string label = pc.source().label();
  for (auto& c : label)
    if (c == 'P') c = 'I';
  Module env = d.target().with_label(label);
  return ModuleMap(m, env, d.vertex_mats());
}

bool is_projective(const Module& m) {
  return projective_cover(m).source().total_dim() == m.total_dim();
}

bool is_injective(const Module& m) { return is_projective(dual(m)); }

Module Resolution::term(std::size_t i) const {
  if (i < terms.size()) return terms[i];
  return Module::zero(target.algebra());
}

ModuleMap Resolution::differential(std::size_t i) const {
  if (i == 0) throw ContractViolation("differential d_0 does not exist");
  if (i < terms.size()) return differentials[i - 1];
  return ModuleMap::zero(term(i), term(i - 1));
}

Resolution min_projective_resolution(const Module& m, std::size_t k) {
  Resolution r;
  r.target = m;
  r.requested = k;
  r.augmentation = projective_cover(m);
  r.terms.push_back(r.augmentation.source());
  ModuleMap last = r.augmentation;
  for (std::size_t i = 1; i <= k; ++i) {
    auto fac = map_factorization(last);
    if (fac.kernel.source().is_zero()) break;
    Module omega = fac.kernel.source().with_label("Ω^" + std::to_string(i));
    ModuleMap incl(omega, last.source(), fac.kernel.vertex_mats());
    ModuleMap cover = projective_cover(omega);
    ModuleMap d = compose(incl, cover);
    r.syzygies.push_back(omega);
    r.syzygy_inclusions.push_back(incl);
    r.terms.push_back(cover.source());
    r.differentials.push_back(d);
    last = d;
  }
  return r;
}

Module syzygy(const Module& m, std::size_t k) {
  if (k == 0) return m;
  auto r = min_projective_resolution(m, k);
  if (r.syzygies.size() >= k) return r.syzygies[k - 1];
  return Module::zero(m.algebra());
}

Coresolution min_injective_coresolution(const Module& m, std::size_t k) {
  auto r = min_projective_resolution(dual(m), k);
  Coresolution c;
  c.source = m;
  for (const auto& p : r.terms) {
    std::string label = p.label();
    for (auto& ch : label)
      if (ch == 'P') ch = 'I';
    c.terms.push_back(dual(p).with_label(label));
  }
  c.coaugmentation = ModuleMap(m, c.terms[0], dual(r.augmentation).vertex_mats());
  for (std::size_t i = 0; i < r.differentials.size(); ++i)
    c.differentials.emplace_back(c.terms[i], c.terms[i + 1],
                                 dual(r.differentials[i]).vertex_mats());
  for (const auto& s : r.syzygies) c.cosyzygies.push_back(dual(s));
  return c;
}

Module cosyzygy(const Module& m, std::size_t k) {
  if (k == 0) return m;
  auto c = min_injective_coresolution(m, k);
  if (c.cosyzygies.size() >= k) return c.cosyzygies[k - 1];
  return Module::zero(m.algebra());
}

std::vector<Scalar> ExtSpace::class_of(const std::vector<Scalar>& cocycle) const {
  const auto& f = source.field();
  const std::size_t n = cochains.dim();
  if (cocycle.size() != n) throw ContractViolation("class_of: wrong cochain length");
  if (n == 0) return {};
  Mat sys = Mat::hstack({coboundaries, classes}, n, f);
  auto x = solve(sys, Mat::column(cocycle, f));
  if (!x) throw ContractViolation("class_of: vector is not a cocycle");
  std::vector<Scalar> out;
  for (std::size_t i = coboundaries.cols(); i < sys.cols(); ++i) out.push_back((*x)(i, 0));
  return out;
}

std::vector<Scalar> ExtSpace::class_of(const ModuleMap& cocycle) const {
  return class_of(cochains.coords(cocycle));
}

ModuleMap ExtSpace::representative(const std::vector<Scalar>& coords) const {
  const auto& f = source.field();
  if (coords.size() != dim()) throw ContractViolation("representative: wrong class length");
  if (cochains.dim() == 0) return ModuleMap::zero(resolution.term(degree), target);
  Mat c = classes * Mat::column(coords, f);
  return cochains.combination(c.column_vector(0));
}

ExtSpace ext_space(const Resolution& res, const Module& n, std::size_t k) {
  if (res.requested < k + 1 && res.terms.size() == res.requested + 1)
    throw ContractViolation("ext_space: resolution too short for degree " + std::to_string(k));
  const auto& f = n.field();
  ExtSpace e;
  e.source = res.target;
  e.target = n;
  e.degree = k;
  e.resolution = res;
  e.cochains = hom_basis(res.term(k), n);
  const std::size_t dim_c = e.cochains.dim();
  HomSpace next = hom_basis(res.term(k + 1), n);
  Mat delta = hom_precompose(e.cochains, res.differential(k + 1), next);
  e.cocycles = kernel_basis(delta);
  if (e.cocycles.rows() != dim_c) e.cocycles = Mat(dim_c, 0, f);
  if (k >= 1) {
    HomSpace prev = hom_basis(res.term(k - 1), n);
    Mat img = hom_precompose(prev, res.differential(k), e.cochains);
    e.coboundaries = img.cols() ? column_space_basis(img) : Mat(dim_c, 0, f);
  } else {
    e.coboundaries = Mat(dim_c, 0, f);
  }
  Mat span = e.coboundaries;
  std::size_t r = span.cols();
  std::vector<Mat> picks;
  for (std::size_t j = 0; j < e.cocycles.cols(); ++j) {
    std::vector<std::size_t> col{j};
    Mat z = e.cocycles.select_columns(col);
    Mat next_span = Mat::hstack({span, z}, dim_c, f);
    std::size_t r2 = rank(next_span);
    if (r2 > r) {
      span = next_span;
      r = r2;
      picks.push_back(z);
    }
  }
  e.classes = Mat::hstack(picks, dim_c, f);
  return e;
}

ExtSpace ext_space(const Module& m, const Module& n, std::size_t k) {
  return ext_space(min_projective_resolution(m, k + 1), n, k);
}

std::size_t ext_dim(const Module& m, const Module& n, std::size_t k) {
  return ext_space(m, n, k).dim();
}

std::size_t ext_dim_via_coresolution(const Module& m, const Module& n, std::size_t k) {
  auto c = min_injective_coresolution(n, k + 1);
  auto zero = Module::zero(n.algebra());
  auto term = [&](std::size_t i) { return i < c.terms.size() ? c.terms[i] : zero; };
  auto diff = [&](std::size_t i) {  // I^{i-1} -> I^i
    if (i < c.terms.size()) return c.differentials[i - 1];
    return ModuleMap::zero(term(i - 1), term(i));
  };
  HomSpace here = hom_basis(m, term(k));
  HomSpace next = hom_basis(m, term(k + 1));
  std::size_t z = here.dim() - rank(hom_postcompose(here, diff(k + 1), next));
  if (k == 0) return z;
  HomSpace prev = hom_basis(m, term(k - 1));
  return z - rank(hom_postcompose(prev, diff(k), here));
}

Mat ext_induced_map(const ExtSpace& from, const ExtSpace& to, const ModuleMap& f) {
  Mat out(to.dim(), from.dim(), f.source().field());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    std::vector<Scalar> e(from.dim(), 0);
    e[j] = 1;
    ModuleMap phi = compose(f, from.representative(e));
    auto c = to.class_of(phi);
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

Mat ext_induced_map(const Module& x, const ModuleMap& f, std::size_t k) {
  auto res = min_projective_resolution(x, k + 1);
  return ext_induced_map(ext_space(res, f.source(), k), ext_space(res, f.target(), k), f);
}

std::vector<ModuleMap> lift_to_resolutions(const ModuleMap& f, const Resolution& from,
                                           const Resolution& to, std::size_t k) {
  std::vector<ModuleMap> c;
  auto c0 = factor_through_right(compose(f, from.augmentation), to.augmentation);
  if (!c0) throw ContractViolation("lift_to_resolutions: augmentation lift failed");
  c.push_back(*c0);
  for (std::size_t i = 1; i <= k; ++i) {
    auto ci = factor_through_right(compose(c.back(), from.differential(i)), to.differential(i));
    if (!ci) throw ContractViolation("lift_to_resolutions: lift failed in degree " +
                                     std::to_string(i));
    c.push_back(*ci);
  }
  return c;
}

}  // namespace hcot
