#include <algorithm>

#include "hcot/approx.hpp"
#include "hcot/errors.hpp"

namespace hcot {

namespace {

ModuleMap negated_if(const ModuleMap& f, bool neg) { return neg ? -f : f; }

std::string chain_text(const std::vector<Module>& objects) {
  std::string s;
  for (std::size_t i = 0; i < objects.size(); ++i)
    s += (i ? " -> " : "") + objects[i].display_name();
  return s;
}

}  // namespace

void NSequence::validate() const {
  if (objects.size() != n + 2 || maps.size() != n + 1)
    throw ContractViolation("sequence has " + std::to_string(objects.size()) + " terms and " +
                            std::to_string(maps.size()) + " maps; expected " +
                            std::to_string(n + 2) + " and " + std::to_string(n + 1));
  for (std::size_t j = 0; j < maps.size(); ++j) {
    if (maps[j].source().dims() != objects[j].dims() ||
        maps[j].target().dims() != objects[j + 1].dims())
      throw ContractViolation("map " + std::to_string(j) + " does not match its terms");
    if (j > 0 && !compose(maps[j], maps[j - 1]).is_zero())
      throw ContractViolation("composite of maps " + std::to_string(j - 1) + " and " +
                              std::to_string(j) + " is nonzero");
  }
}

std::size_t NSequence::total_dim() const {
  std::size_t d = 0;
  for (const auto& o : objects) d += o.total_dim();
  return d;
}

std::string NSequence::describe() const { return "0 -> " + chain_text(objects) + " -> 0"; }

std::string Tail::describe() const { return chain_text(objects); }

NSequence contractible_sequence(const Module& xp, const Module& x, std::size_t n) {
  if (n == 0) throw ContractViolation("contractible_sequence: n must be positive");
  NSequence s;
  s.n = n;
  if (n == 1) {
    auto ds = direct_sum({xp, x});
    s.objects = {xp, ds.sum, x};
    s.maps = {ds.injections[0], ds.projections[1]};
    return s;
  }
  Module zero = Module::zero(x.algebra());
  s.objects.push_back(xp);
  s.objects.push_back(xp);
  for (std::size_t k = 0; k + 2 < n; ++k) s.objects.push_back(zero);
  s.objects.push_back(x);
  s.objects.push_back(x);
  for (std::size_t j = 0; j + 1 < s.objects.size(); ++j) {
    if (j == 0) s.maps.push_back(ModuleMap::identity(xp));
    else if (j == n) s.maps.push_back(ModuleMap::identity(x));
    else s.maps.push_back(ModuleMap::zero(s.objects[j], s.objects[j + 1]));
  }
  return s;
}

NSequence direct_sum(const NSequence& a, const NSequence& b) {
  if (a.n != b.n) throw ContractViolation("direct_sum: sequences of different length");
  std::vector<DirectSum> ds;
  for (std::size_t j = 0; j < a.objects.size(); ++j)
    ds.push_back(direct_sum({a.objects[j], b.objects[j]}));
  NSequence s;
  s.n = a.n;
  for (const auto& d : ds) s.objects.push_back(d.sum);
  for (std::size_t j = 0; j < a.maps.size(); ++j) {
    const auto& f = a.maps[j];
    const auto& g = b.maps[j];
    s.maps.push_back(block_map(ds[j], ds[j + 1],
                               {{f, ModuleMap::zero(b.objects[j], a.objects[j + 1])},
                                {ModuleMap::zero(a.objects[j], b.objects[j + 1]), g}}));
  }
  return s;
}

NSequence dual(const NSequence& s) {
  NSequence d;
  d.n = s.n;
  for (std::size_t k = 0; k < s.maps.size(); ++k) d.maps.push_back(dual(s.maps[s.n - k]));
  for (const auto& f : d.maps) d.objects.push_back(f.source());
  d.objects.push_back(d.maps.back().target());
  return d;
}

// ------------------------------------------------------------- n-pushout

PushoutDiagram n_pushout(const Subcat& msub, const NSequence& s, const ModuleMap& g,
                         const Options& opt) {
  s.validate();
  const std::size_t n = s.n;
  if (!g.source().same_as(s.m(n + 1)) && g.source().dims() != s.m(n + 1).dims())
    throw ContractViolation("n_pushout: map does not start at m_{n+1}");
  const Module& xp = g.target();
  std::vector<Module> a(n + 1);
  std::vector<ModuleMap> h(n + 1), v(n + 2);

  DirectSum cur = direct_sum({s.m(n), xp});
  ModuleMap prev = compose(cur.injections[0], s.u(n + 1)) + compose(cur.injections[1], g);
  for (std::size_t i = n; i >= 2; --i) {
    ModuleMap pi = map_factorization(prev).cokernel;
    ModuleMap c = descend_map(compose(s.u(i), cur.projections[0]), pi);
    ApproxResult ap = min_left_approx(msub, pi.target(), opt);
    a[i] = labelled_by(ap.map.target(), msub, opt);
    ModuleMap api = compose(ModuleMap(pi.target(), a[i], ap.map.vertex_mats()), pi);
    DirectSum next = direct_sum({s.m(i - 1), a[i]});
    prev = compose(next.injections[0], compose(c, pi)) + compose(next.injections[1], api);
    h[i] = compose(api, cur.injections[0]);
    v[i + 1] = compose(api, cur.injections[1]);
    cur = next;
  }
  ModuleMap pi1 = map_factorization(prev).cokernel;
  if (!in_add(pi1.target(), msub, opt))
    throw NKernelEscapesM("the last cokernel of the n-pushout is not in " + msub.describe());
  a[1] = labelled_by(pi1.target(), msub, opt);
  pi1 = ModuleMap(pi1.source(), a[1], pi1.vertex_mats());
  h[1] = compose(pi1, cur.injections[0]);
  v[2] = compose(pi1, cur.injections[1]);
  v[1] = descend_map(negated_if(compose(s.u(1), cur.projections[0]), n % 2 == 1), pi1);

  PushoutDiagram d;
  d.bottom.n = n;
  d.bottom.objects.push_back(xp);
  for (std::size_t i = n; i >= 1; --i) d.bottom.objects.push_back(a[i]);
  d.bottom.objects.push_back(s.m(0));
  for (std::size_t i = n + 1; i >= 1; --i) d.bottom.maps.push_back(v[i]);
  d.vertical.push_back(g);
  for (std::size_t i = n; i >= 1; --i) d.vertical.push_back(negated_if(h[i], (n - i + 1) % 2 == 1));
  d.vertical.push_back(ModuleMap::identity(s.m(0)));
  d.bottom.validate();
  for (std::size_t j = 0; j <= n; ++j)
    if (!(compose(d.bottom.maps[j], d.vertical[j]) == compose(d.vertical[j + 1], s.maps[j])))
      throw ContractViolation("n_pushout: square " + std::to_string(j) + " does not commute");
  return d;
}

// ----------------------------------------------------------- Ext classes

std::vector<ModuleMap> comparison_maps(const Resolution& res, const NSequence& s) {
  const std::size_t n = s.n;
  std::vector<ModuleMap> c;
  auto c0 = factor_through_right(res.augmentation, s.u(1));
  if (!c0) throw ContractViolation("comparison_maps: u_1 is not onto the resolved module");
  c.push_back(*c0);
  for (std::size_t i = 1; i <= n; ++i) {
    auto ci = factor_through_right(compose(c.back(), res.differential(i)), s.u(i + 1));
    if (!ci) throw ContractViolation("comparison_maps: sequence is not exact at m_" +
                                     std::to_string(i));
    c.push_back(*ci);
  }
  return c;
}

std::vector<Scalar> sequence_class(const NSequence& s, const ExtSpace& ext) {
  if (ext.degree != s.n) throw ContractViolation("sequence_class: degree mismatch");
  auto c = comparison_maps(ext.resolution, s);
  return ext.class_of(c.back());
}

NSequence ext_class_representative(const Subcat& msub, const ExtSpace& ext,
                                   const std::vector<Scalar>& coords, const Options& opt) {
  const std::size_t n = ext.degree;
  if (n == 0) throw ContractViolation("ext_class_representative: degree must be positive");
  if (coords.size() != ext.dim()) throw ContractViolation("ext_class_representative: bad class");
  const Module& x = ext.source;
  const Module& xp = ext.target;
  if (std::all_of(coords.begin(), coords.end(), [](Scalar c) { return c == 0; }))
    return contractible_sequence(xp, x, n);
  if (!in_add(ext.resolution.term(0), msub, opt))
    throw RepresentativeEscapesM("the projective cover of " + x.display_name() +
                                 " is not in " + msub.describe());
  NSequence theta;
  try {
    theta = n_kernel_in(msub, ext.resolution.augmentation, n, opt);
  } catch (const NKernelEscapesM& e) {
    throw RepresentativeEscapesM(e.what());
  }
  auto c = comparison_maps(ext.resolution, theta);
  HomSpace hs = hom_basis(theta.m(n + 1), xp);
  Mat sys(ext.dim(), hs.dim(), x.field());
  for (std::size_t j = 0; j < hs.dim(); ++j) {
    auto k = ext.class_of(compose(hs.basis[j], c.back()));
    for (std::size_t i = 0; i < k.size(); ++i) sys(i, j) = k[i];
  }
  auto sol = solve(sys, Mat::column(coords, x.field()));
  if (!sol)
    throw RepresentativeEscapesM("the class is not a pushout of the add(M)-resolution of " +
                                 x.display_name());
  ModuleMap g = hs.combination(sol->column_vector(0));
  NSequence eta;
  try {
    eta = n_pushout(msub, theta, g, opt).bottom;
  } catch (const NKernelEscapesM& e) {
    throw RepresentativeEscapesM(e.what());
  }
  if (sequence_class(eta, ext) != coords)
    throw ContractViolation("ext_class_representative: class not reproduced");
  return eta;
}

// ------------------------------------------------------ almost-minimality

bool is_radical_map(const ModuleMap& f) {
  const Module& a = f.source();
  if (a.is_zero() || f.target().is_zero()) return true;
  std::vector<ModuleMap> gens;
  for (const auto& g : hom_basis(f.target(), a).basis) gens.push_back(compose(g, f));
  return generates_nilpotent(gens, a);
}

bool is_almost_minimal(const NSequence& s) {
  for (std::size_t i = 2; i <= s.n; ++i)
    if (!is_radical_map(s.u(i))) return false;
  return true;
}

namespace {

// Some g: b -> a with g∘u non-nilpotent, for a non-radical u: a -> b.
std::optional<ModuleMap> non_radical_witness(const ModuleMap& u, const Options& opt, Rng& rng) {
  HomSpace h = hom_basis(u.target(), u.source());
  auto good = [&](const ModuleMap& g) { return !is_nilpotent(compose(g, u)); };
  for (const auto& g : h.basis)
    if (good(g)) return g;
  for (const auto& g1 : h.basis)
    for (const auto& g2 : h.basis) {
      ModuleMap g = compose(g1, compose(u, g2));
      if (good(g)) return g;
    }
  const auto& f = u.source().field();
  if (bounded_power(f.p(), h.dim(), opt.enumeration_cap)) {
    std::optional<ModuleMap> hit;
    for_each_vector(f, h.dim(), opt.enumeration_cap, [&](const std::vector<Scalar>& c) {
      ModuleMap g = h.combination(c);
      if (good(g)) {
        hit = g;
        return false;
      }
      return true;
    });
    return hit;
  }
  for (int t = 0; t < opt.trial_budget; ++t) {
    ModuleMap g = random_map(h, rng);
    if (good(g)) return g;
  }
  return std::nullopt;
}

}  // namespace

NSequence almost_minimalize(const NSequence& s, const Options& opt) {
  s.validate();
  Rng rng(opt.seed ^ 0xA11u);
  NSequence cur = s;
  const std::size_t n = s.n;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 2; i <= n; ++i) {
      const ModuleMap u = cur.u(i);
      if (is_radical_map(u)) continue;
      auto g = non_radical_witness(u, opt, rng);
      if (!g) throw RadicalInconclusive("no witness for a non-radical interior map u_" +
                                        std::to_string(i));
      ModuleMap theta = compose(*g, u);
      auto fs = fitting_split(theta);
      ModuleMap theta_a = compose(fs.image_projection, compose(theta, fs.image_inclusion));
      auto inv = theta_a.inverse();
      if (!inv) throw ContractViolation("almost_minimalize: Fitting block not invertible");
      ModuleMap r = compose(*inv, compose(fs.image_projection, *g));
      ModuleMap keep_i = map_factorization(compose(r, u)).kernel;
      ModuleMap keep_j = map_factorization(r).kernel;
      const std::size_t pi = n + 1 - i;  // position of m_i
      ModuleMap before = restrict_map(cur.maps[pi - 1],
                                      ModuleMap::identity(cur.objects[pi - 1]), keep_i);
      ModuleMap middle = restrict_map(u, keep_i, keep_j);
      ModuleMap after = compose(cur.maps[pi + 1], keep_j);
      cur.objects[pi] = keep_i.source();
      cur.objects[pi + 1] = keep_j.source();
      cur.maps[pi - 1] = before;
      cur.maps[pi] = middle;
      cur.maps[pi + 1] = after;
      changed = true;
      break;
    }
  }
  cur.validate();
  return cur;
}

}  // namespace hcot
