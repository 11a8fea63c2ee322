#include "hcot/decompose.hpp"

#include <numeric>
#include <set>

#include "hcot/errors.hpp"
#include "hcot/poly.hpp"

namespace hcot {

namespace {

ModuleMap map_from_flat(const Module& s, const Module& t, const Mat& col, std::size_t c) {
  std::vector<Mat> mats;
  std::size_t k = 0;
  for (int v = 0; v < s.algebra()->vertex_count(); ++v) {
    Mat m(t.dim(v), s.dim(v), s.field());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t q = 0; q < m.cols(); ++q) m(r, q) = col(k++, c);
    mats.push_back(std::move(m));
  }
  return ModuleMap(s, t, std::move(mats));
}

std::size_t flat_size(const Module& s, const Module& t) {
  std::size_t n = 0;
  for (int v = 0; v < s.algebra()->vertex_count(); ++v) n += s.dim(v) * t.dim(v);
  return n;
}

std::size_t sum(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{0});
}

// Eigenvalue candidates of an endomorphism in GF(p).
std::vector<Scalar> eigen_candidates(const ModuleMap& f, Rng& rng) {
  std::set<Scalar> out;
  const auto& field = f.source().field();
  for (const auto& m : f.vertex_mats()) {
    if (m.rows() == 0) continue;
    for (auto r : poly_roots(char_poly(m), field, rng)) out.insert(r);
  }
  return {out.begin(), out.end()};
}

ModuleMap shift(const ModuleMap& f, Scalar lambda) {
  if (!lambda) return f;
  return f - ModuleMap::identity(f.source()).scaled(lambda);
}

// Non-trivial Fitting splitter: ψ with 0 < rank ψ^N < N.
bool splits(const ModuleMap& psi) {
  const std::size_t n = psi.source().total_dim();
  std::size_t r = map_power(psi, n).rank();
  return r > 0 && r < n;
}

struct Analysis {
  std::optional<ModuleMap> splitter;
  std::string certificate;
};

Analysis analyze(const Module& m, const Options& opt, Rng& rng) {
  if (sum(top_dims(m)) == 1) return {std::nullopt, "simple top"};
  if (sum(socle_dims(m)) == 1) return {std::nullopt, "simple socle"};
  HomSpace end = hom_basis(m, m);
  if (end.dim() == 1) return {std::nullopt, "one-dimensional endomorphism ring"};

  std::vector<ModuleMap> nilparts;
  bool all_scalar_plus_nilpotent = true;
  for (const auto& f : end.basis) {
    bool found = false;
    for (Scalar lambda : eigen_candidates(f, rng)) {
      ModuleMap psi = shift(f, lambda);
      if (splits(psi)) return {psi, ""};
      if (is_nilpotent(psi)) {
        nilparts.push_back(psi);
        found = true;
      }
    }
    if (!found) all_scalar_plus_nilpotent = false;
  }
  if (all_scalar_plus_nilpotent && generates_nilpotent(nilparts, m))
    return {std::nullopt, "local endomorphism ring (scalars plus a nilpotent ideal)"};

  const auto& field = m.field();
  if (bounded_power(field.p(), end.dim(), opt.enumeration_cap)) {
    std::optional<ModuleMap> hit;
    for_each_vector(field, end.dim(), opt.enumeration_cap, [&](const std::vector<Scalar>& c) {
      ModuleMap f = end.combination(c);
      if (splits(f)) {
        hit = f;
        return false;
      }
      return true;
    });
    if (hit) return {hit, ""};
    return {std::nullopt, "endomorphism ring enumerated: every element nilpotent or invertible"};
  }
  for (int t = 0; t < opt.trial_budget; ++t) {
    ModuleMap f = random_map(end, rng);
    for (Scalar lambda : eigen_candidates(f, rng)) {
      ModuleMap psi = shift(f, lambda);
      if (splits(psi)) return {psi, ""};
    }
  }
  throw DecompositionInconclusive("could not split or certify " + m.display_name() +
                                  " (End has dimension " + std::to_string(end.dim()) + ")");
}

struct Piece {
  Module module;
  ModuleMap inclusion;
  ModuleMap projection;
};

void split_into(const Module& m, const ModuleMap& incl, const ModuleMap& proj,
                std::vector<Piece>& out, const Options& opt, Rng& rng) {
  auto a = analyze(m, opt, rng);
  if (!a.splitter) {
    out.push_back({m, incl, proj});
    return;
  }
  auto fs = fitting_split(*a.splitter);
  split_into(fs.image_inclusion.source(), compose(incl, fs.image_inclusion),
             compose(fs.image_projection, proj), out, opt, rng);
  split_into(fs.kernel_inclusion.source(), compose(incl, fs.kernel_inclusion),
             compose(fs.kernel_projection, proj), out, opt, rng);
}

}  // namespace

ModuleMap map_power(const ModuleMap& f, std::size_t k) {
  ModuleMap result = ModuleMap::identity(f.source());
  ModuleMap base = f;
  while (k) {
    if (k & 1) result = compose(result, base);
    k >>= 1;
    if (k) base = compose(base, base);
  }
  return result;
}

bool is_nilpotent(const ModuleMap& f) {
  return map_power(f, f.source().total_dim()).is_zero();
}

std::vector<ModuleMap> span_basis(const std::vector<ModuleMap>& maps, const Module& s,
                                  const Module& t) {
  const std::size_t n = flat_size(s, t);
  if (maps.empty() || n == 0) return {};
  std::vector<Mat> cols;
  for (const auto& f : maps) cols.push_back(Mat::column(f.flatten(), s.field()));
  Mat all = Mat::hstack(cols, n, s.field());
  Mat b = column_space_basis(all);
  std::vector<ModuleMap> out;
  for (std::size_t c = 0; c < b.cols(); ++c) out.push_back(map_from_flat(s, t, b, c));
  return out;
}

bool generates_nilpotent(const std::vector<ModuleMap>& gens, const Module& x) {
  auto g = span_basis(gens, x, x);
  auto t = g;
  const std::size_t n = x.total_dim();
  for (std::size_t k = 1; k <= n; ++k) {
    if (t.empty()) return true;
    std::vector<ModuleMap> next;
    for (const auto& a : t)
      for (const auto& b : g) next.push_back(compose(a, b));
    t = span_basis(next, x, x);
  }
  return t.empty();
}

std::optional<ModuleMap> find_non_nilpotent(const std::vector<ModuleMap>& ideal,
                                            const Module& x, const Options& opt, Rng& rng) {
  auto b = span_basis(ideal, x, x);
  for (const auto& f : b)
    if (!is_nilpotent(f)) return f;
  for (const auto& f : b)
    for (const auto& g : b) {
      auto h = compose(f, g);
      if (!is_nilpotent(h)) return h;
    }
  auto combo = [&](const std::vector<Scalar>& c) {
    ModuleMap acc = ModuleMap::zero(x, x);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (c[i]) acc = acc + b[i].scaled(c[i]);
    return acc;
  };
  const auto& field = x.field();
  if (bounded_power(field.p(), b.size(), opt.enumeration_cap)) {
    std::optional<ModuleMap> hit;
    for_each_vector(field, b.size(), opt.enumeration_cap, [&](const std::vector<Scalar>& c) {
      auto f = combo(c);
      if (!is_nilpotent(f)) {
        hit = f;
        return false;
      }
      return true;
    });
    return hit;
  }
  for (int t = 0; t < opt.trial_budget; ++t) {
    std::vector<Scalar> c(b.size());
    for (auto& v : c) v = rng.scalar(field);
    auto f = combo(c);
    if (!is_nilpotent(f)) return f;
  }
  return std::nullopt;
}

FittingSplit fitting_split(const ModuleMap& psi) {
  const Module& x = psi.source();
  ModuleMap q = map_power(psi, x.total_dim());
  const int V = x.algebra()->vertex_count();
  std::vector<Mat> im, ker;
  for (int v = 0; v < V; ++v) {
    im.push_back(q.at(v));
    ker.push_back(kernel_basis(q.at(v)));
  }
  FittingSplit s;
  s.image_inclusion = submodule(x, im);
  s.kernel_inclusion = submodule(x, ker);
  std::vector<Mat> pim, pker;
  for (int v = 0; v < V; ++v) {
    Mat both = Mat::hstack({s.image_inclusion.at(v), s.kernel_inclusion.at(v)}, x.dim(v),
                           x.field());
    auto inv = inverse(both);
    if (!inv) throw ContractViolation("fitting_split: image and kernel do not span");
    std::size_t a = s.image_inclusion.at(v).cols();
    pim.push_back(inv->block(0, 0, a, x.dim(v)));
    pker.push_back(inv->block(a, 0, x.dim(v) - a, x.dim(v)));
  }
  s.image_projection = ModuleMap(x, s.image_inclusion.source(), std::move(pim));
  s.kernel_projection = ModuleMap(x, s.kernel_inclusion.source(), std::move(pker));
  return s;
}

std::vector<Summand> decompose(const Module& m, const Options& opt) {
  std::vector<Summand> out;
  if (m.is_zero()) return out;
  Rng rng(opt.seed ^ 0xDEC0u);
  std::vector<Piece> pieces;
  split_into(m, ModuleMap::identity(m), ModuleMap::identity(m), pieces, opt, rng);
  if (pieces.size() == 1) pieces[0].module = m;
  for (auto& pc : pieces) {
    bool placed = false;
    for (auto& s : out) {
      auto iso = is_isomorphic(pc.module, s.module, opt);
      if (!iso) continue;
      auto inv = iso->inverse();
      s.inclusions.push_back(compose(pc.inclusion, *inv));
      s.projections.push_back(compose(*iso, pc.projection));
      s.multiplicity++;
      placed = true;
      break;
    }
    if (!placed) {
      Module rep = pc.module;
      out.push_back({rep, 1, {pc.inclusion}, {pc.projection}});
    }
  }
  return out;
}

std::string indecomposability_certificate(const Module& m, const Options& opt) {
  if (m.is_zero()) return "";
  Rng rng(opt.seed ^ 0xDEC0u);
  auto a = analyze(m, opt, rng);
  return a.splitter ? "" : a.certificate;
}

bool is_indecomposable(const Module& m, const Options& opt) {
  return !indecomposability_certificate(m, opt).empty();
}

std::optional<ModuleMap> is_isomorphic(const Module& m, const Module& n, const Options& opt) {
  if (m.algebra() != n.algebra())
    throw ContractViolation("is_isomorphic: modules over different algebras");
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.same_as(n)) return ModuleMap::identity(m);
  if (top_dims(m) != top_dims(n) || socle_dims(m) != socle_dims(n)) return std::nullopt;
  HomSpace h = hom_basis(m, n);
  HomSpace back = hom_basis(n, m);
  const std::size_t end_dim = hom_dim(m, m);
  if (h.dim() != end_dim || back.dim() != end_dim || hom_dim(n, n) != end_dim)
    return std::nullopt;
  for (const auto& f : h.basis)
    if (f.is_isomorphism()) return f;
  const auto& field = m.field();
  if (bounded_power(field.p(), h.dim(), opt.enumeration_cap)) {
    std::optional<ModuleMap> hit;
    for_each_vector(field, h.dim(), opt.enumeration_cap, [&](const std::vector<Scalar>& c) {
      auto f = h.combination(c);
      if (f.is_isomorphism()) {
        hit = f;
        return false;
      }
      return true;
    });
    return hit;
  }
  // An isomorphism f gives id = f^{-1} f in Hom(n,m)∘Hom(m,n).
  std::vector<ModuleMap> products;
  for (const auto& g : back.basis)
    for (const auto& f : h.basis) products.push_back(compose(g, f));
  if (generates_nilpotent(products, m)) return std::nullopt;
  Rng rng(opt.seed ^ 0x150u);
  for (int t = 0; t < opt.trial_budget; ++t) {
    auto f = random_map(h, rng);
    if (f.is_isomorphism()) return f;
  }
  throw IsoInconclusive("no isomorphism found between " + m.display_name() + " and " +
                        n.display_name() + " within the trial budget");
}

Subcat Subcat::from_modules(const std::vector<Module>& ms, const Options& opt) {
  Subcat c;
  for (const auto& m : ms)
    for (const auto& s : decompose(m, opt))
      if (!generator_index(s.module, c, opt)) c.generators.push_back(s.module);
  return c;
}

std::string Subcat::describe() const {
  std::string out = "add{";
  for (std::size_t i = 0; i < generators.size(); ++i)
    out += (i ? ", " : "") + generators[i].display_name();
  return out + "}";
}

std::optional<std::size_t> generator_index(const Module& m, const Subcat& c,
                                           const Options& opt) {
  for (std::size_t i = 0; i < c.generators.size(); ++i)
    if (is_isomorphic(m, c.generators[i], opt)) return i;
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> in_add(const Module& m, const Subcat& c,
                                               const Options& opt) {
  std::vector<std::size_t> counts(c.size(), 0);
  for (const auto& s : decompose(m, opt)) {
    auto i = generator_index(s.module, c, opt);
    if (!i) return std::nullopt;
    counts[*i] += s.multiplicity;
  }
  return counts;
}

}  // namespace hcot
