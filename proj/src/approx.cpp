#include "hcot/approx.hpp"

#include <algorithm>

#include "hcot/errors.hpp"

namespace hcot {

namespace {

ModuleMap rewrap(const ModuleMap& f, const Module& s, const Module& t) {
  return ModuleMap(s, t, f.vertex_mats());
}

// The right ideal {θ ∈ End(x) : φθ = 0}.
std::vector<ModuleMap> annihilator_ideal(const ModuleMap& phi) {
  const Module& x = phi.source();
  HomSpace end = hom_basis(x, x);
  std::vector<Mat> cols;
  std::size_t len = 0;
  for (const auto& b : end.basis) {
    auto flat = compose(phi, b).flatten();
    len = flat.size();
    cols.push_back(Mat::column(flat, x.field()));
  }
  if (cols.empty()) return {};
  Mat sys = Mat::hstack(cols, len, x.field());
  Mat k = kernel_basis(sys);
  std::vector<ModuleMap> out;
  for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(end.combination(k.column_vector(j)));
  return out;
}

}  // namespace

Module labelled_by(const Module& m, const Subcat& c, const Options& opt) {
  if (m.is_zero()) return m.with_label("0");
  auto counts = in_add(m, c, opt);
  if (!counts) return m;
  std::string label;
  for (std::size_t i = 0; i < counts->size(); ++i)
    for (std::size_t k = 0; k < (*counts)[i]; ++k)
      label += (label.empty() ? "" : "+") + c.generators[i].display_name();
  return m.with_label(label);
}

Subcat dual(const Subcat& c) {
  Subcat d;
  for (const auto& g : c.generators) d.generators.push_back(dual(g));
  return d;
}

ApproxResult right_approx(const Subcat& c, const Module& m, bool force_epi) {
  const auto& alg = m.algebra();
  std::vector<Module> parts;
  std::vector<ModuleMap> legs;
  for (const auto& g : c.generators) {
    if (g.algebra() != alg) throw ContractViolation("right_approx: generator over another algebra");
    for (const auto& b : hom_basis(g, m).basis) {
      parts.push_back(g);
      legs.push_back(b);
    }
  }
  auto build = [&]() {
    auto ds = direct_sum(parts, alg);
    std::vector<Mat> mats;
    for (int v = 0; v < alg->vertex_count(); ++v) {
      std::vector<Mat> cols;
      for (const auto& l : legs) cols.push_back(l.at(v));
      mats.push_back(Mat::hstack(cols, m.dim(v), m.field()));
    }
    return ModuleMap(ds.sum, m, std::move(mats));
  };
  ApproxResult r;
  r.map = build();
  r.surjective = r.map.is_surjective();
  r.certificate = "evaluation map on a basis of Hom(g, m) for every generator g";
  if (force_epi && !r.surjective) {
    bool has_prj = true;
    for (const auto& p : projective_modules(alg))
      if (!generator_index(p, c)) has_prj = false;
    if (has_prj) {
      ModuleMap pc = projective_cover(m);
      parts.push_back(pc.source());
      legs.push_back(pc);
      r.map = build();
      r.surjective = r.map.is_surjective();
    }
  }
  return r;
}

bool is_right_minimal(const ModuleMap& phi, const Options&) {
  auto t = annihilator_ideal(phi);
  return t.empty() || generates_nilpotent(t, phi.source());
}

ApproxResult right_minimalize(const ApproxResult& r, const Options& opt) {
  Rng rng(opt.seed ^ 0x3131u);
  ModuleMap phi = r.map;
  while (true) {
    const Module& x = phi.source();
    if (x.is_zero()) break;
    auto t = annihilator_ideal(phi);
    if (t.empty() || generates_nilpotent(t, x)) break;
    auto theta = find_non_nilpotent(t, x, opt, rng);
    if (!theta)
      throw MinimalityInconclusive("kernel ideal of " + x.display_name() +
                                   " is not nilpotent but no witness was found");
    auto fs = fitting_split(*theta);
    phi = compose(phi, fs.kernel_inclusion);
  }
  ApproxResult out = r;
  out.map = phi;
  out.minimal = true;
  out.surjective = phi.is_surjective();
  out.certificate = r.certificate + "; right ideal {θ : φθ = 0} of End(x) is nilpotent";
  return out;
}

ApproxResult min_right_approx(const Subcat& c, const Module& m, const Options& opt) {
  return right_minimalize(right_approx(c, m), opt);
}

ApproxResult left_approx(const Subcat& c, const Module& m, bool force_mono) {
  auto r = right_approx(dual(c), dual(m), force_mono);
  ModuleMap d = dual(r.map);
  ApproxResult out = r;
  out.map = rewrap(d, m, d.target());
  out.certificate = "coevaluation map on a basis of Hom(m, g) for every generator g";
  return out;
}

ApproxResult left_minimalize(const ApproxResult& r, const Options& opt) {
  ApproxResult op{dual(r.map), false, r.surjective, r.certificate};
  auto mr = right_minimalize(op, opt);
  ModuleMap d = dual(mr.map);
  ApproxResult out = r;
  out.map = rewrap(d, r.map.source(), d.target());
  out.minimal = true;
  out.surjective = out.map.is_injective();
  out.certificate = r.certificate + "; left ideal {θ : θφ = 0} of End(x) is nilpotent";
  return out;
}

ApproxResult min_left_approx(const Subcat& c, const Module& m, const Options& opt) {
  return left_minimalize(left_approx(c, m), opt);
}

// ------------------------------------------------------------ n-kernels

NSequence n_kernel_in(const Subcat& msub, const ModuleMap& f, std::size_t n, const Options& opt) {
  if (n == 0) throw ContractViolation("n_kernel_in: n must be positive");
  const bool epi = f.is_surjective();
  std::vector<Module> rev{f.target(), f.source()};
  std::vector<ModuleMap> rev_maps{f};
  ModuleMap incl = map_factorization(f).kernel;  // K_1 -> x
  for (std::size_t i = 1; i < n; ++i) {
    const Module k = incl.source();
    auto a = min_right_approx(msub, k, opt);
    if (epi && !a.surjective)
      throw ApproxNotSurjective("no surjective add(M)-approximation of the kernel K_" +
                                std::to_string(i));
    Module r = labelled_by(a.map.source(), msub, opt);
    ModuleMap ar = rewrap(a.map, r, k);
    rev.push_back(r);
    rev_maps.push_back(compose(incl, ar));
    incl = map_factorization(ar).kernel;
  }
  Module kn = incl.source();
  if (!in_add(kn, msub, opt))
    throw NKernelEscapesM("the kernel K_" + std::to_string(n) + " (dims " + kn.display_name() +
                          ") is not in " + msub.describe());
  kn = labelled_by(kn, msub, opt);
  rev.push_back(kn);
  rev_maps.push_back(rewrap(incl, kn, incl.target()));
  std::reverse(rev.begin(), rev.end());
  std::reverse(rev_maps.begin(), rev_maps.end());
  NSequence s{n, std::move(rev), std::move(rev_maps)};
  s.validate();
  return s;
}

NSequence n_cokernel_in(const Subcat& msub, const ModuleMap& f, std::size_t n, const Options& opt) {
  NSequence op = n_kernel_in(dual(msub), dual(f), n, opt);
  NSequence s = dual(op);
  // restore the given source and target objects
  s.objects.front() = f.source();
  s.maps.front() = rewrap(s.maps.front(), f.source(), s.objects[1]);
  return s;
}

// ------------------------------------------------------------ n-exactness

CheckReport is_n_exact(const Subcat& msub, const NSequence& s, const Options& opt,
                       bool check_membership) {
  const std::string name = "is_n_exact";
  try {
    s.validate();
  } catch (const Error& e) {
    return CheckReport::fail(name, "not a complex", {{"reason", e.what()}});
  }
  const std::size_t n = s.n;
  auto spot = [&](std::size_t j) { return "m_" + std::to_string(n + 1 - j); };
  if (check_membership) {
    for (std::size_t j = 0; j < s.objects.size(); ++j)
      if (!in_add(s.objects[j], msub, opt))
        return CheckReport::fail(name, "term " + spot(j) + " is not in add(M)",
                                 {{"spot", spot(j)}, {"object", s.objects[j].display_name()}});
  }
  for (const auto& g : msub.generators) {
    std::vector<HomSpace> cov, con;
    for (const auto& o : s.objects) {
      cov.push_back(hom_basis(g, o));
      con.push_back(hom_basis(o, g));
    }
    std::vector<std::size_t> ra, rb;
    for (std::size_t j = 0; j <= n; ++j) {
      ra.push_back(rank(hom_postcompose(cov[j], s.maps[j], cov[j + 1])));
      rb.push_back(rank(hom_precompose(con[j + 1], s.maps[j], con[j])));
    }
    auto fail = [&](const std::string& functor, std::size_t j) {
      return CheckReport::fail(name, functor + " is not exact at " + spot(j),
                               {{"generator", g.display_name()},
                                {"functor", functor},
                                {"spot", spot(j)},
                                {"object", s.objects[j].display_name()}});
    };
    const std::string hg = "Hom(" + g.display_name() + ",-)";
    const std::string hgc = "Hom(-," + g.display_name() + ")";
    if (ra[0] != cov[0].dim()) return fail(hg, 0);
    for (std::size_t j = 1; j <= n; ++j)
      if (ra[j - 1] + ra[j] != cov[j].dim()) return fail(hg, j);
    if (rb[n] != con[n + 1].dim()) return fail(hgc, n + 1);
    for (std::size_t j = 1; j <= n; ++j)
      if (rb[j] + rb[j - 1] != con[j].dim()) return fail(hgc, j);
  }
  return CheckReport::pass(name, "Hom-exact against every generator",
                           {{"generators_checked", msub.size()},
                            {"certified_via", "Hom(g,-) and Hom(-,g) exactness for each generator g, "
                                              "extended to add(M) by additivity"}});
}

ContractibilityResult contractibility(const NSequence& s) {
  ContractibilityResult r;
  const auto& first = s.maps.front();
  const auto& last = s.maps.back();
  r.left_split = factor_through_left(ModuleMap::identity(first.source()), first).has_value();
  r.right_split = factor_through_right(ModuleMap::identity(last.target()), last).has_value();
  return r;
}

CheckReport is_contractible(const NSequence& s) {
  auto c = contractibility(s);
  const std::string name = "is_contractible";
  if (!c.agree()) {
    auto r = CheckReport::inconclusive(
        name, "alarm: retraction and section criteria disagree");
    r.certificate = {{"alarm", true}, {"left_split", c.left_split}, {"right_split", c.right_split}};
    return r;
  }
  if (c.contractible())
    return CheckReport::pass(name, "u_{n+1} is split mono and u_1 is split epi",
                             {{"certified_via", "split mono at the left end, cross-checked "
                                                "by a split epi at the right end"}});
  return CheckReport::fail(name, "not contractible",
                           {{"reason", "u_{n+1} has no retraction and u_1 has no section"}});
}

}  // namespace hcot
