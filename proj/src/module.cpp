#include "hcot/module.hpp"

#include <numeric>
#include <sstream>

#include "hcot/errors.hpp"

namespace hcot {

std::uint64_t bounded_power(std::uint64_t p, std::size_t dim, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (r > cap / p) return 0;
    r *= p;
  }
  return r <= cap ? r : 0;
}

bool for_each_vector(const PrimeField& f, std::size_t dim, std::uint64_t cap,
                     const std::function<bool(const std::vector<Scalar>&)>& fn) {
  if (bounded_power(f.p(), dim, cap) == 0) return false;
  std::vector<Scalar> v(dim, 0);
  while (true) {
    if (!fn(v)) return true;
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (++v[i] < f.p()) break;
      v[i] = 0;
      if (i == 0) return true;
    }
    if (dim == 0) return true;
  }
}

// ---------------------------------------------------------------- Module

Module::Module(AlgebraPtr algebra, std::vector<std::size_t> dims,
               std::vector<Mat> arrow_mats, std::string label)
    : algebra_(std::move(algebra)), dims_(std::move(dims)),
      mats_(std::move(arrow_mats)), label_(std::move(label)) {
  if (!algebra_) throw ContractViolation("module without algebra");
  const auto& A = *algebra_;
  if (static_cast<int>(dims_.size()) != A.vertex_count())
    throw ContractViolation("dimension vector has wrong length");
  if (mats_.size() != A.arrow_count())
    throw ContractViolation("wrong number of arrow matrices");
  for (std::size_t x = 0; x < mats_.size(); ++x) {
    const auto& a = A.arrow(x);
    if (mats_[x].rows() != dims_[a.target] || mats_[x].cols() != dims_[a.source])
      throw ContractViolation("arrow " + std::to_string(a.id) +
                              " matrix has shape " +
                              std::to_string(mats_[x].rows()) + "x" +
                              std::to_string(mats_[x].cols()) + ", expected " +
                              std::to_string(dims_[a.target]) + "x" +
                              std::to_string(dims_[a.source]));
    if (!(mats_[x].field() == A.field()))
      throw ContractViolation("arrow matrix over the wrong field");
  }
  const auto& f = A.field();
  for (std::size_t r = 0; r < A.relations().size(); ++r) {
    const auto& rel = A.relations()[r];
    if (rel.terms.empty()) continue;
    std::optional<Mat> acc;
    for (const auto& t : rel.terms) {
      std::vector<std::size_t> arrows;
      for (int id : t.arrow_ids) arrows.push_back(A.quiver().arrow_index(id));
      int src = A.arrow(arrows.front()).source;
      Mat pm = path_matrix(arrows, src).scaled(f.reduce(t.coefficient));
      acc = acc ? *acc + pm : pm;
    }
    if (!acc->is_zero())
      throw RelationViolated("relation " + std::to_string(r) +
                             " does not vanish on the representation");
  }
}

Module Module::zero(AlgebraPtr algebra) {
  std::vector<std::size_t> dims(algebra->vertex_count(), 0);
  std::vector<Mat> mats;
  for (std::size_t x = 0; x < algebra->arrow_count(); ++x)
    mats.emplace_back(0, 0, algebra->field());
  return Module(std::move(algebra), dims, mats, "0");
}

std::size_t Module::total_dim() const noexcept {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Mat Module::path_matrix(const std::vector<std::size_t>& arrows, int source) const {
  Mat m = Mat::identity(dims_.at(source), field());
  for (auto a : arrows) m = mats_.at(a) * m;
  return m;
}

Module Module::with_label(std::string label) const {
  Module m = *this;
  m.label_ = std::move(label);
  return m;
}

std::string Module::display_name() const {
  if (!label_.empty()) return label_;
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
  os << ")";
  return os.str();
}

bool Module::same_as(const Module& o) const noexcept {
  return algebra_ == o.algebra_ && dims_ == o.dims_ && mats_ == o.mats_;
}

// ------------------------------------------------------------- ModuleMap

ModuleMap::ModuleMap(Module source, Module target, std::vector<Mat> vertex_mats)
    : source_(std::move(source)), target_(std::move(target)),
      mats_(std::move(vertex_mats)) {
  if (source_.algebra() != target_.algebra())
    throw ContractViolation("module map between different algebras");
  const auto& A = *source_.algebra();
  if (static_cast<int>(mats_.size()) != A.vertex_count())
    throw ContractViolation("module map has wrong number of vertex matrices");
  for (int v = 0; v < A.vertex_count(); ++v)
    if (mats_[v].rows() != target_.dim(v) || mats_[v].cols() != source_.dim(v))
      throw ContractViolation("vertex matrix shape mismatch at vertex " +
                              std::to_string(v));
  for (std::size_t x = 0; x < A.arrow_count(); ++x) {
    const auto& a = A.arrow(x);
    if (!(target_.arrow_mat(x) * mats_[a.source] == mats_[a.target] * source_.arrow_mat(x)))
      throw ContractViolation("vertex matrices do not commute with arrow " +
                              std::to_string(a.id));
  }
}

ModuleMap ModuleMap::zero(const Module& source, const Module& target) {
  std::vector<Mat> mats;
  for (int v = 0; v < source.algebra()->vertex_count(); ++v)
    mats.emplace_back(target.dim(v), source.dim(v), source.field());
  return ModuleMap(source, target, std::move(mats));
}

ModuleMap ModuleMap::identity(const Module& m) {
  std::vector<Mat> mats;
  for (int v = 0; v < m.algebra()->vertex_count(); ++v)
    mats.push_back(Mat::identity(m.dim(v), m.field()));
  return ModuleMap(m, m, std::move(mats));
}

bool ModuleMap::is_zero() const noexcept {
  for (const auto& m : mats_)
    if (!m.is_zero()) return false;
  return true;
}

bool ModuleMap::is_injective() const {
  for (std::size_t v = 0; v < mats_.size(); ++v)
    if (hcot::rank(mats_[v]) != mats_[v].cols()) return false;
  return true;
}

bool ModuleMap::is_surjective() const {
  for (std::size_t v = 0; v < mats_.size(); ++v)
    if (hcot::rank(mats_[v]) != mats_[v].rows()) return false;
  return true;
}

bool ModuleMap::is_isomorphism() const {
  for (const auto& m : mats_)
    if (!m.is_square() || hcot::rank(m) != m.rows()) return false;
  return true;
}

std::optional<ModuleMap> ModuleMap::inverse() const {
  std::vector<Mat> inv;
  for (const auto& m : mats_) {
    auto i = hcot::inverse(m);
    if (!i) return std::nullopt;
    inv.push_back(*i);
  }
  return ModuleMap(target_, source_, std::move(inv));
}

std::size_t ModuleMap::rank() const {
  std::size_t r = 0;
  for (const auto& m : mats_) r += hcot::rank(m);
  return r;
}

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
  std::vector<Mat> m;
  for (std::size_t v = 0; v < mats_.size(); ++v) m.push_back(mats_[v] + o.mats_.at(v));
  return ModuleMap(source_, target_, std::move(m));
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
  std::vector<Mat> m;
  for (std::size_t v = 0; v < mats_.size(); ++v) m.push_back(mats_[v] - o.mats_.at(v));
  return ModuleMap(source_, target_, std::move(m));
}

ModuleMap ModuleMap::operator-() const {
  std::vector<Mat> m;
  for (const auto& x : mats_) m.push_back(-x);
  return ModuleMap(source_, target_, std::move(m));
}

ModuleMap ModuleMap::scaled(Scalar s) const {
  std::vector<Mat> m;
  for (const auto& x : mats_) m.push_back(x.scaled(s));
  return ModuleMap(source_, target_, std::move(m));
}

bool ModuleMap::operator==(const ModuleMap& o) const noexcept {
  return source_.same_as(o.source_) && target_.same_as(o.target_) && mats_ == o.mats_;
}

std::vector<Scalar> ModuleMap::flatten() const {
  std::vector<Scalar> out;
  for (const auto& m : mats_) out.insert(out.end(), m.data().begin(), m.data().end());
  return out;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (f.target().dims() != g.source().dims() ||
      f.target().algebra() != g.source().algebra())
    throw ContractViolation("compose: maps are not composable");
  std::vector<Mat> m;
  for (std::size_t v = 0; v < f.vertex_mats().size(); ++v)
    m.push_back(g.at(static_cast<int>(v)) * f.at(static_cast<int>(v)));
  return ModuleMap(f.source(), g.target(), std::move(m));
}

// ------------------------------------------------------------------- Hom

std::vector<Scalar> HomSpace::coords(const ModuleMap& f) const {
  auto flat_f = f.flatten();
  if (basis.empty()) {
    for (auto v : flat_f)
      if (v) throw ContractViolation("coords: map not in Hom space");
    return {};
  }
  auto x = solve(flat, Mat::column(flat_f, source.field()));
  if (!x) throw ContractViolation("coords: map not in Hom space");
  return x->column_vector(0);
}

ModuleMap HomSpace::combination(const std::vector<Scalar>& coeffs) const {
  ModuleMap acc = ModuleMap::zero(source, target);
  for (std::size_t i = 0; i < basis.size() && i < coeffs.size(); ++i)
    if (coeffs[i]) acc = acc + basis[i].scaled(coeffs[i]);
  return acc;
}

HomSpace hom_basis(const Module& m, const Module& n) {
  if (m.algebra() != n.algebra())
    throw ContractViolation("hom_basis: modules over different algebras");
  const auto& A = *m.algebra();
  const auto& f = A.field();
  const int V = A.vertex_count();
  std::vector<std::size_t> off(V + 1, 0);
  for (int v = 0; v < V; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = off[V];
  std::size_t eqs = 0;
  for (std::size_t x = 0; x < A.arrow_count(); ++x)
    eqs += n.dim(A.arrow(x).target) * m.dim(A.arrow(x).source);
  Mat sys(eqs, unknowns, f);
  std::size_t row = 0;
  for (std::size_t x = 0; x < A.arrow_count(); ++x) {
    const int i = A.arrow(x).source, j = A.arrow(x).target;
    const Mat& Nx = n.arrow_mat(x);
    const Mat& Mx = m.arrow_mat(x);
    const std::size_t mi = m.dim(i), mj = m.dim(j), nj = n.dim(j), ni = n.dim(i);
    for (std::size_t r = 0; r < nj; ++r) {
      for (std::size_t c = 0; c < mi; ++c, ++row) {
        // (N_x f_i)(r,c) = sum_k N_x(r,k) f_i(k,c)
        for (std::size_t k = 0; k < ni; ++k)
          sys(row, off[i] + k * mi + c) = f.add(sys(row, off[i] + k * mi + c), Nx(r, k));
        // -(f_j M_x)(r,c) = -sum_k f_j(r,k) M_x(k,c)
        for (std::size_t k = 0; k < mj; ++k)
          sys(row, off[j] + r * mj + k) =
              f.sub(sys(row, off[j] + r * mj + k), Mx(k, c));
      }
    }
  }
  Mat K = kernel_basis(sys);
  HomSpace h{m, n, {}, K};
  for (std::size_t t = 0; t < K.cols(); ++t) {
    std::vector<Mat> mats;
    for (int v = 0; v < V; ++v) {
      Mat fv(n.dim(v), m.dim(v), f);
      for (std::size_t r = 0; r < n.dim(v); ++r)
        for (std::size_t c = 0; c < m.dim(v); ++c)
          fv(r, c) = K(off[v] + r * m.dim(v) + c, t);
      mats.push_back(std::move(fv));
    }
    h.basis.emplace_back(m, n, std::move(mats));
  }
  return h;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).dim(); }

Mat hom_precompose(const HomSpace& from, const ModuleMap& d, const HomSpace& into) {
  Mat out(into.dim(), from.dim(), from.source.field());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    auto c = into.coords(compose(from.basis[j], d));
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}

Mat hom_postcompose(const HomSpace& from, const ModuleMap& d, const HomSpace& into) {
  Mat out(into.dim(), from.dim(), from.source.field());
  for (std::size_t j = 0; j < from.dim(); ++j) {
    auto c = into.coords(compose(d, from.basis[j]));
    for (std::size_t i = 0; i < c.size(); ++i) out(i, j) = c[i];
  }
  return out;
}


// ------------------------------------------------- sub/quotient/factorization

ModuleMap submodule(const Module& m, const std::vector<Mat>& spans) {
  const auto& A = *m.algebra();
  const int V = A.vertex_count();
  std::vector<Mat> basis;
  std::vector<std::size_t> dims;
  for (int v = 0; v < V; ++v) {
    Mat b = spans.at(v).cols() ? column_space_basis(spans[v])
                               : Mat(m.dim(v), 0, m.field());
    dims.push_back(b.cols());
    basis.push_back(std::move(b));
  }
  std::vector<Mat> mats;
  for (std::size_t x = 0; x < A.arrow_count(); ++x) {
    const int i = A.arrow(x).source, j = A.arrow(x).target;
    Mat img = m.arrow_mat(x) * basis[i];
    auto act = solve(basis[j], img);
    if (!act) throw ContractViolation("submodule: span is not arrow-stable");
    mats.push_back(*act);
  }
  Module sub(m.algebra(), dims, std::move(mats));
  return ModuleMap(sub, m, std::move(basis));
}

ModuleMap quotient_by(const Module& m, const std::vector<Mat>& spans) {
  const auto& A = *m.algebra();
  const int V = A.vertex_count();
  std::vector<Mat> q, s;
  std::vector<std::size_t> dims;
  for (int v = 0; v < V; ++v) {
    Mat b = spans.at(v).cols() ? column_space_basis(spans[v])
                               : Mat(m.dim(v), 0, m.field());
    Mat qv = left_kernel_rows(b);
    if (qv.cols() != m.dim(v)) qv = Mat(0, m.dim(v), m.field());
    auto sv = solve(qv, Mat::identity(qv.rows(), m.field()));
    dims.push_back(qv.rows());
    q.push_back(std::move(qv));
    s.push_back(*sv);
  }
  std::vector<Mat> mats;
  for (std::size_t x = 0; x < A.arrow_count(); ++x) {
    const int i = A.arrow(x).source, j = A.arrow(x).target;
    mats.push_back(q[j] * m.arrow_mat(x) * s[i]);
  }
  Module quo(m.algebra(), dims, std::move(mats));
  return ModuleMap(m, quo, std::move(q));
}

ModuleMap restrict_map(const ModuleMap& f, const ModuleMap& into_a,
                       const ModuleMap& into_b) {
  std::vector<Mat> mats;
  const int V = f.source().algebra()->vertex_count();
  for (int v = 0; v < V; ++v) {
    auto g = solve(into_b.at(v), f.at(v) * into_a.at(v));
    if (!g) throw ContractViolation("restrict_map: image leaves the subobject");
    mats.push_back(*g);
  }
  return ModuleMap(into_a.source(), into_b.source(), std::move(mats));
}

ModuleMap descend_map(const ModuleMap& f, const ModuleMap& proj) {
  std::vector<Mat> mats;
  const int V = f.source().algebra()->vertex_count();
  for (int v = 0; v < V; ++v) {
    auto gt = solve(proj.at(v).transpose(), f.at(v).transpose());
    if (!gt) throw ContractViolation("descend_map: map does not factor");
    mats.push_back(gt->transpose());
  }
  return ModuleMap(proj.target(), f.target(), std::move(mats));
}

Factorization map_factorization(const ModuleMap& f) {
  const int V = f.source().algebra()->vertex_count();
  std::vector<Mat> ker, img;
  for (int v = 0; v < V; ++v) {
    ker.push_back(kernel_basis(f.at(v)));
    img.push_back(f.at(v));
  }
  Factorization out;
  out.kernel = submodule(f.source(), ker);
  out.image_inclusion = submodule(f.target(), img);
  out.image = out.image_inclusion.source();
  std::vector<Mat> co;
  for (int v = 0; v < V; ++v) co.push_back(*solve(out.image_inclusion.at(v), f.at(v)));
  out.coimage = ModuleMap(f.source(), out.image, std::move(co));
  out.cokernel = quotient_by(f.target(), img);
  return out;
}

// ------------------------------------------------------------ direct sums

DirectSum direct_sum(const std::vector<Module>& ms, const AlgebraPtr& algebra) {
  const auto& A = *algebra;
  const auto& f = A.field();
  const int V = A.vertex_count();
  std::vector<std::size_t> dims(V, 0);
  for (const auto& m : ms) {
    if (m.algebra() != algebra) throw ContractViolation("direct_sum: mixed algebras");
    for (int v = 0; v < V; ++v) dims[v] += m.dim(v);
  }
  std::vector<Mat> mats;
  for (std::size_t x = 0; x < A.arrow_count(); ++x) {
    std::vector<Mat> parts;
    for (const auto& m : ms) parts.push_back(m.arrow_mat(x));
    Mat d = Mat::diag(parts, f);
    const int i = A.arrow(x).source, j = A.arrow(x).target;
    if (d.rows() != dims[j] || d.cols() != dims[i]) d = Mat(dims[j], dims[i], f);
    mats.push_back(std::move(d));
  }
  std::string label;
  for (std::size_t k = 0; k < ms.size(); ++k)
    label += (k ? "+" : "") + ms[k].display_name();
  DirectSum ds{Module(algebra, dims, std::move(mats), ms.empty() ? "0" : label), {}, {}};
  std::vector<std::size_t> off(V, 0);
  for (const auto& m : ms) {
    std::vector<Mat> inj, proj;
    for (int v = 0; v < V; ++v) {
      Mat i(dims[v], m.dim(v), f), p(m.dim(v), dims[v], f);
      for (std::size_t k = 0; k < m.dim(v); ++k) {
        i(off[v] + k, k) = 1;
        p(k, off[v] + k) = 1;
      }
      inj.push_back(std::move(i));
      proj.push_back(std::move(p));
      off[v] += m.dim(v);
    }
    ds.injections.emplace_back(m, ds.sum, std::move(inj));
    ds.projections.emplace_back(ds.sum, m, std::move(proj));
  }
  return ds;
}

DirectSum direct_sum(const std::vector<Module>& ms) {
  if (ms.empty()) throw ContractViolation("direct_sum of no modules needs an algebra");
  return direct_sum(ms, ms.front().algebra());
}

ModuleMap block_map(const DirectSum& source, const DirectSum& target,
                    const std::vector<std::vector<ModuleMap>>& blocks) {
  ModuleMap acc = ModuleMap::zero(source.sum, target.sum);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks[i].size(); ++j)
      if (!blocks[i][j].is_zero())
        acc = acc + compose(target.injections[i], compose(blocks[i][j], source.projections[j]));
  return acc;
}

Square pushout(const ModuleMap& f, const ModuleMap& g) {
  auto ds = direct_sum({f.target(), g.target()});
  ModuleMap phi = compose(ds.injections[0], f) - compose(ds.injections[1], g);
  auto fac = map_factorization(phi);
  return {fac.cokernel.target(), compose(fac.cokernel, ds.injections[0]),
          compose(fac.cokernel, ds.injections[1])};
}

Square pullback(const ModuleMap& f, const ModuleMap& g) {
  auto ds = direct_sum({f.source(), g.source()});
  ModuleMap psi = compose(f, ds.projections[0]) - compose(g, ds.projections[1]);
  auto fac = map_factorization(psi);
  return {fac.kernel.source(), compose(ds.projections[0], fac.kernel),
          compose(ds.projections[1], fac.kernel)};
}

// ----------------------------------------------------------------- duality

namespace {
std::string dual_label(const std::string& l) {
  if (l.empty() || l == "0") return l;
  if (l.size() > 3 && l.rfind("D(", 0) == 0 && l.back() == ')') return l.substr(2, l.size() - 3);
  return "D(" + l + ")";
}
}  // namespace

Module dual(const Module& m) {
  auto op = m.algebra()->opposite();
  std::vector<Mat> mats;
  for (const auto& x : m.arrow_mats()) mats.push_back(x.transpose());
  return Module(op, m.dims(), std::move(mats), dual_label(m.label()));
}

ModuleMap dual(const ModuleMap& f) {
  std::vector<Mat> mats;
  for (const auto& x : f.vertex_mats()) mats.push_back(x.transpose());
  return ModuleMap(dual(f.target()), dual(f.source()), std::move(mats));
}

// ------------------------------------------------------------- top / socle

std::vector<Mat> radical_spans(const Module& m) {
  const auto& A = *m.algebra();
  std::vector<Mat> spans;
  for (int v = 0; v < A.vertex_count(); ++v) {
    std::vector<Mat> parts;
    for (std::size_t x = 0; x < A.arrow_count(); ++x)
      if (A.arrow(x).target == v) parts.push_back(m.arrow_mat(x));
    spans.push_back(Mat::hstack(parts, m.dim(v), m.field()));
  }
  return spans;
}

std::vector<std::size_t> top_dims(const Module& m) {
  auto spans = radical_spans(m);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < spans.size(); ++v)
    out.push_back(m.dim(static_cast<int>(v)) - rank(spans[v]));
  return out;
}

std::vector<std::size_t> socle_dims(const Module& m) {
  const auto& A = *m.algebra();
  std::vector<std::size_t> out;
  for (int v = 0; v < A.vertex_count(); ++v) {
    std::vector<Mat> parts;
    for (std::size_t x = 0; x < A.arrow_count(); ++x)
      if (A.arrow(x).source == v) parts.push_back(m.arrow_mat(x));
    Mat st = Mat::vstack(parts, m.dim(v), m.field());
    out.push_back(m.dim(v) - rank(st));
  }
  return out;
}

// -------------------------------------------------------------- factoring

std::optional<ModuleMap> factor_through_right(const ModuleMap& h, const ModuleMap& u) {
  auto H = hom_basis(h.source(), u.source());
  auto target = h.flatten();
  if (H.dim() == 0) {
    if (h.is_zero()) return ModuleMap::zero(h.source(), u.source());
    return std::nullopt;
  }
  std::vector<Mat> cols;
  for (const auto& b : H.basis) cols.push_back(Mat::column(compose(u, b).flatten(), h.source().field()));
  Mat sys = Mat::hstack(cols, target.size(), h.source().field());
  auto x = solve(sys, Mat::column(target, h.source().field()));
  if (!x) return std::nullopt;
  return H.combination(x->column_vector(0));
}

std::optional<ModuleMap> factor_through_left(const ModuleMap& h, const ModuleMap& u) {
  auto H = hom_basis(u.target(), h.target());
  auto target = h.flatten();
  if (H.dim() == 0) {
    if (h.is_zero()) return ModuleMap::zero(u.target(), h.target());
    return std::nullopt;
  }
  std::vector<Mat> cols;
  for (const auto& b : H.basis) cols.push_back(Mat::column(compose(b, u).flatten(), h.source().field()));
  Mat sys = Mat::hstack(cols, target.size(), h.source().field());
  auto x = solve(sys, Mat::column(target, h.source().field()));
  if (!x) return std::nullopt;
  return H.combination(x->column_vector(0));
}

ModuleMap random_map(const HomSpace& hom, Rng& rng) {
  std::vector<Scalar> c(hom.dim());
  for (auto& v : c) v = rng.scalar(hom.source.field());
  return hom.combination(c);
}

ModuleMap change_of_basis(const Module& m, const std::vector<Mat>& change) {
  const auto& A = *m.algebra();
  std::vector<Mat> inv;
  for (const auto& t : change) {
    auto i = inverse(t);
    if (!i) throw ContractViolation("change_of_basis: matrix not invertible");
    inv.push_back(*i);
  }
  std::vector<Mat> mats;
  for (std::size_t x = 0; x < A.arrow_count(); ++x)
    mats.push_back(change[A.arrow(x).target] * m.arrow_mat(x) * inv[A.arrow(x).source]);
  Module out(m.algebra(), m.dims(), std::move(mats), m.label());
  return ModuleMap(m, out, change);
}

ModuleMap random_change_of_basis(const Module& m, Rng& rng) {
  std::vector<Mat> change;
  for (int v = 0; v < m.algebra()->vertex_count(); ++v) {
    while (true) {
      Mat t(m.dim(v), m.dim(v), m.field());
      for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) = rng.scalar(m.field());
      if (rank(t) == t.rows()) {
        change.push_back(std::move(t));
        break;
      }
    }
  }
  return change_of_basis(m, change);
}

}  // namespace hcot
