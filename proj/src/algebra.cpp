#include "hcot/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hcot/errors.hpp"

namespace hcot {

std::size_t Quiver::arrow_index(int id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return i;
  throw ContractViolation("unknown arrow id " + std::to_string(id));
}

namespace {

void validate_quiver(const Quiver& q) {
  if (q.vertex_count < 0) throw NotAdmissible("negative vertex count");
  std::set<int> ids;
  for (const auto& a : q.arrows) {
    if (a.source < 0 || a.source >= q.vertex_count || a.target < 0 ||
        a.target >= q.vertex_count)
      throw NotAdmissible("arrow " + std::to_string(a.id) +
                          " has an endpoint out of range");
    if (!ids.insert(a.id).second)
      throw NotAdmissible("duplicate arrow id " + std::to_string(a.id));
  }
}

// All paths of length <= bound, grouped by length, longest first.
std::vector<Path> enumerate_paths(const Quiver& q, int bound) {
  std::vector<std::vector<Path>> by_len(bound + 1);
  for (int v = 0; v < q.vertex_count; ++v) by_len[0].push_back({v, v, {}});
  for (int len = 1; len <= bound; ++len) {
    for (const auto& p : by_len[len - 1]) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != p.target) continue;
        Path ext = p;
        ext.arrows.push_back(a);
        ext.target = q.arrows[a].target;
        by_len[len].push_back(std::move(ext));
      }
    }
  }
  std::vector<Path> out;
  for (int len = bound; len >= 0; --len)
    for (auto& p : by_len[len]) out.push_back(std::move(p));
  return out;
}

}  // namespace

long Algebra::path_index(const Path& p) const {
  // all_paths_ is small at desk scale; a linear scan keeps the class simple.
  for (std::size_t i = 0; i < all_paths_.size(); ++i)
    if (all_paths_[i] == p) return static_cast<long>(i);
  return -1;
}

const std::vector<std::size_t>& Algebra::basis_between(int from, int to) const {
  return between_.at(from).at(to);
}

std::vector<Scalar> Algebra::normal_form(const std::vector<std::size_t>& arrows,
                                         int source) const {
  std::vector<Scalar> out(basis_.size(), 0);
  if (static_cast<int>(arrows.size()) > bound_) return out;
  Path p{source, source, arrows};
  for (auto a : arrows) {
    if (a >= quiver_.arrows.size() || quiver_.arrows[a].source != p.target)
      throw ContractViolation("normal_form: arrows are not composable");
    p.target = quiver_.arrows[a].target;
  }
  long idx = path_index(p);
  if (idx < 0) throw ContractViolation("normal_form: path not enumerated");
  std::vector<Scalar> v(all_paths_.size(), 0);
  v[idx] = 1;
  const auto& f = field_;
  for (std::size_t i = 0; i < ideal_pivots_.size(); ++i) {
    Scalar c = v[ideal_pivots_[i]];
    if (!c) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = f.sub(v[j], f.mul(c, ideal_rref_(i, j)));
  }
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (!v[j]) continue;
    long b = column_to_basis_[j];
    if (b < 0) throw ContractViolation("normal_form left a pivot column");
    out[b] = v[j];
  }
  return out;
}

std::vector<Scalar> Algebra::multiply(std::size_t a, std::size_t b) const {
  const Path& pa = basis_.at(a);
  const Path& pb = basis_.at(b);
  if (pa.target != pb.source) return std::vector<Scalar>(basis_.size(), 0);
  std::vector<std::size_t> arrows = pa.arrows;
  arrows.insert(arrows.end(), pb.arrows.begin(), pb.arrows.end());
  return normal_form(arrows, pa.source);
}

AlgebraPtr Algebra::opposite() const {
  if (auto back = op_of_.lock()) return back;
  std::call_once(op_once_, [this] {
    Quiver q;
    q.vertex_count = quiver_.vertex_count;
    for (const auto& a : quiver_.arrows) q.arrows.push_back({a.id, a.target, a.source});
    std::vector<Relation> rels;
    for (const auto& r : relations_) {
      Relation rr;
      for (const auto& t : r.terms) {
        RelationTerm tt = t;
        std::reverse(tt.arrow_ids.begin(), tt.arrow_ids.end());
        rr.terms.push_back(tt);
      }
      rels.push_back(rr);
    }
    auto op = build_algebra(q, rels, bound_, field_.p());
    const_cast<Algebra&>(*op).op_of_ = weak_from_this();
    op_ = op;
  });
  return op_;
}

AlgebraPtr build_algebra(const Quiver& quiver,
                         const std::vector<Relation>& relations, int bound,
                         std::uint32_t p) {
  validate_quiver(quiver);
  if (bound < 2) throw NotAdmissible("nilpotency bound must be at least 2");
  PrimeField field(p);
  std::shared_ptr<Algebra> alg(new Algebra(quiver, relations, field, bound));
  Algebra& A = *alg;
  A.all_paths_ = enumerate_paths(quiver, bound);

  // Resolve relation terms to arrow-index paths and check admissibility.
  struct Term {
    Scalar coeff;
    Path path;
  };
  std::vector<std::vector<Term>> rels;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    std::vector<Term> terms;
    int src = -1, tgt = -1;
    for (const auto& t : relations[r].terms) {
      if (t.arrow_ids.size() < 2)
        throw NotAdmissible("relation " + std::to_string(r) +
                            " has a term of length < 2");
      Path path;
      for (std::size_t k = 0; k < t.arrow_ids.size(); ++k) {
        std::size_t a = quiver.arrow_index(t.arrow_ids[k]);
        if (k == 0) path.source = path.target = quiver.arrows[a].source;
        if (quiver.arrows[a].source != path.target)
          throw NotAdmissible("relation " + std::to_string(r) +
                              " has a non-composable term");
        path.arrows.push_back(a);
        path.target = quiver.arrows[a].target;
      }
      if (src < 0) {
        src = path.source;
        tgt = path.target;
      } else if (src != path.source || tgt != path.target) {
        throw NotAdmissible("relation " + std::to_string(r) +
                            " mixes non-parallel paths");
      }
      Scalar c = field.reduce(t.coefficient);
      if (c) terms.push_back({c, std::move(path)});
    }
    if (!terms.empty()) rels.push_back(std::move(terms));
  }

  // Ideal generators u·r·v truncated at length `bound`.
  const std::size_t N = A.all_paths_.size();
  std::map<std::pair<int, std::vector<std::size_t>>, std::size_t> index;
  for (std::size_t i = 0; i < N; ++i)
    index[{A.all_paths_[i].source, A.all_paths_[i].arrows}] = i;
  std::vector<std::vector<Scalar>> gens;
  for (const auto& terms : rels) {
    int rs = terms.front().path.source, rt = terms.front().path.target;
    std::size_t min_len = terms.front().path.length();
    for (const auto& t : terms) min_len = std::min(min_len, t.path.length());
    for (const auto& pre : A.all_paths_) {
      if (pre.target != rs) continue;
      for (const auto& post : A.all_paths_) {
        if (post.source != rt) continue;
        if (pre.length() + min_len + post.length() > static_cast<std::size_t>(bound))
          continue;
        std::vector<Scalar> g(N, 0);
        bool nonzero = false;
        for (const auto& t : terms) {
          std::vector<std::size_t> arrows = pre.arrows;
          arrows.insert(arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
          arrows.insert(arrows.end(), post.arrows.begin(), post.arrows.end());
          if (arrows.size() > static_cast<std::size_t>(bound)) continue;
          std::size_t j = index.at({pre.source, arrows});
          g[j] = field.add(g[j], t.coeff);
          nonzero = nonzero || g[j];
        }
        if (nonzero) gens.push_back(std::move(g));
      }
    }
  }
  Mat G(gens.size(), N, field);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < N; ++j) G(i, j) = gens[i][j];
  auto rr = rref(G);
  A.ideal_rref_ = rr.reduced.block(0, 0, rr.rank, N);
  A.ideal_pivots_ = rr.pivots;

  std::vector<bool> pivot(N, false);
  for (auto c : rr.pivots) pivot[c] = true;
  for (std::size_t j = 0; j < N; ++j) {
    if (static_cast<int>(A.all_paths_[j].length()) == bound && !pivot[j])
      throw NotAdmissible("path of length " + std::to_string(bound) +
                          " does not lie in the ideal; rad^L is not contained "
                          "in I for L = " +
                          std::to_string(bound));
  }
  // Basis: non-pivot paths, shortest first.
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < N; ++j)
    if (!pivot[j]) cols.push_back(j);
  std::stable_sort(cols.begin(), cols.end(), [&](std::size_t a, std::size_t b) {
    return A.all_paths_[a].length() < A.all_paths_[b].length();
  });
  A.basis_columns_ = cols;
  A.column_to_basis_.assign(N, -1);
  for (std::size_t b = 0; b < cols.size(); ++b) {
    A.column_to_basis_[cols[b]] = static_cast<long>(b);
    A.basis_.push_back(A.all_paths_[cols[b]]);
  }
  const int V = quiver.vertex_count;
  A.between_.assign(V, std::vector<std::vector<std::size_t>>(V));
  for (std::size_t b = 0; b < A.basis_.size(); ++b)
    A.between_[A.basis_[b].source][A.basis_[b].target].push_back(b);
  return alg;
}

AlgebraPtr quotient_algebra(const Algebra& base,
                            const std::vector<Relation>& extra, int bound) {
  std::vector<Relation> rels = base.relations();
  rels.insert(rels.end(), extra.begin(), extra.end());
  return build_algebra(base.quiver(), rels, bound, base.field().p());
}

}  // namespace hcot
