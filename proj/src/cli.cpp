#include "hcot/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hcot/catalog.hpp"
#include "hcot/errors.hpp"
#include "hcot/io.hpp"

namespace hcot {

using nlohmann::json;

namespace {

struct Config {
  std::string algebra;
  std::string over;
  std::string subcat = "";
  std::string x;
  std::string w;
  std::string module;
  std::string target;
  std::string from;
  std::string to;
  std::string coords;
  std::string sequence;
  std::string strategy = "theorem";
  std::string format = "text";
  std::size_t n = 2;
  std::size_t depth = 2;
  std::size_t max_degree = 2;
  std::uint64_t seed = 1;
  std::uint64_t cap = 1u << 16;
  bool timing = false;
  bool cokernel = false;
  bool envelope = false;
  bool cotorsion = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    cur.erase(0, cur.find_first_not_of(" \t"));
    cur.erase(cur.find_last_not_of(" \t") + 1);
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

bool looks_like_file(const std::string& s) {
  return s.find('/') != std::string::npos || s.ends_with(".json") ||
         std::filesystem::exists(s);
}

/// Loaded inputs shared by every command.
struct Session {
  Config cfg;
  Options opt;
  Universe universe;
  json canonicalization = json::array();

  std::optional<Module> by_universe(const Module& m) const {
    for (const auto& u : universe.indecomposables)
      if (u.dims() == m.dims() && is_isomorphic(u, m, opt)) return u;
    return std::nullopt;
  }

  std::optional<Module> standard(const std::string& tok) const {
    if (tok.size() < 2) return std::nullopt;
    char kind = tok[0];
    if (kind != 'S' && kind != 'P' && kind != 'I') return std::nullopt;
    const std::string digits = tok.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return std::nullopt;
    int v = std::stoi(digits) - 1;
    if (v < 0 || v >= universe.algebra->vertex_count()) return std::nullopt;
    if (kind == 'S') return simple_module(universe.algebra, v).with_label(tok);
    if (kind == 'P') return projective_module(universe.algebra, v).with_label(tok);
    return injective_module(universe.algebra, v).with_label(tok);
  }

  /// A universe member when one is isomorphic, so names agree with the catalog.
  Module named(const Module& m) const {
    if (auto u = by_universe(m)) return *u;
    return m;
  }

  std::vector<Module> resolve(const std::string& tok) const {
    const auto& a = universe.algebra;
    if (tok == "prj" || tok == "inj") {
      std::vector<Module> out;
      for (const auto& m : tok == "prj" ? projective_modules(a) : injective_modules(a))
        out.push_back(named(m));
      return out;
    }
    if (tok == "all") return universe.indecomposables;
    if (tok == "0" || tok == "none") return {};
    if (auto m = universe.find(tok)) return {*m};
    if (auto m = standard(tok)) return {*m};
    if (looks_like_file(tok)) {
      Module m = load_module(a, tok);
      if (m.label().empty()) m = m.with_label(std::filesystem::path(tok).stem().string());
      return {m};
    }
    throw InputError("unknown module '" + tok +
                     "' (expected a universe label, S<k>/P<k>/I<k>, prj, inj, all, or a module file)");
  }

  Module single(const std::string& tok, const std::string& flag) const {
    if (tok.empty()) throw InputError("missing " + flag);
    auto ms = resolve(tok);
    if (ms.size() != 1) throw InputError(flag + ": expected exactly one module, got '" + tok + "'");
    return ms[0];
  }

  Subcat subcat(const std::string& spec, const std::string& flag) {
    const auto toks = split(spec, ',');
    std::vector<Module> ms;
    for (const auto& t : toks)
      for (auto& m : resolve(t)) ms.push_back(m);
    Subcat raw = Subcat::from_modules(ms, opt);
    Subcat c;
    for (const auto& g : raw.generators) c.generators.push_back(named(g));
    json names = json::array();
    for (const auto& g : c.generators) names.push_back(g.display_name());
    canonicalization.push_back({{"flag", flag},
                                {"input", toks},
                                {"generators", names},
                                {"modules_given", ms.size()},
                                {"note", "decomposed into indecomposables, deduplicated up to isomorphism"}});
    return c;
  }
};

Universe file_universe(const std::string& path, const Options& opt) {
  Universe u;
  u.algebra = load_algebra(path);
  u.completeness = Completeness::Declared;
  u.name = path;
  const int nv = u.algebra->vertex_count();
  std::vector<Module> cands;
  for (int v = 0; v < nv; ++v)
    cands.push_back(simple_module(u.algebra, v).with_label("S" + std::to_string(v + 1)));
  for (int v = 0; v < nv; ++v)
    cands.push_back(projective_module(u.algebra, v).with_label("P" + std::to_string(v + 1)));
  for (int v = 0; v < nv; ++v)
    cands.push_back(injective_module(u.algebra, v).with_label("I" + std::to_string(v + 1)));
  for (const auto& c : cands) {
    bool dup = false;
    for (const auto& e : u.indecomposables)
      if (e.dims() == c.dims() && is_isomorphic(e, c, opt)) dup = true;
    if (!dup) u.indecomposables.push_back(c);
  }
  return u;
}

Universe load_universe(const std::string& spec, const Options& opt) {
  if (spec.empty()) throw InputError("missing --algebra");
  if (looks_like_file(spec)) return file_universe(spec, opt);
  return universe_by_name(spec);
}

std::vector<Scalar> parse_coords(const std::string& s, const PrimeField& f) {
  std::vector<Scalar> out;
  for (const auto& t : split(s, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      out.push_back(f.reduce(v));
    } catch (const std::logic_error&) {
      throw InputError("--coords: '" + t + "' is not an integer");
    }
  }
  return out;
}

ModuleMap map_from_coords(const Module& a, const Module& b, const std::string& coords) {
  auto h = hom_basis(a, b);
  auto c = parse_coords(coords, a.field());
  if (c.size() != h.dim())
    throw InputError("--coords: Hom(" + a.display_name() + ", " + b.display_name() +
                     ") has dimension " + std::to_string(h.dim()) + ", got " +
                     std::to_string(c.size()) + " coordinates");
  return h.combination(c);
}

json names(const Subcat& c) {
  json a = json::array();
  for (const auto& g : c.generators) a.push_back(g.display_name());
  return a;
}

// Commands. Each returns the report to print.

CheckReport cmd_check_nct(Session& s) {
  auto m = s.subcat(s.cfg.subcat, "--subcat");
  return is_n_cluster_tilting(s.universe, m, s.cfg.n, s.opt);
}

CheckReport cmd_check_nz(Session& s) {
  auto m = s.subcat(s.cfg.subcat, "--subcat");
  return is_nZ_cluster_tilting(s.universe, m, s.cfg.n, s.cfg.depth, s.opt);
}

CheckReport cmd_ext_table(Session& s) {
  std::vector<Module> objs = s.cfg.subcat.empty() ? s.universe.indecomposables
                                                  : s.subcat(s.cfg.subcat, "--subcat").generators;
  const std::size_t k = s.cfg.max_degree;
  json table = json::array(), entries = json::array(), objects = json::array();
  for (const auto& o : objs) objects.push_back(o.display_name());
  json mismatch = nullptr;
  for (const auto& a : objs) {
    json row = json::array();
    for (const auto& b : objs) {
      json cell = json::array();
      for (std::size_t d = 1; d <= k; ++d) {
        std::size_t e = ext_dim(a, b, d);
        std::size_t c = ext_dim_via_coresolution(a, b, d);
        if (e != c && mismatch.is_null())
          mismatch = {{"source", a.display_name()}, {"target", b.display_name()}, {"degree", d},
                      {"via_resolution", e}, {"via_coresolution", c}};
        cell.push_back(e);
        if (e) entries.push_back({{"source", a.display_name()}, {"target", b.display_name()},
                                  {"degree", d}, {"dim", e}});
      }
      row.push_back(cell);
    }
    table.push_back(row);
  }
  if (!mismatch.is_null())
    return CheckReport::fail("ext_table", "projective and injective computations disagree",
                             mismatch);
  json degrees = json::array();
  for (std::size_t d = 1; d <= k; ++d) degrees.push_back(d);
  auto r = CheckReport::pass("ext_table",
                             std::to_string(objs.size()) + "x" + std::to_string(objs.size()) + "x" +
                                 std::to_string(k) + " table, cross-checked by coresolutions",
                             {{"objects", objects},
                              {"degrees", degrees},
                              {"dims", table},
                              {"nonzero", entries},
                              {"certified_via", "balance of Ext: projective resolution of the first "
                                                "argument vs injective coresolution of the second"}});
  return r;
}

CheckReport cmd_precover(Session& s) {
  auto x = s.subcat(s.cfg.x, "--x");
  auto m = s.single(s.cfg.module, "--module");
  ApproxResult a = s.cfg.envelope ? min_left_approx(x, m, s.opt) : min_right_approx(x, m, s.opt);
  const Module& other = s.cfg.envelope ? a.map.target() : a.map.source();
  json cert = {{"module", m.display_name()},
               {"approximation", labelled_by(other, x, s.opt).display_name()},
               {"minimal", a.minimal},
               {s.cfg.envelope ? "injective" : "surjective", a.surjective},
               {"map", map_to_json(a.map)},
               {"certified_via", a.certificate}};
  return CheckReport::pass(s.cfg.envelope ? "preenvelope" : "precover",
                           std::string(s.cfg.envelope ? "minimal left" : "minimal right") +
                               " approximation of " + m.display_name() + " by " +
                               x.describe(),
                           cert);
}

CheckReport cmd_n_kernel(Session& s) {
  auto m = s.subcat(s.cfg.subcat, "--subcat");
  auto a = s.single(s.cfg.from, "--from");
  auto b = s.single(s.cfg.to, "--to");
  auto f = map_from_coords(a, b, s.cfg.coords);
  const bool cok = s.cfg.cokernel;
  NSequence seq = cok ? n_cokernel_in(m, f, s.cfg.n, s.opt) : n_kernel_in(m, f, s.cfg.n, s.opt);
  const std::string check = cok ? "n_cokernel" : "n_kernel";
  json cert = {{"sequence", sequence_to_json(seq)}, {"description", seq.describe()}};
  const bool exact_applies = cok ? f.is_injective() : f.is_surjective();
  if (exact_applies) {
    auto e = is_n_exact(m, seq, s.opt);
    cert["n_exact"] = to_string(e.verdict);
    if (!e.passed()) {
      auto r = CheckReport::fail(check, "constructed sequence is not n-exact", e.to_json());
      r.certificate = cert;
      return r;
    }
  }
  return CheckReport::pass(check, seq.describe(), cert);
}

CheckReport cmd_special_precover(Session& s) {
  auto x = s.subcat(s.cfg.x, "--x");
  auto m = s.subcat(s.cfg.subcat, "--subcat");
  auto mod = s.single(s.cfg.module, "--module");
  auto sp = n_special_precover(x, m, mod, s.cfg.n, s.opt);
  auto r = sp.report;
  r.certificate["sequence"] = sequence_to_json(sp.sequence);
  r.certificate["description"] = sp.sequence.describe();
  return r;
}

CheckReport cmd_ncotorsion(Session& s) {
  auto x = s.subcat(s.cfg.x, "--x");
  auto m = s.subcat(s.cfg.subcat, "--subcat");
  CotorsionStrategy st;
  if (s.cfg.strategy == "theorem")
    st = CotorsionStrategy::Theorem;
  else if (s.cfg.strategy == "relative")
    st = CotorsionStrategy::Relative;
  else
    throw InputError("--strategy must be theorem or relative");
  return is_n_cotorsion(x, m, s.universe, s.cfg.n, st, s.opt);
}

CheckReport cmd_left_closed(Session& s) {
  auto x = s.subcat(s.cfg.x, "--x");
  auto m = s.subcat(s.cfg.subcat, "--subcat");
  return is_left_closed_under_n_extensions(x, m, s.cfg.n, s.opt);
}

CheckReport cmd_wakamatsu(Session& s) {
  auto x = s.subcat(s.cfg.x, "--x");
  auto m = s.subcat(s.cfg.subcat, "--subcat");
  std::vector<Module> targets;
  if (s.cfg.module.empty()) {
    for (const auto& u : s.universe.indecomposables)
      if (in_add(u, m, s.opt)) targets.push_back(u);
  } else {
    for (const auto& t : split(s.cfg.module, ','))
      for (auto& mod : s.resolve(t)) targets.push_back(mod);
  }
  auto h1 = is_nZ_cluster_tilting(s.universe, m, s.cfg.n, s.cfg.depth, s.opt);
  auto h2 = is_left_closed_under_n_extensions(x, m, s.cfg.n, s.opt);
  json hyp = {{"nZ_cluster_tilting", to_string(h1.verdict)},
              {"left_closed_under_n_extensions", to_string(h2.verdict)}};
  if (!h1.passed() || !h2.passed()) {
    auto r = CheckReport::not_applicable("wakamatsu", "hypotheses not certified");
    r.certificate["hypotheses"] = hyp;
    r.certificate["hypothesis_reports"] = json::array({h1.to_json(), h2.to_json()});
    return r;
  }
  std::vector<CheckReport> parts;
  for (const auto& t : targets) parts.push_back(wakamatsu_check(x, m, t, s.cfg.n, s.opt));
  json per = json::array();
  std::size_t applicable = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    per.push_back({{"module", targets[i].display_name()}, {"verdict", to_string(parts[i].verdict)}});
    if (parts[i].verdict != Verdict::NotApplicable) ++applicable;
  }
  std::vector<CheckReport> counted;
  for (const auto& p : parts)
    if (p.verdict != Verdict::NotApplicable) counted.push_back(p);
  CheckReport r = counted.empty()
                      ? CheckReport::not_applicable("wakamatsu", "no module has a surjective cover")
                      : combine("wakamatsu", counted);
  r.certificate["hypotheses"] = hyp;
  r.certificate["modules"] = per;
  r.certificate["applicable"] = applicable;
  if (r.verdict == Verdict::Fail) r.certificate["alarm"] = true;
  return r;
}

CheckReport cmd_check_wide(Session& s) {
  auto w = s.subcat(s.cfg.w, "--w");
  auto m = s.subcat(s.cfg.subcat, "--subcat");
  auto r = is_wide(w, m, s.cfg.n, s.opt);
  if (!s.cfg.cotorsion) return r;
  auto e = wide_implies_cotorsion_experiment(w, m, s.universe, s.cfg.n, s.opt);
  return combine("wide", {r, e});
}

CheckReport cmd_restrict(Session& s) {
  if (s.cfg.over.empty()) throw InputError("missing --over");
  AlgebraPtr big = load_universe(s.cfg.over, s.opt).algebra;
  auto a = s.single(s.cfg.module, "--module");
  Module ra = restrict_scalars(big, a);
  if (s.cfg.target.empty()) {
    return CheckReport::pass("restrict", "restricted " + a.display_name() + " to the larger algebra",
                             {{"module", a.display_name()}, {"restricted", module_to_json(ra)}});
  }
  auto b = s.single(s.cfg.target, "--target");
  auto r = ext_compare(big, a, b, s.cfg.n);
  r.certificate["restricted_module"] = module_to_json(ra);
  r.certificate["restricted_target"] = module_to_json(restrict_scalars(big, b));
  return r;
}

CheckReport cmd_oracle(Session& s) {
  auto o = brute_force_nct_search(s.universe, s.cfg.n);
  json hits = json::array();
  for (std::size_t i = 0; i < o.hits.size(); ++i)
    hits.push_back({{"mask", o.masks[i]}, {"generators", names(o.hits[i])}});
  json cert = {{"hits", hits},
               {"subsets_checked", o.subsets_checked},
               {"unconstrained_checked", o.unconstrained_checked},
               {"unconstrained_agrees", o.unconstrained_agrees},
               {"universe", s.universe.name},
               {"certified_via", "exhaustive evaluation of the n-cluster tilting definition"}};
  if (o.unconstrained_checked && !o.unconstrained_agrees) {
    auto r = CheckReport::fail("oracle_search", "unconstrained search found different hits",
                               {{"hits", hits}});
    r.certificate = cert;
    return r;
  }
  return scoped(CheckReport::pass("oracle_search", std::to_string(o.hits.size()) + " hit(s)", cert),
                s.universe);
}

CheckReport cmd_verify_nexact(Session& s) {
  auto m = s.subcat(s.cfg.subcat, "--subcat");
  if (s.cfg.sequence.empty()) throw InputError("missing --sequence");
  NSequence seq = load_sequence(s.universe.algebra, s.cfg.sequence);
  auto r = is_n_exact(m, seq, s.opt);
  auto c = contractibility(seq);
  r.certificate["contractible"] = c.contractible();
  r.certificate["split_criteria_agree"] = c.agree();
  NSequence shown = seq;
  for (auto& o : shown.objects)
    if (o.label().empty()) o = labelled_by(o, Subcat{s.universe.indecomposables}, s.opt);
  r.certificate["description"] = shown.describe();
  return r;
}

struct Command {
  const char* name;
  const char* help;
  std::function<CheckReport(Session&)> run;
  std::vector<std::string> flags;
};

std::vector<Command> commands() {
  return {
      {"check-nct", "decide whether add(subcat) is n-cluster tilting", cmd_check_nct, {"subcat"}},
      {"check-nz", "decide whether add(subcat) is nZ-cluster tilting", cmd_check_nz,
       {"subcat", "depth"}},
      {"ext-table", "dimensions of Ext^k between universe members", cmd_ext_table,
       {"subcat?", "max-degree"}},
      {"precover", "minimal right (or left) approximation", cmd_precover,
       {"x", "module", "envelope"}},
      {"n-kernel", "n-kernel (or n-cokernel) of a map inside add(subcat)", cmd_n_kernel,
       {"subcat", "from", "to", "coords", "cokernel"}},
      {"n-special-precover", "n-special X-precover of a module", cmd_special_precover,
       {"x", "subcat", "module"}},
      {"check-ncotorsion", "decide whether add(x) is an n-cotorsion class", cmd_ncotorsion,
       {"x", "subcat", "strategy"}},
      {"check-left-closed", "left closure of add(x) under n-extensions", cmd_left_closed,
       {"x", "subcat"}},
      {"wakamatsu", "higher Wakamatsu lemma with verified hypotheses", cmd_wakamatsu,
       {"x", "subcat", "module?", "depth"}},
      {"check-wide", "decide whether add(w) is wide", cmd_check_wide,
       {"w", "subcat", "cotorsion"}},
      {"restrict", "restriction of scalars and Ext comparison", cmd_restrict,
       {"over", "module", "target?"}},
      {"oracle-search", "exhaustive search for n-cluster tilting subcategories", cmd_oracle, {}},
      {"verify-nexact", "check an n-exact sequence read from a file", cmd_verify_nexact,
       {"subcat", "sequence"}},
  };
}

void add_flag(CLI::App* sc, Config& c, const std::string& flag) {
  const bool optional = flag.ends_with("?");
  const std::string f = optional ? flag.substr(0, flag.size() - 1) : flag;
  CLI::Option* o = nullptr;
  if (f == "subcat") o = sc->add_option("--subcat", c.subcat, "generators of M (comma list)");
  else if (f == "x") o = sc->add_option("--x", c.x, "generators of X (comma list)");
  else if (f == "w") o = sc->add_option("--w", c.w, "generators of W (comma list)");
  else if (f == "module") o = sc->add_option("--module", c.module, "module label or file");
  else if (f == "target") o = sc->add_option("--target", c.target, "second module for Ext");
  else if (f == "from") o = sc->add_option("--from", c.from, "source module");
  else if (f == "to") o = sc->add_option("--to", c.to, "target module");
  else if (f == "coords") o = sc->add_option("--coords", c.coords, "coordinates in the Hom basis");
  else if (f == "sequence") o = sc->add_option("--sequence", c.sequence, "sequence JSON file");
  else if (f == "over") o = sc->add_option("--over", c.over, "the algebra being restricted to");
  else if (f == "depth") sc->add_option("--depth", c.depth, "syzygy depth")->check(CLI::PositiveNumber);
  else if (f == "max-degree")
    sc->add_option("--max-degree", c.max_degree, "largest Ext degree")->check(CLI::PositiveNumber);
  else if (f == "strategy")
    sc->add_option("--strategy", c.strategy, "theorem or relative")
        ->check(CLI::IsMember({"theorem", "relative"}));
  else if (f == "cokernel") sc->add_flag("--cokernel", c.cokernel, "build the n-cokernel instead");
  else if (f == "envelope") sc->add_flag("--envelope", c.envelope, "left approximation instead");
  else if (f == "cotorsion")
    sc->add_flag("--cotorsion", c.cotorsion, "also run the wide-implies-cotorsion experiment");
  if (o && !optional) o->required();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("HCOT_ENUM_CAP")) {
    try {
      std::size_t used = 0;
      cfg.cap = std::stoull(env, &used);
      if (used != std::string(env).size() || cfg.cap == 0) throw std::invalid_argument(env);
    } catch (const std::logic_error&) {
      err << "error: HCOT_ENUM_CAP must be a positive integer\n";
      return 3;
    }
  }

  CLI::App app{"Exact checks for higher homological algebra over bound quiver algebras"};
  app.require_subcommand(1);
  const auto cmds = commands();
  std::map<CLI::App*, const Command*> by_app;
  for (const auto& c : cmds) {
    auto* sc = app.add_subcommand(c.name, c.help);
    sc->add_option("--algebra", cfg.algebra, "catalog name or algebra JSON file")->required();
    sc->add_option("--n", cfg.n, "the n of n-cluster tilting")->check(CLI::PositiveNumber);
    sc->add_option("--seed", cfg.seed, "random seed");
    sc->add_option("--cap", cfg.cap, "enumeration cap")->check(CLI::PositiveNumber);
    sc->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sc->add_flag("--timing", cfg.timing, "report elapsed time");
    for (const auto& f : c.flags) add_flag(sc, cfg, f);
    by_app[sc] = &c;
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 3;
  }

  const Command* cmd = nullptr;
  for (auto* sc : app.get_subcommands()) cmd = by_app.at(sc);

  Session s;
  s.cfg = cfg;
  s.opt.seed = cfg.seed;
  s.opt.enumeration_cap = cfg.cap;
  try {
    s.universe = load_universe(cfg.algebra, s.opt);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  const auto start = std::chrono::steady_clock::now();
  CheckReport r;
  try {
    r = cmd->run(s);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const RelationViolated& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::string check = cmd->name;
    std::replace(check.begin(), check.end(), '-', '_');
    r = CheckReport::inconclusive(check, e.what());
  }
  r.seed = cfg.seed;
  if (cfg.timing)
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  if (!s.canonicalization.empty()) r.certificate["canonicalization"] = s.canonicalization;
  r.certificate["enumeration_cap"] = cfg.cap;
  if (cfg.format == "json") {
    out << r.to_json().dump(2) << "\n";
  } else {
    out << r.to_text();
    if (cmd->name == std::string("ext-table") && r.passed())
      for (const auto& e : r.certificate["nonzero"])
        out << "  Ext^" << e["degree"].get<std::size_t>() << "(" << e["source"].get<std::string>()
            << ", " << e["target"].get<std::string>() << ") = " << e["dim"].get<std::size_t>()
            << "\n";
  }
  return exit_code(r.verdict);
}

}  // namespace hcot
