#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "orbitcat/endo.hpp"
#include "orbitcat/error.hpp"
#include "orbitcat/literal.hpp"
#include "orbitcat/mesh.hpp"
#include "orbitcat/oracle.hpp"
#include "orbitcat/parallel.hpp"
#include "orbitcat/quiver.hpp"
#include "report.hpp"

namespace orbitcat::cli
{

namespace
{

struct Settings
{
  std::string dynkin;
  std::string orientation;
  std::string quiver_file;
  int m = 1;
  int threads = 0;
  std::size_t search_budget = SearchOptions{}.node_budget;
  std::size_t path_cap = default_path_cap;
  int window_radius = 3;
  std::vector<std::int64_t> primes;
  std::string format = "text";
  bool json = false;
  bool timing = false;
  bool closure = false;
  bool paths = false;
  std::string from, to, tilting, summands, at, out, report;
  std::string action; // sub-action of orbit, tilting, oracle
  std::string target; // verify check or export target
};

class Context
{
public:
  explicit Context(Settings const &s) : s_(s) {}

  Settings const &settings() const { return s_; }

  Quiver const &quiver()
  {
    if (!quiver_) {
      if (!s_.dynkin.empty() && !s_.quiver_file.empty())
        throw UsageError("--dynkin and --quiver are exclusive");
      if (!s_.dynkin.empty()) {
        std::optional<Orientation> o;
        if (!s_.orientation.empty())
          o = parse_orientation(s_.orientation);
        quiver_ = dynkin_quiver(s_.dynkin, o);
      } else if (!s_.quiver_file.empty()) {
        if (!s_.orientation.empty())
          throw UsageError("--orientation applies to --dynkin presets");
        std::ifstream in(s_.quiver_file);
        if (!in)
          throw UsageError("cannot read " + s_.quiver_file);
        std::stringstream text;
        text << in.rdbuf();
        quiver_ = parse_quiver(text.str());
        classify(*quiver_);
      } else {
        throw UsageError("give a quiver with --dynkin or --quiver");
      }
    }
    return *quiver_;
  }

  DerivedModel const &model() { return mesh()->model(); }

  std::shared_ptr<MeshCategory const> mesh()
  {
    if (!mesh_)
      mesh_ = std::make_shared<MeshCategory>(
          std::make_shared<DerivedModel>(quiver()));
    return mesh_;
  }

  OrbitCategory const &c1()
  {
    if (!c1_)
      c1_ = std::make_unique<OrbitCategory>(mesh(), 1);
    return *c1_;
  }

  OrbitCategory const &cm()
  {
    if (s_.m < 1)
      throw UsageError("--m must be positive");
    if (s_.m == 1)
      return c1();
    if (!cm_)
      cm_ = std::make_unique<OrbitCategory>(mesh(), s_.m);
    return *cm_;
  }

  SearchOptions search() const { return {s_.search_budget}; }

  DerivedObject object(std::string const &text, char const *flag)
  {
    if (text.empty())
      throw UsageError(std::string("missing ") + flag);
    return parse_object(model(), text);
  }

  // Literal list as C(H) objects.
  ObjectSet base_set(std::string const &text, char const *flag)
  {
    if (text.empty())
      throw UsageError(std::string("missing ") + flag);
    ObjectSet out;
    for (auto x : parse_object_list(model(), text))
      out.push_back(c1().canonical(x));
    return normalized(out);
  }

  // Literal list closed under F inside C_{F^m}.
  ObjectSet closed_set(std::string const &text, char const *flag)
  {
    return fiber_closure(cm(), c1(), base_set(text, flag));
  }

  // Literal list taken literally inside C_{F^m}.
  ObjectSet literal_set(std::string const &text, char const *flag)
  {
    if (text.empty())
      throw UsageError(std::string("missing ") + flag);
    ObjectSet out;
    for (auto x : parse_object_list(model(), text))
      out.push_back(cm().canonical(x));
    return normalized(out);
  }

  std::vector<std::int64_t> primes() const
  {
    if (s_.primes.empty())
      return {oracle::default_prime};
    return s_.primes;
  }

private:
  Settings const &s_;
  std::optional<Quiver> quiver_;
  std::shared_ptr<MeshCategory const> mesh_;
  std::unique_ptr<OrbitCategory> c1_, cm_;
};

std::string format_of(Settings const &s)
{
  return s.json ? "json" : s.format;
}

void print_json(std::ostream &out, Json const &j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- commands

int cmd_ar_quiver(Context &ctx, std::ostream &out)
{
  auto const fmt = format_of(ctx.settings());
  if (fmt == "json")
    print_json(out, ar_quiver_json(ctx.model()));
  else if (fmt == "dot")
    out << ar_quiver_dot(ctx.model());
  else
    out << ar_quiver_text(ctx.model());
  return exit_ok;
}

int cmd_hom(Context &ctx, std::ostream &out, std::ostream &err)
{
  auto const &s = ctx.settings();
  DerivedObject x = ctx.object(s.from, "--from");
  DerivedObject y = ctx.object(s.to, "--to");
  auto const &model = ctx.model();
  int const d = model.hom_dim(x, y);
  int status = exit_ok;
  std::optional<int> by_paths;
  if (s.paths) {
    by_paths = path_basis(model, model.locate(x), model.locate(y), s.path_cap)
                   .dim();
    if (*by_paths != d) {
      err << "path basis has dimension " << *by_paths << ", hammock " << d
          << "\n";
      status = exit_check_failed;
    }
  }
  if (format_of(s) == "json") {
    Json j;
    j["from"] = model.name(x);
    j["to"] = model.name(y);
    j["dim"] = d;
    if (by_paths)
      j["path_basis_dim"] = *by_paths;
    print_json(out, j);
  } else {
    out << d << "\n";
  }
  return status;
}

int cmd_orbit(Context &ctx, std::ostream &out)
{
  auto const &s = ctx.settings();
  auto const &c = ctx.cm();
  if (s.action == "list") {
    if (format_of(s) == "json") {
      Json arr = Json::array();
      for (int id = 0; id < c.size(); ++id) {
        Json o;
        o["id"] = id;
        o["name"] = c.name(id);
        o["f_power"] = c.f_power(c.vertex(id));
        arr.push_back(std::move(o));
      }
      print_json(out, arr);
    } else {
      for (int id = 0; id < c.size(); ++id)
        out << id << " " << c.name(id) << "\n";
    }
    return exit_ok;
  }
  int const x = c.canonical(ctx.object(s.from, "--from"));
  int const y = c.canonical(ctx.object(s.to, "--to"));
  if (s.action == "hom") {
    print_json(out, graded_json(c.hom(x, y)));
    return exit_ok;
  }
  if (s.action == "ext") {
    out << c.ext1(x, y) << "\n";
    return exit_ok;
  }
  throw UsageError("orbit expects list, hom or ext");
}

int cmd_tilting(Context &ctx, std::ostream &out)
{
  auto const &s = ctx.settings();
  bool const json = format_of(s) == "json";
  std::string const &list = s.summands.empty() ? s.tilting : s.summands;

  if (s.action == "enumerate") {
    auto const &c = ctx.cm();
    auto all = enumerate_cluster_tilting(c, ctx.search());
    if (json) {
      Json j;
      j["m"] = c.m();
      j["count"] = all.size();
      Json objs = Json::array();
      for (auto const &t : all)
        objs.push_back(object_set_json(c, t));
      j["objects"] = std::move(objs);
      print_json(out, j);
    } else {
      out << all.size() << " cluster tilting objects\n";
      for (auto const &t : all)
        out << object_set_text(c, t) << "\n";
    }
    return exit_ok;
  }

  if (s.action == "check") {
    auto const &c = ctx.cm();
    ObjectSet t = s.closure ? ctx.closed_set(list, "--summands")
                            : ctx.literal_set(list, "--summands");
    bool const rigid = is_rigid(c, t);
    bool const ct = is_cluster_tilting(c, t);
    if (json) {
      Json j;
      j["summands"] = object_set_json(c, t);
      j["rigid"] = rigid;
      j["cluster_tilting"] = ct;
      if (ct)
        j["f_stable"] = verify_F_stability(c, t);
      print_json(out, j);
    } else {
      out << "rigid: " << (rigid ? "yes" : "no") << "\n";
      out << "cluster tilting: " << (ct ? "yes" : "no") << "\n";
    }
    return ct ? exit_ok : exit_check_failed;
  }

  if (s.action == "triangular") {
    auto const &c = ctx.c1();
    ObjectSet t = ctx.base_set(list, "--summands");
    auto witness = is_triangular_rigid(c, t, ctx.search());
    if (json) {
      Json j;
      j["summands"] = object_set_json(c, t);
      j["witness"] = witness ? object_set_json(c, *witness) : Json(nullptr);
      print_json(out, j);
    } else if (witness) {
      out << "complement: "
          << (witness->empty() ? "0" : object_set_text(c, *witness)) << "\n";
    } else {
      out << "no complement\n";
    }
    return witness ? exit_ok : exit_check_failed;
  }
  throw UsageError("tilting expects enumerate, check or triangular");
}

int cmd_mutate(Context &ctx, std::ostream &out)
{
  auto const &s = ctx.settings();
  auto const &c = ctx.cm();
  ObjectSet t = ctx.closed_set(s.tilting, "--tilting");
  if (!is_cluster_tilting(c, t))
    throw UsageError("--tilting is not cluster tilting");
  int const at = c.canonical(ctx.object(s.at, "--at"));
  ExchangePair ex = mutate(c, t, at);
  if (format_of(s) == "json") {
    Json j;
    j["before"] = object_set_json(c, ex.before);
    j["removed"] = object_set_json(c, ex.removed);
    j["replacement"] = object_set_json(c, ex.replacement);
    j["after"] = object_set_json(c, ex.after);
    print_json(out, j);
  } else {
    out << "removed: " << object_set_text(c, ex.removed) << "\n";
    out << "replacement: " << object_set_text(c, ex.replacement) << "\n";
    out << "result: " << object_set_text(c, ex.after) << "\n";
  }
  return exit_ok;
}

int cmd_endo(Context &ctx, std::ostream &out)
{
  auto const &s = ctx.settings();
  auto const &c = ctx.cm();
  ObjectSet base = ctx.base_set(s.tilting, "--tilting");
  ObjectSet t = fiber_closure(c, ctx.c1(), base);
  BasedAlgebra alg(c, t);
  GabrielQuiver g = gabriel_quiver(alg);
  bool const ct = is_cluster_tilting(c, t);

  auto const fmt = format_of(s);
  if (fmt == "dot") {
    out << gabriel_dot(g, "gabriel");
    return exit_ok;
  }
  Json grading = Json::object();
  for (auto [deg, dim] : alg.grading())
    grading[std::to_string(deg)] = dim;
  Json checks;
  checks["cluster_tilting"] = ct;
  checks["oriented_cycle"] = is_oriented_cycle(g);
  checks["rad2_zero"] = g.rad2_dim() == 0;
  if (ct) {
    checks["f_stable"] = verify_F_stability(c, t);
    checks["covering"] = covering_check_rho(c, ctx.c1(), base).passed();
  }
  if (fmt == "json") {
    Json j;
    j["dimension"] = alg.dim();
    j["grading"] = grading;
    j["quiver"] = gabriel_json(g);
    j["rad2_dim"] = g.rad2_dim();
    j["checks"] = checks;
    print_json(out, j);
  } else {
    out << "summands: " << object_set_text(c, t) << "\n";
    out << "dimension: " << alg.dim() << "\n";
    out << "grading:";
    for (auto [deg, dim] : alg.grading())
      out << " " << deg << ":" << dim;
    out << "\n";
    out << "arrows:";
    for (int i = 0; i < g.size(); ++i)
      for (int j = 0; j < g.size(); ++j)
        if (g.arrows[i][j])
          out << " " << i << "->" << j
              << (g.arrows[i][j] > 1 ? "x" + std::to_string(g.arrows[i][j])
                                     : "");
    out << "\n";
    out << "rad^2 dimension: " << g.rad2_dim() << "\n";
  }
  return exit_ok;
}

int cmd_oracle(Context &ctx, std::ostream &out)
{
  auto const &s = ctx.settings();
  bool const json = format_of(s) == "json";
  if (s.action == "sweep") {
    bool ok = true;
    Json arr = Json::array();
    for (auto p : ctx.primes()) {
      auto rep = oracle::compare_with_engine(ctx.model(), p);
      ok = ok && rep.passed();
      if (json) {
        Json j;
        j["prime"] = p;
        j["pairs"] = rep.pairs;
        j["hom_mismatches"] = rep.hom_mismatches;
        j["ext_mismatches"] = rep.ext_mismatches;
        j["witnesses"] = rep.witnesses;
        arr.push_back(std::move(j));
      } else {
        out << "p=" << p << ": " << rep.pairs << " pairs, "
            << rep.hom_mismatches + rep.ext_mismatches << " mismatches\n";
        for (auto const &w : rep.witnesses)
          out << "  " << w << "\n";
      }
    }
    if (json)
      print_json(out, arr);
    return ok ? exit_ok : exit_check_failed;
  }

  auto module_of = [&](std::string const &text, char const *flag) {
    DerivedObject x = ctx.object(text, flag);
    if (x.shift != 0)
      throw UsageError(std::string(flag) + " must be a module (shift 0)");
    return x.module;
  };
  int const a = module_of(s.from, "--from");
  int const b = module_of(s.to, "--to");
  auto const p = ctx.primes().front();
  auto const &q = ctx.quiver();
  auto const &ar = ctx.model().ar();
  auto ma = oracle::build_indecomposable(q, ar.dims[a], p);
  auto mb = oracle::build_indecomposable(q, ar.dims[b], p);
  int v;
  if (s.action == "hom")
    v = oracle::oracle_hom_dim(q, ma, mb);
  else if (s.action == "ext")
    v = oracle::oracle_ext1(q, ma, mb);
  else
    throw UsageError("oracle expects hom, ext or sweep");
  if (json) {
    Json j;
    j["from"] = ctx.model().module_name(a);
    j["to"] = ctx.model().module_name(b);
    j["prime"] = p;
    j[s.action] = v;
    print_json(out, j);
  } else {
    out << v << "\n";
  }
  return exit_ok;
}

// ---------------------------------------------------------------- verify

CheckResult timed(std::string name, std::function<void(CheckResult &)> body)
{
  CheckResult r;
  r.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.wall_ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

void set_status(CheckResult &r, bool ok)
{
  r.status = ok ? Status::Pass : Status::Fail;
}

void add_witness(CheckResult &r, std::string w)
{
  if (r.witnesses.size() < 50)
    r.witnesses.push_back(std::move(w));
}

CheckResult check_cy(Context &ctx)
{
  return timed("cy", [&](CheckResult &r) {
    auto const &c = ctx.cm();
    auto rep = verify_fractional_cy(c);
    r.details["objects"] = c.size();
    r.details["map_equal"] = rep.map_equal;
    r.details["serre_pairs"] = rep.serre_pairs;
    r.details["serre_mismatches"] = rep.serre_mismatches;
    r.witnesses = rep.witnesses;
    r.summary = "Serre^" + std::to_string(c.m()) + " = [" +
                std::to_string(2 * c.m()) + "] on " +
                std::to_string(c.size()) + " objects, " +
                std::to_string(rep.serre_mismatches) +
                " Serre duality mismatches";
    set_status(r, rep.passed());
  });
}

CheckResult check_thm35(Context &ctx)
{
  return timed("thm35", [&](CheckResult &r) {
    auto rep = verify_fiber_bijection(ctx.cm(), ctx.c1(), ctx.search());
    r.details["count_m"] = rep.count_m;
    r.details["count_1"] = rep.count_1;
    r.details["bijection"] = rep.bijection;
    r.witnesses = rep.witnesses;
    r.summary = "counts " + std::to_string(rep.count_m) + "/" +
                std::to_string(rep.count_1);
    set_status(r, rep.bijection);
  });
}

std::vector<ObjectSet> base_objects(Context &ctx)
{
  auto const &s = ctx.settings();
  if (!s.tilting.empty()) {
    ObjectSet t = ctx.base_set(s.tilting, "--tilting");
    if (!is_cluster_tilting(ctx.c1(), t))
      throw UsageError("--tilting is not cluster tilting in C(H)");
    return {t};
  }
  return enumerate_cluster_tilting(ctx.c1(), ctx.search());
}

CheckResult check_covering(Context &ctx)
{
  return timed("covering", [&](CheckResult &r) {
    auto const &s = ctx.settings();
    auto const &c1 = ctx.c1();
    auto const &cm = ctx.cm();
    int checked = 0, failed = 0;
    for (auto const &t0 : base_objects(ctx)) {
      auto rep = covering_check_rho(cm, c1, t0);
      ++checked;
      if (!rep.passed()) {
        ++failed;
        for (auto const &f : rep.failures)
          add_witness(r, object_set_text(c1, t0) + ": " + f);
      }
    }
    r.details["rho_checked"] = checked;
    r.details["rho_failed"] = failed;
    std::string summary = "rho_" + std::to_string(cm.m()) + " covering on " +
                          std::to_string(checked) + " objects";
    if (!s.tilting.empty()) {
      ObjectSet t0 = ctx.base_set(s.tilting, "--tilting");
      auto rep = covering_check_pi(c1, t0, cm.m(), s.window_radius);
      r.details["pi_passed"] = rep.passed();
      r.details["window_radius"] = s.window_radius;
      for (auto const &f : rep.failures)
        add_witness(r, "pi: " + f);
      summary += ", pi window radius " + std::to_string(s.window_radius);
      failed += rep.passed() ? 0 : 1;
    }
    r.summary = summary;
    set_status(r, failed == 0);
  });
}

CheckResult check_prop26(Context &ctx)
{
  return timed("prop26", [&](CheckResult &r) {
    auto const &c1 = ctx.c1();
    if (ctx.model().rank() < 2) {
      r.status = Status::Skipped;
      r.summary = "rank 1 has no exchange";
      return;
    }
    int checked = 0, failed = 0;
    for (auto const &t : base_objects(ctx))
      for (int x : t) {
        ++checked;
        if (!prop26_check(c1, t, x).passed) {
          ++failed;
          add_witness(r, object_set_text(c1, t) + " at " + c1.name(x));
        }
      }
    r.details["mutations"] = checked;
    r.details["failed"] = failed;
    r.summary = std::to_string(checked) + " mutations";
    set_status(r, failed == 0);
  });
}

CheckResult check_trivial_ext(Context &ctx)
{
  return timed("trivial-ext", [&](CheckResult &r) {
    auto const &c1 = ctx.c1();
    int const m = ctx.settings().m;
    int checked = 0, failed = 0;
    Json splits = Json::array();
    for (auto const &t : base_objects(ctx)) {
      auto rep = trivial_ext_check(c1, t, m);
      ++checked;
      if (!ctx.settings().tilting.empty()) {
        Json j;
        j["dimension"] = rep.dimension;
        j["degree0"] = rep.degree0;
        j["degree1"] = rep.degree1;
        j["cover_dimension"] = rep.cover_dimension;
        splits.push_back(std::move(j));
        r.summary = std::to_string(rep.dimension) + " = " +
                    std::to_string(rep.degree0) + " + " +
                    std::to_string(rep.degree1);
      }
      if (!rep.passed()) {
        ++failed;
        add_witness(r, object_set_text(c1, t));
      }
    }
    if (!splits.empty())
      r.details["splits"] = std::move(splits);
    r.details["checked"] = checked;
    r.details["failed"] = failed;
    if (r.summary.empty())
      r.summary = "degree support {0,1} on " + std::to_string(checked) +
                  " objects";
    set_status(r, failed == 0);
  });
}

CheckResult check_f_stability(Context &ctx)
{
  return timed("f-stability", [&](CheckResult &r) {
    auto const &c = ctx.cm();
    auto all = enumerate_cluster_tilting(c, ctx.search());
    int failed = 0;
    for (auto const &t : all)
      if (!verify_F_stability(c, t)) {
        ++failed;
        add_witness(r, object_set_text(c, t));
      }
    r.details["checked"] = all.size();
    r.details["failed"] = failed;
    r.summary = std::to_string(all.size()) + " objects F-stable";
    set_status(r, failed == 0);
  });
}

CheckResult check_oracle(Context &ctx)
{
  return timed("oracle", [&](CheckResult &r) {
    int mismatches = 0, pairs = 0;
    Json per = Json::array();
    for (auto p : ctx.primes()) {
      auto rep = oracle::compare_with_engine(ctx.model(), p);
      pairs += rep.pairs;
      mismatches += rep.hom_mismatches + rep.ext_mismatches;
      for (auto const &w : rep.witnesses)
        add_witness(r, "p=" + std::to_string(p) + " " + w);
      Json j;
      j["prime"] = p;
      j["pairs"] = rep.pairs;
      j["mismatches"] = rep.hom_mismatches + rep.ext_mismatches;
      per.push_back(std::move(j));
    }
    r.details["primes"] = std::move(per);
    r.summary = std::to_string(mismatches) + " mismatches over " +
                std::to_string(pairs) + " pairs";
    set_status(r, mismatches == 0);
  });
}

int cmd_verify(Context &ctx, std::ostream &out)
{
  auto const &s = ctx.settings();
  using Check = CheckResult (*)(Context &);
  std::vector<std::pair<std::string, Check>> const all = {
      {"cy", check_cy},
      {"thm35", check_thm35},
      {"covering", check_covering},
      {"prop26", check_prop26},
      {"trivial-ext", check_trivial_ext},
      {"f-stability", check_f_stability},
      {"oracle", check_oracle},
  };
  VerifyReport report;
  report.timing = s.timing;
  for (auto const &[name, fn] : all)
    if (s.target == "all" || s.target == name)
      report.checks.push_back(fn(ctx));
  if (report.checks.empty())
    throw UsageError("unknown check '" + s.target + "'");

  if (!s.report.empty()) {
    std::ofstream f(s.report);
    if (!(f << report.to_json().dump(2) << "\n"))
      throw std::runtime_error("cannot write " + s.report);
  }
  if (format_of(s) == "json")
    print_json(out, report.to_json());
  else
    out << report.to_text();
  return report.passed() ? exit_ok : exit_check_failed;
}

// ---------------------------------------------------------------- export

int cmd_export(Context &ctx, std::ostream &out)
{
  auto const &s = ctx.settings();
  std::string fmt = format_of(s);
  std::ostringstream buf;
  if (s.target == "ar-quiver") {
    if (fmt == "json")
      buf << ar_quiver_json(ctx.model()).dump(2) << "\n";
    else
      buf << ar_quiver_dot(ctx.model());
  } else if (s.target == "gabriel") {
    auto const &c = ctx.cm();
    ObjectSet t = ctx.closed_set(s.tilting, "--tilting");
    GabrielQuiver g = gabriel_quiver(BasedAlgebra(c, t));
    if (fmt == "json")
      buf << gabriel_json(g).dump(2) << "\n";
    else
      buf << gabriel_dot(g, "gabriel");
  } else if (s.target == "domain") {
    auto const &c = ctx.cm();
    if (fmt == "json") {
      Json arr = Json::array();
      for (int id = 0; id < c.size(); ++id)
        arr.push_back(c.name(id));
      buf << arr.dump(2) << "\n";
    } else {
      for (int id = 0; id < c.size(); ++id)
        buf << c.name(id) << "\n";
    }
  } else if (s.target == "tilting") {
    auto const &c = ctx.cm();
    Json arr = Json::array();
    for (auto const &t : enumerate_cluster_tilting(c, ctx.search()))
      arr.push_back(object_set_json(c, t));
    buf << arr.dump(2) << "\n";
  } else {
    throw UsageError("export target must be ar-quiver, gabriel, domain or "
                     "tilting");
  }
  out << buf.str();
  return exit_ok;
}

int dispatch(Context &ctx, std::ostream &out, std::ostream &err,
             std::vector<std::pair<CLI::App *, int (*)(Context &,
                                                       std::ostream &)>> const
                 &table,
             CLI::App *hom)
{
  if (hom->parsed())
    return cmd_hom(ctx, out, err);
  for (auto const &[app, fn] : table)
    if (app->parsed())
      return fn(ctx, out);
  return exit_usage;
}

void add_common(CLI::App &app, Settings &s)
{
  app.add_option("--dynkin", s.dynkin, "Dynkin preset, e.g. A3, D4, E6");
  app.add_option("--orientation", s.orientation, "linear, sink or source");
  app.add_option("--quiver", s.quiver_file, "quiver file in the DSL");
  app.add_option("--m", s.m, "period m of C_{F^m} (default 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", s.threads, "worker cap")
      ->envname("ORBITCAT_THREADS");
  app.add_option("--search-budget", s.search_budget,
                 "node cap for cluster tilting searches (default 5000000)");
  app.add_option("--path-cap", s.path_cap,
                 "path cap for explicit path bases (default 200000)");
  app.add_option("--window-radius", s.window_radius,
                 "F-power radius of windowed covering checks (default 3)");
  app.add_option("--prime", s.primes, "prime field of the oracle "
                                      "(repeatable, default 101)");
  app.add_option("--format", s.format, "text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_flag("--json", s.json, "same as --format json");
  app.add_option("--from", s.from, "source object literal");
  app.add_option("--to", s.to, "target object literal");
  app.add_option("--tilting", s.tilting, "comma-separated object literals");
  app.add_option("--summands", s.summands, "comma-separated object literals");
  app.add_option("--at", s.at, "summand to exchange");
  app.add_flag("--closure", s.closure, "close --summands under F");
  app.add_flag("--paths", s.paths, "also count an explicit path basis");
  app.add_flag("--timing", s.timing, "report wall times");
  app.add_option("--out", s.out, "output file ('-' for stdout)");
  app.add_option("--report", s.report, "write the JSON report to a file");
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err)
{
  Settings s;
  CLI::App app{"Repetitive cluster categories of Dynkin quivers",
               "orbitcat"};
  app.fallthrough();
  app.require_subcommand(1);
  add_common(app, s);

  auto *ar = app.add_subcommand("ar-quiver", "AR quiver of mod kQ");
  auto *hom = app.add_subcommand("hom", "dim Hom in D^b(kQ)");
  auto *orbit = app.add_subcommand("orbit", "the orbit category C_{F^m}");
  orbit->add_option("action", s.action, "list, hom or ext")->required();
  auto *tilting = app.add_subcommand("tilting", "cluster tilting objects");
  tilting->add_option("action", s.action, "enumerate, check or triangular")
      ->required();
  auto *mut = app.add_subcommand("mutate", "exchange one F-orbit of summands");
  auto *endo = app.add_subcommand("endo", "endomorphism algebra of T");
  auto *orc = app.add_subcommand("oracle", "GF(p) representation oracle");
  orc->add_option("action", s.action, "hom, ext or sweep")->required();
  auto *ver = app.add_subcommand("verify", "run consistency checks");
  ver->add_option("check", s.target,
                  "cy, thm35, covering, prop26, trivial-ext, f-stability, "
                  "oracle or all")
      ->required();
  auto *exp = app.add_subcommand("export", "write DOT or JSON");
  exp->add_option("target", s.target, "ar-quiver, gabriel, domain, tilting")
      ->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    set_thread_count(s.threads);
    Context ctx(s);
    std::ostringstream buf;
    int code = dispatch(ctx, buf, err,
                        {{ar, cmd_ar_quiver},
                         {orbit, cmd_orbit},
                         {tilting, cmd_tilting},
                         {mut, cmd_mutate},
                         {endo, cmd_endo},
                         {orc, cmd_oracle},
                         {ver, cmd_verify},
                         {exp, cmd_export}},
                        hom);
    if (s.out.empty() || s.out == "-") {
      out << buf.str();
    } else {
      std::ofstream f(s.out, std::ios::binary);
      if (!(f << buf.str()))
        throw std::runtime_error("cannot write " + s.out);
    }
    return code;
  } catch (ResourceError const &e) {
    err << "orbitcat: resource cap: " << e.what() << "\n";
    return exit_resource;
  } catch (UsageError const &e) {
    err << "orbitcat: " << e.what() << "\n";
    return exit_usage;
  } catch (orbitcat::ParseError const &e) {
    err << "orbitcat: " << e.what() << "\n";
    return exit_usage;
  } catch (QuiverError const &e) {
    err << "orbitcat: " << e.what() << "\n";
    return exit_usage;
  } catch (NotDynkin const &e) {
    err << "orbitcat: " << e.what() << "\n";
    return exit_usage;
  } catch (DimensionMismatch const &e) {
    err << "orbitcat: " << e.what() << "\n";
    return exit_usage;
  } catch (WindowTooSmall const &e) {
    err << "orbitcat: " << e.what() << "\n";
    return exit_usage;
  } catch (std::exception const &e) {
    err << "orbitcat: " << e.what() << "\n";
    return exit_check_failed;
  }
  return exit_usage;
}

} // namespace orbitcat::cli
