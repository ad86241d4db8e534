#include "orbitcat/endo.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "orbitcat/error.hpp"
#include "orbitcat/quiver.hpp"

namespace orbitcat
{

BasedAlgebra::BasedAlgebra(OrbitCategory const &c, ObjectSet summands)
  : c_(&c), summands_(std::move(summands))
{
  if (normalized(summands_).size() != summands_.size())
    throw Error("summands must be distinct");
  int const r = num_summands();
  blocks_.assign(r, std::vector<std::vector<int>>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      auto const &space = c.hom_space(summands_[i], summands_[j]);
      for (auto const &comp : space.components)
        for (int k = 0; k < comp.dim; ++k) {
          blocks_[i][j].push_back(dim());
          basis_.push_back({i, j, comp.degree, comp.offset + k});
        }
    }
}

std::vector<int> const &BasedAlgebra::block(int i, int j) const
{
  return blocks_.at(i).at(j);
}

int BasedAlgebra::block_dim(int i, int j) const
{
  return static_cast<int>(block(i, j).size());
}

std::map<int, int> BasedAlgebra::grading() const
{
  std::map<int, int> g;
  for (auto const &b : basis_)
    ++g[b.degree];
  return g;
}

int BasedAlgebra::identity(int i) const
{
  int found = -1;
  for (int a : block(i, i))
    if (basis_[a].degree == 0) {
      if (found >= 0)
        throw InvariantViolation("degree-0 endomorphisms of " +
                                 c_->name(summands_[i]) +
                                 " are not one-dimensional");
      found = a;
    }
  if (found < 0)
    throw InvariantViolation("no identity for " + c_->name(summands_[i]));
  return found;
}

Vector BasedAlgebra::multiply(int a, int b) const
{
  Vector out(dim(), Rational(0));
  auto const &x = basis_.at(a), &y = basis_.at(b);
  if (x.to != y.from)
    return out;
  int const s = summands_[x.from], t = summands_[x.to], u = summands_[y.to];
  OrbitMorphism f = c_->basis_element(s, t, x.index);
  OrbitMorphism g = c_->basis_element(t, u, y.index);
  OrbitMorphism fg = c_->compose(f, g);
  auto const &target = block(x.from, y.to);
  for (std::size_t k = 0; k < target.size(); ++k)
    out[target[k]] = fg.coords[basis_[target[k]].index];
  return out;
}

Vector BasedAlgebra::multiply(Vector const &x, Vector const &y) const
{
  Vector out(dim(), Rational(0));
  for (int a = 0; a < dim(); ++a) {
    if (sgn(x[a]) == 0)
      continue;
    for (int b = 0; b < dim(); ++b) {
      if (sgn(y[b]) == 0 || basis_[a].to != basis_[b].from)
        continue;
      Vector p = multiply(a, b);
      for (int k = 0; k < dim(); ++k)
        out[k] += x[a] * y[b] * p[k];
    }
  }
  return out;
}

int GabrielQuiver::num_arrows() const
{
  int n = 0;
  for (auto const &row : arrows)
    n = std::accumulate(row.begin(), row.end(), n);
  return n;
}

int GabrielQuiver::rad2_dim() const
{
  int n = 0;
  for (auto const &row : rad2)
    n = std::accumulate(row.begin(), row.end(), n);
  return n;
}

namespace
{

// rad(i,j) is spanned by the basis vectors rad_basis[i][j] of Hom(i,j);
// product(i,j,k,a,b) returns a*b in coordinates of Hom(i,k).
using Product =
    std::function<Vector(int, int, int, int, int)>; // i, j, k, a, b

GabrielQuiver radical_layers(std::vector<std::string> names,
                             std::vector<std::vector<int>> const &dims,
                             std::vector<std::vector<std::vector<int>>> const
                                 &rad_basis,
                             Product const &product)
{
  int const r = static_cast<int>(dims.size());
  GabrielQuiver g;
  g.names = std::move(names);
  g.arrows.assign(r, std::vector<int>(r, 0));
  g.rad = g.rad2 = g.arrows;
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      g.rad[i][k] = static_cast<int>(rad_basis[i][k].size());
      if (dims[i][k] == 0)
        continue;
      RowEchelon sq(static_cast<std::size_t>(dims[i][k]));
      for (int j = 0; j < r; ++j)
        for (int a : rad_basis[i][j])
          for (int b : rad_basis[j][k]) {
            if (static_cast<int>(sq.rank()) == g.rad[i][k])
              break;
            sq.insert(product(i, j, k, a, b));
          }
      g.rad2[i][k] = static_cast<int>(sq.rank());
      g.arrows[i][k] = g.rad[i][k] - g.rad2[i][k];
      if (g.arrows[i][k] < 0)
        throw InvariantViolation("rad^2 exceeds rad");
    }
  return g;
}

GabrielQuiver restrict(GabrielQuiver const &g, std::vector<int> const &keep)
{
  GabrielQuiver out;
  int const r = static_cast<int>(keep.size());
  out.arrows.assign(r, std::vector<int>(r));
  out.rad = out.rad2 = out.arrows;
  for (int i = 0; i < r; ++i) {
    out.names.push_back(g.names[keep[i]]);
    for (int j = 0; j < r; ++j) {
      out.arrows[i][j] = g.arrows[keep[i]][keep[j]];
      out.rad[i][j] = g.rad[keep[i]][keep[j]];
      out.rad2[i][j] = g.rad2[keep[i]][keep[j]];
    }
  }
  return out;
}

std::vector<std::vector<int>> transposed(std::vector<std::vector<int>> m)
{
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      std::swap(m[i][j], m[j][i]);
  return m;
}

class IsoSearch
{
public:
  IsoSearch(std::vector<std::vector<int>> const &a1,
            std::vector<std::vector<int>> const &r1,
            std::vector<std::vector<int>> const &a2,
            std::vector<std::vector<int>> const &r2)
    : a1_(a1), r1_(r1), a2_(a2), r2_(r2), n_(static_cast<int>(a1.size()))
  {}

  bool run()
  {
    if (static_cast<int>(a2_.size()) != n_)
      return false;
    std::vector<std::vector<int>> sig1, sig2;
    for (int v = 0; v < n_; ++v) {
      sig1.push_back(signature(a1_, r1_, v));
      sig2.push_back(signature(a2_, r2_, v));
    }
    auto s1 = sig1, s2 = sig2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2)
      return false;
    sig1_ = std::move(sig1);
    sig2_ = std::move(sig2);
    map_.assign(n_, -1);
    used_.assign(n_, false);
    return extend(0);
  }

private:
  static std::vector<int> signature(std::vector<std::vector<int>> const &a,
                                    std::vector<std::vector<int>> const &r,
                                    int v)
  {
    int out = 0, in = 0, rout = 0, rin = 0;
    for (std::size_t w = 0; w < a.size(); ++w) {
      out += a[v][w];
      in += a[w][v];
      rout += r[v][w];
      rin += r[w][v];
    }
    return {out, in, rout, rin, a[v][v], r[v][v]};
  }

  bool extend(int v)
  {
    if (v == n_)
      return true;
    for (int w = 0; w < n_; ++w) {
      if (used_[w] || sig1_[v] != sig2_[w])
        continue;
      map_[v] = w;
      bool ok = true;
      for (int u = 0; u <= v && ok; ++u) {
        int const pu = map_[u];
        ok = a1_[v][u] == a2_[w][pu] && a1_[u][v] == a2_[pu][w] &&
             r1_[v][u] == r2_[w][pu] && r1_[u][v] == r2_[pu][w];
      }
      if (ok) {
        used_[w] = true;
        if (extend(v + 1))
          return true;
        used_[w] = false;
      }
    }
    map_[v] = -1;
    return false;
  }

  std::vector<std::vector<int>> const &a1_, &r1_, &a2_, &r2_;
  int n_;
  std::vector<std::vector<int>> sig1_, sig2_;
  std::vector<int> map_;
  std::vector<bool> used_;
};

} // namespace

GabrielQuiver gabriel_quiver(BasedAlgebra const &alg)
{
  int const r = alg.num_summands();
  std::vector<std::string> names;
  std::vector<std::vector<int>> dims(r, std::vector<int>(r));
  std::vector<std::vector<std::vector<int>>> rad(
      r, std::vector<std::vector<int>>(r));
  // Local positions inside each block.
  for (int i = 0; i < r; ++i) {
    names.push_back(alg.category().name(alg.summands()[i]));
    int const id = alg.identity(i);
    for (int j = 0; j < r; ++j) {
      auto const &blk = alg.block(i, j);
      dims[i][j] = static_cast<int>(blk.size());
      for (std::size_t k = 0; k < blk.size(); ++k)
        if (blk[k] != id)
          rad[i][j].push_back(blk[k]);
    }
  }
  auto product = [&](int i, int, int k, int a, int b) {
    Vector full = alg.multiply(a, b);
    Vector local;
    for (int idx : alg.block(i, k))
      local.push_back(full[idx]);
    return local;
  };
  return radical_layers(std::move(names), dims, rad, product);
}

bool isomorphic(GabrielQuiver const &a, GabrielQuiver const &b,
                bool allow_opposite)
{
  if (a.size() != b.size() || a.num_arrows() != b.num_arrows() ||
      a.rad2_dim() != b.rad2_dim())
    return false;
  if (IsoSearch(a.arrows, a.rad2, b.arrows, b.rad2).run())
    return true;
  if (!allow_opposite)
    return false;
  auto ta = transposed(a.arrows), tr = transposed(a.rad2);
  return IsoSearch(ta, tr, b.arrows, b.rad2).run();
}

bool is_oriented_cycle(GabrielQuiver const &g)
{
  int const n = g.size();
  if (n == 0 || g.num_arrows() != n)
    return false;
  for (int v = 0; v < n; ++v) {
    int out = 0, in = 0;
    for (int w = 0; w < n; ++w) {
      out += g.arrows[v][w];
      in += g.arrows[w][v];
    }
    if (out != 1 || in != 1)
      return false;
  }
  int v = 0, steps = 0;
  do {
    v = static_cast<int>(
        std::find(g.arrows[v].begin(), g.arrows[v].end(), 1) -
        g.arrows[v].begin());
    ++steps;
  } while (v != 0);
  return steps == n;
}

bool is_oriented_line(GabrielQuiver const &g)
{
  int const n = g.size();
  if (n == 0 || g.num_arrows() != n - 1)
    return false;
  int start = -1;
  for (int v = 0; v < n; ++v) {
    int out = 0, in = 0;
    for (int w = 0; w < n; ++w) {
      out += g.arrows[v][w];
      in += g.arrows[w][v];
    }
    if (out > 1 || in > 1)
      return false;
    if (in == 0) {
      if (start >= 0)
        return false;
      start = v;
    }
  }
  if (start < 0)
    return false;
  int v = start, seen = 1;
  while (true) {
    auto it = std::find(g.arrows[v].begin(), g.arrows[v].end(), 1);
    if (it == g.arrows[v].end())
      break;
    v = static_cast<int>(it - g.arrows[v].begin());
    ++seen;
  }
  return seen == n;
}

GabrielQuiver cycle_quiver(int n)
{
  GabrielQuiver g;
  g.arrows.assign(n, std::vector<int>(n, 0));
  g.rad2 = g.arrows;
  for (int i = 0; i < n; ++i) {
    g.names.push_back("v" + std::to_string(i));
    g.arrows[i][(i + 1) % n] += 1;
  }
  g.rad = g.arrows;
  return g;
}

namespace
{

int index_in(ObjectSet const &s, int id)
{
  auto it = std::find(s.begin(), s.end(), id);
  return it == s.end() ? -1 : static_cast<int>(it - s.begin());
}

// Fiberwise arrow counts of p : cover -> base at vertex v.
void check_fibers(GabrielQuiver const &cover, GabrielQuiver const &base,
                  std::vector<int> const &p, int v, CoveringReport &rep)
{
  int const nb = base.size();
  std::vector<int> out(nb, 0), in(nb, 0);
  for (int w = 0; w < cover.size(); ++w) {
    if (p[w] < 0)
      continue;
    out[p[w]] += cover.arrows[v][w];
    in[p[w]] += cover.arrows[w][v];
  }
  for (int b = 0; b < nb; ++b) {
    if (out[b] != base.arrows[p[v]][b])
      rep.failures.push_back("arrows out of " + cover.names[v] + " into the "
                             "fiber of " + base.names[b] + " do not match");
    if (in[b] != base.arrows[b][p[v]])
      rep.failures.push_back("arrows into " + cover.names[v] + " from the "
                             "fiber of " + base.names[b] + " do not match");
  }
}

} // namespace

CoveringReport covering_check_rho(OrbitCategory const &cm,
                                  OrbitCategory const &c1,
                                  ObjectSet const &t0)
{
  int const m = cm.m();
  ObjectSet base_set = normalized(t0);
  ObjectSet cover_set = fiber_closure(cm, c1, base_set);

  CoveringReport rep;
  rep.group = "Z_" + std::to_string(m);
  rep.order = m;
  rep.cover = gabriel_quiver(BasedAlgebra(cm, cover_set));
  rep.base = gabriel_quiver(BasedAlgebra(c1, base_set));
  int const n = rep.cover.size(), nb = rep.base.size();

  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) {
    p[i] = index_in(base_set, project_rho_m(cm, c1, cover_set[i]));
    rep.action.push_back(index_in(cover_set, cm.F(cover_set[i])));
    if (p[i] < 0 || rep.action[i] < 0)
      throw InvariantViolation("fiber closure is not closed");
  }

  rep.free_action = true;
  for (int i = 0; i < n; ++i) {
    int v = i, k = 0;
    do {
      v = rep.action[v];
      ++k;
    } while (v != i && k <= m);
    if (k != m)
      rep.free_action = false;
  }
  if (!rep.free_action)
    rep.failures.push_back("Z_" + std::to_string(m) + " does not act freely");

  rep.preserves_arrows = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rep.cover.arrows[rep.action[i]][rep.action[j]] !=
          rep.cover.arrows[i][j])
        rep.preserves_arrows = false;
  if (!rep.preserves_arrows)
    rep.failures.push_back("F does not preserve the arrows");

  std::size_t before = rep.failures.size();
  for (int v = 0; v < n; ++v)
    check_fibers(rep.cover, rep.base, p, v, rep);
  rep.arrow_bijection = rep.failures.size() == before;

  rep.quotient.assign(nb, std::vector<int>(nb, 0));
  for (int b = 0; b < nb; ++b) {
    int rep_v = index_in(p, b);
    if (rep_v < 0)
      throw InvariantViolation("empty fiber");
    for (int w = 0; w < n; ++w)
      rep.quotient[b][p[w]] += rep.cover.arrows[rep_v][w];
  }
  rep.quotient_matches = rep.quotient == rep.base.arrows;
  if (!rep.quotient_matches)
    rep.failures.push_back("quotient quiver differs from the base");
  return rep;
}

WindowQuiver window_quiver(OrbitCategory const &c1, ObjectSet const &t0,
                           int radius)
{
  if (radius < 1)
    throw WindowTooSmall("window radius must be at least 1");
  auto const &model = c1.model();
  auto const &mesh = c1.mesh();
  ObjectSet base = normalized(t0);

  WindowQuiver wq;
  std::vector<std::string> names;
  for (int i = -radius; i <= radius; ++i)
    for (int t : base) {
      wq.vertices.push_back(model.F(c1.vertex(t), i));
      wq.level.push_back(i);
      names.push_back("F^" + std::to_string(i) + " " + c1.name(t));
    }
  int const n = static_cast<int>(wq.vertices.size());
  std::vector<std::vector<int>> dims(n, std::vector<int>(n));
  std::vector<std::vector<std::vector<int>>> rad(
      n, std::vector<std::vector<int>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      dims[i][j] = mesh.dim(wq.vertices[i], wq.vertices[j]);
      if (i == j && dims[i][j] != 1)
        throw InvariantViolation("endomorphisms of " + names[i] +
                                 " are not one-dimensional");
      if (i != j)
        for (int k = 0; k < dims[i][j]; ++k)
          rad[i][j].push_back(k);
    }
  auto product = [&](int i, int j, int k, int a, int b) {
    return mesh
        .compose(mesh.basis_element(wq.vertices[i], wq.vertices[j], a),
                 mesh.basis_element(wq.vertices[j], wq.vertices[k], b))
        .coords;
  };
  wq.quiver = radical_layers(std::move(names), dims, rad, product);
  for (int i = 0; i < n; ++i)
    if (std::abs(wq.level[i]) <= radius - 1)
      wq.interior.push_back(i);
  wq.interior_quiver = restrict(wq.quiver, wq.interior);
  return wq;
}

CoveringReport covering_check_pi(OrbitCategory const &c1, ObjectSet const &t0,
                                 int m, int radius)
{
  if (m < 1)
    throw Error("m must be positive");
  WindowQuiver wq = window_quiver(c1, t0, radius);
  OrbitCategory cm(c1.mesh_ptr(), m);
  ObjectSet cover_set = fiber_closure(cm, c1, normalized(t0));

  CoveringReport rep;
  rep.group = "Z";
  rep.order = 0;
  rep.cover = wq.quiver;
  rep.base = gabriel_quiver(BasedAlgebra(cm, cover_set));
  int const n = rep.cover.size(), nb = rep.base.size();

  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) {
    p[i] = index_in(cover_set, project_pi_m(cm, wq.vertices[i]));
    if (p[i] < 0)
      throw InvariantViolation("window vertex outside the fiber closure");
    auto it = std::find(wq.vertices.begin(), wq.vertices.end(),
                        c1.model().F(wq.vertices[i]));
    rep.action.push_back(it == wq.vertices.end()
                             ? -1
                             : static_cast<int>(it - wq.vertices.begin()));
  }

  rep.free_action = true;
  for (int i = 0; i < n; ++i)
    if (rep.action[i] == i)
      rep.free_action = false;
  if (!rep.free_action)
    rep.failures.push_back("F has a fixed vertex");

  rep.preserves_arrows = true;
  for (int i : wq.interior)
    for (int j : wq.interior) {
      int const fi = rep.action[i], fj = rep.action[j];
      if (fi >= 0 && fj >= 0 &&
          rep.cover.arrows[fi][fj] != rep.cover.arrows[i][j])
        rep.preserves_arrows = false;
    }
  if (!rep.preserves_arrows)
    rep.failures.push_back("F does not preserve the interior arrows");

  std::size_t before = rep.failures.size();
  for (int v : wq.interior)
    check_fibers(rep.cover, rep.base, p, v, rep);
  rep.arrow_bijection = rep.failures.size() == before;

  rep.quotient.assign(nb, std::vector<int>(nb, 0));
  std::vector<bool> hit(nb, false);
  for (int v : wq.interior) {
    if (hit[p[v]])
      continue;
    hit[p[v]] = true;
    for (int w = 0; w < n; ++w)
      rep.quotient[p[v]][p[w]] += rep.cover.arrows[v][w];
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    throw WindowTooSmall("interior misses a vertex of the base quiver");
  rep.quotient_matches = rep.quotient == rep.base.arrows;
  if (!rep.quotient_matches)
    rep.failures.push_back("quotient quiver differs from the base");
  return rep;
}

TrivialExtReport trivial_ext_check(OrbitCategory const &c1,
                                   ObjectSet const &t0, int m)
{
  ObjectSet base = normalized(t0);
  BasedAlgebra alg(c1, base);
  TrivialExtReport rep;
  rep.m = m;
  rep.dimension = alg.dim();
  rep.grading = alg.grading();
  rep.degree0 = rep.grading.count(0) ? rep.grading.at(0) : 0;
  rep.degree1 = rep.grading.count(1) ? rep.grading.at(1) : 0;

  auto const &model = c1.model();
  int b = 0, mm = 0;
  for (int x : base)
    for (int y : base) {
      b += model.hom_dim(c1.vertex(x), c1.vertex(y));
      mm += model.hom_dim(c1.vertex(x), model.F(c1.vertex(y)));
    }
  rep.support_ok = rep.degree0 + rep.degree1 == rep.dimension &&
                   rep.degree0 == b && rep.degree1 == mm;
  int const modules = model.ar().size();
  rep.tilting_module = std::all_of(base.begin(), base.end(),
                                   [&](int x) { return x < modules; });
  if (m > 1) {
    OrbitCategory cm(c1.mesh_ptr(), m);
    rep.cover_dimension =
        BasedAlgebra(cm, fiber_closure(cm, c1, base)).dim();
    rep.cover_ok = rep.cover_dimension == m * (rep.degree0 + rep.degree1);
  } else {
    rep.cover_dimension = rep.dimension;
  }
  return rep;
}

QuotientModel module_model(OrbitCategory const &c, ObjectSet const &t)
{
  std::vector<int> ideal;
  for (int x : t)
    ideal.push_back(c.shift(x));
  return quotient_model(c, ideal);
}

Prop26Report prop26_check(OrbitCategory const &c1, ObjectSet const &t,
                          int summand)
{
  Prop26Report rep;
  rep.exchange = mutate(c1, t, summand);
  std::vector<int> left, right;
  for (int x : rep.exchange.before)
    left.push_back(c1.shift(x));
  for (int x : rep.exchange.replacement)
    left.push_back(c1.shift(x));
  for (int x : rep.exchange.after)
    right.push_back(c1.shift(x));
  for (int x : rep.exchange.removed)
    right.push_back(c1.shift(x));
  rep.left = quotient_model(c1, left);
  rep.right = quotient_model(c1, right);
  rep.passed = rep.left.objects == rep.right.objects &&
               rep.left.hom == rep.right.hom;
  return rep;
}

std::optional<CorpusMatch>
match_cluster_tilted(GabrielQuiver const &g,
                     std::vector<std::string> const &types,
                     SearchOptions opts)
{
  for (auto const &type : types) {
    Quiver q = dynkin_quiver(type);
    if (q.num_vertices() != g.size())
      continue;
    OrbitCategory c(q, 1);
    for (auto const &t : enumerate_cluster_tilting(c, opts)) {
      GabrielQuiver h = gabriel_quiver(BasedAlgebra(c, t));
      if (isomorphic(g, h))
        return CorpusMatch{type, t, std::move(h)};
    }
  }
  return std::nullopt;
}

} // namespace orbitcat
