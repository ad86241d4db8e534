#include "orbitcat/tilting.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orbitcat/error.hpp"
#include "orbitcat/parallel.hpp"

namespace orbitcat
{

ObjectSet normalized(ObjectSet s)
{
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool is_rigid(OrbitCategory const &c, ObjectSet const &s)
{
  for (int x : s)
    for (int y : s)
      if (c.ext1(x, y) != 0)
        return false;
  return true;
}

bool is_cluster_tilting(OrbitCategory const &c, ObjectSet const &s)
{
  if (s.empty() || !is_rigid(c, s))
    return false;
  for (int x = 0; x < c.size(); ++x) {
    if (std::find(s.begin(), s.end(), x) != s.end())
      continue;
    bool left = false, right = false;
    for (int y : s) {
      left = left || c.ext1(x, y) != 0;
      right = right || c.ext1(y, x) != 0;
    }
    if (!left || !right)
      return false;
  }
  return true;
}

namespace
{

class CliqueSearch
{
public:
  CliqueSearch(std::vector<std::vector<bool>> adj, std::size_t budget)
    : adj_(std::move(adj)), budget_(budget)
  {}

  std::vector<ObjectSet> run(std::vector<int> const &vertices)
  {
    ObjectSet r;
    expand(r, vertices, {});
    return found_;
  }

private:
  // Bron-Kerbosch with pivoting.
  void expand(ObjectSet &r, std::vector<int> p, std::vector<int> x)
  {
    if (++nodes_ > budget_)
      throw SearchBudgetExceeded("clique search exceeded " +
                                 std::to_string(budget_) + " nodes");
    if (p.empty()) {
      if (x.empty())
        found_.push_back(normalized(r));
      return;
    }
    int pivot = p.front();
    std::size_t best = 0;
    for (auto const *set : {&p, &x})
      for (int u : *set) {
        std::size_t cnt = 0;
        for (int v : p)
          cnt += adj_[u][v];
        if (cnt > best) {
          best = cnt;
          pivot = u;
        }
      }
    std::vector<int> candidates;
    for (int v : p)
      if (!adj_[pivot][v])
        candidates.push_back(v);
    for (int v : candidates) {
      std::vector<int> np, nx;
      for (int u : p)
        if (adj_[v][u])
          np.push_back(u);
      for (int u : x)
        if (adj_[v][u])
          nx.push_back(u);
      r.push_back(v);
      expand(r, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  std::vector<std::vector<bool>> adj_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<ObjectSet> found_;
};

} // namespace

std::vector<ObjectSet> enumerate_cluster_tilting(OrbitCategory const &c,
                                                 SearchOptions opts)
{
  int const n = c.size();
  std::vector<std::vector<int>> ext(n, std::vector<int>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t x) {
    for (int y = 0; y < n; ++y)
      ext[x][y] = c.ext1(static_cast<int>(x), y);
  });

  std::vector<int> rigid;
  for (int x = 0; x < n; ++x)
    if (ext[x][x] == 0)
      rigid.push_back(x);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int x : rigid)
    for (int y : rigid)
      adj[x][y] = x != y && ext[x][y] == 0 && ext[y][x] == 0;

  CliqueSearch search(std::move(adj), opts.node_budget);
  std::vector<ObjectSet> out;
  for (auto &clique : search.run(rigid)) {
    // Every object outside needs Ext^1 into the clique and out of it.
    bool tilting = true;
    for (int x = 0; x < n && tilting; ++x) {
      if (std::binary_search(clique.begin(), clique.end(), x))
        continue;
      tilting = std::any_of(clique.begin(), clique.end(),
                            [&](int y) { return ext[x][y] != 0; }) &&
                std::any_of(clique.begin(), clique.end(),
                            [&](int y) { return ext[y][x] != 0; });
    }
    if (tilting)
      out.push_back(std::move(clique));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BijectionReport verify_fiber_bijection(OrbitCategory const &cm,
                                       OrbitCategory const &c1,
                                       std::vector<ObjectSet> const &enum_m,
                                       std::vector<ObjectSet> const &enum_1)
{
  BijectionReport rep;
  rep.count_m = static_cast<int>(enum_m.size());
  rep.count_1 = static_cast<int>(enum_1.size());
  std::set<ObjectSet> targets(enum_m.begin(), enum_m.end());
  std::set<ObjectSet> images;
  for (auto const &t : enum_1) {
    ObjectSet image = fiber_closure(cm, c1, t);
    if (!targets.count(image)) {
      std::string w = "closure of {";
      for (int x : t)
        w += " " + c1.name(x);
      rep.witnesses.push_back(w + " } is not cluster tilting in C_{F^m}");
    }
    if (!images.insert(image).second)
      rep.witnesses.push_back("two C(H) objects share a fiber closure");
  }
  for (auto const &t : enum_m)
    if (!images.count(t)) {
      std::string w = "{";
      for (int x : t)
        w += " " + cm.name(x);
      rep.witnesses.push_back(w + " } is not a fiber closure");
    }
  rep.bijection = rep.witnesses.empty() && rep.count_m == rep.count_1;
  return rep;
}

BijectionReport verify_fiber_bijection(OrbitCategory const &cm,
                                       OrbitCategory const &c1,
                                       SearchOptions opts)
{
  return verify_fiber_bijection(cm, c1, enumerate_cluster_tilting(cm, opts),
                                enumerate_cluster_tilting(c1, opts));
}

ObjectSet f_orbit(OrbitCategory const &c, int x)
{
  ObjectSet out{x};
  for (int y = c.F(x); y != x; y = c.F(y))
    out.push_back(y);
  return normalized(out);
}

bool verify_F_stability(OrbitCategory const &c, ObjectSet const &t)
{
  ObjectSet image;
  for (int x : t)
    image.push_back(c.F(x));
  return normalized(image) == normalized(t);
}

std::vector<int> f_orbit_sizes(OrbitCategory const &c, ObjectSet const &t)
{
  std::vector<int> sizes;
  std::set<int> seen;
  for (int x : t) {
    if (seen.count(x))
      continue;
    auto orbit = f_orbit(c, x);
    seen.insert(orbit.begin(), orbit.end());
    sizes.push_back(static_cast<int>(orbit.size()));
  }
  return sizes;
}

std::vector<ObjectSet> completions(OrbitCategory const &c,
                                   ObjectSet const &rest)
{
  std::set<ObjectSet> out;
  for (int y = 0; y < c.size(); ++y) {
    if (std::binary_search(rest.begin(), rest.end(), y))
      continue;
    ObjectSet orbit = f_orbit(c, y);
    bool disjoint = std::none_of(orbit.begin(), orbit.end(), [&](int o) {
      return std::binary_search(rest.begin(), rest.end(), o);
    });
    if (!disjoint || out.count(orbit))
      continue;
    ObjectSet candidate = rest;
    candidate.insert(candidate.end(), orbit.begin(), orbit.end());
    if (is_cluster_tilting(c, normalized(candidate)))
      out.insert(orbit);
  }
  return {out.begin(), out.end()};
}

ExchangePair mutate(OrbitCategory const &c, ObjectSet const &t, int summand)
{
  ExchangePair ex;
  ex.before = normalized(t);
  if (!std::binary_search(ex.before.begin(), ex.before.end(), summand))
    throw Error(c.name(summand) + " is not a summand");
  ex.removed = f_orbit(c, summand);
  ObjectSet rest;
  std::set_difference(ex.before.begin(), ex.before.end(), ex.removed.begin(),
                      ex.removed.end(), std::back_inserter(rest));

  std::vector<ObjectSet> others;
  for (auto &o : completions(c, rest))
    if (o != ex.removed)
      others.push_back(std::move(o));
  if (others.empty())
    throw InvariantViolation("no exchange for " + c.name(summand));
  if (others.size() > 1)
    throw InvariantViolation("exchange for " + c.name(summand) +
                             " is not unique");
  ex.replacement = others.front();
  ex.after = rest;
  ex.after.insert(ex.after.end(), ex.replacement.begin(),
                  ex.replacement.end());
  ex.after = normalized(ex.after);
  return ex;
}

std::optional<ObjectSet> is_triangular_rigid(OrbitCategory const &c1,
                                             ObjectSet const &t,
                                             SearchOptions opts)
{
  if (c1.m() != 1)
    throw Error("triangular rigidity is defined in the cluster category");
  ObjectSet s = normalized(t);
  int const modules = c1.model().ar().size();
  auto is_module = [&](int id) { return id < modules; };
  if (s.empty() || !std::all_of(s.begin(), s.end(), is_module))
    throw Error("every summand must be a module at shift 0");
  if (!is_rigid(c1, s))
    throw Error("object is not rigid");
  if (is_cluster_tilting(c1, s))
    return ObjectSet{};

  auto hom_h = [&](ObjectSet const &a, ObjectSet const &b) {
    int total = 0;
    for (int x : a)
      for (int y : b)
        total += c1.model().hom_dim(c1.vertex(x), c1.vertex(y));
    return total;
  };

  std::vector<ObjectSet> witnesses;
  for (auto const &ct : enumerate_cluster_tilting(c1, opts)) {
    if (!std::includes(ct.begin(), ct.end(), s.begin(), s.end()))
      continue;
    ObjectSet comp;
    std::set_difference(ct.begin(), ct.end(), s.begin(), s.end(),
                        std::back_inserter(comp));
    if (!std::all_of(comp.begin(), comp.end(), is_module))
      continue;
    if (hom_h(s, comp) == 0 || hom_h(comp, s) == 0)
      witnesses.push_back(std::move(comp));
  }
  if (witnesses.empty())
    return std::nullopt;
  std::sort(witnesses.begin(), witnesses.end());
  return witnesses.front();
}

} // namespace orbitcat
