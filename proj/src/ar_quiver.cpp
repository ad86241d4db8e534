#include "orbitcat/ar_quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "orbitcat/error.hpp"

namespace orbitcat
{

std::string to_string(ZVertex z)
{
  return "(" + std::to_string(z.slice) + "," + std::to_string(z.vertex) + ")";
}

std::optional<int> ARQuiver::find(DimVector const &d) const
{
  for (int i = 0; i < size(); ++i)
    if (dims[i] == d)
      return i;
  return std::nullopt;
}

std::optional<int> ARQuiver::at(ZVertex z) const
{
  if (z.vertex < 0 || z.vertex >= static_cast<int>(orbit_end.size()) ||
      z.slice < 0 || z.slice > orbit_end[z.vertex])
    return std::nullopt;
  for (int i = 0; i < size(); ++i)
    if (position[i] == z)
      return i;
  return std::nullopt;
}

ARQuiver knit_module_category(Quiver const &q)
{
  classify(q);
  int const n = q.num_vertices();

  std::vector<DimVector> proj_dim(n, DimVector(n)), inj_dim(n, DimVector(n));
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      proj_dim[v][w] = q.path_count(v, w);
      inj_dim[v][w] = q.path_count(w, v);
    }

  // Within a slice, arrows (k,j) -> (k,i) run against Q, so sinks first.
  std::vector<int> order(q.topological_order().rbegin(),
                         q.topological_order().rend());

  ARQuiver ar;
  ar.proj.assign(n, -1);
  ar.inj.assign(n, -1);
  ar.simple.assign(n, -1);
  ar.orbit_end.assign(n, -1);

  std::map<ZVertex, int> id;
  std::vector<bool> closed(n, false); // orbit has reached its injective

  auto add = [&](ZVertex z, DimVector d) {
    int m = ar.size();
    id[z] = m;
    ar.dims.push_back(std::move(d));
    ar.position.push_back(z);
    ar.tau.emplace_back();
    ar.tau_inv.emplace_back();
    ar.orbit_end[z.vertex] = z.slice;
    for (int w = 0; w < n; ++w)
      if (ar.dims[m] == inj_dim[w]) {
        ar.inj[w] = m;
        closed[z.vertex] = true;
      }
    return m;
  };

  for (int v : order)
    ar.proj[v] = add({0, v}, proj_dim[v]);

  auto lookup = [&](ZVertex z) -> int {
    auto it = id.find(z);
    if (it == id.end())
      throw InvariantViolation("mesh at " + to_string(z) +
                               " needs a middle term outside mod kQ");
    return it->second;
  };

  for (int k = 0; !std::all_of(closed.begin(), closed.end(),
                               [](bool b) { return b; });
       ++k) {
    if (k > 4 * n * n + 4)
      throw InvariantViolation("knitting did not terminate");
    for (int v : order) {
      if (closed[v] || ar.orbit_end[v] != k)
        continue;
      int const m = lookup({k, v});
      DimVector d(n, 0);
      for (int i : q.predecessors(v))
        for (int w = 0; w < n; ++w)
          d[w] += ar.dims[lookup({k, i})][w];
      for (int l : q.successors(v))
        for (int w = 0; w < n; ++w)
          d[w] += ar.dims[lookup({k + 1, l})][w];
      for (int w = 0; w < n; ++w) {
        d[w] -= ar.dims[m][w];
        if (d[w] < 0)
          throw InvariantViolation("negative dimension while knitting");
      }
      if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; }))
        throw InvariantViolation("zero module while knitting");
      int next = add({k + 1, v}, std::move(d));
      ar.tau[next] = m;
      ar.tau_inv[m] = next;
    }
  }

  for (int v = 0; v < n; ++v) {
    DimVector s(n, 0);
    s[v] = 1;
    auto found = ar.find(s);
    if (!found)
      throw InvariantViolation("simple module missing from AR quiver");
    ar.simple[v] = *found;
    if (ar.inj[v] < 0)
      throw InvariantViolation("injective module missing from AR quiver");
  }

  for (int m = 0; m < ar.size(); ++m) {
    ZVertex z = ar.position[m];
    for (int i : q.predecessors(z.vertex))
      if (auto t = id.find({z.slice, i}); t != id.end())
        ar.arrows.emplace_back(m, t->second);
    for (int l : q.successors(z.vertex))
      if (auto t = id.find({z.slice + 1, l}); t != id.end())
        ar.arrows.emplace_back(m, t->second);
  }
  std::sort(ar.arrows.begin(), ar.arrows.end());
  return ar;
}

std::vector<DimVector> positive_roots(Quiver const &q)
{
  classify(q);
  int const n = q.num_vertices();
  std::vector<std::vector<int>> nbrs(n);
  for (auto const &a : q.arrows()) {
    nbrs[a.source].push_back(a.target);
    nbrs[a.target].push_back(a.source);
  }

  std::set<DimVector> roots;
  std::queue<DimVector> todo;
  for (int v = 0; v < n; ++v) {
    DimVector e(n, 0);
    e[v] = 1;
    roots.insert(e);
    todo.push(e);
  }
  while (!todo.empty()) {
    DimVector d = todo.front();
    todo.pop();
    for (int i = 0; i < n; ++i) {
      // s_i(d) = d - (d, e_i) e_i with the symmetric Cartan form.
      int pairing = 2 * d[i];
      for (int j : nbrs[i])
        pairing -= d[j];
      DimVector r = d;
      r[i] -= pairing;
      if (r[i] < 0)
        continue;
      if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; }))
        continue;
      if (roots.insert(r).second)
        todo.push(r);
    }
  }
  return {roots.begin(), roots.end()};
}

} // namespace orbitcat
