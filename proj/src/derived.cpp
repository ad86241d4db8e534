#include "orbitcat/derived.hpp"

#include <algorithm>
#include <set>

#include "orbitcat/error.hpp"

namespace orbitcat
{

DerivedModel::DerivedModel(Quiver q)
  : quiver_(std::move(q)),
    ar_(knit_module_category(quiver_)),
    order_(quiver_.topological_order().rbegin(),
           quiver_.topological_order().rend())
{
  int const n = rank();
  order_index_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    order_index_[order_[i]] = i;

  // tau^{-1} I_u = P_u[1], so [1] sends (0,u) one step past I_u. Since [1]
  // commutes with tau this fixes it everywhere.
  shift_slices_.assign(n, 0);
  shift_vertex_.assign(n, 0);
  unshift_vertex_.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    ZVertex at_inj = ar_.position[ar_.inj[u]];
    shift_slices_[u] = at_inj.slice + 1;
    shift_vertex_[u] = at_inj.vertex;
  }
  for (int u = 0; u < n; ++u)
    unshift_vertex_[shift_vertex_[u]] = u;
}

bool DerivedModel::precedes(ZVertex a, ZVertex b) const
{
  if (a.slice != b.slice)
    return a.slice < b.slice;
  return order_index_[a.vertex] < order_index_[b.vertex];
}

std::vector<ZVertex> DerivedModel::in_neighbors(ZVertex z) const
{
  std::vector<ZVertex> out;
  for (int j : quiver_.successors(z.vertex))
    out.push_back({z.slice, j});
  for (int i : quiver_.predecessors(z.vertex))
    out.push_back({z.slice - 1, i});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ZVertex> DerivedModel::out_neighbors(ZVertex z) const
{
  std::vector<ZVertex> out;
  for (int i : quiver_.predecessors(z.vertex))
    out.push_back({z.slice, i});
  for (int j : quiver_.successors(z.vertex))
    out.push_back({z.slice + 1, j});
  std::sort(out.begin(), out.end());
  return out;
}

bool DerivedModel::has_arrow(ZVertex from, ZVertex to) const
{
  if (to.slice == from.slice)
    return quiver_.has_arrow(to.vertex, from.vertex);
  if (to.slice == from.slice + 1)
    return quiver_.has_arrow(from.vertex, to.vertex);
  return false;
}

ZVertex DerivedModel::shift(ZVertex z, int n) const
{
  for (; n > 0; --n)
    z = {z.slice + shift_slices_[z.vertex], shift_vertex_[z.vertex]};
  for (; n < 0; ++n) {
    int u = unshift_vertex_[z.vertex];
    z = {z.slice - shift_slices_[u], u};
  }
  return z;
}

DerivedObject DerivedModel::label(ZVertex z) const
{
  int s = 0;
  for (;;) {
    if (z.slice < 0) {
      z = shift(z, 1);
      --s;
    } else if (z.slice > ar_.orbit_end[z.vertex]) {
      z = shift(z, -1);
      ++s;
    } else {
      auto m = ar_.at(z);
      if (!m)
        throw InvariantViolation("unlabelled vertex " + to_string(z));
      return {*m, s};
    }
  }
}

ZVertex DerivedModel::locate(DerivedObject x) const
{
  if (x.module < 0 || x.module >= ar_.size())
    throw Error("no module with id " + std::to_string(x.module));
  return shift(ar_.position[x.module], x.shift);
}

Hammock DerivedModel::compute_hammock(ZVertex x) const
{
  Hammock h{x, {}, x.slice, x.slice};
  ZVertex const x1 = shift(x, 1);
  int zero_run = 0;
  for (int k = x.slice;; ++k) {
    bool slice_zero = true;
    for (int v : order_) {
      ZVertex z{k, v};
      if (k == x.slice && order_index_[v] < order_index_[x.vertex])
        continue;
      int val = (z == x) + (z == x1) - h.at(tau(z));
      for (ZVertex e : in_neighbors(z))
        val += h.at(e);
      if (val < 0)
        throw InvariantViolation("negative hammock value at " + to_string(z));
      if (val > 0) {
        h.values[z] = val;
        h.last_slice = k;
        slice_zero = false;
      }
    }
    zero_run = slice_zero ? zero_run + 1 : 0;
    if (k > x1.slice && zero_run >= 2)
      break;
  }
  return h;
}

Hammock const &DerivedModel::hammock(ZVertex x) const
{
  {
    std::lock_guard lock(mutex_);
    if (auto it = hammocks_.find(x); it != hammocks_.end())
      return *it->second;
  }
  auto h = std::make_unique<Hammock>(compute_hammock(x));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = hammocks_.emplace(x, std::move(h));
  return *it->second;
}

int DerivedModel::hom_dim(ZVertex x, ZVertex y) const
{
  if (y.slice < x.slice)
    return 0;
  return hammock(x).at(y);
}

std::string DerivedModel::module_name(int module) const
{
  int const n = rank();
  for (auto const *table : {&ar_.proj, &ar_.simple, &ar_.inj}) {
    for (int v = 0; v < n; ++v)
      if ((*table)[v] == module) {
        char tag = table == &ar_.proj ? 'P' : table == &ar_.simple ? 'S' : 'I';
        return std::string(1, tag) + "_" + quiver_.name(v);
      }
  }
  std::string s = "dim=(";
  for (int v = 0; v < n; ++v) {
    if (v)
      s += ",";
    s += std::to_string(ar_.dims[module][v]);
  }
  return s + ")";
}

std::string DerivedModel::name(DerivedObject x) const
{
  return module_name(x.module) + "[" + std::to_string(x.shift) + "]";
}

std::vector<DerivedObject> DerivedWindow::objects() const
{
  std::vector<DerivedObject> out;
  for (ZVertex z : vertices)
    out.push_back(model->label(z));
  return out;
}

DerivedWindow build_window(std::shared_ptr<DerivedModel const> model,
                           int shift_lo, int shift_hi)
{
  if (shift_lo > 0 || shift_hi < 0 || shift_lo > shift_hi)
    throw Error("window shift range must satisfy lo <= 0 <= hi");
  DerivedWindow w{std::move(model), shift_lo, shift_hi, 0, 0, {}};
  auto const &ar = w.model->ar();
  bool first = true;
  for (int m = 0; m < ar.size(); ++m)
    for (int s : {shift_lo, shift_hi}) {
      ZVertex z = w.model->locate({m, s});
      if (first || z.slice < w.k_min)
        w.k_min = z.slice;
      if (first || z.slice > w.k_max)
        w.k_max = z.slice;
      first = false;
    }
  --w.k_min;
  ++w.k_max;
  for (int k = w.k_min; k <= w.k_max; ++k)
    for (int v : w.model->slice_order())
      w.vertices.push_back({k, v});
  return w;
}

DerivedWindow build_window(Quiver q, int shift_lo, int shift_hi)
{
  return build_window(std::make_shared<DerivedModel const>(std::move(q)),
                      shift_lo, shift_hi);
}

namespace
{

DerivedObject checked(DerivedWindow const &w, ZVertex z)
{
  if (!w.contains(z))
    throw OutOfWindow("image " + to_string(z) + " lies outside the window");
  return w.model->label(z);
}

ZVertex checked_locate(DerivedWindow const &w, DerivedObject x)
{
  ZVertex z = w.model->locate(x);
  if (!w.contains(z))
    throw OutOfWindow(w.model->name(x) + " lies outside the window");
  return z;
}

} // namespace

DerivedObject shift_map(DerivedWindow const &w, DerivedObject x)
{
  return checked(w, w.model->shift(checked_locate(w, x)));
}

DerivedObject tau_map(DerivedWindow const &w, DerivedObject x)
{
  return checked(w, w.model->tau(checked_locate(w, x)));
}

DerivedObject F_map(DerivedWindow const &w, DerivedObject x)
{
  return checked(w, w.model->F(checked_locate(w, x)));
}

DerivedObject serre_map(DerivedWindow const &w, DerivedObject x)
{
  return checked(w, w.model->serre(checked_locate(w, x)));
}

int hom_dim(DerivedWindow const &w, DerivedObject x, DerivedObject y)
{
  return w.model->hom_dim(checked_locate(w, x), checked_locate(w, y));
}

bool euler_check(DerivedModel const &model, DerivedObject x, DerivedObject y)
{
  auto const &ar = model.ar();
  int const expected =
      ((y.shift - x.shift) % 2 == 0 ? 1 : -1) *
      euler_form(model.quiver(), ar.dims[x.module], ar.dims[y.module]);
  // Hom(M[s], N[t+n]) vanishes unless t+n-s is 0 or 1.
  int sum = 0;
  for (int n = x.shift - y.shift - 1; n <= x.shift - y.shift + 2; ++n) {
    int sign = (n % 2 == 0) ? 1 : -1;
    sum += sign * model.hom_dim(x, {y.module, y.shift + n});
  }
  return sum == expected;
}

} // namespace orbitcat
