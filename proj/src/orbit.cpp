#include "orbitcat/orbit.hpp"

#include <algorithm>
#include <set>

#include "orbitcat/error.hpp"

namespace orbitcat
{

HomComponent const *OrbitHomSpace::component(int degree) const
{
  for (auto const &c : components)
    if (c.degree == degree)
      return &c;
  return nullptr;
}

OrbitCategory::OrbitCategory(std::shared_ptr<MeshCategory const> mesh, int m)
  : mesh_(std::move(mesh)), m_(m)
{
  if (m_ < 1)
    throw UsageError("m must be a positive integer");
  auto const &dm = model();
  auto const &ar = dm.ar();

  std::vector<ZVertex> base;
  for (int id = 0; id < ar.size(); ++id)
    base.push_back(ar.position[id]);
  for (int v = 0; v < dm.rank(); ++v)
    base.push_back(dm.locate({ar.proj[v], 1}));
  base_size_ = static_cast<int>(base.size());

  for (int i = 0; i < m_; ++i)
    for (ZVertex z : base) {
      ZVertex w = dm.F(z, i);
      index_[w] = static_cast<int>(domain_.size());
      domain_.push_back(w);
    }
}

OrbitCategory::OrbitCategory(Quiver q, int m)
  : OrbitCategory(std::make_shared<MeshCategory const>(
                      std::make_shared<DerivedModel const>(std::move(q))),
                  m)
{}

void OrbitCategory::check(int id) const
{
  if (id < 0 || id >= size())
    throw Error("object id " + std::to_string(id) + " out of range");
}

int OrbitCategory::f_power(ZVertex z) const
{
  auto const &dm = model();
  auto const &end = dm.ar().orbit_end;
  int j = 0;
  for (;;) {
    if (z.slice < 0) {
      z = dm.F(z, 1);
      --j;
    } else if (z.slice > end[z.vertex] + 1) {
      z = dm.F(z, -1);
      ++j;
    } else {
      return j;
    }
  }
}

ZVertex OrbitCategory::canonical_vertex(ZVertex z) const
{
  int j = f_power(z);
  int q = j >= 0 ? j / m_ : -((-j + m_ - 1) / m_);
  return model().F(z, -q * m_);
}

int OrbitCategory::canonical(ZVertex z) const
{
  auto it = index_.find(canonical_vertex(z));
  if (it == index_.end())
    throw InvariantViolation("canonical form outside fundamental domain");
  return it->second;
}

int OrbitCategory::F(int id, int n) const
{
  check(id);
  return canonical(model().F(domain_[id], n));
}

int OrbitCategory::shift(int id, int n) const
{
  check(id);
  return canonical(model().shift(domain_[id], n));
}

int OrbitCategory::serre(int id, int n) const
{
  check(id);
  return canonical(model().serre(domain_[id], n));
}

int OrbitCategory::tau(int id, int n) const
{
  check(id);
  return canonical(model().tau(domain_[id], n));
}

OrbitHomSpace const &OrbitCategory::hom_space(int x, int y) const
{
  check(x);
  check(y);
  {
    std::lock_guard lock(mutex_);
    if (auto it = spaces_.find({x, y}); it != spaces_.end())
      return *it->second;
  }

  auto const &dm = model();
  ZVertex const xv = domain_[x], yv = domain_[y];
  int const sx = dm.label(xv).shift;
  auto space = std::make_unique<OrbitHomSpace>();
  space->source = x;
  space->target = y;
  // F^m raises the shift by at least m and every domain object has shift in
  // [0, 2m-1]; hereditary vanishing leaves at most |i| <= 2.
  for (int i = -3; i <= 3; ++i) {
    ZVertex t = dm.F(yv, m_ * i);
    int diff = dm.label(t).shift - sx;
    if (diff != 0 && diff != 1)
      continue;
    int d = dm.hom_dim(xv, t);
    if (d == 0)
      continue;
    if (mesh_->dim(xv, t) != d)
      throw InvariantViolation("mesh basis disagrees with hammock");
    space->components.push_back({i, t, d, space->dim});
    space->dim += d;
  }

  std::lock_guard lock(mutex_);
  auto [it, inserted] = spaces_.emplace(std::pair{x, y}, std::move(space));
  return *it->second;
}

GradedHom OrbitCategory::hom(int x, int y) const
{
  GradedHom g;
  for (auto const &c : hom_space(x, y).components) {
    g.components[c.degree] = c.dim;
    g.total += c.dim;
  }
  return g;
}

int OrbitCategory::hom_total(int x, int y) const
{
  return hom_space(x, y).dim;
}

int OrbitCategory::ext1(int x, int y) const
{
  return hom_total(x, shift(y, 1));
}

OrbitMorphism OrbitCategory::zero(int x, int y) const
{
  return {x, y, Vector(hom_space(x, y).dim, Rational(0))};
}

OrbitMorphism OrbitCategory::identity(int x) const
{
  OrbitMorphism f = zero(x, x);
  auto const *c = hom_space(x, x).component(0);
  if (c == nullptr || c->dim != 1)
    throw InvariantViolation("degree-0 endomorphisms are not one-dimensional");
  f.coords[c->offset] = 1;
  return f;
}

OrbitMorphism OrbitCategory::basis_element(int x, int y, int index) const
{
  OrbitMorphism f = zero(x, y);
  f.coords.at(index) = 1;
  return f;
}

OrbitMorphism OrbitCategory::compose(OrbitMorphism const &f,
                                     OrbitMorphism const &g) const
{
  if (f.target != g.source)
    throw Error("composition endpoint mismatch");
  auto const &sf = hom_space(f.source, f.target);
  auto const &sg = hom_space(g.source, g.target);
  auto const &so = hom_space(f.source, g.target);
  OrbitMorphism out = zero(f.source, g.target);
  ZVertex const xv = domain_[f.source], yv = domain_[g.source];
  auto const &gfun = mesh_->functor(yv);

  for (auto const &cf : sf.components) {
    Vector a(f.coords.begin() + cf.offset,
             f.coords.begin() + cf.offset + cf.dim);
    if (is_zero(a))
      continue;
    Morphism fa{xv, cf.target, std::move(a)};
    for (auto const &cg : sg.components) {
      auto const *co = so.component(cf.degree + cg.degree);
      auto const &paths = gfun.spaces.at(cg.target).basis;
      for (int j = 0; j < cg.dim; ++j) {
        Rational const &b = g.coords[cg.offset + j];
        if (sgn(b) == 0)
          continue;
        // f * F^{mi}(g), mapped on representative paths.
        Morphism part =
            mesh_->push(fa, apply_F(model(), paths[j], m_ * cf.degree));
        if (co == nullptr) {
          if (!part.is_zero())
            throw InvariantViolation("product lands in a vanishing degree");
          continue;
        }
        if (part.target != co->target)
          throw InvariantViolation("graded product target mismatch");
        for (int c = 0; c < co->dim; ++c)
          out.coords[co->offset + c] += b * part.coords[c];
      }
    }
  }
  return out;
}

std::string OrbitCategory::name(int id) const
{
  check(id);
  return model().name(domain_[id]);
}

int project_pi_m(OrbitCategory const &cm, ZVertex z)
{
  return cm.canonical(z);
}

int project_rho_m(OrbitCategory const &cm, OrbitCategory const &c1, int id)
{
  return c1.canonical(cm.vertex(id));
}

int project_pi(OrbitCategory const &c1, ZVertex z)
{
  return c1.canonical(z);
}

std::vector<int> fiber_closure(OrbitCategory const &cm,
                               OrbitCategory const &c1,
                               std::vector<int> const &objects)
{
  std::set<int> out;
  for (int o : objects)
    for (int i = 0; i < cm.m(); ++i)
      out.insert(cm.canonical(cm.model().F(c1.vertex(o), i)));
  return {out.begin(), out.end()};
}

CalabiYauReport verify_fractional_cy(OrbitCategory const &c)
{
  CalabiYauReport rep;
  auto const &dm = c.model();
  int const n = c.size();
  rep.count_ok = n == c.m() * (dm.ar().size() + dm.rank());
  if (!rep.count_ok)
    rep.witnesses.push_back("domain has " + std::to_string(n) + " objects");
  for (int x = 0; x < n; ++x) {
    int const lhs = c.serre(x, c.m());
    int const rhs = c.canonical(dm.shift(c.vertex(x), 2 * c.m()));
    if (lhs != rhs) {
      rep.map_equal = false;
      rep.witnesses.push_back("Serre^m and [2m] differ on " + c.name(x));
    }
  }
  std::vector<int> sx(n);
  for (int x = 0; x < n; ++x)
    sx[x] = c.serre(x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++rep.serre_pairs;
      if (c.hom_total(x, y) != c.hom_total(y, sx[x])) {
        ++rep.serre_mismatches;
        if (rep.witnesses.size() < 20)
          rep.witnesses.push_back("Serre duality fails for (" + c.name(x) +
                                  ", " + c.name(y) + ")");
      }
    }
  return rep;
}

QuotientHom quotient_hom(OrbitCategory const &c, std::vector<int> const &ideal,
                         int x, int y)
{
  auto const &space = c.hom_space(x, y);
  QuotientHom q{space.dim, {}};
  if (space.dim == 0)
    return q;

  RowEchelon factored(static_cast<std::size_t>(space.dim));
  for (int z : ideal) {
    int const dxz = c.hom_total(x, z), dzy = c.hom_total(z, y);
    for (int i = 0; i < dxz; ++i) {
      OrbitMorphism f = c.basis_element(x, z, i);
      for (int j = 0; j < dzy; ++j)
        factored.insert(c.compose(f, c.basis_element(z, y, j)).coords);
    }
  }
  q.dim = space.dim - static_cast<int>(factored.rank());
  for (int i = 0; i < space.dim; ++i) {
    Vector e(space.dim, Rational(0));
    e[i] = 1;
    if (factored.insert(std::move(e)))
      q.basis.push_back(i);
  }
  return q;
}

QuotientModel quotient_model(OrbitCategory const &c,
                             std::vector<int> const &ideal)
{
  QuotientModel qm;
  qm.ideal = ideal;
  std::sort(qm.ideal.begin(), qm.ideal.end());
  qm.ideal.erase(std::unique(qm.ideal.begin(), qm.ideal.end()),
                 qm.ideal.end());
  for (int id = 0; id < c.size(); ++id)
    if (!std::binary_search(qm.ideal.begin(), qm.ideal.end(), id))
      qm.objects.push_back(id);
  for (int a : qm.objects) {
    std::vector<int> row;
    for (int b : qm.objects)
      row.push_back(quotient_hom(c, qm.ideal, a, b).dim);
    qm.hom.push_back(std::move(row));
  }
  return qm;
}

} // namespace orbitcat
