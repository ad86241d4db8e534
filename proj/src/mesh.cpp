#include "orbitcat/mesh.hpp"

#include <algorithm>
#include <set>

#include "orbitcat/error.hpp"

namespace orbitcat
{

MeshCategory::MeshCategory(std::shared_ptr<DerivedModel const> model)
  : model_(std::move(model))
{}

HomFunctor MeshCategory::build(ZVertex x) const
{
  auto const &dm = *model_;
  Hammock const &h = dm.hammock(x);
  HomFunctor fun{x, {}};

  for (int k = h.first_slice; k <= h.last_slice; ++k)
    for (int v : dm.slice_order()) {
      ZVertex z{k, v};
      int const expected = h.at(z);
      if (expected == 0)
        continue;
      HomFunctor::Space space;
      if (z == x) {
        space.basis.push_back({x});
        fun.spaces.emplace(z, std::move(space));
        continue;
      }

      std::vector<ZVertex> middle;
      std::vector<std::size_t> offset;
      std::size_t total = 0;
      for (ZVertex e : dm.in_neighbors(z))
        if (int d = fun.dim(e); d > 0) {
          middle.push_back(e);
          offset.push_back(total);
          total += static_cast<std::size_t>(d);
        }

      // Image of Hom(X, tau Z) under the mesh arrows tau Z -> E_i.
      RowEchelon image(total);
      ZVertex const t = dm.tau(z);
      if (auto it = fun.spaces.find(t); it != fun.spaces.end()) {
        int const dt = it->second.dim();
        for (int b = 0; b < dt; ++b) {
          Vector row(total, Rational(0));
          for (std::size_t i = 0; i < middle.size(); ++i) {
            auto const &m = fun.spaces.at(middle[i]).from.at(t);
            for (std::size_t c = 0; c < m[b].size(); ++c)
              row[offset[i] + c] = m[b][c];
          }
          image.insert(std::move(row));
        }
      }

      auto const free = image.free_columns();
      if (static_cast<int>(free.size()) != expected)
        throw InvariantViolation("mesh quotient at " + to_string(z) +
                                 " disagrees with hammock dimension");

      for (std::size_t col : free) {
        auto i = static_cast<std::size_t>(
            std::upper_bound(offset.begin(), offset.end(), col) -
            offset.begin() - 1);
        Path p = fun.spaces.at(middle[i]).basis[col - offset[i]];
        p.push_back(z);
        space.basis.push_back(std::move(p));
      }
      for (std::size_t i = 0; i < middle.size(); ++i) {
        int const de = fun.spaces.at(middle[i]).dim();
        Matrix m(de, Vector(free.size(), Rational(0)));
        for (int c = 0; c < de; ++c) {
          Vector e(total, Rational(0));
          e[offset[i] + c] = 1;
          e = image.reduce(std::move(e));
          for (std::size_t j = 0; j < free.size(); ++j)
            m[c][j] = e[free[j]];
        }
        space.from.emplace(middle[i], std::move(m));
      }
      fun.spaces.emplace(z, std::move(space));
    }
  return fun;
}

HomFunctor const &MeshCategory::functor(ZVertex x) const
{
  {
    std::lock_guard lock(mutex_);
    if (auto it = functors_.find(x); it != functors_.end())
      return *it->second;
  }
  auto f = std::make_unique<HomFunctor>(build(x));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = functors_.emplace(x, std::move(f));
  return *it->second;
}

MorphismSpace MeshCategory::space(ZVertex x, ZVertex y) const
{
  auto const &fun = functor(x);
  MorphismSpace s{x, y, 0, {}};
  if (auto it = fun.spaces.find(y); it != fun.spaces.end()) {
    s.basis = it->second.basis;
    s.dim = it->second.dim();
  }
  return s;
}

Morphism MeshCategory::identity(ZVertex x) const
{
  return {x, x, Vector{Rational(1)}};
}

Morphism MeshCategory::zero(ZVertex x, ZVertex y) const
{
  return {x, y, Vector(dim(x, y), Rational(0))};
}

Morphism MeshCategory::basis_element(ZVertex x, ZVertex y, int index) const
{
  Morphism f = zero(x, y);
  f.coords.at(index) = 1;
  return f;
}

Morphism MeshCategory::push(Morphism const &f, Path const &path) const
{
  if (path.empty() || path.front() != f.target)
    throw Error("path does not start at the target of the morphism");
  auto const &fun = functor(f.source);
  Vector cur = f.coords;
  for (std::size_t i = 1; i < path.size(); ++i) {
    ZVertex from = path[i - 1], to = path[i];
    if (!model_->has_arrow(from, to))
      throw Error("not a path: no arrow " + to_string(from) + " -> " +
                  to_string(to));
    auto it = fun.spaces.find(to);
    if (it == fun.spaces.end() || is_zero(cur))
      return zero(f.source, path.back());
    auto m = it->second.from.find(from);
    if (m == it->second.from.end())
      return zero(f.source, path.back());
    Vector next(it->second.dim(), Rational(0));
    for (std::size_t r = 0; r < cur.size(); ++r) {
      if (sgn(cur[r]) == 0)
        continue;
      for (std::size_t c = 0; c < next.size(); ++c)
        next[c] += cur[r] * m->second[r][c];
    }
    cur = std::move(next);
  }
  return {f.source, path.back(), std::move(cur)};
}

Morphism MeshCategory::from_path(Path const &path) const
{
  if (path.empty())
    throw Error("empty path");
  return push(identity(path.front()), path);
}

Morphism MeshCategory::compose(Morphism const &f, Morphism const &g) const
{
  if (f.target != g.source)
    throw Error("composition endpoint mismatch: " + to_string(f.target) +
                " vs " + to_string(g.source));
  Morphism out = zero(f.source, g.target);
  if (g.coords.empty() || f.coords.empty())
    return out;
  auto const &gb = functor(g.source).spaces.at(g.target).basis;
  for (std::size_t j = 0; j < gb.size(); ++j) {
    if (sgn(g.coords[j]) == 0)
      continue;
    Morphism part = push(f, gb[j]);
    for (std::size_t c = 0; c < out.coords.size(); ++c)
      out.coords[c] += g.coords[j] * part.coords[c];
  }
  return out;
}

Morphism MeshCategory::apply_F(Morphism const &f, int n) const
{
  auto const &dm = *model_;
  ZVertex const src = dm.F(f.source, n), tgt = dm.F(f.target, n);
  Morphism out = zero(src, tgt);
  if (f.coords.empty())
    return out;
  auto const &fb = functor(f.source).spaces.at(f.target).basis;
  for (std::size_t j = 0; j < fb.size(); ++j) {
    if (sgn(f.coords[j]) == 0)
      continue;
    Morphism part = from_path(orbitcat::apply_F(dm, fb[j], n));
    for (std::size_t c = 0; c < out.coords.size(); ++c)
      out.coords[c] += f.coords[j] * part.coords[c];
  }
  return out;
}

Path apply_F(DerivedModel const &model, Path const &p, int n)
{
  Path out;
  out.reserve(p.size());
  for (ZVertex z : p)
    out.push_back(model.F(z, n));
  return out;
}

namespace
{

bool shortlex_less(Path const &a, Path const &b)
{
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

class PathEnumerator
{
public:
  PathEnumerator(DerivedModel const &model, std::set<ZVertex> const &allowed,
                 std::size_t cap)
    : model_(model), allowed_(allowed), cap_(cap)
  {}

  std::vector<Path> between(ZVertex a, ZVertex b)
  {
    std::vector<Path> out;
    count_ = 0;
    Path cur{a};
    walk(cur, b, out);
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
  }

private:
  void walk(Path &cur, ZVertex b, std::vector<Path> &out)
  {
    if (cur.back() == b) {
      out.push_back(cur);
      if (++count_ > cap_)
        throw PathExplosion("more than " + std::to_string(cap_) + " paths");
      return;
    }
    if (!model_.precedes(cur.back(), b))
      return;
    for (ZVertex e : model_.out_neighbors(cur.back())) {
      if (!allowed_.count(e))
        continue;
      cur.push_back(e);
      walk(cur, b, out);
      cur.pop_back();
    }
  }

  DerivedModel const &model_;
  std::set<ZVertex> const &allowed_;
  std::size_t cap_;
  std::size_t count_ = 0;
};

} // namespace

PathBasis path_basis(DerivedModel const &model, ZVertex x, ZVertex y,
                     std::size_t cap, PathScope scope)
{
  // Paths through a vertex outside the hammock of x are zero classes, so
  // dropping them (and their terms in relations) leaves the quotient as is.
  Hammock const *h =
      scope == PathScope::Hammock ? &model.hammock(x) : nullptr;
  auto inside = [&](ZVertex z) { return h == nullptr || h->at(z) > 0; };

  // Vertices lying on some path x -> y.
  std::set<ZVertex> forward{x};
  std::vector<ZVertex> stack{x};
  while (!stack.empty()) {
    ZVertex z = stack.back();
    stack.pop_back();
    if (!model.precedes(z, y))
      continue;
    for (ZVertex e : model.out_neighbors(z))
      if (inside(e) && forward.insert(e).second)
        stack.push_back(e);
  }
  std::set<ZVertex> allowed;
  if (forward.count(y)) {
    std::set<ZVertex> seen{y};
    stack = {y};
    while (!stack.empty()) {
      ZVertex z = stack.back();
      stack.pop_back();
      if (forward.count(z))
        allowed.insert(z);
      if (z == x)
        continue;
      for (ZVertex e : model.in_neighbors(z))
        if (forward.count(e) && seen.insert(e).second)
          stack.push_back(e);
    }
  }

  PathEnumerator enumerate(model, allowed, cap);
  PathBasis pb{x, y, {}, RowEchelon(0), {}};
  if (!allowed.count(x) || !allowed.count(y))
    return pb;
  pb.paths = enumerate.between(x, y);

  std::map<Path, std::size_t> index;
  for (std::size_t i = 0; i < pb.paths.size(); ++i)
    index[pb.paths[i]] = i;

  pb.relations = RowEchelon(pb.paths.size());
  for (ZVertex z : allowed) {
    ZVertex t = model.tau(z);
    if (!allowed.count(t))
      continue;
    auto prefixes = enumerate.between(x, t);
    auto suffixes = enumerate.between(z, y);
    std::vector<ZVertex> middle;
    for (ZVertex e : model.in_neighbors(z))
      if (allowed.count(e))
        middle.push_back(e);
    for (auto const &p : prefixes)
      for (auto const &s : suffixes) {
        Vector rel(pb.paths.size(), Rational(0));
        for (ZVertex e : middle) {
          Path full = p;
          full.push_back(e);
          full.insert(full.end(), s.begin(), s.end());
          rel[index.at(full)] += 1;
        }
        pb.relations.insert(std::move(rel));
      }
  }

  RowEchelon span = pb.relations;
  for (auto const &p : pb.paths) {
    Vector e(pb.paths.size(), Rational(0));
    e[index.at(p)] = 1;
    if (span.insert(std::move(e)))
      pb.basis.push_back(p);
  }
  return pb;
}

} // namespace orbitcat
