#include "orbitcat/oracle.hpp"

#include <algorithm>

#include "orbitcat/error.hpp"
#include "orbitcat/parallel.hpp"

namespace orbitcat::oracle
{

namespace
{

std::int64_t norm(std::int64_t x, std::int64_t p)
{
  x %= p;
  return x < 0 ? x + p : x;
}

std::int64_t inverse(std::int64_t a, std::int64_t p)
{
  std::int64_t result = 1, base = norm(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1)
      result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// Reduced row echelon form over GF(p); same contract as RowEchelon.
class ModEchelon
{
public:
  ModEchelon(std::size_t dim, std::int64_t p) : dim_(dim), p_(p) {}

  std::vector<std::int64_t> reduce(std::vector<std::int64_t> v) const
  {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::size_t piv = pivots_[i];
      std::int64_t f = norm(v[piv], p_);
      if (f == 0)
        continue;
      for (std::size_t j = 0; j < dim_; ++j)
        v[j] = norm(v[j] - f * rows_[i][j], p_);
    }
    for (auto &x : v)
      x = norm(x, p_);
    return v;
  }

  bool insert(std::vector<std::int64_t> v)
  {
    v = reduce(std::move(v));
    auto it = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
    if (it == v.end())
      return false;
    auto piv = static_cast<std::size_t>(it - v.begin());
    std::int64_t inv = inverse(v[piv], p_);
    for (auto &x : v)
      x = x * inv % p_;
    for (auto &row : rows_) {
      std::int64_t f = row[piv];
      if (f == 0)
        continue;
      for (std::size_t j = 0; j < dim_; ++j)
        row[j] = norm(row[j] - f * v[j], p_);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

  std::vector<std::size_t> free_columns() const
  {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < dim_; ++j)
      if (std::find(pivots_.begin(), pivots_.end(), j) == pivots_.end())
        out.push_back(j);
    return out;
  }

private:
  std::size_t dim_;
  std::int64_t p_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

FieldMatrix zeros(int rows, int cols)
{
  return FieldMatrix(rows, std::vector<std::int64_t>(cols, 0));
}

bool is_zero_rep(Representation const &r)
{
  return std::all_of(r.dims.begin(), r.dims.end(),
                     [](int d) { return d == 0; });
}

} // namespace

std::size_t rank_mod(FieldMatrix rows, std::int64_t prime)
{
  if (rows.empty())
    return 0;
  ModEchelon e(rows.front().size(), prime);
  for (auto &r : rows)
    e.insert(std::move(r));
  return e.rank();
}

Representation projective(Quiver const &q, int vertex, std::int64_t prime)
{
  int const n = q.num_vertices();
  Representation r{prime, std::vector<int>(n), {}};
  for (int w = 0; w < n; ++w)
    r.dims[w] = q.path_count(vertex, w);
  for (auto const &a : q.arrows()) {
    // Trees carry at most one path, so every nonzero map is the identity.
    auto m = zeros(r.dims[a.target], r.dims[a.source]);
    for (int i = 0; i < std::min(r.dims[a.target], r.dims[a.source]); ++i)
      m[i][i] = 1;
    r.maps.push_back(std::move(m));
  }
  return r;
}

Representation coxeter_minus(Quiver const &q, Representation const &rep)
{
  std::int64_t const p = rep.prime;
  Representation r = rep;
  // forward[a] is true while arrow a still has its original direction.
  std::vector<bool> forward(q.num_arrows(), true);
  auto src = [&](int a) {
    return forward[a] ? q.arrows()[a].source : q.arrows()[a].target;
  };
  auto tgt = [&](int a) {
    return forward[a] ? q.arrows()[a].target : q.arrows()[a].source;
  };

  for (int k : q.topological_order()) {
    std::vector<int> out;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (tgt(a) == k)
        throw InvariantViolation("reflection at a vertex that is no source");
      if (src(a) == k)
        out.push_back(a);
    }
    // phi : V_k -> (+) V_j, assembled as k columns of length N.
    std::vector<int> offset;
    int total = 0;
    for (int a : out) {
      offset.push_back(total);
      total += r.dims[tgt(a)];
    }
    ModEchelon image(total, p);
    for (int c = 0; c < r.dims[k]; ++c) {
      std::vector<std::int64_t> col(total, 0);
      for (std::size_t t = 0; t < out.size(); ++t)
        for (int i = 0; i < r.dims[tgt(out[t])]; ++i)
          col[offset[t] + i] = r.maps[out[t]][i][c];
      image.insert(std::move(col));
    }
    auto free = image.free_columns();
    int const new_dim = static_cast<int>(free.size());

    for (std::size_t t = 0; t < out.size(); ++t) {
      int const a = out[t];
      int const dj = r.dims[tgt(a)];
      auto m = zeros(new_dim, dj);
      for (int c = 0; c < dj; ++c) {
        std::vector<std::int64_t> e(total, 0);
        e[offset[t] + c] = 1;
        e = image.reduce(std::move(e));
        for (int i = 0; i < new_dim; ++i)
          m[i][c] = e[free[i]];
      }
      r.maps[a] = std::move(m);
      forward[a] = !forward[a];
    }
    r.dims[k] = new_dim;
  }
  return r;
}

Representation build_by_reflection(Quiver const &q, DimVector const &root,
                                   std::int64_t prime)
{
  int const n = q.num_vertices();
  int const bound = 2 * n * n + 4;
  for (int v = 0; v < n; ++v) {
    Representation r = projective(q, v, prime);
    for (int step = 0; step < bound && !is_zero_rep(r); ++step) {
      if (r.dims == root)
        return r;
      r = coxeter_minus(q, r);
    }
  }
  throw InvariantViolation("reflection walk did not reach the root");
}

Representation build_indecomposable(Quiver const &q, DimVector const &root,
                                    std::int64_t prime)
{
  if (root.size() != static_cast<std::size_t>(q.num_vertices()))
    throw DimensionMismatch("root length does not match quiver");
  if (classify(q).series != Series::A)
    return build_by_reflection(q, root, prime);

  for (int d : root)
    if (d < 0 || d > 1)
      throw Error("not a positive root of type A");
  Representation r{prime, root, {}};
  for (auto const &a : q.arrows()) {
    auto m = zeros(root[a.target], root[a.source]);
    if (root[a.target] && root[a.source])
      m[0][0] = 1;
    r.maps.push_back(std::move(m));
  }
  return r;
}

int oracle_hom_dim(Quiver const &q, Representation const &m,
                   Representation const &n)
{
  if (m.prime != n.prime)
    throw Error("representations over different fields");
  std::int64_t const p = m.prime;
  int const nv = q.num_vertices();

  // phi_v is an n_v x m_v matrix; entry (r,c) is variable offset[v]+r*m_v+c.
  std::vector<int> offset(nv);
  int vars = 0;
  for (int v = 0; v < nv; ++v) {
    offset[v] = vars;
    vars += n.dims[v] * m.dims[v];
  }
  if (vars == 0)
    return 0;

  FieldMatrix system;
  for (auto const &a : q.arrows()) {
    int const s = a.source, t = a.target;
    auto const &ma = m.maps[a.id];
    auto const &na = n.maps[a.id];
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c) {
        std::vector<std::int64_t> eq(vars, 0);
        // (phi_t M_a)[r][c]
        for (int j = 0; j < m.dims[t]; ++j)
          eq[offset[t] + r * m.dims[t] + j] += ma[j][c];
        // -(N_a phi_s)[r][c]
        for (int j = 0; j < n.dims[s]; ++j)
          eq[offset[s] + j * m.dims[s] + c] -= na[r][j];
        system.push_back(std::move(eq));
      }
  }
  return vars - static_cast<int>(rank_mod(std::move(system), p));
}

int oracle_ext1(Quiver const &q, Representation const &m,
                Representation const &n)
{
  int ext = oracle_hom_dim(q, m, n) - euler_form(q, m.dims, n.dims);
  if (ext < 0)
    throw InvariantViolation("negative Ext^1 from the Euler form");
  return ext;
}

SweepReport compare_with_engine(DerivedModel const &model, std::int64_t prime)
{
  Quiver const &q = model.quiver();
  auto const &ar = model.ar();
  int const n = ar.size();
  std::vector<Representation> reps(n);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
    reps[i] = build_indecomposable(q, ar.dims[i], prime);
  });

  std::vector<int> hom(n * n), ext(n * n);
  parallel_for(static_cast<std::size_t>(n) * n, [&](std::size_t k) {
    hom[k] = oracle_hom_dim(q, reps[k / n], reps[k % n]);
    ext[k] = oracle_ext1(q, reps[k / n], reps[k % n]);
  });

  SweepReport rep;
  rep.prime = prime;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++rep.pairs;
      int const h = model.hom_dim(DerivedObject{x, 0}, DerivedObject{y, 0});
      int const e = model.hom_dim(DerivedObject{x, 0}, DerivedObject{y, 1});
      auto const pair = "(" + model.module_name(x) + ", " +
                        model.module_name(y) + ")";
      if (h != hom[x * n + y]) {
        ++rep.hom_mismatches;
        rep.witnesses.push_back("Hom" + pair + ": engine " +
                                std::to_string(h) + ", oracle " +
                                std::to_string(hom[x * n + y]));
      }
      if (e != ext[x * n + y]) {
        ++rep.ext_mismatches;
        rep.witnesses.push_back("Ext1" + pair + ": engine " +
                                std::to_string(e) + ", oracle " +
                                std::to_string(ext[x * n + y]));
      }
    }
  return rep;
}

} // namespace orbitcat::oracle
