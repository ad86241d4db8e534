#include "orbitcat/linalg.hpp"

#include <algorithm>

#include "orbitcat/error.hpp"

namespace orbitcat
{

bool is_zero(Vector const &v)
{
  return std::all_of(v.begin(), v.end(),
                     [](Rational const &x) { return sgn(x) == 0; });
}

Vector RowEchelon::reduce(Vector v) const
{
  if (v.size() != dim_)
    throw DimensionMismatch("vector length does not match subspace");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t p = pivots_[i];
    if (sgn(v[p]) == 0)
      continue;
    Rational factor = v[p];
    auto const &row = rows_[i];
    for (std::size_t j = p; j < dim_; ++j)
      if (sgn(row[j]) != 0)
        v[j] -= factor * row[j];
  }
  return v;
}

bool RowEchelon::insert(Vector v)
{
  v = reduce(std::move(v));
  auto it = std::find_if(v.begin(), v.end(),
                         [](Rational const &x) { return sgn(x) != 0; });
  if (it == v.end())
    return false;
  auto const p = static_cast<std::size_t>(it - v.begin());
  Rational inv = 1 / v[p];
  for (std::size_t j = p; j < dim_; ++j)
    v[j] *= inv;

  // Clear the new pivot column from the existing rows.
  for (auto &row : rows_) {
    if (sgn(row[p]) == 0)
      continue;
    Rational factor = row[p];
    for (std::size_t j = p; j < dim_; ++j)
      if (sgn(v[j]) != 0)
        row[j] -= factor * v[j];
  }

  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

std::vector<std::size_t> RowEchelon::free_columns() const
{
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j)
      ++k;
    else
      out.push_back(j);
  }
  return out;
}

std::size_t span_dim(std::span<Vector const> vectors)
{
  if (vectors.empty())
    return 0;
  RowEchelon e(vectors.front().size());
  for (auto const &v : vectors)
    e.insert(v);
  return e.rank();
}

std::vector<std::size_t> quotient_basis(std::span<Vector const> candidates,
                                        std::span<Vector const> subspace)
{
  if (candidates.empty())
    return {};
  RowEchelon e(candidates.front().size());
  for (auto const &v : subspace)
    e.insert(v);
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (e.insert(candidates[i]))
      chosen.push_back(i);
  return chosen;
}

std::optional<Solution> solve(Matrix const &a, Vector const &b)
{
  std::size_t const rows = a.size();
  if (b.size() != rows)
    throw DimensionMismatch("right-hand side length does not match system");
  std::size_t const cols = rows == 0 ? 0 : a.front().size();

  // Echelonize the augmented matrix [A | b].
  RowEchelon e(cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols)
      throw DimensionMismatch("ragged coefficient matrix");
    Vector row = a[i];
    row.push_back(b[i]);
    e.insert(std::move(row));
  }
  for (std::size_t p : e.pivots())
    if (p == cols)
      return std::nullopt;

  Solution sol;
  sol.particular.assign(cols, Rational(0));
  auto const &pivots = e.pivots();
  for (std::size_t i = 0; i < pivots.size(); ++i)
    sol.particular[pivots[i]] = e.rows()[i][cols];

  for (std::size_t f : e.free_columns()) {
    if (f == cols)
      continue;
    Vector k(cols, Rational(0));
    k[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      k[pivots[i]] = -e.rows()[i][f];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

} // namespace orbitcat
