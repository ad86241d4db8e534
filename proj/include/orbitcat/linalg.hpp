#ifndef ORBITCAT_LINALG_HPP
#define ORBITCAT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace orbitcat
{

using Rational = mpq_class;
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>; // row-major

bool is_zero(Vector const &v);

// Reduced row echelon basis of a subspace of Q^n, grown one vector at a
// time. Pivot of a row is its first nonzero column; every pivot column is
// zero in all other rows, so reduce() yields a canonical normal form.
class RowEchelon
{
public:
  explicit RowEchelon(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  // Adds v to the spanning set. Returns true iff the rank grew.
  bool insert(Vector v);

  // Normal form of v modulo the subspace.
  Vector reduce(Vector v) const;

  bool contains(Vector const &v) const { return is_zero(reduce(v)); }

  std::vector<std::size_t> const &pivots() const { return pivots_; }
  std::vector<std::size_t> free_columns() const;
  Matrix const &rows() const { return rows_; }

private:
  std::size_t dim_;
  Matrix rows_;                     // sorted by pivot column
  std::vector<std::size_t> pivots_; // pivots_[i] is the pivot of rows_[i]
};

std::size_t span_dim(std::span<Vector const> vectors);

// Greedily picks candidates whose classes modulo `subspace` are linearly
// independent, in input order, until the quotient is spanned. Returns the
// indices of the chosen candidates.
std::vector<std::size_t> quotient_basis(std::span<Vector const> candidates,
                                        std::span<Vector const> subspace);

struct Solution
{
  Vector particular;
  std::vector<Vector> kernel;
};

// Solves A x = b exactly. std::nullopt marks an inconsistent system.
std::optional<Solution> solve(Matrix const &a, Vector const &b);

} // namespace orbitcat

#endif // ORBITCAT_LINALG_HPP
