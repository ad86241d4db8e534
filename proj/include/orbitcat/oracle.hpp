#ifndef ORBITCAT_ORACLE_HPP
#define ORBITCAT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "orbitcat/derived.hpp"
#include "orbitcat/quiver.hpp"

namespace orbitcat::oracle
{

// Brute-force representation theory over GF(p), independent of the
// combinatorial engine. Used to certify hammock dimensions.

inline constexpr std::int64_t default_prime = 101;

using FieldMatrix = std::vector<std::vector<std::int64_t>>; // row-major

struct Representation
{
  std::int64_t prime;
  std::vector<int> dims;
  // maps[a] : V_{source(a)} -> V_{target(a)}, stored dims[target] x
  // dims[source].
  std::vector<FieldMatrix> maps;
};

// Rank of a matrix over GF(p).
std::size_t rank_mod(FieldMatrix rows, std::int64_t prime);

Representation projective(Quiver const &q, int vertex,
                          std::int64_t prime = default_prime);

// tau^{-1} as the Coxeter functor: source reflections in topological order.
Representation coxeter_minus(Quiver const &q, Representation const &rep);

// Type A: the interval module along the support. Otherwise walks
// tau^{-r} P_v by reflection functors until the dimension vector matches.
Representation build_indecomposable(Quiver const &q, DimVector const &root,
                                    std::int64_t prime = default_prime);

// Always uses the reflection walk (also valid in type A).
Representation build_by_reflection(Quiver const &q, DimVector const &root,
                                   std::int64_t prime = default_prime);

// Dimension of {phi : phi_t M_a = N_a phi_s for every arrow a}.
int oracle_hom_dim(Quiver const &q, Representation const &m,
                   Representation const &n);

// hom - <dim M, dim N>; throws InvariantViolation if negative.
int oracle_ext1(Quiver const &q, Representation const &m,
                Representation const &n);

struct SweepReport
{
  std::int64_t prime = default_prime;
  int pairs = 0;
  int hom_mismatches = 0;
  int ext_mismatches = 0;
  std::vector<std::string> witnesses;

  bool passed() const { return hom_mismatches == 0 && ext_mismatches == 0; }
};

// Every ordered pair of indecomposable modules: oracle Hom against the
// engine's Hom at shift 0, oracle Ext^1 against the engine's Hom into the
// shift by 1.
SweepReport compare_with_engine(DerivedModel const &model,
                                std::int64_t prime = default_prime);

} // namespace orbitcat::oracle

#endif // ORBITCAT_ORACLE_HPP
