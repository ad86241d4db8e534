#ifndef ORBITCAT_MESH_HPP
#define ORBITCAT_MESH_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "orbitcat/derived.hpp"
#include "orbitcat/linalg.hpp"

namespace orbitcat
{

// A path in Z(Q^op) as its vertex sequence (first = source). Arrows have
// multiplicity one, so the vertices determine the arrows.
using Path = std::vector<ZVertex>;

// Hom(X, Y) in the mesh category: paths X -> Y modulo the ideal generated by
// the mesh relations sum_i (tau Z -> E_i)(E_i -> Z) = 0.
struct MorphismSpace
{
  ZVertex source;
  ZVertex target;
  int dim;
  std::vector<Path> basis; // representative paths of the quotient basis
};

// A morphism as coordinates over the quotient basis of Hom(source, target).
struct Morphism
{
  ZVertex source;
  ZVertex target;
  Vector coords;

  bool is_zero() const { return orbitcat::is_zero(coords); }
};

// The representable functor Hom(X, -) with an explicit basis at every
// vertex of the hammock and a matrix for every arrow. Built by knitting:
// Hom(X, Z) = coker(Hom(X, tau Z) -> (+)_i Hom(X, E_i)) for Z != X.
// Row-vector convention: coords_E * from.at(E) = coords_Z.
struct HomFunctor
{
  struct Space
  {
    std::vector<Path> basis;
    std::map<ZVertex, Matrix> from; // arrow E -> Z, a dim(E) x dim(Z) matrix
    int dim() const { return static_cast<int>(basis.size()); }
  };

  ZVertex source;
  std::map<ZVertex, Space> spaces; // nonzero spaces only

  int dim(ZVertex z) const
  {
    auto it = spaces.find(z);
    return it == spaces.end() ? 0 : it->second.dim();
  }
};

// Explicit morphism bases and composition for D^b(kQ), Q Dynkin.
class MeshCategory
{
public:
  explicit MeshCategory(std::shared_ptr<DerivedModel const> model);

  DerivedModel const &model() const { return *model_; }
  std::shared_ptr<DerivedModel const> const &model_ptr() const
  {
    return model_;
  }

  HomFunctor const &functor(ZVertex x) const;

  MorphismSpace space(ZVertex x, ZVertex y) const;
  int dim(ZVertex x, ZVertex y) const { return functor(x).dim(y); }

  Morphism identity(ZVertex x) const;
  Morphism zero(ZVertex x, ZVertex y) const;
  Morphism basis_element(ZVertex x, ZVertex y, int index) const;
  Morphism from_path(Path const &path) const;

  // Pushes f : X -> path.front() along path; returns f * path.
  Morphism push(Morphism const &f, Path const &path) const;

  // Left-to-right composition: f then g.
  Morphism compose(Morphism const &f, Morphism const &g) const;

  // F^n applied to a morphism via the vertex map on representative paths.
  Morphism apply_F(Morphism const &f, int n) const;

private:
  HomFunctor build(ZVertex x) const;

  std::shared_ptr<DerivedModel const> model_;
  mutable std::mutex mutex_;
  mutable std::map<ZVertex, std::unique_ptr<HomFunctor>> functors_;
};

inline constexpr std::size_t default_path_cap = 200000;

// Direct presentation of Hom(X, Y): the paths X -> Y, the span of all mesh
// relations between them, and a quotient basis chosen greedily in
// shortest-then-lexicographic path order. Independent of MeshCategory;
// throws PathExplosion when more than `cap` paths are enumerated.
struct PathBasis
{
  ZVertex source;
  ZVertex target;
  std::vector<Path> paths;     // ambient basis, shortest-lex order
  RowEchelon relations;        // mesh ideal restricted to `paths`
  std::vector<Path> basis;     // chosen representatives
  int dim() const { return static_cast<int>(basis.size()); }
};

// Hammock restricts the ambient paths to the hammock support of the source.
// All uses every path, making the result independent of hammock knitting
// (only practical on small instances).
enum class PathScope { Hammock, All };

PathBasis path_basis(DerivedModel const &model, ZVertex x, ZVertex y,
                     std::size_t cap = default_path_cap,
                     PathScope scope = PathScope::Hammock);

// Vertex map of F^n on a path.
Path apply_F(DerivedModel const &model, Path const &p, int n);

} // namespace orbitcat

#endif // ORBITCAT_MESH_HPP
