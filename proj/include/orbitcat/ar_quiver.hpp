#ifndef ORBITCAT_AR_QUIVER_HPP
#define ORBITCAT_AR_QUIVER_HPP

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitcat/quiver.hpp"

namespace orbitcat
{

// A vertex (slice, q-vertex) of the translation quiver Z(Q^op) modelling
// ind D^b(kQ). For each arrow i -> j of Q there are arrows (k,j) -> (k,i)
// and (k,i) -> (k+1,j); the translation is tau(k,v) = (k-1,v).
struct ZVertex
{
  int slice;
  int vertex;

  auto operator<=>(ZVertex const &) const = default;
};

std::string to_string(ZVertex z);

// Auslander-Reiten quiver of mod kQ for a Dynkin quiver Q.
struct ARQuiver
{
  std::vector<DimVector> dims;     // module id -> dimension vector
  std::vector<ZVertex> position;   // module id -> slot in Z(Q^op)
  std::vector<std::pair<int, int>> arrows; // irreducible maps
  std::vector<std::optional<int>> tau;     // undefined on projectives
  std::vector<std::optional<int>> tau_inv; // undefined on injectives
  std::vector<int> proj;   // q-vertex -> module id of P_v
  std::vector<int> inj;    // q-vertex -> module id of I_v
  std::vector<int> simple; // q-vertex -> module id of S_v

  int size() const { return static_cast<int>(dims.size()); }
  std::optional<int> find(DimVector const &d) const;
  std::optional<int> at(ZVertex z) const;

  // Largest slice reached by the tau-orbit of P_v.
  std::vector<int> orbit_end;
};

// Knits the AR quiver starting from the projective slice. Projective
// dimension vectors come from path counting in q; meshes are closed in a
// fixed order (slice, then sinks-first within a slice), so module ids are
// reproducible.
ARQuiver knit_module_category(Quiver const &q);

// Positive roots of the underlying Dynkin diagram by closing the simple
// roots under simple reflections. Sorted lexicographically.
std::vector<DimVector> positive_roots(Quiver const &q);

} // namespace orbitcat

#endif // ORBITCAT_AR_QUIVER_HPP
