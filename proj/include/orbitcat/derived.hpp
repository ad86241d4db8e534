#ifndef ORBITCAT_DERIVED_HPP
#define ORBITCAT_DERIVED_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "orbitcat/ar_quiver.hpp"
#include "orbitcat/quiver.hpp"

namespace orbitcat
{

// An indecomposable object M[shift] of D^b(kQ).
struct DerivedObject
{
  int module;
  int shift;

  auto operator<=>(DerivedObject const &) const = default;
};

// Support of Hom(base, -) on Z(Q^op) with multiplicities.
struct Hammock
{
  ZVertex base;
  std::map<ZVertex, int> values; // nonzero entries only
  int first_slice;
  int last_slice; // last slice with a nonzero entry

  int at(ZVertex z) const
  {
    auto it = values.find(z);
    return it == values.end() ? 0 : it->second;
  }
};

// ind D^b(kQ) for a Dynkin quiver Q as the translation quiver Z(Q^op),
// labelled by (module, shift). Slice 0 holds the projectives at shift 0.
// All vertex maps are automorphisms of Z(Q^op) and are defined on every
// vertex, so there is no window to outgrow; DerivedWindow below gives
// finite views when a listing is wanted.
//
// Thread-safe: hammocks are memoized behind a mutex.
class DerivedModel
{
public:
  explicit DerivedModel(Quiver q);

  Quiver const &quiver() const { return quiver_; }
  ARQuiver const &ar() const { return ar_; }
  int rank() const { return quiver_.num_vertices(); }

  // q-vertices in the order used inside a slice (a topological order of
  // the slice, sinks of Q first).
  std::vector<int> const &slice_order() const { return order_; }
  int order_index(int v) const { return order_index_[v]; }
  // Slice-major topological order on Z(Q^op).
  bool precedes(ZVertex a, ZVertex b) const;

  std::vector<ZVertex> in_neighbors(ZVertex z) const;
  std::vector<ZVertex> out_neighbors(ZVertex z) const;
  bool has_arrow(ZVertex from, ZVertex to) const;

  ZVertex tau(ZVertex z, int n = 1) const { return {z.slice - n, z.vertex}; }
  ZVertex tau_inv(ZVertex z, int n = 1) const { return tau(z, -n); }
  ZVertex shift(ZVertex z, int n = 1) const;
  // F = tau^{-1}[1]
  ZVertex F(ZVertex z, int n = 1) const { return tau(shift(z, n), -n); }
  // Serre functor tau[1]
  ZVertex serre(ZVertex z, int n = 1) const { return tau(shift(z, n), n); }

  DerivedObject label(ZVertex z) const;
  ZVertex locate(DerivedObject x) const;

  DerivedObject tau(DerivedObject x) const { return label(tau(locate(x))); }
  DerivedObject shift(DerivedObject x, int n = 1) const
  {
    return {x.module, x.shift + n};
  }
  DerivedObject F(DerivedObject x, int n = 1) const
  {
    return label(F(locate(x), n));
  }
  DerivedObject serre(DerivedObject x, int n = 1) const
  {
    return label(serre(locate(x), n));
  }

  // Hammock knitting: h(Z) = [Z=X] + [Z=X[1]] + sum_{E->Z} h(E) - h(tau Z),
  // run in topological order from X's slice until two consecutive zero
  // slices past X[1].
  Hammock const &hammock(ZVertex x) const;
  int hom_dim(ZVertex x, ZVertex y) const;
  int hom_dim(DerivedObject x, DerivedObject y) const
  {
    return hom_dim(locate(x), locate(y));
  }

  std::string name(DerivedObject x) const;
  std::string name(ZVertex z) const { return name(label(z)); }
  std::string module_name(int module) const;

private:
  Hammock compute_hammock(ZVertex x) const;

  Quiver quiver_;
  ARQuiver ar_;
  std::vector<int> order_;
  std::vector<int> order_index_;
  // [1](k,u) = (k + shift_slices_[u], shift_vertex_[u])
  std::vector<int> shift_slices_;
  std::vector<int> shift_vertex_;
  std::vector<int> unshift_vertex_;

  mutable std::mutex mutex_;
  mutable std::map<ZVertex, std::unique_ptr<Hammock>> hammocks_;
};

// Finite slice range of Z(Q^op) covering every object with shift in
// [shift_lo, shift_hi], plus one guard slice on each side.
struct DerivedWindow
{
  std::shared_ptr<DerivedModel const> model;
  int shift_lo;
  int shift_hi;
  int k_min;
  int k_max;
  std::vector<ZVertex> vertices; // slice-major, then slice order

  bool contains(ZVertex z) const { return z.slice >= k_min && z.slice <= k_max; }
  bool contains(DerivedObject x) const { return contains(model->locate(x)); }
  std::vector<DerivedObject> objects() const;
};

DerivedWindow build_window(std::shared_ptr<DerivedModel const> model,
                           int shift_lo, int shift_hi);
DerivedWindow build_window(Quiver q, int shift_lo, int shift_hi);

// Vertex maps restricted to a window; throw OutOfWindow when the image
// falls outside it.
DerivedObject shift_map(DerivedWindow const &w, DerivedObject x);
DerivedObject tau_map(DerivedWindow const &w, DerivedObject x);
DerivedObject F_map(DerivedWindow const &w, DerivedObject x);
DerivedObject serre_map(DerivedWindow const &w, DerivedObject x);

int hom_dim(DerivedWindow const &w, DerivedObject x, DerivedObject y);

// sum_n (-1)^n dim Hom(X, Y[n]) == (-1)^{s_Y - s_X} <dim M_X, dim M_Y>.
bool euler_check(DerivedModel const &model, DerivedObject x, DerivedObject y);

} // namespace orbitcat

#endif // ORBITCAT_DERIVED_HPP
