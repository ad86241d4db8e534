#ifndef ORBITCAT_ORBIT_HPP
#define ORBITCAT_ORBIT_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "orbitcat/mesh.hpp"

namespace orbitcat
{

// dim Hom(X~, Y~) = sum_i dim Hom_D(X, F^{mi} Y), by degree i.
struct GradedHom
{
  std::map<int, int> components; // nonzero components only
  int total = 0;
};

// One graded piece of an orbit Hom space: Hom_D(X, F^{mi} Y).
struct HomComponent
{
  int degree;
  ZVertex target; // F^{mi} Y
  int dim;
  int offset;     // position of this block in the flattened basis
};

// Hom(X~, Y~) in C_{F^m} with a flattened basis over all components.
struct OrbitHomSpace
{
  int source;
  int target;
  std::vector<HomComponent> components;
  int dim = 0;

  HomComponent const *component(int degree) const;
};

struct OrbitMorphism
{
  int source;
  int target;
  Vector coords; // over OrbitHomSpace(source, target)

  bool is_zero() const { return orbitcat::is_zero(coords); }
};

// The repetitive cluster category C_{F^m}(H) = D^b(H) / F^m, F = tau^{-1}[1].
// Objects are indexed by a fundamental domain
//   F^0 D_1, F^1 D_1, ..., F^{m-1} D_1
// where D_1 = ind mod kQ  plus  P_v[1] is the fundamental domain of the
// cluster category. Order: F-power ascending, then module id, then the
// shifted projectives by vertex.
class OrbitCategory
{
public:
  OrbitCategory(std::shared_ptr<MeshCategory const> mesh, int m);
  OrbitCategory(Quiver q, int m);

  int m() const { return m_; }
  int size() const { return static_cast<int>(domain_.size()); }
  int base_size() const { return base_size_; } // |D_1|
  DerivedModel const &model() const { return mesh_->model(); }
  MeshCategory const &mesh() const { return *mesh_; }
  std::shared_ptr<MeshCategory const> const &mesh_ptr() const
  {
    return mesh_;
  }

  std::vector<ZVertex> const &domain() const { return domain_; }
  ZVertex vertex(int id) const { return domain_.at(id); }

  // j with z = F^j(y) for y in D_1.
  int f_power(ZVertex z) const;
  ZVertex canonical_vertex(ZVertex z) const;
  int canonical(ZVertex z) const;
  int canonical(DerivedObject x) const
  {
    return canonical(model().locate(x));
  }

  int F(int id, int n = 1) const;
  int shift(int id, int n = 1) const;
  int serre(int id, int n = 1) const;
  int tau(int id, int n = 1) const;

  GradedHom hom(int x, int y) const;
  int hom_total(int x, int y) const;
  int ext1(int x, int y) const;

  OrbitHomSpace const &hom_space(int x, int y) const;
  OrbitMorphism zero(int x, int y) const;
  OrbitMorphism identity(int x) const;
  OrbitMorphism basis_element(int x, int y, int index) const;
  // (i, f) * (j, g) = (i + j, f * F^{mi}(g)).
  OrbitMorphism compose(OrbitMorphism const &f, OrbitMorphism const &g) const;

  std::string name(int id) const;

private:
  void check(int id) const;

  std::shared_ptr<MeshCategory const> mesh_;
  int m_;
  int base_size_;
  std::vector<ZVertex> domain_;
  std::map<ZVertex, int> index_;

  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<OrbitHomSpace>>
      spaces_;
};

// pi_m : D^b -> C_{F^m} and rho_m : C_{F^m} -> C(H) on objects.
int project_pi_m(OrbitCategory const &cm, ZVertex z);
int project_rho_m(OrbitCategory const &cm, OrbitCategory const &c1, int id);
int project_pi(OrbitCategory const &c1, ZVertex z);

// rho_m^{-1}(T) = union_{i<m} F^i(T) for T a set of C(H) objects.
std::vector<int> fiber_closure(OrbitCategory const &cm,
                               OrbitCategory const &c1,
                               std::vector<int> const &objects);

struct CalabiYauReport
{
  bool map_equal = true;   // Serre^m == [2m] on every domain object
  int serre_pairs = 0;
  int serre_mismatches = 0; // hom(x, y) != hom(y, Serre x)
  bool count_ok = true;     // |domain| = m (#roots + rank)
  std::vector<std::string> witnesses;

  bool passed() const
  {
    return map_equal && serre_mismatches == 0 && count_ok;
  }
};

CalabiYauReport verify_fractional_cy(OrbitCategory const &c);

struct QuotientHom
{
  int dim;
  std::vector<int> basis; // indices into the ambient flattened basis
};

// Hom(X, Y) modulo all morphisms factoring through add(ideal).
QuotientHom quotient_hom(OrbitCategory const &c, std::vector<int> const &ideal,
                         int x, int y);

// Quotient category C / add(ideal) restricted to the objects outside ideal.
struct QuotientModel
{
  std::vector<int> ideal;
  std::vector<int> objects;
  std::vector<std::vector<int>> hom; // hom[i][j] over `objects`
};

QuotientModel quotient_model(OrbitCategory const &c,
                             std::vector<int> const &ideal);

} // namespace orbitcat

#endif // ORBITCAT_ORBIT_HPP
