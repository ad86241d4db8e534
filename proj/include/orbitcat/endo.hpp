#ifndef ORBITCAT_ENDO_HPP
#define ORBITCAT_ENDO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitcat/orbit.hpp"
#include "orbitcat/tilting.hpp"

namespace orbitcat
{

struct AlgebraBasis
{
  int from;   // summand index
  int to;     // summand index
  int degree; // graded component of the orbit Hom
  int index;  // position in hom_space(T_from, T_to)
};

// End(T) for T = T_0 + ... + T_{r-1}, with a basis of morphisms T_i -> T_j.
// Products are diagrammatic: a * b is "a then b", nonzero only when
// a.to == b.from.
class BasedAlgebra
{
public:
  BasedAlgebra(OrbitCategory const &c, ObjectSet summands);

  OrbitCategory const &category() const { return *c_; }
  ObjectSet const &summands() const { return summands_; }
  int num_summands() const { return static_cast<int>(summands_.size()); }
  int dim() const { return static_cast<int>(basis_.size()); }
  std::vector<AlgebraBasis> const &basis() const { return basis_; }

  // Basis indices of Hom(T_i, T_j), in hom_space order.
  std::vector<int> const &block(int i, int j) const;
  int block_dim(int i, int j) const;

  std::map<int, int> grading() const;

  // Basis index of the identity of T_i.
  int identity(int i) const;

  Vector multiply(int a, int b) const;
  Vector multiply(Vector const &x, Vector const &y) const;

private:
  OrbitCategory const *c_;
  ObjectSet summands_;
  std::vector<AlgebraBasis> basis_;
  std::vector<std::vector<std::vector<int>>> blocks_;
};

struct GabrielQuiver
{
  std::vector<std::string> names;
  std::vector<std::vector<int>> arrows; // a_ij, arrow i -> j
  std::vector<std::vector<int>> rad;
  std::vector<std::vector<int>> rad2;

  int size() const { return static_cast<int>(arrows.size()); }
  int num_arrows() const;
  int rad2_dim() const;
};

GabrielQuiver gabriel_quiver(BasedAlgebra const &alg);

// Directed-graph isomorphism on arrows and rad^2 tables together,
// optionally also against the opposite quiver.
bool isomorphic(GabrielQuiver const &a, GabrielQuiver const &b,
                bool allow_opposite = true);

// A single oriented cycle through every vertex, one arrow each.
bool is_oriented_cycle(GabrielQuiver const &g);

// A connected oriented path with single arrows.
bool is_oriented_line(GabrielQuiver const &g);

// Oriented n-cycle with rad^2 = 0, in the form gabriel_quiver returns.
GabrielQuiver cycle_quiver(int n);

struct CoveringReport
{
  std::string group;
  int order = 0; // 0 for Z
  std::vector<int> action; // summand i -> summand of F(T_i); -1 off window
  bool free_action = false;
  bool preserves_arrows = false;
  bool arrow_bijection = false;
  bool quotient_matches = false;
  GabrielQuiver cover;
  GabrielQuiver base;
  std::vector<std::vector<int>> quotient;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// rho_m : C_{F^m} -> C(H) restricted to add of the fiber closure of t0.
CoveringReport covering_check_rho(OrbitCategory const &cm,
                                  OrbitCategory const &c1,
                                  ObjectSet const &t0);

struct WindowQuiver
{
  std::vector<ZVertex> vertices;
  std::vector<int> level; // F-power i of each vertex
  GabrielQuiver quiver;   // full window
  std::vector<int> interior;
  GabrielQuiver interior_quiver;
};

// Quiver of add{F^i T_0 : |i| <= radius} inside D^b(H). Throws
// WindowTooSmall when radius < 1.
WindowQuiver window_quiver(OrbitCategory const &c1, ObjectSet const &t0,
                           int radius);

// pi_m restricted to the window: interior vertices of the window quiver
// must cover the Gabriel quiver of End_{C_{F^m}} of the fiber closure.
CoveringReport covering_check_pi(OrbitCategory const &c1, ObjectSet const &t0,
                                 int m, int radius);

struct TrivialExtReport
{
  int dimension = 0;
  std::map<int, int> grading;
  int degree0 = 0; // dim End_D(T_0)
  int degree1 = 0; // dim Hom_D(T_0, F T_0)
  bool support_ok = false;
  bool tilting_module = false; // every summand a module at shift 0
  int m = 1;
  int cover_dimension = 0;
  bool cover_ok = true;

  bool passed() const { return support_ok && cover_ok; }
};

TrivialExtReport trivial_ext_check(OrbitCategory const &c1,
                                   ObjectSet const &t0, int m = 1);

// C / add(T[1]), the model of A-mod for A = End(T).
QuotientModel module_model(OrbitCategory const &c, ObjectSet const &t);

struct Prop26Report
{
  ExchangePair exchange;
  QuotientModel left;  // by add(T[1]) + T_1^*[1]
  QuotientModel right; // by add(T^*[1]) + T_1[1]
  bool passed = false;
};

Prop26Report prop26_check(OrbitCategory const &c1, ObjectSet const &t,
                          int summand);

struct CorpusMatch
{
  std::string type;
  ObjectSet tilting;
  GabrielQuiver quiver;
};

// First cluster tilting object, over the cluster categories of `types`,
// whose Gabriel quiver and rad^2 table match g.
std::optional<CorpusMatch>
match_cluster_tilted(GabrielQuiver const &g,
                     std::vector<std::string> const &types,
                     SearchOptions opts = {});

} // namespace orbitcat

#endif // ORBITCAT_ENDO_HPP
