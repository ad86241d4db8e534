#ifndef ORBITCAT_TILTING_HPP
#define ORBITCAT_TILTING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbitcat/orbit.hpp"

namespace orbitcat
{

// Multiplicity-free set of fundamental-domain ids, kept sorted.
using ObjectSet = std::vector<int>;

ObjectSet normalized(ObjectSet s);

bool is_rigid(OrbitCategory const &c, ObjectSet const &s);

// Rigid, and every object x outside s has Ext^1(x, s) != 0 and
// Ext^1(s, x) != 0.
bool is_cluster_tilting(OrbitCategory const &c, ObjectSet const &s);

struct SearchOptions
{
  std::size_t node_budget = 5'000'000;
};

// All cluster tilting objects, by clique search on the Ext-compatibility
// graph. Sorted lexicographically.
std::vector<ObjectSet> enumerate_cluster_tilting(OrbitCategory const &c,
                                                 SearchOptions opts = {});

struct BijectionReport
{
  int count_m = 0;
  int count_1 = 0;
  bool bijection = false;
  std::vector<std::string> witnesses; // failures
};

// T -> rho_m^{-1}(T) maps the cluster tilting objects of C(H) onto those of
// C_{F^m}(H), bijectively.
BijectionReport verify_fiber_bijection(OrbitCategory const &cm,
                                       OrbitCategory const &c1,
                                       std::vector<ObjectSet> const &enum_m,
                                       std::vector<ObjectSet> const &enum_1);
BijectionReport verify_fiber_bijection(OrbitCategory const &cm,
                                       OrbitCategory const &c1,
                                       SearchOptions opts = {});

// F-orbit of an object inside C_{F^m}: {x, Fx, ..., F^{k-1}x}, sorted.
ObjectSet f_orbit(OrbitCategory const &c, int x);

// F permutes the summands of t.
bool verify_F_stability(OrbitCategory const &c, ObjectSet const &t);
std::vector<int> f_orbit_sizes(OrbitCategory const &c, ObjectSet const &t);

struct ExchangePair
{
  ObjectSet before;
  ObjectSet removed;     // one F-orbit of summands
  ObjectSet replacement; // the other F-orbit completing the rest
  ObjectSet after;
};

// F-orbit classes o, disjoint from `rest`, with rest + o cluster tilting.
std::vector<ObjectSet> completions(OrbitCategory const &c,
                                   ObjectSet const &rest);

// Exchanges the F-orbit class of `summand` in t. Throws InvariantViolation
// if the replacement is missing or not unique.
ExchangePair mutate(OrbitCategory const &c, ObjectSet const &t, int summand);

// Complement T' of module objects with T + T' cluster tilting and
// Hom_H(T, T') = 0 or Hom_H(T', T) = 0. Requires m = 1, t rigid and every
// summand a module at shift 0. An empty set means t is already cluster
// tilting; std::nullopt means no witness exists.
std::optional<ObjectSet> is_triangular_rigid(OrbitCategory const &c1,
                                             ObjectSet const &t,
                                             SearchOptions opts = {});

} // namespace orbitcat

#endif // ORBITCAT_TILTING_HPP
