#ifndef ORBITCAT_QUIVER_HPP
#define ORBITCAT_QUIVER_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace orbitcat
{

using DimVector = std::vector<int>;

struct Arrow
{
  int id;
  int source;
  int target;
};

// A finite acyclic quiver with named vertices. Vertices and arrows are
// indexed densely in declaration order. Construction validates the ADE
// preconditions: no oriented cycles, no loops, at most one arrow between
// any ordered pair, connected underlying graph.
class Quiver
{
public:
  Quiver(std::vector<std::string> names,
         std::vector<std::pair<int, int>> const &arrows);

  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }

  std::string const &name(int v) const { return names_.at(v); }
  std::vector<std::string> const &names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  std::span<Arrow const> arrows() const { return arrows_; }
  std::vector<int> const &successors(int v) const { return succ_.at(v); }
  std::vector<int> const &predecessors(int v) const { return pred_.at(v); }
  bool has_arrow(int from, int to) const;

  // Sources first; ties broken by vertex index.
  std::vector<int> const &topological_order() const { return topo_; }

  // Number of paths from `from` to `to` (the empty path counts at from==to).
  int path_count(int from, int to) const;

  bool operator==(Quiver const &other) const = default;

private:
  std::vector<std::string> names_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
  std::vector<int> topo_;
};

// Parses the quiver DSL:
//   vertices <name>+ [;] arrows (<src>-><dst>)* [;]
// `#` starts a comment running to the end of the line.
Quiver parse_quiver(std::string_view text);

enum class Series { A, D, E };

struct DynkinClass
{
  Series series;
  int rank;
  // node_to_vertex[i] is the quiver vertex placed at diagram node i+1.
  std::vector<int> node_to_vertex;

  std::string str() const;
};

DynkinClass classify(Quiver const &q);

int euler_form(Quiver const &q, DimVector const &d, DimVector const &e);

int num_positive_roots(Series series, int rank);

enum class Orientation { Linear, Sink, Source };

Orientation parse_orientation(std::string_view s);

// Preset Dynkin quivers. Vertices are named a, b, c, ... so that object
// names like P_a read naturally. A_n is the path a - b - ...; D_n is the
// path over its first n-2 vertices with two leaves on vertex n-2; E_n is
// the path over its first n-1 vertices with an extra leaf on vertex 3.
//
// Linear orients every edge from lower to higher index. Sink and Source are
// the bipartite orientations in which the branch vertex (vertex 1 for A_n)
// is a sink, respectively a source.
Quiver dynkin_quiver(Series series, int rank, Orientation orientation);
Quiver dynkin_quiver(Series series, int rank);

// Parses "A3", "D4", "E6" and returns the preset. Default orientation is
// linear for A_n and sink for D_n / E_n.
Quiver dynkin_quiver(std::string_view type,
                     std::optional<Orientation> orientation = std::nullopt);

} // namespace orbitcat

#endif // ORBITCAT_QUIVER_HPP
