#include "orbitcat/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>

#include "orbitcat/error.hpp"

namespace orbitcat
{

Quiver::Quiver(std::vector<std::string> names,
               std::vector<std::pair<int, int>> const &arrows)
  : names_(std::move(names)),
    succ_(names_.size()),
    pred_(names_.size())
{
  int const n = num_vertices();
  if (n == 0)
    throw QuiverError("quiver has no vertices");

  std::set<std::string> seen;
  for (auto const &name : names_) {
    if (!seen.insert(name).second)
      throw QuiverError("duplicate vertex name '" + name + "'");
  }

  std::set<std::pair<int, int>> pairs;
  for (auto const &[s, t] : arrows) {
    if (s < 0 || s >= n || t < 0 || t >= n)
      throw QuiverError("arrow endpoint out of range");
    if (s == t)
      throw QuiverError("loop at vertex '" + names_[s] + "' (cycle)");
    if (!pairs.insert({s, t}).second)
      throw QuiverError("multiple arrows " + names_[s] + "->" + names_[t]);
    arrows_.push_back({static_cast<int>(arrows_.size()), s, t});
    succ_[s].push_back(t);
    pred_[t].push_back(s);
  }

  // Kahn's algorithm with a min-heap for a deterministic order.
  std::vector<int> indeg(n, 0);
  for (auto const &a : arrows_)
    ++indeg[a.target];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0)
      ready.push(v);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (int w : succ_[v])
      if (--indeg[w] == 0)
        ready.push(w);
  }
  if (static_cast<int>(topo_.size()) != n)
    throw QuiverError("oriented cycle detected");

  // Connectivity of the underlying graph.
  std::vector<bool> reached(n, false);
  std::vector<int> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto const *nbrs : {&succ_[v], &pred_[v]})
      for (int w : *nbrs)
        if (!reached[w]) {
          reached[w] = true;
          stack.push_back(w);
        }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    throw QuiverError("underlying graph is not connected");
}

std::optional<int> Quiver::index_of(std::string_view name) const
{
  for (int v = 0; v < num_vertices(); ++v)
    if (names_[v] == name)
      return v;
  return std::nullopt;
}

bool Quiver::has_arrow(int from, int to) const
{
  auto const &s = succ_.at(from);
  return std::find(s.begin(), s.end(), to) != s.end();
}

int Quiver::path_count(int from, int to) const
{
  std::vector<int> count(num_vertices(), 0);
  count[from] = 1;
  for (int v : topo_)
    for (int w : succ_[v])
      count[w] += count[v];
  return count[to];
}

namespace
{

struct Token
{
  enum Kind { Word, ArrowOp, Semicolon, End } kind;
  std::string text;
  int line;
  int column;
};

class Lexer
{
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next()
  {
    skip_blank();
    if (pos_ >= text_.size())
      return {Token::End, "", line_, col_};

    int line = line_, col = col_;
    char c = text_[pos_];
    if (c == ';') {
      advance();
      return {Token::Semicolon, ";", line, col};
    }
    if (c == '-') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        advance();
        advance();
        return {Token::ArrowOp, "->", line, col};
      }
      throw ParseError("expected '->'", line, col);
    }
    if (is_word_char(c)) {
      std::string word;
      while (pos_ < text_.size() && is_word_char(text_[pos_])) {
        word += text_[pos_];
        advance();
      }
      return {Token::Word, word, line, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     col);
  }

private:
  static bool is_word_char(char c)
  {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '\'' || c == '.';
  }

  void advance()
  {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank()
  {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

} // namespace

Quiver parse_quiver(std::string_view text)
{
  Lexer lex(text);
  Token tok = lex.next();

  if (tok.kind != Token::Word || tok.text != "vertices")
    throw ParseError("expected 'vertices'", tok.line, tok.column);
  tok = lex.next();

  std::vector<std::string> names;
  std::map<std::string, int> index;
  while (tok.kind == Token::Word && tok.text != "arrows") {
    if (tok.text == "vertices")
      throw ParseError("'vertices' is a keyword", tok.line, tok.column);
    if (index.count(tok.text))
      throw ParseError("duplicate vertex name '" + tok.text + "'", tok.line,
                       tok.column);
    index[tok.text] = static_cast<int>(names.size());
    names.push_back(tok.text);
    tok = lex.next();
  }
  if (names.empty())
    throw ParseError("expected at least one vertex name", tok.line,
                     tok.column);
  if (tok.kind == Token::Semicolon)
    tok = lex.next();

  std::vector<std::pair<int, int>> arrows;
  if (tok.kind == Token::Word && tok.text == "arrows") {
    tok = lex.next();
    std::set<std::pair<int, int>> seen;
    while (tok.kind == Token::Word) {
      Token src = tok;
      Token op = lex.next();
      if (op.kind != Token::ArrowOp)
        throw ParseError("expected '->'", op.line, op.column);
      Token dst = lex.next();
      if (dst.kind != Token::Word)
        throw ParseError("expected target vertex", dst.line, dst.column);
      auto s = index.find(src.text);
      if (s == index.end())
        throw ParseError("undeclared vertex '" + src.text + "'", src.line,
                         src.column);
      auto t = index.find(dst.text);
      if (t == index.end())
        throw ParseError("undeclared vertex '" + dst.text + "'", dst.line,
                         dst.column);
      if (!seen.insert({s->second, t->second}).second)
        throw ParseError("multiple arrows " + src.text + "->" + dst.text,
                         src.line, src.column);
      arrows.emplace_back(s->second, t->second);
      tok = lex.next();
    }
    if (tok.kind == Token::Semicolon)
      tok = lex.next();
  }
  if (tok.kind != Token::End)
    throw ParseError("unexpected '" + tok.text + "'", tok.line, tok.column);

  return Quiver(std::move(names), arrows);
}

std::string DynkinClass::str() const
{
  char s = series == Series::A ? 'A' : series == Series::D ? 'D' : 'E';
  return s + std::to_string(rank);
}

DynkinClass classify(Quiver const &q)
{
  int const n = q.num_vertices();
  std::vector<std::vector<int>> adj(n);
  for (auto const &a : q.arrows()) {
    adj[a.source].push_back(a.target);
    adj[a.target].push_back(a.source);
  }
  // An undirected cycle can hide behind an acyclic orientation.
  if (q.num_arrows() != n - 1)
    throw NotDynkin("underlying graph is not a tree");

  auto lexless = [&](int a, int b) { return q.name(a) < q.name(b); };

  // Walks from `start` away from `from` along a path of degree-2 vertices.
  auto walk = [&](int start, int from) {
    std::vector<int> leg{start};
    int prev = from, cur = start;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      leg.push_back(cur);
    }
    return leg;
  };

  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 3)
      throw NotDynkin("vertex '" + q.name(v) + "' has degree > 3");
    if (adj[v].size() == 3)
      branch.push_back(v);
  }
  if (branch.size() > 1)
    throw NotDynkin("more than one branch vertex");

  if (branch.empty()) {
    DynkinClass c{Series::A, n, {}};
    if (n == 1) {
      c.node_to_vertex = {0};
      return c;
    }
    std::vector<int> ends;
    for (int v = 0; v < n; ++v)
      if (adj[v].size() == 1)
        ends.push_back(v);
    int start = std::min(ends[0], ends[1], lexless);
    c.node_to_vertex = walk(start, -1);
    return c;
  }

  int const b = branch[0];
  std::vector<std::vector<int>> legs;
  for (int w : adj[b])
    legs.push_back(walk(w, b));
  std::sort(legs.begin(), legs.end(), [&](auto const &x, auto const &y) {
    if (x.size() != y.size())
      return x.size() < y.size();
    return lexless(x.back(), y.back());
  });
  std::size_t const l0 = legs[0].size(), l1 = legs[1].size(),
                    l2 = legs[2].size();

  DynkinClass c{Series::D, n, {}};
  auto append_reversed = [&](std::vector<int> const &leg) {
    c.node_to_vertex.insert(c.node_to_vertex.end(), leg.rbegin(),
                            leg.rend());
  };

  if (l0 == 1 && l1 == 1) {
    // D_n: long leg, branch, then the two short leaves.
    c.series = Series::D;
    append_reversed(legs[2]);
    c.node_to_vertex.push_back(b);
    c.node_to_vertex.push_back(legs[0][0]);
    c.node_to_vertex.push_back(legs[1][0]);
    return c;
  }
  if (l0 == 1 && l1 == 2 && l2 >= 2 && l2 <= 4) {
    // E_n: the length-2 leg, branch, the long leg, then the short leaf.
    c.series = Series::E;
    append_reversed(legs[1]);
    c.node_to_vertex.push_back(b);
    c.node_to_vertex.insert(c.node_to_vertex.end(), legs[2].begin(),
                            legs[2].end());
    c.node_to_vertex.push_back(legs[0][0]);
    return c;
  }
  throw NotDynkin("leg lengths (" + std::to_string(l0) + "," +
                  std::to_string(l1) + "," + std::to_string(l2) +
                  ") are not of ADE type");
}

int euler_form(Quiver const &q, DimVector const &d, DimVector const &e)
{
  auto const n = static_cast<std::size_t>(q.num_vertices());
  if (d.size() != n || e.size() != n)
    throw DimensionMismatch("dimension vector length does not match quiver");
  int sum = 0;
  for (std::size_t v = 0; v < n; ++v)
    sum += d[v] * e[v];
  for (auto const &a : q.arrows())
    sum -= d[a.source] * e[a.target];
  return sum;
}

int num_positive_roots(Series series, int rank)
{
  switch (series) {
  case Series::A:
    return rank * (rank + 1) / 2;
  case Series::D:
    return rank * (rank - 1);
  case Series::E:
    return rank == 6 ? 36 : rank == 7 ? 63 : 120;
  }
  return 0;
}

Orientation parse_orientation(std::string_view s)
{
  if (s == "linear")
    return Orientation::Linear;
  if (s == "sink")
    return Orientation::Sink;
  if (s == "source")
    return Orientation::Source;
  throw UsageError("unknown orientation '" + std::string(s) + "'");
}

Quiver dynkin_quiver(Series series, int rank, Orientation orientation)
{
  if (rank < 1 || rank > 26 || (series == Series::D && rank < 4) ||
      (series == Series::E && (rank < 6 || rank > 8)))
    throw UsageError("no Dynkin diagram of that rank");

  std::vector<std::string> names;
  for (int i = 0; i < rank; ++i)
    names.emplace_back(1, static_cast<char>('a' + i));

  std::vector<std::pair<int, int>> edges;
  int branch = 0;
  switch (series) {
  case Series::A:
    for (int i = 0; i + 1 < rank; ++i)
      edges.emplace_back(i, i + 1);
    branch = 0;
    break;
  case Series::D:
    for (int i = 0; i + 1 < rank - 1; ++i)
      edges.emplace_back(i, i + 1);
    edges.emplace_back(rank - 3, rank - 1);
    branch = rank - 3;
    break;
  case Series::E:
    for (int i = 0; i + 1 < rank - 1; ++i)
      edges.emplace_back(i, i + 1);
    edges.emplace_back(2, rank - 1);
    branch = 2;
    break;
  }

  if (orientation != Orientation::Linear) {
    // Two-colour the tree by distance parity from the branch vertex.
    std::vector<int> parity(rank, -1);
    parity[branch] = 0;
    for (bool changed = true; changed;) {
      changed = false;
      for (auto const &[s, t] : edges) {
        if (parity[s] >= 0 && parity[t] < 0) {
          parity[t] = 1 - parity[s];
          changed = true;
        } else if (parity[t] >= 0 && parity[s] < 0) {
          parity[s] = 1 - parity[t];
          changed = true;
        }
      }
    }
    int const sink_colour = orientation == Orientation::Sink ? 0 : 1;
    for (auto &[s, t] : edges)
      if (parity[s] == sink_colour)
        std::swap(s, t);
  }
  return Quiver(std::move(names), edges);
}

Quiver dynkin_quiver(Series series, int rank)
{
  return dynkin_quiver(series, rank,
                       series == Series::A ? Orientation::Linear
                                           : Orientation::Sink);
}

Quiver dynkin_quiver(std::string_view type,
                     std::optional<Orientation> orientation)
{
  if (type.size() < 2)
    throw UsageError("bad Dynkin type '" + std::string(type) + "'");
  Series series;
  switch (std::toupper(static_cast<unsigned char>(type[0]))) {
  case 'A':
    series = Series::A;
    break;
  case 'D':
    series = Series::D;
    break;
  case 'E':
    series = Series::E;
    break;
  default:
    throw UsageError("bad Dynkin type '" + std::string(type) + "'");
  }
  int rank = 0;
  for (char c : type.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw UsageError("bad Dynkin type '" + std::string(type) + "'");
    rank = rank * 10 + (c - '0');
  }
  if (orientation)
    return dynkin_quiver(series, rank, *orientation);
  return dynkin_quiver(series, rank);
}

} // namespace orbitcat
