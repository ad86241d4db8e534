#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace orbitcat::cli
{

namespace
{

std::string dim_string(DimVector const &d)
{
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i)
    s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

std::vector<std::string> tags(DerivedModel const &model, int id)
{
  auto const &ar = model.ar();
  auto const &q = model.quiver();
  std::vector<std::string> out;
  for (int v = 0; v < q.num_vertices(); ++v) {
    if (ar.proj[v] == id)
      out.push_back("P_" + q.name(v));
    if (ar.inj[v] == id)
      out.push_back("I_" + q.name(v));
    if (ar.simple[v] == id)
      out.push_back("S_" + q.name(v));
  }
  return out;
}

std::string quoted(std::string const &s)
{
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace

Json ar_quiver_json(DerivedModel const &model)
{
  auto const &ar = model.ar();
  Json modules = Json::array();
  for (int id = 0; id < ar.size(); ++id) {
    Json m;
    m["id"] = id;
    m["name"] = model.module_name(id);
    m["dim"] = ar.dims[id];
    m["tags"] = tags(model, id);
    m["slice"] = ar.position[id].slice;
    m["tau"] = ar.tau[id] ? Json(*ar.tau[id]) : Json(nullptr);
    modules.push_back(std::move(m));
  }
  Json arrows = Json::array();
  auto sorted = ar.arrows;
  std::sort(sorted.begin(), sorted.end());
  for (auto [a, b] : sorted)
    arrows.push_back({a, b});
  Json out;
  out["vertices"] = model.quiver().names();
  out["modules"] = std::move(modules);
  out["arrows"] = std::move(arrows);
  return out;
}

std::string ar_quiver_dot(DerivedModel const &model)
{
  auto const &ar = model.ar();
  std::ostringstream os;
  os << "digraph ar_quiver {\n  rankdir=LR;\n";
  for (int id = 0; id < ar.size(); ++id) {
    std::string label = dim_string(ar.dims[id]);
    for (auto const &t : tags(model, id))
      label += "\\n" + t;
    os << "  m" << id << " [label=" << quoted(label) << "];\n";
  }
  auto sorted = ar.arrows;
  std::sort(sorted.begin(), sorted.end());
  for (auto [a, b] : sorted)
    os << "  m" << a << " -> m" << b << ";\n";
  for (int id = 0; id < ar.size(); ++id)
    if (ar.tau[id])
      os << "  m" << id << " -> m" << *ar.tau[id]
         << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

std::string ar_quiver_text(DerivedModel const &model)
{
  auto const &ar = model.ar();
  std::ostringstream os;
  for (int id = 0; id < ar.size(); ++id) {
    os << id << " " << dim_string(ar.dims[id]);
    for (auto const &t : tags(model, id))
      os << " " << t;
    if (ar.tau[id])
      os << " tau=" << *ar.tau[id];
    os << "\n";
  }
  return os.str();
}

Json graded_json(GradedHom const &g)
{
  Json comps = Json::object();
  for (auto [deg, dim] : g.components)
    comps[std::to_string(deg)] = dim;
  Json out;
  out["components"] = std::move(comps);
  out["total"] = g.total;
  return out;
}

Json object_set_json(OrbitCategory const &c, ObjectSet const &s)
{
  Json out = Json::array();
  for (int x : s)
    out.push_back(c.name(x));
  return out;
}

std::string object_set_text(OrbitCategory const &c, ObjectSet const &s)
{
  std::string out;
  for (int x : s)
    out += (out.empty() ? "" : " + ") + c.name(x);
  return out;
}

Json gabriel_json(GabrielQuiver const &g)
{
  Json arrows = Json::array();
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      if (g.arrows[i][j])
        arrows.push_back({i, j, g.arrows[i][j]});
  Json out;
  out["vertices"] = g.names;
  out["arrows"] = std::move(arrows);
  return out;
}

std::string gabriel_dot(GabrielQuiver const &g, std::string const &name)
{
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int i = 0; i < g.size(); ++i)
    os << "  v" << i << " [label=" << quoted(g.names[i]) << "];\n";
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      for (int k = 0; k < g.arrows[i][j]; ++k)
        os << "  v" << i << " -> v" << j << ";\n";
  os << "}\n";
  return os.str();
}

char const *to_string(Status s)
{
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  case Status::Skipped: return "skipped";
  }
  return "?";
}

bool VerifyReport::passed() const
{
  return std::none_of(checks.begin(), checks.end(), [](auto const &c) {
    return c.status == Status::Fail;
  });
}

Json VerifyReport::to_json() const
{
  Json arr = Json::array();
  for (auto const &c : checks) {
    Json j;
    j["name"] = c.name;
    j["status"] = to_string(c.status);
    j["summary"] = c.summary;
    j["details"] = c.details;
    j["witnesses"] = c.witnesses;
    if (timing)
      j["wall_ms"] = c.wall_ms;
    arr.push_back(std::move(j));
  }
  Json out;
  out["status"] = passed() ? "pass" : "fail";
  out["checks"] = std::move(arr);
  return out;
}

std::string VerifyReport::to_text() const
{
  std::ostringstream os;
  for (auto const &c : checks) {
    std::string status = to_string(c.status);
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    os << status << " " << c.name;
    if (!c.summary.empty())
      os << ": " << c.summary;
    if (timing)
      os << " (" << static_cast<long>(c.wall_ms) << " ms)";
    os << "\n";
    for (auto const &w : c.witnesses)
      os << "  " << w << "\n";
  }
  return os.str();
}

} // namespace orbitcat::cli
