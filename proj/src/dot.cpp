#include "cubical/dot.hpp"

#include <algorithm>
#include <sstream>

namespace cubical::dot {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

namespace {

void edge_lines(std::ostringstream& o, const CubeComplex& X, const std::vector<char>* keep,
                const std::vector<char>* bold) {
  for (int i = 0; i < X.count(1); ++i) {
    if (keep && !(*keep)[i]) continue;
    const auto& e = X.cell(1, i);
    o << "  " << quote(X.id(0, e.corners[0])) << " -- " << quote(X.id(0, e.corners[1])) << " [label=" << quote(e.id);
    if (bold && (*bold)[i]) o << ", color=red, penwidth=2";
    o << "];\n";
  }
}

}  // namespace

std::string skeleton(const CubeComplex& X, const std::string& name) {
  std::ostringstream o;
  o << "graph " << quote(name) << " {\n";
  o << "  label=" << quote(std::to_string(X.count(2)) + " squares, " + std::to_string(X.count(3)) + " 3-cubes") << ";\n";
  for (const auto& v : X.cells(0)) o << "  " << quote(v.id) << ";\n";
  edge_lines(o, X, nullptr, nullptr);
  o << "}\n";
  return o.str();
}

std::string link(const Link& L, const std::string& name) {
  std::ostringstream o;
  o << "graph " << quote(name) << " {\n";
  o << "  label=" << quote(std::to_string(L.triangles.size()) + " triangles") << ";\n";
  for (std::size_t v = 0; v < L.vertices.size(); ++v)
    o << "  n" << v << " [label=" << quote(L.vertices[v]) << "];\n";
  for (std::size_t e = 0; e < L.edges.size(); ++e) {
    const auto& lab = e < L.edge_labels.size() ? L.edge_labels[e] : std::string();
    o << "  n" << L.edges[e][0] << " -- n" << L.edges[e][1] << " [label=" << quote(lab) << "];\n";
  }
  o << "}\n";
  return o.str();
}

std::string graph_of_spaces(const GraphOfSpaces& G, const std::string& name) {
  std::ostringstream o;
  auto counts = [](const CubeComplex& X) {
    std::string s;
    for (int d = 0; d <= X.dim(); ++d) s += (d ? "/" : "") + std::to_string(X.count(d));
    return s;
  };
  o << "graph " << quote(name) << " {\n";
  for (std::size_t v = 0; v < G.graph.vertices.size(); ++v)
    o << "  " << quote(G.graph.vertices[v]) << " [label="
      << quote(G.graph.vertices[v] + "\n" + counts(*G.vertex_spaces[v])) << "];\n";
  for (std::size_t e = 0; e < G.graph.edges.size(); ++e) {
    const auto& ed = G.graph.edges[e];
    o << "  " << quote(G.graph.vertices[ed.from]) << " -- " << quote(G.graph.vertices[ed.to])
      << " [label=" << quote(ed.id + " " + counts(*G.edge_spaces[e].space)) << "];\n";
  }
  o << "}\n";
  return o.str();
}

std::string horizontal_graph(const TotalSpace& T, const HorizontalGraph& H, const std::string& name) {
  std::ostringstream o;
  const auto& X = *T.complex;
  o << "digraph " << quote(name) << " {\n";
  for (int v : H.vertices) o << "  " << quote(X.id(0, v)) << ";\n";
  for (const auto& e : H.edges)
    o << "  " << quote(X.id(0, e.from)) << " -> " << quote(X.id(0, e.to))
      << " [label=" << quote(T.gos.graph.edges[e.graph_edge].id) << "];\n";
  o << "}\n";
  return o.str();
}

std::string carrier(const CubeComplex& X, const Hyperplane& H, const std::string& name) {
  std::ostringstream o;
  std::vector<char> keep(X.count(1), 0), bold(X.count(1), 0);
  for (int i = 0; i < X.count(1); ++i) keep[i] = H.carrier.has(1, i);
  for (int e : H.dual_edges) bold[e] = 1;
  o << "graph " << quote(name) << " {\n";
  o << "  label=" << quote("hyperplane " + std::to_string(H.id)) << ";\n";
  for (int v = 0; v < X.count(0); ++v)
    if (H.carrier.has(0, v)) o << "  " << quote(X.id(0, v)) << ";\n";
  edge_lines(o, X, &keep, &bold);
  o << "}\n";
  return o.str();
}

}  // namespace cubical::dot
