#include <sstream>

#include "mll/io.hpp"

namespace mll::io {

namespace {

const char* label(const Forest& forest, VertexId v, std::string& scratch) {
  const Forest::Vertex& x = forest.vertex(v);
  switch (x.kind) {
    case Kind::Tensor: return "*";
    case Kind::Par: return "@";
    case Kind::One: return "1";
    case Kind::Bot: return "bot";
    default:
      scratch = print_atom(forest.leaf_atom(x.leaf));
      return scratch.c_str();
  }
}

void header_and_forest(std::ostringstream& out, const CutSequent& g) {
  const Forest& forest = g.forest();
  out << "digraph net {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  std::string scratch;
  for (VertexId v = 0; v < forest.vertex_count(); ++v) {
    const Forest::Vertex& x = forest.vertex(v);
    out << "  v" << v << " [label=\"" << label(forest, v, scratch) << "\"";
    if (is_atom(x.kind)) out << ", xlabel=\"" << x.leaf << "\"";
    out << "];\n";
  }
  for (VertexId v = 0; v < forest.vertex_count(); ++v) {
    const Forest::Vertex& x = forest.vertex(v);
    if (is_atom(x.kind)) continue;
    out << "  v" << v << " -> v" << x.left << " [dir=none];\n";
    out << "  v" << v << " -> v" << x.right << " [dir=none];\n";
  }
  for (const Cut& c : g.cuts())
    out << "  v" << forest.tree_root(c.first) << " -> v" << forest.tree_root(c.second)
        << " [dir=none, style=dashed, constraint=false];\n";
}

}  // namespace

std::string render_dot(const CutSequent& g, const LeafFunction& f) {
  std::ostringstream out;
  header_and_forest(out, g);
  const Forest& forest = g.forest();
  for (const auto& [from, to] : f.edges())
    out << "  v" << forest.leaf_vertex(from) << " -> v" << forest.leaf_vertex(to)
        << " [constraint=false, color=blue, splines=curved];\n";
  out << "}\n";
  return out.str();
}

std::string render_dot(const OldNet& o) {
  std::ostringstream out;
  header_and_forest(out, o.sequent);
  const Forest& forest = o.sequent.forest();
  for (const auto& [a, b] : o.axioms)
    out << "  v" << forest.leaf_vertex(a) << " -> v" << forest.leaf_vertex(b)
        << " [dir=none, constraint=false];\n";
  for (const auto& [from, to] : o.jumps)
    out << "  v" << forest.leaf_vertex(from) << " -> v" << to
        << " [constraint=false, color=blue, splines=curved];\n";
  out << "}\n";
  return out.str();
}

}  // namespace mll::io
