#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace oracle {

using mll::Kind;

Graph build(const mll::CutSequent& g) {
  Graph gr;
  int leaf = 0;
  for (const mll::Formula& t : g.trees()) {
    auto nodes = t.nodes();
    int base = static_cast<int>(gr.nodes.size());
    gr.roots.push_back(base);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      Node n{nodes[i].kind, nodes[i].name};
      if (mll::is_atom(n.kind)) {
        n.leaf = leaf++;
        gr.leaf_node.push_back(base + static_cast<int>(i));
      } else {
        n.left = base + static_cast<int>(i) + 1;
        n.right = n.left + static_cast<int>(nodes[i + 1].size);
        if (n.kind == Kind::Par) gr.pars.push_back(base + static_cast<int>(i));
      }
      gr.nodes.push_back(n);
    }
  }
  return gr;
}

bool matching(const std::vector<mll::LeafIndex>& f, const mll::CutSequent& g) {
  Graph gr = build(g);
  std::map<std::string, int> balance;
  std::map<mll::LeafIndex, int> hits;
  for (std::size_t l = 0; l < gr.leaf_node.size(); ++l) {
    const Node& n = gr.nodes[gr.leaf_node[l]];
    if (n.kind == Kind::Var) ++balance[n.name];
    if (n.kind == Kind::DualVar) {
      --balance[n.name];
      const Node& t = gr.nodes[gr.leaf_node[f[l]]];
      if (t.kind != Kind::Var || t.name != n.name) return false;
      if (++hits[f[l]] > 1) return false;
    }
  }
  for (const auto& [name, b] : balance)
    if (b != 0) return false;
  return true;
}

namespace {

// A graph with vertices - 1 edges is a tree iff adding its edges one at a
// time never closes a loop.
struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int root(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool join(int a, int b) {
    a = root(a);
    b = root(b);
    if (a == b) return false;
    up[a] = b;
    return true;
  }
};

}  // namespace

bool all_switchings_trees(const Graph& gr, const mll::CutSequent& g,
                          const std::vector<std::pair<int, int>>& extra) {
  std::vector<std::pair<int, int>> fixed = extra;
  for (std::size_t v = 0; v < gr.nodes.size(); ++v) {
    const Node& n = gr.nodes[v];
    if (n.kind == Kind::Tensor) {
      fixed.emplace_back(static_cast<int>(v), n.left);
      fixed.emplace_back(static_cast<int>(v), n.right);
    }
  }
  for (const mll::Cut& c : g.cuts()) fixed.emplace_back(gr.roots[c.first], gr.roots[c.second]);
  const int vertices = static_cast<int>(gr.nodes.size());
  // Every switching has the same edge count, so one count test settles all.
  if (static_cast<int>(fixed.size() + gr.pars.size()) != vertices - 1) return false;
  Dsu base(vertices);
  for (auto [u, v] : fixed)
    if (!base.join(u, v)) return false;
  const std::size_t p = gr.pars.size();
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << p); ++code) {
    Dsu d = base;
    for (std::size_t k = 0; k < p; ++k) {
      const Node& n = gr.nodes[gr.pars[k]];
      if (!d.join(gr.pars[k], (code >> k) & 1 ? n.right : n.left)) return false;
    }
  }
  return true;
}

bool is_net(const std::vector<mll::LeafIndex>& f, const mll::CutSequent& g) {
  if (!matching(f, g)) return false;
  Graph gr = build(g);
  std::vector<std::pair<int, int>> extra;
  for (std::size_t l = 0; l < f.size(); ++l)
    if (f[l] != mll::kNone) extra.emplace_back(gr.leaf_node[l], gr.leaf_node[f[l]]);
  return all_switchings_trees(gr, g, extra);
}

bool is_net(const mll::LeafFunction& f, const mll::CutSequent& g) { return is_net(f.targets(), g); }

bool old_net_is_net(const mll::OldNet& o) {
  const mll::CutSequent& g = o.sequent;
  Graph gr = build(g);
  const std::size_t n = gr.leaf_node.size();
  std::vector<int> uses(n, 0);
  std::vector<std::pair<int, int>> extra;
  auto kind = [&](mll::LeafIndex l) { return gr.nodes[gr.leaf_node[l]].kind; };
  auto name = [&](mll::LeafIndex l) { return gr.nodes[gr.leaf_node[l]].name; };
  for (auto [a, b] : o.axioms) {
    if (a >= n || b >= n) return false;
    Kind ka = kind(a), kb = kind(b);
    bool literal = (ka == Kind::Var && kb == Kind::DualVar) || (ka == Kind::DualVar && kb == Kind::Var);
    bool unit = (ka == Kind::One && kb == Kind::Bot) || (ka == Kind::Bot && kb == Kind::One);
    if (!unit && !(literal && name(a) == name(b))) return false;
    ++uses[a];
    ++uses[b];
    extra.emplace_back(gr.leaf_node[a], gr.leaf_node[b]);
  }
  for (auto [l, v] : o.jumps) {
    if (l >= n || v >= gr.nodes.size() || kind(l) != Kind::Bot) return false;
    ++uses[l];
    extra.emplace_back(gr.leaf_node[l], static_cast<int>(v));
  }
  for (std::size_t l = 0; l < n; ++l) {
    Kind k = kind(static_cast<mll::LeafIndex>(l));
    if (k == Kind::One ? uses[l] > 1 : uses[l] != 1) return false;
  }
  return all_switchings_trees(gr, g, extra);
}

std::vector<mll::PortPair> compose_paths(const mll::GoiMorphism& f, const mll::GoiMorphism& g) {
  using mll::End;
  using mll::Port;
  std::vector<mll::PortPair> out;
  const std::size_t bound = f.target().size() + 1;
  auto run = [&](Port start, bool in_f) {
    Port at = start;
    for (std::size_t crossings = 0; crossings <= bound; ++crossings) {
      auto next = in_f ? f(at) : g(at);
      if (!next) return;
      if (in_f && next->end == End::Source) {
        out.emplace_back(start, *next);
        return;
      }
      if (!in_f && next->end == End::Target) {
        out.emplace_back(start, *next);
        return;
      }
      // Crossing the middle object flips which morphism reads it.
      at = Port{in_f ? End::Source : End::Target, next->index};
      in_f = !in_f;
    }
  };
  for (std::uint32_t i = 0; i < f.source().size(); ++i)
    if (f.source()[i] == mll::Polarity::Positive) run(Port{End::Source, i}, true);
  for (std::uint32_t i = 0; i < g.target().size(); ++i)
    if (g.target()[i] == mll::Polarity::Negative) run(Port{End::Target, i}, false);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct DotLexer {
  const std::string& s;
  std::size_t i = 0;
  std::string tok;
  bool eof = false;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  // Returns false on a lexical error.
  bool next() {
    skip();
    tok.clear();
    if (i >= s.size()) {
      eof = true;
      return true;
    }
    char c = s[i];
    if (c == '"') {
      tok.push_back(s[i++]);
      while (i < s.size() && s[i] != '"') {
        if (s[i] == '\\' && i + 1 < s.size()) tok.push_back(s[i++]);
        if (s[i] == '\n') return false;
        tok.push_back(s[i++]);
      }
      if (i >= s.size()) return false;
      tok.push_back(s[i++]);
      return true;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      tok = "->";
      i += 2;
      return true;
    }
    if (std::string("{}[];,=").find(c) != std::string::npos) {
      tok = std::string(1, c);
      ++i;
      return true;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
                              s[i] == '.' || s[i] == '-') &&
             !(s[i] == '-' && i + 1 < s.size() && s[i + 1] == '>'))
        tok.push_back(s[i++]);
      return true;
    }
    return false;
  }

  bool is_id() const {
    if (eof || tok.empty()) return false;
    if (tok[0] == '"') return true;
    if (std::isdigit(static_cast<unsigned char>(tok[0])) || tok[0] == '-' || tok[0] == '.') {
      for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.' && c != '-') return false;
      return true;
    }
    for (char c : tok)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
  }
};

}  // namespace

bool valid_dot(const std::string& text, std::string* error) {
  DotLexer lx{text};
  auto fail = [&](const std::string& why) {
    if (error) *error = why + " near offset " + std::to_string(lx.i);
    return false;
  };
  auto advance = [&]() { return lx.next(); };
  auto attr_list = [&]() -> bool {
    while (!lx.eof && lx.tok == "[") {
      if (!advance()) return false;
      while (lx.tok != "]") {
        if (!lx.is_id()) return false;
        if (!advance() || lx.tok != "=") return false;
        if (!advance() || !lx.is_id()) return false;
        if (!advance()) return false;
        if (lx.tok == "," || lx.tok == ";")
          if (!advance()) return false;
        if (lx.eof) return false;
      }
      if (!advance()) return false;
    }
    return true;
  };

  if (!advance() || lx.tok != "digraph") return fail("expected digraph");
  if (!advance()) return fail("lexical error");
  if (lx.is_id()) {
    if (!advance()) return fail("lexical error");
  }
  if (lx.tok != "{") return fail("expected {");
  if (!advance()) return fail("lexical error");
  while (!lx.eof && lx.tok != "}") {
    if (lx.tok == "graph" || lx.tok == "node" || lx.tok == "edge") {
      if (!advance() || lx.tok != "[") return fail("expected attribute list");
      if (!attr_list()) return fail("bad attribute list");
    } else if (lx.is_id()) {
      if (!advance()) return fail("lexical error");
      if (lx.tok == "=") {
        if (!advance() || !lx.is_id()) return fail("expected value");
        if (!advance()) return fail("lexical error");
      } else {
        while (lx.tok == "->") {
          if (!advance() || !lx.is_id()) return fail("expected edge target");
          if (!advance()) return fail("lexical error");
        }
        if (!attr_list()) return fail("bad attribute list");
      }
    } else {
      return fail("unexpected token '" + lx.tok + "'");
    }
    if (lx.tok == ";" && !advance()) return fail("lexical error");
  }
  if (lx.eof) return fail("missing }");
  if (!advance() || !lx.eof) return fail("trailing input");
  return true;
}

}  // namespace oracle
