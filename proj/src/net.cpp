#include "mll/net.hpp"

#include <algorithm>
#include <map>

#include "mll/errors.hpp"

namespace mll {

LeafFunction LeafFunction::from_targets(const CutSequent& g, std::vector<LeafIndex> targets) {
  const Forest& forest = g.forest();
  if (targets.size() != forest.leaf_count())
    throw PreconditionError("leaf function size differs from the leaf count");
  for (LeafIndex l = 0; l < targets.size(); ++l) {
    bool negative = forest.leaf_polarity(l) == Polarity::Negative;
    if (!negative) {
      if (targets[l] != kNone)
        throw PreconditionError("edge leaves positive leaf " + std::to_string(l));
      continue;
    }
    LeafIndex t = targets[l];
    if (t == kNone) throw PreconditionError("negative leaf " + std::to_string(l) + " has no edge");
    if (t >= targets.size()) throw PreconditionError("edge target out of range");
    if (forest.leaf_polarity(t) != Polarity::Positive)
      throw PreconditionError("edge from leaf " + std::to_string(l) + " targets negative leaf " +
                              std::to_string(t));
  }
  LeafFunction f;
  f.targets_ = std::move(targets);
  return f;
}

LeafFunction LeafFunction::from_edges(const CutSequent& g, const std::vector<LeafEdge>& edges) {
  std::vector<LeafIndex> targets(g.leaf_count(), kNone);
  for (const auto& [from, to] : edges) {
    if (from >= targets.size() || to >= targets.size())
      throw PreconditionError("edge endpoint out of range");
    if (targets[from] != kNone)
      throw PreconditionError("leaf " + std::to_string(from) + " has two outgoing edges");
    targets[from] = to;
  }
  return from_targets(g, std::move(targets));
}

std::vector<LeafEdge> LeafFunction::edges() const {
  std::vector<LeafEdge> out;
  for (LeafIndex l = 0; l < targets_.size(); ++l)
    if (targets_[l] != kNone) out.emplace_back(l, targets_[l]);
  return out;
}

std::optional<std::string> matching_defect(const LeafFunction& f, const CutSequent& g) {
  const Forest& forest = g.forest();
  // Per symbol: P leaves minus P^ leaves.
  std::vector<std::int64_t> balance(forest.symbol_count(), 0);
  std::vector<bool> hit(forest.leaf_count(), false);
  for (LeafIndex l = 0; l < forest.leaf_count(); ++l) {
    Kind k = forest.leaf_kind(l);
    if (k == Kind::Var) ++balance[forest.leaf_symbol(l)];
    if (k != Kind::DualVar) continue;
    --balance[forest.leaf_symbol(l)];
    LeafIndex t = f(l);
    if (forest.leaf_kind(t) != Kind::Var || forest.leaf_symbol(t) != forest.leaf_symbol(l))
      return "leaf " + std::to_string(l) + " (" + forest.leaf_name(l) + "^) targets leaf " +
             std::to_string(t) + " which is not " + forest.leaf_name(l);
    if (hit[t])
      return "two " + forest.leaf_name(l) + "^ leaves target leaf " + std::to_string(t);
    hit[t] = true;
  }
  // Report the alphabetically first unbalanced variable.
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (std::uint32_t s = 0; s < balance.size(); ++s)
    if (balance[s] != 0) counts[forest.symbol_name(s)];
  if (counts.empty()) return std::nullopt;
  for (LeafIndex l = 0; l < forest.leaf_count(); ++l) {
    auto it = counts.find(forest.leaf_name(l));
    if (it == counts.end()) continue;
    if (forest.leaf_kind(l) == Kind::Var) ++it->second.first;
    if (forest.leaf_kind(l) == Kind::DualVar) ++it->second.second;
  }
  const auto& [name, c] = *counts.begin();
  return "variable " + name + " has " + std::to_string(c.first) + " positive and " +
         std::to_string(c.second) + " negative leaves";
}

bool check_matching(const LeafFunction& f, const CutSequent& g) {
  return !matching_defect(f, g).has_value();
}

LinkGraph net_link_graph(const LeafFunction& f, const CutSequent& g) {
  const Forest& forest = g.forest();
  LinkGraph graph;
  graph.vertex_count = forest.vertex_count();
  graph.edges.reserve(graph.vertex_count + forest.leaf_count());
  graph.pars.reserve(forest.par_count());
  for (VertexId v = 0; v < forest.vertex_count(); ++v) {
    const Forest::Vertex& x = forest.vertex(v);
    if (x.kind == Kind::Tensor) {
      graph.edges.push_back(Edge{v, x.left});
      graph.edges.push_back(Edge{v, x.right});
    } else if (x.kind == Kind::Par) {
      graph.pars.push_back(ParLink{v, x.left, x.right});
    }
  }
  for (const Cut& c : g.cuts())
    graph.edges.push_back(Edge{forest.tree_root(c.first), forest.tree_root(c.second)});
  for (LeafIndex l = 0; l < forest.leaf_count(); ++l)
    if (f.defined_at(l)) graph.edges.push_back(Edge{forest.leaf_vertex(l), forest.leaf_vertex(f(l))});
  return graph;
}

LinkGraph switching_graph(const LeafFunction& f, const CutSequent& g, const Switching& s) {
  return net_link_graph(f, g).switched(s);
}

Witness switching_witness(const LinkGraph& g, const Switching& s) {
  auto defect = analyse_switching(g, s);
  if (!defect) throw PreconditionError("switching_witness: the switching graph is a tree");
  Witness w;
  w.switching = s;
  if (defect->kind == TreeDefect::Kind::Cycle) {
    w.kind = Witness::Kind::Cycle;
    w.cycle = std::move(defect->cycle);
    w.detail = "switching graph has a cycle";
  } else {
    w.kind = Witness::Kind::Disconnected;
    w.separated = defect->separated;
    w.detail = "switching graph is disconnected";
  }
  return w;
}

Verdict check_switching_oracle(const LeafFunction& f, const CutSequent& g) {
  LinkGraph graph = net_link_graph(f, g);
  for (const Switching& s : enumerate_switchings(g)) {
    if (analyse_switching(graph, s)) return Verdict{false, switching_witness(graph, s)};
  }
  return Verdict{true, std::nullopt};
}

Verdict check_oracle(const LeafFunction& f, const CutSequent& g) {
  if (auto why = matching_defect(f, g)) {
    Witness w;
    w.kind = Witness::Kind::Matching;
    w.detail = *why;
    return Verdict{false, std::move(w)};
  }
  return check_switching_oracle(f, g);
}

bool is_proof_net(const LeafFunction& f, const CutSequent& g) { return check_oracle(f, g).valid; }

}  // namespace mll
