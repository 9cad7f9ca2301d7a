#include "mll/checker.hpp"

#include <algorithm>
#include <optional>

namespace mll {

namespace {

// Pre-order emission of `n` copies of 1 under a left-bracketed tensor.
void emit_ones(std::vector<Formula::Node>& out, std::size_t n) {
  for (std::size_t k = n; k > 1; --k)
    out.push_back(Formula::Node{Kind::Tensor, static_cast<std::uint32_t>(2 * k - 1), {}});
  for (std::size_t k = 0; k < n; ++k) out.push_back(Formula::Node{Kind::One, 1, {}});
}

}  // namespace

namespace {

// The bookkeeping shared by the materialised reduction and the direct link
// graph: which vertices vanish, what each vertex stands for once vanished
// tensor arguments are skipped, and how large its image is.
struct Reduction {
  const Forest& forest;
  std::size_t n_vertices = 0;
  std::vector<Kind> kind;
  std::vector<std::uint32_t> left, right;
  std::vector<std::uint32_t> roots;
  std::vector<std::uint32_t> incoming;
  std::vector<bool> vanished;
  std::vector<std::uint32_t> eff, esize;
  std::optional<SwitchingFailure> failure;
  bool lone = false;  // everything collapsed to a single 1

  explicit Reduction(const Forest& fo) : forest(fo) {}
};

Reduction prepare(const LeafFunction& f, const CutSequent& g) {
  Reduction r(g.forest());
  const Forest& forest = g.forest();
  const std::size_t n_vertices = forest.vertex_count();
  const std::size_t n_leaves = forest.leaf_count();
  if (f.leaf_count() != n_leaves) throw PreconditionError("leaf function does not fit the sequent");

  // Working nodes: the forest's vertices, then one tensor per cut pair.
  const std::size_t n_cuts = g.cuts().size();
  const std::size_t total = n_vertices + n_cuts;
  r.n_vertices = n_vertices;
  r.kind.assign(total, Kind::Tensor);
  r.left.assign(total, kNone);
  r.right.assign(total, kNone);
  for (VertexId v = 0; v < n_vertices; ++v) {
    const Forest::Vertex& x = forest.vertex(v);
    r.kind[v] = x.kind;
    r.left[v] = x.left;
    r.right[v] = x.right;
  }
  for (std::size_t c = 0; c < n_cuts; ++c) {
    r.left[n_vertices + c] = forest.tree_root(g.cuts()[c].first);
    r.right[n_vertices + c] = forest.tree_root(g.cuts()[c].second);
  }
  for (std::size_t t = 0; t < forest.trees().size(); ++t) {
    auto partner = forest.cut_partner(t);
    if (!partner) {
      r.roots.push_back(forest.tree_root(t));
    } else if (t < *partner) {
      auto it = std::find(g.cuts().begin(), g.cuts().end(), Cut{t, *partner});
      r.roots.push_back(static_cast<std::uint32_t>(n_vertices + (it - g.cuts().begin())));
    }
  }

  r.incoming.assign(n_leaves, 0);
  for (LeafIndex l = 0; l < n_leaves; ++l)
    if (f.defined_at(l)) ++r.incoming[f(l)];

  // Bottom-up: children always have larger ids than their parent.
  r.vanished.assign(total, false);
  r.eff.resize(total);
  r.esize.assign(total, 0);
  auto& kind = r.kind;
  auto& left = r.left;
  auto& right = r.right;
  auto& vanished = r.vanished;
  auto& eff = r.eff;
  auto& esize = r.esize;
  auto settle = [&](std::uint32_t x) {
    eff[x] = x;
    if (is_atom(kind[x])) {
      LeafIndex l = forest.vertex(x).leaf;
      if (polarity(kind[x]) == Polarity::Negative) {
        esize[x] = 1;
      } else if (r.incoming[l] == 0) {
        vanished[x] = true;  // only 1 can lack edges once Matching holds
      } else {
        esize[x] = 2 * r.incoming[l] - 1;
      }
      return;
    }
    bool vl = vanished[left[x]], vr = vanished[right[x]];
    if (kind[x] == Kind::Tensor && (vl || vr)) {
      if (vl && vr) {
        vanished[x] = true;
      } else {
        std::uint32_t keep = vl ? right[x] : left[x];
        eff[x] = eff[keep];
        esize[x] = esize[keep];
      }
      return;
    }
    esize[x] = 1 + esize[left[x]] + esize[right[x]];
  };
  for (std::size_t v = n_vertices; v-- > 0;) settle(static_cast<std::uint32_t>(v));
  for (std::size_t c = 0; c < n_cuts; ++c) settle(static_cast<std::uint32_t>(n_vertices + c));

  Switching all_left;
  all_left.choices.assign(forest.par_count(), Side::Left);
  for (std::size_t p = 0; p < forest.par_count(); ++p) {
    VertexId v = forest.par_vertex(p);
    if (vanished[left[v]] || vanished[right[v]]) {
      // Keep the edge away from the unlinked side, which is then cut off.
      SwitchingFailure fail{all_left, "par vertex " + std::to_string(v) +
                                          " has an argument made only of unlinked 1s"};
      fail.switching.choices[p] = vanished[left[v]] ? Side::Right : Side::Left;
      r.failure = std::move(fail);
      return r;
    }
  }
  for (std::uint32_t root : r.roots) {
    if (!vanished[root]) continue;
    if (r.roots.size() == 1) {
      r.lone = true;
    } else {
      r.failure = SwitchingFailure{all_left, "a formula made only of unlinked 1s is disconnected"};
    }
    return r;
  }
  return r;
}

// Hands out copies of each positive leaf to the edges pointing at it.
template <typename Assign>
void assign_copies(const LeafFunction& f, std::size_t n_leaves, CopyOrder order, Assign assign) {
  if (order == CopyOrder::AscendingSource) {
    for (LeafIndex l = 0; l < n_leaves; ++l)
      if (f.defined_at(l)) assign(l);
  } else {
    for (LeafIndex l = static_cast<LeafIndex>(n_leaves); l-- > 0;)
      if (f.defined_at(l)) assign(l);
  }
}

// The link graph of the unit-free structure, built without materialising its
// formulas. Vertex ids follow the same pre-order as reduce_to_unit_free.
LinkGraph direct_link_graph(const Reduction& r, const LeafFunction& f, CopyOrder order) {
  const Forest& forest = r.forest;
  const std::size_t n_leaves = forest.leaf_count();
  std::size_t total = 0;
  for (std::uint32_t root : r.roots) total += r.esize[root];

  LinkGraph graph;
  graph.vertex_count = total;
  graph.edges.reserve(total);
  std::vector<VertexId> new_vertex(n_leaves, kNone);  // negative leaves
  std::vector<VertexId> first_one(n_leaves, kNone);   // positive leaves: first 1 copy

  VertexId next = 0;
  std::vector<std::pair<std::uint32_t, VertexId>> todo;  // (working node, parent id)
  for (std::uint32_t root : r.roots) {
    todo.emplace_back(r.eff[root], kNone);
    while (!todo.empty()) {
      auto [x, parent] = todo.back();
      todo.pop_back();
      VertexId id = next;
      // The parent's edge to this node, unless the parent is a par (its two
      // edges are recorded as a switchable pair below).
      auto attach = [&](VertexId child) {
        if (parent != kNone) graph.edges.push_back(Edge{parent, child});
      };
      if (is_atom(r.kind[x])) {
        LeafIndex l = forest.vertex(x).leaf;
        if (polarity(r.kind[x]) == Polarity::Negative) {
          new_vertex[l] = next++;
          attach(id);
          continue;
        }
        // Left-bracketed tensor of k ones: T(k) .. T(2) then the k ones.
        const std::uint32_t k = r.incoming[l];
        attach(id);
        for (std::uint32_t j = k; j > 2; --j) graph.edges.push_back(Edge{id + (k - j), id + (k - j) + 1});
        VertexId ones = id + (k - 1);
        first_one[l] = ones;
        if (k >= 2) {
          VertexId t2 = id + (k - 2);
          graph.edges.push_back(Edge{t2, ones});
          graph.edges.push_back(Edge{t2, ones + 1});
          for (std::uint32_t j = 3; j <= k; ++j) graph.edges.push_back(Edge{id + (k - j), ones + (j - 1)});
        }
        next += 2 * k - 1;
        continue;
      }
      ++next;
      attach(id);
      VertexId lid = next, rid = next + r.esize[r.eff[r.left[x]]];
      if (r.kind[x] == Kind::Par) {
        graph.pars.push_back(ParLink{id, lid, rid});
        todo.emplace_back(r.eff[r.right[x]], kNone);
        todo.emplace_back(r.eff[r.left[x]], kNone);
      } else {
        todo.emplace_back(r.eff[r.right[x]], id);
        todo.emplace_back(r.eff[r.left[x]], id);
      }
    }
  }

  std::vector<std::uint32_t> used(n_leaves, 0);
  assign_copies(f, n_leaves, order, [&](LeafIndex l) {
    LeafIndex t = f(l);
    graph.edges.push_back(Edge{new_vertex[l], first_one[t] + used[t]++});
  });
  return graph;
}

}  // namespace

std::variant<UnitFreeStructure, SwitchingFailure> reduce_to_unit_free(const LeafFunction& f,
                                                                      const CutSequent& g,
                                                                      CopyOrder order) {
  Reduction r = prepare(f, g);
  if (r.failure) return std::move(*r.failure);
  if (r.lone) {
    UnitFreeStructure lone;
    lone.axioms = LeafFunction::from_targets(lone.sequent, {kNone});
    return lone;
  }
  const Forest& forest = g.forest();
  const std::size_t n_leaves = forest.leaf_count();

  UnitFreeStructure out;
  std::vector<Formula> trees;
  std::vector<LeafIndex> new_leaf(n_leaves, kNone);  // negative leaves
  std::vector<LeafIndex> first_copy(n_leaves, kNone);  // positive leaves
  LeafIndex next_leaf = 0;
  std::vector<std::uint32_t> todo;
  for (std::uint32_t root : r.roots) {
    std::vector<Formula::Node> nodes;
    nodes.reserve(r.esize[root]);
    todo.push_back(r.eff[root]);
    while (!todo.empty()) {
      std::uint32_t x = todo.back();
      todo.pop_back();
      if (is_atom(r.kind[x])) {
        LeafIndex l = forest.vertex(x).leaf;
        if (polarity(r.kind[x]) == Polarity::Negative) {
          nodes.push_back(Formula::Node{Kind::Bot, 1, {}});
          new_leaf[l] = next_leaf++;
        } else {
          emit_ones(nodes, r.incoming[l]);
          first_copy[l] = next_leaf;
          next_leaf += r.incoming[l];
        }
        continue;
      }
      nodes.push_back(Formula::Node{r.kind[x], r.esize[x], {}});
      if (r.kind[x] == Kind::Par) out.par_origin.push_back(forest.vertex(x).par);
      todo.push_back(r.eff[r.right[x]]);
      todo.push_back(r.eff[r.left[x]]);
    }
    trees.push_back(Formula::from_nodes(std::move(nodes)));
  }
  out.sequent = CutSequent(std::move(trees));

  std::vector<LeafIndex> targets(next_leaf, kNone);
  std::vector<std::uint32_t> used(n_leaves, 0);
  assign_copies(f, n_leaves, order, [&](LeafIndex l) {
    LeafIndex t = f(l);
    targets[new_leaf[l]] = first_copy[t] + used[t]++;
  });
  out.axioms = LeafFunction::from_targets(out.sequent, std::move(targets));
  return out;
}

LinkGraph structure_link_graph(const UnitFreeStructure& s) {
  return net_link_graph(s.axioms, s.sequent);
}

Verdict check_contractible(const UnitFreeStructure& s) {
  LinkGraph graph = structure_link_graph(s);
  if (contract(graph)) return Verdict{true, std::nullopt};
  return Verdict{false, switching_witness(graph, find_failing_switching(graph))};
}

Verdict check_fast(const LeafFunction& f, const CutSequent& g, CopyOrder order) {
  if (auto why = matching_defect(f, g)) {
    Witness w;
    w.kind = Witness::Kind::Matching;
    w.detail = *why;
    return Verdict{false, std::move(w)};
  }
  {
    // Verdict straight from the reduction; the witness path below rebuilds
    // the structure with its par bookkeeping.
    Reduction r = prepare(f, g);
    if (r.lone) return Verdict{true, std::nullopt};
    if (!r.failure && contract(direct_link_graph(r, f, order))) return Verdict{true, std::nullopt};
  }
  auto reduced = reduce_to_unit_free(f, g, order);
  if (auto* fail = std::get_if<SwitchingFailure>(&reduced)) {
    Witness w = switching_witness(net_link_graph(f, g), fail->switching);
    w.detail = fail->detail;
    return Verdict{false, std::move(w)};
  }
  const UnitFreeStructure& s = std::get<UnitFreeStructure>(reduced);
  LinkGraph graph = structure_link_graph(s);
  if (contract(graph)) return Verdict{true, std::nullopt};

  Switching local = find_failing_switching(graph);
  Switching original;
  original.choices.assign(g.par_count(), Side::Left);
  for (std::size_t k = 0; k < local.choices.size(); ++k)
    original.choices[s.par_origin[k]] = local.choices[k];
  return Verdict{false, switching_witness(net_link_graph(f, g), original)};
}

ConvertedNet old_to_new(const OldNet& o) {
  const CutSequent& g = o.sequent;
  const Forest& forest = g.forest();
  const std::size_t n_leaves = forest.leaf_count();
  const std::size_t n_vertices = forest.vertex_count();

  std::vector<VertexId> target(n_leaves, kNone);
  auto link = [&](LeafIndex from, VertexId to) {
    if (target[from] != kNone)
      throw PreconditionError("leaf " + std::to_string(from) + " has two outgoing links");
    target[from] = to;
  };

  std::vector<bool> in_axiom(n_leaves, false);
  for (auto [a, b] : o.axioms) {
    if (a >= n_leaves || b >= n_leaves) throw PreconditionError("axiom leaf out of range");
    if (in_axiom[a] || in_axiom[b])
      throw PreconditionError("leaf occurs in two axiom links");
    in_axiom[a] = in_axiom[b] = true;
    if (forest.leaf_polarity(a) == Polarity::Negative) std::swap(a, b);
    Atom pa = forest.leaf_atom(a), nb = forest.leaf_atom(b);
    if (pa.kind != dual(nb.kind) || pa.name != nb.name || polarity(pa.kind) != Polarity::Positive)
      throw PreconditionError("axiom link joins non-complementary leaves");
    link(b, forest.leaf_vertex(a));
  }
  for (auto [l, v] : o.jumps) {
    if (l >= n_leaves || v >= n_vertices) throw PreconditionError("jump endpoint out of range");
    if (forest.leaf_kind(l) != Kind::Bot) {
      if (forest.leaf_kind(l) != Kind::DualVar)
        throw PreconditionError("jump source " + std::to_string(l) + " is not negative");
      if (!is_atom(forest.vertex(v).kind))
        throw PreconditionError("literal leaf " + std::to_string(l) + " targets a compound");
    }
    link(l, v);
  }
  std::vector<bool> marked(n_vertices, false);
  for (LeafIndex l = 0; l < n_leaves; ++l) {
    if (forest.leaf_polarity(l) == Polarity::Positive) continue;
    if (target[l] == kNone) throw PreconditionError("negative leaf " + std::to_string(l) + " has no link");
    const Forest::Vertex& t = forest.vertex(target[l]);
    if (!is_atom(t.kind) || polarity(t.kind) == Polarity::Negative) marked[target[l]] = true;
  }

  std::vector<bool> tree_marked(forest.trees().size(), false);
  for (VertexId v = 0; v < n_vertices; ++v)
    if (marked[v]) tree_marked[forest.vertex(v).tree] = true;

  // Sizes after wrapping every marked subformula A as A * 1.
  std::vector<std::uint32_t> wrapped(n_vertices, 0);
  for (VertexId v = static_cast<VertexId>(n_vertices); v-- > 0;) {
    const Forest::Vertex& x = forest.vertex(v);
    std::uint32_t own = is_atom(x.kind) ? 1 : 1 + wrapped[x.left] + wrapped[x.right];
    wrapped[v] = own + (marked[v] ? 2 : 0);
  }

  std::vector<LeafIndex> new_leaf(n_leaves, kNone);
  std::vector<LeafIndex> new_one(n_vertices, kNone);
  LeafIndex next_leaf = 0;
  auto emit_tree = [&](std::vector<Formula::Node>& nodes, VertexId root) {
    constexpr std::uint32_t kAfter = 1U << 31;
    std::vector<std::uint32_t> todo{root};
    while (!todo.empty()) {
      std::uint32_t item = todo.back();
      todo.pop_back();
      if (item & kAfter) {
        nodes.push_back(Formula::Node{Kind::One, 1, {}});
        new_one[item & ~kAfter] = next_leaf++;
        continue;
      }
      const Forest::Vertex& x = forest.vertex(item);
      const Formula::Node& src = forest.trees()[x.tree].nodes()[x.offset];
      if (marked[item]) {
        nodes.push_back(Formula::Node{Kind::Tensor, wrapped[item], {}});
        todo.push_back(item | kAfter);
      }
      nodes.push_back(Formula::Node{x.kind, wrapped[item] - (marked[item] ? 2 : 0), src.name});
      if (is_atom(x.kind)) {
        new_leaf[x.leaf] = next_leaf++;
      } else {
        todo.push_back(x.right);
        todo.push_back(x.left);
      }
    }
  };

  std::vector<Formula> trees;
  std::vector<std::size_t> new_index(forest.trees().size(), kNone);
  std::vector<Cut> cuts;
  for (std::size_t t = 0; t < forest.trees().size(); ++t) {
    auto partner = forest.cut_partner(t);
    std::vector<Formula::Node> nodes;
    if (partner && (tree_marked[t] || tree_marked[*partner])) {
      if (*partner < t) continue;  // already merged into its partner's slot
      VertexId a = forest.tree_root(t), b = forest.tree_root(*partner);
      nodes.push_back(Formula::Node{Kind::Tensor, 1 + wrapped[a] + wrapped[b], {}});
      emit_tree(nodes, a);
      emit_tree(nodes, b);
    } else {
      emit_tree(nodes, forest.tree_root(t));
      new_index[t] = trees.size();
    }
    trees.push_back(Formula::from_nodes(std::move(nodes)));
  }
  for (const Cut& c : g.cuts())
    if (new_index[c.first] != kNone) cuts.push_back(Cut{new_index[c.first], new_index[c.second]});

  CutSequent sequent(std::move(trees), std::move(cuts));
  std::vector<LeafIndex> targets(next_leaf, kNone);
  for (LeafIndex l = 0; l < n_leaves; ++l) {
    if (forest.leaf_polarity(l) == Polarity::Positive) continue;
    VertexId t = target[l];
    targets[new_leaf[l]] = marked[t] ? new_one[t] : new_leaf[forest.vertex(t).leaf];
  }
  LeafFunction function = LeafFunction::from_targets(sequent, std::move(targets));
  return ConvertedNet{std::move(sequent), std::move(function)};
}

Verdict check_old_net(const OldNet& o) {
  ConvertedNet c = old_to_new(o);
  return check_fast(c.function, c.sequent);
}

ProofNet ProofNet::make(CutSequent sequent, LeafFunction function) {
  Verdict v = check_fast(function, sequent);
  if (!v.valid) throw NotAProofNet(std::move(*v.witness));
  return ProofNet(std::move(sequent), std::move(function));
}

ProofNet ProofNet::make(CutSequent sequent, const std::vector<LeafEdge>& edges) {
  LeafFunction f = LeafFunction::from_edges(sequent, edges);
  return make(std::move(sequent), std::move(f));
}

ProofNet ProofNet::assume_valid(CutSequent sequent, LeafFunction function) {
  return ProofNet(std::move(sequent), std::move(function));
}

}  // namespace mll
