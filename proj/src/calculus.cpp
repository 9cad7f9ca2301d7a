#include "mll/calculus.hpp"

#include <algorithm>
#include <deque>

namespace mll {

const char* rule_name(Rule r) noexcept {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::One: return "one";
    case Rule::Bot: return "bot";
    case Rule::Tensor: return "tensor";
    case Rule::Par: return "par";
    case Rule::Cut: return "cut";
  }
  return "?";
}

namespace {

std::size_t arity(Rule r) {
  switch (r) {
    case Rule::Ax:
    case Rule::One: return 0;
    case Rule::Bot:
    case Rule::Par: return 1;
    default: return 2;
  }
}

std::string child_path(const std::string& path, std::size_t k) {
  return path.empty() ? std::to_string(k) : path + "." + std::to_string(k);
}

std::vector<Polarity> leaf_polarities(const std::vector<Formula>& fs) {
  std::vector<Polarity> out;
  for (const Formula& f : fs)
    for (const Formula::Node& n : f.nodes())
      if (is_atom(n.kind)) out.push_back(polarity(n.kind));
  return out;
}

}  // namespace

std::vector<Slot> default_layout(Rule rule, const std::vector<Proof>& premises,
                                 const std::vector<std::size_t>& pos) {
  std::vector<Slot> out;
  auto size = [&](std::size_t p) { return p < premises.size() ? premises[p].conclusion.size() : 0; };
  std::size_t i = pos.size() > 0 ? pos[0] : kNone;
  std::size_t j = pos.size() > 1 ? pos[1] : kNone;
  switch (rule) {
    case Rule::Ax:
    case Rule::One: break;
    case Rule::Bot:
      for (std::size_t k = 0; k < size(0); ++k) out.push_back(Slot{0, k});
      out.push_back(Slot{});
      break;
    case Rule::Par:
      for (std::size_t k = 0; k < size(0); ++k) {
        if (k == i) out.push_back(Slot{});
        else if (k != j) out.push_back(Slot{0, k});
      }
      break;
    case Rule::Tensor:
    case Rule::Cut:
      for (std::size_t k = 0; k < size(0); ++k) {
        if (k != i) out.push_back(Slot{0, k});
        else if (rule == Rule::Tensor) out.push_back(Slot{});
      }
      for (std::size_t k = 0; k < size(1); ++k)
        if (k != j) out.push_back(Slot{1, k});
      break;
  }
  return out;
}

std::vector<Formula> derive_conclusion(const Proof& p, const std::string& path) {
  auto fail = [&](const std::string& why) { throw RuleViolation(path, p.rule, why); };
  if (p.premises.size() != arity(p.rule))
    fail("expected " + std::to_string(arity(p.rule)) + " premises, got " +
         std::to_string(p.premises.size()));

  if (p.rule == Rule::Ax) {
    const auto& c = p.conclusion;
    bool ok = c.size() == 2 && c[0].is_atom() && c[1].is_atom() &&
              ((c[0].kind() == Kind::Var && c[1].kind() == Kind::DualVar) ||
               (c[0].kind() == Kind::DualVar && c[1].kind() == Kind::Var)) &&
              c[0].name() == c[1].name();
    if (!ok) fail("conclusion must be a variable and its dual");
    return c;
  }
  if (p.rule == Rule::One) return {Formula::one()};

  const std::size_t want_pos = p.rule == Rule::Bot ? 0 : 2;
  if (p.pos.size() != want_pos) fail("expected " + std::to_string(want_pos) + " positions");

  std::optional<Formula> principal;
  std::vector<std::vector<bool>> consumed;
  for (const Proof& q : p.premises) consumed.emplace_back(q.conclusion.size(), false);
  auto premise_formula = [&](std::size_t premise, std::size_t index) -> const Formula& {
    if (index >= p.premises[premise].conclusion.size())
      fail("position " + std::to_string(index) + " outside premise " + std::to_string(premise));
    return p.premises[premise].conclusion[index];
  };

  switch (p.rule) {
    case Rule::Bot: principal = Formula::bot(); break;
    case Rule::Par: {
      if (p.pos[0] == p.pos[1]) fail("par joins a formula with itself");
      principal = Formula::par(premise_formula(0, p.pos[0]), premise_formula(0, p.pos[1]));
      consumed[0][p.pos[0]] = consumed[0][p.pos[1]] = true;
      break;
    }
    case Rule::Tensor:
      principal = Formula::tensor(premise_formula(0, p.pos[0]), premise_formula(1, p.pos[1]));
      consumed[0][p.pos[0]] = consumed[1][p.pos[1]] = true;
      break;
    case Rule::Cut:
      if (premise_formula(1, p.pos[1]) != negate(premise_formula(0, p.pos[0])))
        fail("cut formulas are not dual");
      consumed[0][p.pos[0]] = consumed[1][p.pos[1]] = true;
      break;
    default: break;
  }

  std::vector<Formula> out;
  bool principal_used = false;
  for (const Slot& s : p.layout) {
    if (s.premise == Slot::kPrincipal) {
      if (!principal) fail("layout names a principal formula but the rule has none");
      if (principal_used) fail("layout uses the principal formula twice");
      principal_used = true;
      out.push_back(*principal);
      continue;
    }
    if (s.premise < 0 || static_cast<std::size_t>(s.premise) >= p.premises.size())
      fail("layout refers to a missing premise");
    const Formula& f = premise_formula(static_cast<std::size_t>(s.premise), s.index);
    if (consumed[s.premise][s.index]) fail("layout reuses premise formula " + std::to_string(s.index));
    consumed[s.premise][s.index] = true;
    out.push_back(f);
  }
  if (principal && !principal_used) fail("layout omits the principal formula");
  for (std::size_t q = 0; q < consumed.size(); ++q)
    for (std::size_t k = 0; k < consumed[q].size(); ++k)
      if (!consumed[q][k]) fail("layout drops formula " + std::to_string(k) + " of premise " + std::to_string(q));
  return out;
}

namespace {

void check_node(const Proof& p, const std::string& path) {
  for (std::size_t k = 0; k < p.premises.size(); ++k) check_node(p.premises[k], child_path(path, k));
  auto fail = [&](const std::string& why) { throw RuleViolation(path, p.rule, why); };
  std::vector<Formula> derived = derive_conclusion(p, path);
  if (derived != p.conclusion) fail("stated conclusion differs from the one the rule derives");
  if (p.conclusion.empty()) fail("empty conclusion");
  if (p.rule != Rule::Bot) {
    if (p.mark) fail("only bot rules carry a mark");
    return;
  }
  std::vector<Polarity> leaves = leaf_polarities(p.conclusion);
  if (p.mark) {
    if (*p.mark >= leaves.size()) fail("mark out of range");
    if (leaves[*p.mark] != Polarity::Positive) fail("mark is not a positive leaf");
  } else {
    auto positives = std::count(leaves.begin(), leaves.end(), Polarity::Positive);
    if (positives != 1) fail("mark omitted but the conclusion has " + std::to_string(positives) + " positive leaves");
  }
}

}  // namespace

void check_proof(const Proof& p) { check_node(p, ""); }

bool has_positive_atom(const std::vector<Formula>& sequent) {
  for (const Formula& f : sequent)
    for (const Formula::Node& n : f.nodes())
      if (is_atom(n.kind) && polarity(n.kind) == Polarity::Positive) return true;
  return false;
}

namespace {

struct Translation {
  std::vector<LeafIndex> target;  // by abstract leaf id
  std::vector<bool> positive;
  struct CutPair {
    Formula formula;
    std::vector<std::uint32_t> left, right;
  };
  std::vector<CutPair> cuts;

  std::uint32_t fresh(bool pos) {
    target.push_back(kNone);
    positive.push_back(pos);
    return static_cast<std::uint32_t>(target.size() - 1);
  }

  // Leaf ids of each conclusion formula.
  using Ids = std::vector<std::vector<std::uint32_t>>;

  Ids run(const Proof& p) {
    switch (p.rule) {
      case Rule::Ax: {
        bool var_first = p.conclusion[0].kind() == Kind::Var;
        std::uint32_t a = fresh(var_first), b = fresh(!var_first);
        if (var_first) target[b] = a;
        else target[a] = b;
        return {{a}, {b}};
      }
      case Rule::One: return {{fresh(true)}};
      default: break;
    }
    std::vector<Ids> prem;
    for (const Proof& q : p.premises) prem.push_back(run(q));

    std::vector<std::uint32_t> principal;
    std::uint32_t new_bot = kNone;
    if (p.rule == Rule::Bot) {
      new_bot = fresh(false);
      principal = {new_bot};
    } else if (p.rule == Rule::Par) {
      principal = prem[0][p.pos[0]];
      principal.insert(principal.end(), prem[0][p.pos[1]].begin(), prem[0][p.pos[1]].end());
    } else if (p.rule == Rule::Tensor) {
      principal = prem[0][p.pos[0]];
      principal.insert(principal.end(), prem[1][p.pos[1]].begin(), prem[1][p.pos[1]].end());
    } else {
      cuts.push_back(CutPair{p.premises[0].conclusion[p.pos[0]], prem[0][p.pos[0]], prem[1][p.pos[1]]});
    }

    Ids out;
    for (const Slot& s : p.layout)
      out.push_back(s.premise == Slot::kPrincipal ? principal : prem[s.premise][s.index]);

    if (p.rule == Rule::Bot) {
      std::vector<std::uint32_t> flat;
      for (const auto& ids : out) flat.insert(flat.end(), ids.begin(), ids.end());
      std::uint32_t to = kNone;
      if (p.mark) {
        to = flat[*p.mark];
      } else {
        for (std::uint32_t id : flat)
          if (positive[id]) to = id;
      }
      target[new_bot] = to;
    }
    return out;
  }
};

}  // namespace

ProofNet translate(const Proof& p) {
  check_proof(p);
  Translation t;
  Translation::Ids ids = t.run(p);

  std::vector<Formula> trees = p.conclusion;
  std::vector<std::uint32_t> order;
  for (const auto& f : ids) order.insert(order.end(), f.begin(), f.end());
  std::vector<Cut> cuts;
  for (const auto& c : t.cuts) {
    cuts.push_back(Cut{trees.size(), trees.size() + 1});
    trees.push_back(c.formula);
    trees.push_back(negate(c.formula));
    order.insert(order.end(), c.left.begin(), c.left.end());
    order.insert(order.end(), c.right.begin(), c.right.end());
  }
  std::vector<LeafIndex> index(t.target.size(), kNone);
  for (LeafIndex k = 0; k < order.size(); ++k) index[order[k]] = k;
  std::vector<LeafIndex> targets(order.size(), kNone);
  for (std::uint32_t id = 0; id < t.target.size(); ++id)
    if (t.target[id] != kNone) targets[index[id]] = index[t.target[id]];

  CutSequent g(std::move(trees), std::move(cuts));
  LeafFunction f = LeafFunction::from_targets(g, std::move(targets));
  return ProofNet::assume_valid(std::move(g), std::move(f));
}

namespace {

class Sequentializer {
 public:
  explicit Sequentializer(const ProofNet& net)
      : g_(net.sequent()), forest_(g_.forest()), f_(net.function()) {
    const std::size_t n = forest_.vertex_count();
    adj_.resize(n);
    stamp_.assign(n, 0);
    for (VertexId v = 0; v < n; ++v) {
      const Forest::Vertex& x = forest_.vertex(v);
      if (!is_atom(x.kind)) {
        link(v, x.left);
        link(v, x.right);
      }
    }
    for (LeafIndex l = 0; l < forest_.leaf_count(); ++l)
      if (f_.defined_at(l)) link(forest_.leaf_vertex(l), forest_.leaf_vertex(f_(l)));
    for (const Cut& c : g_.cuts()) link(forest_.tree_root(c.first), forest_.tree_root(c.second));
  }

  Proof run() {
    std::vector<Entry> state;
    for (std::size_t t = 0; t < g_.trees().size(); ++t) {
      auto partner = forest_.cut_partner(t);
      if (!partner) state.push_back(Entry{false, forest_.tree_root(t), kNone});
      else if (t < *partner)
        state.push_back(Entry{true, forest_.tree_root(t), forest_.tree_root(*partner)});
    }
    return build(state);
  }

 private:
  struct Entry {
    bool cut;
    VertexId a;
    VertexId b;  // cut partner root
  };

  void link(VertexId u, VertexId v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  Formula formula(VertexId v) const {
    const Forest::Vertex& x = forest_.vertex(v);
    return g_.trees()[x.tree].subformula(x.offset);
  }

  std::vector<Formula> conclusion(const std::vector<Entry>& state) const {
    std::vector<Formula> out;
    for (const Entry& e : state)
      if (!e.cut) out.push_back(formula(e.a));
    return out;
  }

  // Conclusion leaf index of the leaf at vertex `target`, or kNone when it
  // sits in a cut tree.
  LeafIndex conclusion_leaf(const std::vector<Entry>& state, VertexId target) const {
    LeafIndex offset = 0;
    const LeafIndex want = forest_.vertex(target).leaf;
    for (const Entry& e : state) {
      if (e.cut) continue;
      const Forest::Vertex& x = forest_.vertex(e.a);
      LeafIndex first = first_leaf_below(e.a);
      LeafIndex count = static_cast<LeafIndex>(g_.trees()[x.tree].nodes()[x.offset].size + 1) / 2;
      if (want >= first && want < first + count) return offset + (want - first);
      offset += count;
    }
    return kNone;
  }

  LeafIndex first_leaf_below(VertexId v) const {
    while (!is_atom(forest_.vertex(v).kind)) v = forest_.vertex(v).left;
    return forest_.vertex(v).leaf;
  }

  void mark_state(const std::vector<Entry>& state) {
    ++current_;
    std::vector<VertexId> todo;
    for (const Entry& e : state) {
      todo.push_back(e.a);
      if (e.cut) todo.push_back(e.b);
    }
    while (!todo.empty()) {
      VertexId v = todo.back();
      todo.pop_back();
      stamp_[v] = current_;
      const Forest::Vertex& x = forest_.vertex(v);
      if (!is_atom(x.kind)) {
        todo.push_back(x.left);
        todo.push_back(x.right);
      }
    }
  }

  // Vertices reachable from `from` inside the marked state, never entering
  // `removed` and never crossing the edge from-side `cut_a`-`cut_b`.
  std::vector<bool> reach(VertexId from, VertexId removed, VertexId cut_a, VertexId cut_b) {
    std::vector<bool> seen(adj_.size(), false);
    std::deque<VertexId> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId w : adj_[v]) {
        if (seen[w] || w == removed || stamp_[w] != current_) continue;
        if ((v == cut_a && w == cut_b) || (v == cut_b && w == cut_a)) continue;
        seen[w] = true;
        queue.push_back(w);
      }
    }
    return seen;
  }

  static std::vector<Slot> shifted_layout(std::size_t n, std::size_t at) {
    std::vector<Slot> layout;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == at) layout.push_back(Slot{});
      else layout.push_back(Slot{0, k < at ? k : k - 1});
    }
    return layout;
  }

  Proof build(std::vector<Entry> state) {
    std::vector<Formula> concl = conclusion(state);

    // Root pars.
    for (std::size_t k = 0, i = 0; k < state.size(); ++k) {
      if (state[k].cut) continue;
      const Forest::Vertex& x = forest_.vertex(state[k].a);
      if (x.kind == Kind::Par) {
        std::vector<Entry> next = state;
        next[k] = Entry{false, x.left, kNone};
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(k) + 1, Entry{false, x.right, kNone});
        std::vector<Slot> layout;
        for (std::size_t c = 0; c < concl.size(); ++c) {
          if (c == i) layout.push_back(Slot{});
          else layout.push_back(Slot{0, c < i ? c : c + 1});
        }
        return make_par(build(std::move(next)), i, i + 1, std::move(layout));
      }
      ++i;
    }
    // Root bots. One jumping into a cut tree waits until that cut is split;
    // its jump edge then carries it to the right side.
    for (std::size_t k = 0, i = 0; k < state.size(); ++k) {
      if (state[k].cut) continue;
      const Forest::Vertex& x = forest_.vertex(state[k].a);
      if (x.kind == Kind::Bot) {
        VertexId to = forest_.leaf_vertex(f_(x.leaf));
        LeafIndex mark = conclusion_leaf(state, to);
        if (mark != kNone) {
          std::vector<Entry> next = state;
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(k));
          return make_bot(build(std::move(next)), mark, shifted_layout(concl.size(), i));
        }
      }
      ++i;
    }
    // Axioms.
    if (state.size() == 1 && !state[0].cut && forest_.vertex(state[0].a).kind == Kind::One)
      return make_one();
    if (state.size() == 2 && !state[0].cut && !state[1].cut) {
      Kind k0 = forest_.vertex(state[0].a).kind, k1 = forest_.vertex(state[1].a).kind;
      if (k0 == Kind::Var && k1 == Kind::DualVar) return make_ax(concl[0].name(), true);
      if (k0 == Kind::DualVar && k1 == Kind::Var) return make_ax(concl[0].name(), false);
    }
    // Splitting tensor or cut.
    mark_state(state);
    for (std::size_t k = 0; k < state.size(); ++k) {
      const Entry& e = state[k];
      VertexId left, right, removed = kNone, ca = kNone, cb = kNone;
      if (e.cut) {
        left = e.a;
        right = e.b;
        ca = e.a;
        cb = e.b;
      } else {
        const Forest::Vertex& x = forest_.vertex(e.a);
        if (x.kind != Kind::Tensor) continue;
        left = x.left;
        right = x.right;
        removed = e.a;
      }
      std::vector<bool> side = reach(left, removed, ca, cb);
      if (side[right]) continue;
      return split(state, k, left, right, side);
    }
    throw PreconditionError("sequentialisation found no splitting tensor");
  }

  Proof split(const std::vector<Entry>& state, std::size_t k, VertexId left, VertexId right,
              const std::vector<bool>& side) {
    std::vector<Entry> part[2];
    std::vector<Slot> layout;
    std::size_t pos[2] = {0, 0};
    for (std::size_t c = 0; c < state.size(); ++c) {
      if (c == k) {
        pos[0] = conclusion_size(part[0]);
        pos[1] = conclusion_size(part[1]);
        part[0].push_back(Entry{false, left, kNone});
        part[1].push_back(Entry{false, right, kNone});
        if (!state[c].cut) layout.push_back(Slot{});
        continue;
      }
      int p = side[state[c].a] ? 0 : 1;
      if (!state[c].cut) layout.push_back(Slot{p, conclusion_size(part[p])});
      part[p].push_back(state[c]);
    }
    Proof l = build(std::move(part[0]));
    Proof r = build(std::move(part[1]));
    if (state[k].cut) return make_cut(std::move(l), std::move(r), pos[0], pos[1], std::move(layout));
    return make_tensor(std::move(l), std::move(r), pos[0], pos[1], std::move(layout));
  }

  static std::size_t conclusion_size(const std::vector<Entry>& part) {
    std::size_t n = 0;
    for (const Entry& e : part) n += !e.cut;
    return n;
  }

  const CutSequent& g_;
  const Forest& forest_;
  const LeafFunction& f_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t current_ = 0;
};

}  // namespace

Proof sequentialize(const ProofNet& net) {
  Verdict v = check_fast(net.function(), net.sequent());
  if (!v.valid) throw NotAProofNet(std::move(*v.witness));
  return Sequentializer(net).run();
}

namespace {

Proof finish(Proof p) {
  p.conclusion = derive_conclusion(p);
  return p;
}

}  // namespace

Proof make_ax(const std::string& var, bool positive_first) {
  Proof p;
  p.rule = Rule::Ax;
  p.conclusion = positive_first ? std::vector<Formula>{Formula::var(var), Formula::dual_var(var)}
                                : std::vector<Formula>{Formula::dual_var(var), Formula::var(var)};
  return p;
}

Proof make_one() {
  Proof p;
  p.rule = Rule::One;
  p.conclusion = {Formula::one()};
  return p;
}

Proof make_bot(Proof premise, std::optional<LeafIndex> mark, std::optional<std::vector<Slot>> layout) {
  Proof p;
  p.rule = Rule::Bot;
  p.premises.push_back(std::move(premise));
  p.layout = layout ? std::move(*layout) : default_layout(Rule::Bot, p.premises, p.pos);
  p.mark = mark;
  return finish(std::move(p));
}

Proof make_par(Proof premise, std::size_t i, std::size_t j, std::optional<std::vector<Slot>> layout) {
  Proof p;
  p.rule = Rule::Par;
  p.premises.push_back(std::move(premise));
  p.pos = {i, j};
  p.layout = layout ? std::move(*layout) : default_layout(Rule::Par, p.premises, p.pos);
  return finish(std::move(p));
}

Proof make_tensor(Proof left, Proof right, std::size_t i, std::size_t j,
                  std::optional<std::vector<Slot>> layout) {
  Proof p;
  p.rule = Rule::Tensor;
  p.premises.push_back(std::move(left));
  p.premises.push_back(std::move(right));
  p.pos = {i, j};
  p.layout = layout ? std::move(*layout) : default_layout(Rule::Tensor, p.premises, p.pos);
  return finish(std::move(p));
}

Proof make_cut(Proof left, Proof right, std::size_t i, std::size_t j,
               std::optional<std::vector<Slot>> layout) {
  Proof p;
  p.rule = Rule::Cut;
  p.premises.push_back(std::move(left));
  p.premises.push_back(std::move(right));
  p.pos = {i, j};
  p.layout = layout ? std::move(*layout) : default_layout(Rule::Cut, p.premises, p.pos);
  return finish(std::move(p));
}

}  // namespace mll
