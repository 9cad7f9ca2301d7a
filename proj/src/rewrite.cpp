#include "mll/rewrite.hpp"

#include <algorithm>

namespace mll {

namespace {

// Keeps the leaves for which `keep` holds and renumbers them densely.
LeafFunction restrict_function(const CutSequent& result, const std::vector<bool>& keep,
                               const std::vector<LeafIndex>& targets) {
  std::vector<LeafIndex> renumber(keep.size(), kNone);
  LeafIndex next = 0;
  for (LeafIndex l = 0; l < keep.size(); ++l)
    if (keep[l]) renumber[l] = next++;
  std::vector<LeafIndex> out(next, kNone);
  for (LeafIndex l = 0; l < keep.size(); ++l) {
    if (!keep[l] || targets[l] == kNone) continue;
    out[renumber[l]] = renumber[targets[l]];
  }
  return LeafFunction::from_targets(result, std::move(out));
}

}  // namespace

CutElimination eliminate_cut(const LeafFunction& f, const CutSequent& g, std::size_t cut) {
  if (cut >= g.cuts().size()) throw PreconditionError("no cut with id " + std::to_string(cut));
  const Forest& forest = g.forest();
  const Cut c = g.cuts()[cut];
  const std::vector<Formula>& trees = g.trees();
  EliminationStep step{cut, c, trees[c.first], EliminationStep::Case::Atom};

  if (trees[c.first].is_atom()) {
    LeafIndex a = forest.first_leaf(c.first), b = forest.first_leaf(c.second);
    if (forest.leaf_polarity(a) == Polarity::Negative) std::swap(a, b);
    LeafIndex through = f(b);
    if (through == a)
      throw PreconditionError("atomic cut whose negative side points back across the cut");
    std::vector<LeafIndex> targets = f.targets();
    for (LeafIndex& t : targets)
      if (t == a) t = through;
    std::vector<bool> keep(forest.leaf_count(), true);
    keep[a] = keep[b] = false;

    std::vector<Formula> rest;
    std::vector<std::size_t> index(trees.size(), kNone);
    for (std::size_t t = 0; t < trees.size(); ++t) {
      if (t == c.first || t == c.second) continue;
      index[t] = rest.size();
      rest.push_back(trees[t]);
    }
    std::vector<Cut> cuts;
    for (const Cut& other : g.cuts())
      if (other != c) cuts.push_back(Cut{index[other.first], index[other.second]});
    CutSequent result(std::move(rest), std::move(cuts));
    LeafFunction function = restrict_function(result, keep, targets);
    return CutElimination{std::move(result), std::move(function), step};
  }

  step.kind = EliminationStep::Case::Compound;
  // Tree t moves to index[t]; a split tree also occupies index[t] + 1.
  std::vector<Formula> split;
  std::vector<std::size_t> index(trees.size());
  for (std::size_t t = 0; t < trees.size(); ++t) {
    index[t] = split.size();
    if (t == c.first || t == c.second) {
      split.push_back(trees[t].left());
      split.push_back(trees[t].right());
    } else {
      split.push_back(trees[t]);
    }
  }
  std::vector<Cut> cuts;
  for (const Cut& other : g.cuts()) {
    if (other == c) {
      cuts.push_back(Cut{index[c.first], index[c.second]});
      cuts.push_back(Cut{index[c.first] + 1, index[c.second] + 1});
    } else {
      cuts.push_back(Cut{index[other.first], index[other.second]});
    }
  }
  CutSequent result(std::move(split), std::move(cuts));
  LeafFunction function = LeafFunction::from_targets(result, f.targets());
  return CutElimination{std::move(result), std::move(function), step};
}

ProofNet eliminate_cut(const ProofNet& net, std::size_t cut) {
  CutElimination e = eliminate_cut(net.function(), net.sequent(), cut);
  return ProofNet::assume_valid(std::move(e.sequent), std::move(e.function));
}

Normalisation normalize_stepwise(const ProofNet& net) {
  Normalisation out{net, {}};
  while (!out.net.sequent().cuts().empty()) {
    CutElimination e = eliminate_cut(out.net.function(), out.net.sequent(), 0);
    out.trace.push_back(std::move(e.step));
    out.net = ProofNet::assume_valid(std::move(e.sequent), std::move(e.function));
  }
  return out;
}

NormalForm turbo_normalize(const LeafFunction& f, const CutSequent& g) {
  const Forest& forest = g.forest();
  const std::size_t n = forest.leaf_count();
  std::vector<bool> in_cut(n, false), keep(n, true);
  for (LeafIndex l = 0; l < n; ++l) {
    if (forest.cut_partner(forest.tree_of_leaf(l))) {
      in_cut[l] = true;
      keep[l] = false;
    }
  }

  // exit[t] for a positive leaf t inside a cut pair: where the chain entering
  // t finally leaves the cut region.
  enum : std::uint8_t { kFresh, kOpen, kDone };
  std::vector<std::uint8_t> state(n, kFresh);
  std::vector<LeafIndex> exit(n, kNone);
  std::vector<LeafIndex> path;
  auto resolve = [&](LeafIndex start, LeafIndex t) {
    path.clear();
    while (in_cut[t] && state[t] != kDone) {
      if (state[t] == kOpen) throw CyclicChain(start);
      state[t] = kOpen;
      path.push_back(t);
      t = f(dual_leaf(g, t));
    }
    LeafIndex end = in_cut[t] ? exit[t] : t;
    for (LeafIndex p : path) {
      exit[p] = end;
      state[p] = kDone;
    }
    return end;
  };

  std::vector<LeafIndex> targets(n, kNone);
  for (LeafIndex l = 0; l < n; ++l)
    if (keep[l] && f.defined_at(l)) targets[l] = resolve(l, f(l));

  std::vector<Formula> survivors;
  for (std::size_t t = 0; t < g.trees().size(); ++t)
    if (!forest.cut_partner(t)) survivors.push_back(g.trees()[t]);
  CutSequent result(std::move(survivors));
  LeafFunction function = restrict_function(result, keep, targets);
  return NormalForm{std::move(result), std::move(function)};
}

ProofNet turbo_normalize(const ProofNet& net) {
  NormalForm nf = turbo_normalize(net.function(), net.sequent());
  return ProofNet::assume_valid(std::move(nf.sequent), std::move(nf.function));
}

}  // namespace mll
