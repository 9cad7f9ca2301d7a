#include "mll/category.hpp"

#include "mll/rewrite.hpp"

namespace mll {

NetMorphism::NetMorphism(Formula source, Formula target, ProofNet net)
    : source_(std::move(source)), target_(std::move(target)), net_(std::move(net)) {
  const CutSequent& g = net_.sequent();
  if (!g.cuts().empty() || g.trees().size() != 2 || g.trees()[0] != negate(source_) ||
      g.trees()[1] != target_)
    throw PreconditionError("morphism net must live on [negate(source), target] without cuts");
}

NetMorphism NetMorphism::make(Formula source, Formula target, const std::vector<LeafEdge>& edges) {
  CutSequent g({negate(source), target});
  ProofNet net = ProofNet::make(std::move(g), edges);
  return NetMorphism(std::move(source), std::move(target), std::move(net));
}

NetMorphism identity_net(const Formula& a) {
  CutSequent g({negate(a), a});
  const LeafIndex n = static_cast<LeafIndex>(a.leaf_count());
  std::vector<LeafIndex> targets(2 * n, kNone);
  for (LeafIndex i = 0; i < n; ++i) {
    if (g.forest().leaf_polarity(i) == Polarity::Negative)
      targets[i] = n + i;
    else
      targets[n + i] = i;
  }
  LeafFunction f = LeafFunction::from_targets(g, std::move(targets));
  return NetMorphism(a, a, ProofNet::assume_valid(std::move(g), std::move(f)));
}

NetMorphism compose_nets(const NetMorphism& f, const NetMorphism& g) {
  if (f.target() != g.source()) throw PreconditionError("composition: target and source differ");
  const LeafIndex a = static_cast<LeafIndex>(f.source().leaf_count());
  const LeafIndex b = static_cast<LeafIndex>(f.target().leaf_count());
  const LeafIndex c = static_cast<LeafIndex>(g.target().leaf_count());
  CutSequent cut({negate(f.source()), f.target(), negate(g.source()), g.target()}, {Cut{1, 2}});

  std::vector<LeafIndex> targets(a + 2 * b + c, kNone);
  const auto& ft = f.net().function().targets();
  const auto& gt = g.net().function().targets();
  for (LeafIndex l = 0; l < ft.size(); ++l) targets[l] = ft[l];
  for (LeafIndex l = 0; l < gt.size(); ++l)
    if (gt[l] != kNone) targets[a + b + l] = a + b + gt[l];

  LeafFunction joined = LeafFunction::from_targets(cut, std::move(targets));
  NormalForm nf = turbo_normalize(joined, cut);
  return NetMorphism(f.source(), g.target(),
                     ProofNet::assume_valid(std::move(nf.sequent), std::move(nf.function)));
}

SignedSet signed_set(const Formula& a) {
  SignedSet s;
  for (const Formula::Node& n : a.nodes())
    if (is_atom(n.kind)) s.signs.push_back(polarity(n.kind));
  return s;
}

GoiMorphism underlying_goi(const NetMorphism& m) {
  const LeafIndex a = static_cast<LeafIndex>(m.source().leaf_count());
  auto port = [a](LeafIndex l) {
    return l < a ? Port{End::Source, l} : Port{End::Target, l - a};
  };
  std::vector<PortPair> map;
  for (const auto& [from, to] : m.edges()) map.emplace_back(port(from), port(to));
  return GoiMorphism(signed_set(m.source()), signed_set(m.target()), std::move(map));
}

}  // namespace mll
