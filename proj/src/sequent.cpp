#include "mll/sequent.hpp"

#include <algorithm>
#include <unordered_map>

#include "mll/errors.hpp"

namespace mll {

Forest::Forest(std::vector<Formula> trees, std::vector<Cut> cuts)
    : trees_(std::move(trees)), cuts_(std::move(cuts)) {
  std::size_t total = 0;
  for (const Formula& t : trees_) total += t.size();
  vertices_.reserve(total);
  tree_root_.reserve(trees_.size());
  tree_first_leaf_.reserve(trees_.size());
  std::unordered_map<std::string, std::uint32_t> symbols;

  for (std::uint32_t t = 0; t < trees_.size(); ++t) {
    auto nodes = trees_[t].nodes();
    VertexId base = static_cast<VertexId>(vertices_.size());
    tree_root_.push_back(base);
    tree_first_leaf_.push_back(static_cast<LeafIndex>(leaf_vertex_.size()));
    for (std::uint32_t k = 0; k < nodes.size(); ++k) {
      Vertex v{nodes[k].kind, t};
      v.offset = k;
      VertexId id = base + k;
      if (is_atom(v.kind)) {
        v.leaf = static_cast<LeafIndex>(leaf_vertex_.size());
        leaf_vertex_.push_back(id);
        leaf_kind_.push_back(v.kind);
        auto [it, fresh] = symbols.try_emplace(nodes[k].name, static_cast<std::uint32_t>(symbol_name_.size()));
        if (fresh) symbol_name_.push_back(nodes[k].name);
        leaf_symbol_.push_back(it->second);
      } else {
        v.left = id + 1;
        v.right = id + 1 + nodes[k + 1].size;
        if (v.kind == Kind::Par) {
          v.par = static_cast<std::uint32_t>(par_vertex_.size());
          par_vertex_.push_back(id);
        }
      }
      vertices_.push_back(v);
    }
    for (std::uint32_t k = 0; k < nodes.size(); ++k) {
      const Vertex& v = vertices_[base + k];
      if (!is_atom(v.kind)) {
        vertices_[v.left].parent = base + k;
        vertices_[v.right].parent = base + k;
      }
    }
  }

  partner_.assign(trees_.size(), kNone);
  for (const Cut& c : cuts_) {
    if (c.first >= trees_.size() || c.second >= trees_.size())
      throw PreconditionError("cut refers to a missing tree");
    if (c.first == c.second) throw PreconditionError("cut joins a tree to itself");
    if (partner_[c.first] != kNone || partner_[c.second] != kNone)
      throw PreconditionError("tree occurs in more than one cut");
    partner_[c.first] = static_cast<std::uint32_t>(c.second);
    partner_[c.second] = static_cast<std::uint32_t>(c.first);
  }
}

const std::string& Forest::leaf_name(LeafIndex l) const {
  const Vertex& v = vertices_[leaf_vertex_[l]];
  return trees_[v.tree].nodes()[v.offset].name;
}

std::optional<std::size_t> Forest::cut_partner(std::size_t tree) const {
  if (partner_[tree] == kNone) return std::nullopt;
  return partner_[tree];
}

namespace {

std::vector<Cut> normalised(std::vector<Cut> cuts) {
  for (Cut& c : cuts)
    if (c.first > c.second) std::swap(c.first, c.second);
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

}  // namespace

CutSequent::CutSequent(std::vector<Formula> trees, std::vector<Cut> cuts)
    : forest_(std::move(trees), normalised(std::move(cuts))) {
  const auto& ts = forest_.trees();
  if (forest_.cuts().size() * 2 >= ts.size())
    throw PreconditionError("cut sequent needs at least one formula outside the cut pairs");
  for (const Cut& c : forest_.cuts()) {
    if (ts[c.second] != negate(ts[c.first]))
      throw PreconditionError("cut pair formulas are not dual: " + print_formula(ts[c.first]) +
                              " vs " + print_formula(ts[c.second]));
  }
}

std::vector<LeafInfo> leaves(const CutSequent& g) {
  const Forest& forest = g.forest();
  std::vector<LeafInfo> out;
  out.reserve(forest.leaf_count());
  for (LeafIndex l = 0; l < forest.leaf_count(); ++l)
    out.push_back(LeafInfo{l, forest.leaf_atom(l), forest.leaf_polarity(l)});
  return out;
}

std::vector<LeafInfo> leaves(const Formula& f) {
  std::vector<LeafInfo> out;
  LeafIndex next = 0;
  for (const Formula::Node& n : f.nodes())
    if (is_atom(n.kind)) out.push_back(LeafInfo{next++, Atom{n.kind, n.name}, polarity(n.kind)});
  return out;
}

LeafIndex dual_leaf(const CutSequent& g, LeafIndex l) {
  const Forest& forest = g.forest();
  if (l >= forest.leaf_count()) throw PreconditionError("dual_leaf: leaf out of range");
  std::size_t tree = forest.tree_of_leaf(l);
  auto partner = forest.cut_partner(tree);
  if (!partner) throw PreconditionError("dual_leaf: leaf is not inside a cut pair");
  return forest.first_leaf(*partner) + (l - forest.first_leaf(tree));
}

Switching SwitchingRange::iterator::operator*() const {
  Switching s;
  s.choices.resize(pars_);
  for (std::size_t i = 0; i < pars_; ++i)
    s.choices[i] = ((code_ >> i) & 1U) != 0 ? Side::Right : Side::Left;
  return s;
}

SwitchingRange::SwitchingRange(std::size_t pars) : pars_(pars) {
  if (pars > 62) throw PreconditionError("too many pars to enumerate switchings");
}

SwitchingRange enumerate_switchings(const CutSequent& g) { return SwitchingRange(g.par_count()); }

}  // namespace mll
