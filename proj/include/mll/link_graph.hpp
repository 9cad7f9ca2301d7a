#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mll/sequent.hpp"

namespace mll {

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A par vertex together with its two argument vertices.
struct ParLink {
  VertexId par;
  VertexId left;
  VertexId right;
};

/// Undirected multigraph whose par edges come in switchable pairs.
/// `pars[i]` is switched by `Switching::choices[i]`.
struct LinkGraph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<ParLink> pars;

  /// The plain graph keeping one edge of each par, as chosen by `s`.
  LinkGraph switched(const Switching& s) const;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::uint32_t find(std::uint32_t x);
  /// Returns false if already joined. The surviving root is the larger set's.
  bool unite(std::uint32_t a, std::uint32_t b);
  std::uint32_t set_size(std::uint32_t x) { return size_[find(x)]; }
  std::size_t components() const noexcept { return components_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::size_t components_;
};

/// Why a plain graph fails to be a tree.
struct TreeDefect {
  enum class Kind { Cycle, Disconnected };
  Kind kind = Kind::Cycle;
  std::vector<VertexId> cycle;  ///< closed walk v0 .. vk, edge vk-v0 implied
  std::pair<VertexId, VertexId> separated{0, 0};
};

/// nullopt iff the graph (pars ignored) is a tree. Cycles are reported as the
/// first edge, in edge order, that closes a loop in the forest built so far.
std::optional<TreeDefect> tree_defect(const LinkGraph& plain);

std::optional<TreeDefect> analyse_switching(const LinkGraph& g, const Switching& s);

/// Union-find contraction: true iff every switching of `g` is a tree.
bool contract(const LinkGraph& g);

/// A switching whose graph is not a tree. Precondition: !contract(g).
Switching find_failing_switching(const LinkGraph& g);

}  // namespace mll
