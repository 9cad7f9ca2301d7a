#include "mll/link_graph.hpp"

#include <algorithm>
#include <deque>

#include "mll/errors.hpp"

namespace mll {

LinkGraph LinkGraph::switched(const Switching& s) const {
  if (s.choices.size() != pars.size())
    throw PreconditionError("switching does not match the number of pars");
  LinkGraph out;
  out.vertex_count = vertex_count;
  out.edges.reserve(edges.size() + pars.size());
  out.edges = edges;
  for (std::size_t i = 0; i < pars.size(); ++i) {
    const ParLink& p = pars[i];
    out.edges.push_back(Edge{p.par, s.choices[i] == Side::Left ? p.left : p.right});
  }
  return out;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
  for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
}

std::uint32_t UnionFind::find(std::uint32_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --components_;
  return true;
}

namespace {

// Path between two vertices of a forest given as adjacency lists.
std::vector<VertexId> forest_path(const std::vector<std::vector<VertexId>>& adj, VertexId from,
                                  VertexId to) {
  std::vector<VertexId> prev(adj.size(), kNone);
  std::deque<VertexId> queue{from};
  prev[from] = from;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (VertexId y : adj[x]) {
      if (prev[y] == kNone) {
        prev[y] = x;
        queue.push_back(y);
      }
    }
  }
  std::vector<VertexId> path;
  for (VertexId x = to; x != from; x = prev[x]) path.push_back(x);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<TreeDefect> tree_defect(const LinkGraph& plain) {
  UnionFind uf(plain.vertex_count);
  std::vector<std::vector<VertexId>> adj(plain.vertex_count);
  for (const Edge& e : plain.edges) {
    if (!uf.unite(e.u, e.v)) {
      TreeDefect d;
      d.kind = TreeDefect::Kind::Cycle;
      d.cycle = e.u == e.v ? std::vector<VertexId>{e.u} : forest_path(adj, e.v, e.u);
      return d;
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  if (uf.components() > 1) {
    TreeDefect d;
    d.kind = TreeDefect::Kind::Disconnected;
    std::uint32_t root = uf.find(0);
    for (VertexId v = 1; v < plain.vertex_count; ++v) {
      if (uf.find(v) != root) {
        d.separated = {0, v};
        break;
      }
    }
    return d;
  }
  if (plain.vertex_count == 0) {
    TreeDefect d;
    d.kind = TreeDefect::Kind::Disconnected;
    return d;
  }
  return std::nullopt;
}

std::optional<TreeDefect> analyse_switching(const LinkGraph& g, const Switching& s) {
  return tree_defect(g.switched(s));
}

namespace {

struct Contraction {
  enum class Outcome { Correct, EdgeCount, PlainLoop, Blocked };
  Outcome outcome = Outcome::Blocked;
  UnionFind uf{0};
  std::vector<bool> contracted;
};

Contraction run_contraction(const LinkGraph& g) {
  Contraction c;
  const std::size_t n = g.vertex_count;
  if (n == 0 || g.edges.size() + g.pars.size() != n - 1) {
    c.outcome = Contraction::Outcome::EdgeCount;
    return c;
  }
  c.uf = UnionFind(n);
  UnionFind& uf = c.uf;
  for (const Edge& e : g.edges) {
    if (!uf.unite(e.u, e.v)) {
      c.outcome = Contraction::Outcome::PlainLoop;
      return c;
    }
  }

  // Each component remembers the pars with a premise inside it. A par becomes
  // contractible exactly when a merge brings its premises together, and then
  // it is listed under the smaller of the two merged components.
  const std::size_t p = g.pars.size();
  c.contracted.assign(p, false);
  std::vector<bool> queued(p, false);
  // Pending lists are singly linked chains through a pool of 2p entries.
  std::vector<std::uint32_t> head(n, kNone), tail(n, kNone), count(n, 0);
  std::vector<std::uint32_t> item(2 * p), next(2 * p, kNone);
  std::uint32_t used = 0;
  auto push = [&](std::uint32_t root, std::uint32_t q) {
    item[used] = q;
    if (head[root] == kNone) head[root] = used;
    else next[tail[root]] = used;
    tail[root] = used++;
    ++count[root];
  };
  std::vector<std::uint32_t> ready;
  for (std::uint32_t q = 0; q < p; ++q) {
    const ParLink& link = g.pars[q];
    std::uint32_t l = uf.find(link.left);
    std::uint32_t r = uf.find(link.right);
    if (l == r) {
      queued[q] = true;
      ready.push_back(q);
    } else {
      push(l, q);
      push(r, q);
    }
  }

  auto merge = [&](std::uint32_t a, std::uint32_t b) {
    uf.unite(a, b);
    std::uint32_t root = uf.find(a);
    std::uint32_t other = root == a ? b : a;
    // Scan the shorter list, then splice both under the root.
    std::uint32_t small = count[root] < count[other] ? root : other;
    for (std::uint32_t e = head[small]; e != kNone; e = next[e]) {
      std::uint32_t q = item[e];
      if (queued[q]) continue;
      const ParLink& link = g.pars[q];
      if (uf.find(link.left) == uf.find(link.right)) {
        queued[q] = true;
        ready.push_back(q);
      }
    }
    if (head[other] != kNone) {
      if (head[root] == kNone) head[root] = head[other];
      else next[tail[root]] = head[other];
      tail[root] = tail[other];
      count[root] += count[other];
      head[other] = tail[other] = kNone;
      count[other] = 0;
    }
  };

  std::size_t done = 0;
  while (!ready.empty()) {
    std::uint32_t q = ready.back();
    ready.pop_back();
    const ParLink& link = g.pars[q];
    std::uint32_t rp = uf.find(link.par);
    std::uint32_t rl = uf.find(link.left);
    if (rp == rl) {
      c.outcome = Contraction::Outcome::Blocked;
      return c;
    }
    merge(rp, rl);
    c.contracted[q] = true;
    ++done;
  }
  c.outcome = done == p && uf.components() == 1 ? Contraction::Outcome::Correct
                                                : Contraction::Outcome::Blocked;
  return c;
}

}  // namespace

bool contract(const LinkGraph& g) {
  return run_contraction(g).outcome == Contraction::Outcome::Correct;
}

Switching find_failing_switching(const LinkGraph& g) {
  Contraction c = run_contraction(g);
  Switching s;
  s.choices.assign(g.pars.size(), Side::Left);
  switch (c.outcome) {
    case Contraction::Outcome::Correct:
      throw PreconditionError("find_failing_switching: every switching is a tree");
    case Contraction::Outcome::EdgeCount:
    case Contraction::Outcome::PlainLoop:
      return s;  // every switching fails alike
    case Contraction::Outcome::Blocked:
      break;
  }

  // Collapse the contracted components; each is internally a tree under every
  // switching, so the original switches fail exactly when the quotient's do.
  UnionFind& uf = c.uf;
  std::vector<std::uint32_t> index(g.vertex_count, kNone);
  std::size_t k = 0;
  for (VertexId v = 0; v < g.vertex_count; ++v) {
    std::uint32_t r = uf.find(v);
    if (index[r] == kNone) index[r] = static_cast<std::uint32_t>(k++);
  }
  std::vector<std::uint32_t> open;
  LinkGraph quotient;
  quotient.vertex_count = k;
  for (std::uint32_t q = 0; q < g.pars.size(); ++q) {
    if (c.contracted[q]) continue;
    const ParLink& link = g.pars[q];
    open.push_back(q);
    quotient.pars.push_back(ParLink{index[uf.find(link.par)], index[uf.find(link.left)],
                                    index[uf.find(link.right)]});
  }

  // Self-reduction: settle one par at a time, keeping some completion failing.
  for (std::size_t i = 0; i < open.size(); ++i) {
    ParLink link = quotient.pars.front();
    quotient.pars.erase(quotient.pars.begin());
    quotient.edges.push_back(Edge{link.par, link.left});
    if (contract(quotient)) {
      quotient.edges.back() = Edge{link.par, link.right};
      s.choices[open[i]] = Side::Right;
    }
  }
  return s;
}

}  // namespace mll
