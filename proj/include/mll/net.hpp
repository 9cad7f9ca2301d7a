#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mll/link_graph.hpp"
#include "mll/sequent.hpp"

namespace mll {

using LeafEdge = std::pair<LeafIndex, LeafIndex>;  // (negative leaf, positive leaf)

/// Total map from the negative leaves of a cut sequent to its positive leaves.
class LeafFunction {
 public:
  LeafFunction() = default;

  /// Throws PreconditionError unless `edges` sends every negative leaf of `g`
  /// to exactly one positive leaf.
  static LeafFunction from_edges(const CutSequent& g, const std::vector<LeafEdge>& edges);

  /// Dense form: targets[l] is f(l) for negative l and kNone for positive l.
  /// Throws PreconditionError on the same conditions as from_edges.
  static LeafFunction from_targets(const CutSequent& g, std::vector<LeafIndex> targets);

  LeafIndex operator()(LeafIndex negative) const { return targets_[negative]; }
  bool defined_at(LeafIndex l) const { return l < targets_.size() && targets_[l] != kNone; }
  std::size_t leaf_count() const noexcept { return targets_.size(); }
  const std::vector<LeafIndex>& targets() const noexcept { return targets_; }

  /// Edges sorted by source.
  std::vector<LeafEdge> edges() const;

  friend bool operator==(const LeafFunction&, const LeafFunction&) = default;

 private:
  std::vector<LeafIndex> targets_;
};

/// A counterexample to correctness.
struct Witness {
  enum class Kind { Matching, Cycle, Disconnected };
  Kind kind = Kind::Matching;
  std::optional<Switching> switching;  ///< absent for Matching
  std::vector<VertexId> cycle;
  std::pair<VertexId, VertexId> separated{0, 0};
  std::string detail;
};

struct Verdict {
  bool valid = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return valid; }
};

bool check_matching(const LeafFunction& f, const CutSequent& g);

/// Human-readable reason Matching fails, or nullopt if it holds.
std::optional<std::string> matching_defect(const LeafFunction& f, const CutSequent& g);

/// Parse edges (pars as switchable pairs), cut edges and f-edges over the
/// forest's pre-order vertex ids.
LinkGraph net_link_graph(const LeafFunction& f, const CutSequent& g);

LinkGraph switching_graph(const LeafFunction& f, const CutSequent& g, const Switching& s);

/// Witness for a switching already known to fail.
Witness switching_witness(const LinkGraph& g, const Switching& s);

/// Tries every switching; exponential in the number of pars.
Verdict check_switching_oracle(const LeafFunction& f, const CutSequent& g);

/// Matching, then the brute-force switching check.
Verdict check_oracle(const LeafFunction& f, const CutSequent& g);

bool is_proof_net(const LeafFunction& f, const CutSequent& g);

}  // namespace mll
