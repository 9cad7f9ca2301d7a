#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mll/errors.hpp"
#include "mll/net.hpp"

namespace mll {

/// Cut-free sequent over the units only, with a perfect matching of its
/// leaves. Every 1 receives exactly one axiom edge, every bot sends one.
///
/// The one exception is a net whose whole content collapses (a single tree of
/// edgeless 1s under tensors); it reduces to the lone formula 1.
struct UnitFreeStructure {
  CutSequent sequent{{Formula::one()}};
  LeafFunction axioms;
  /// par_origin[k] is the par slot, in the original sequent, of par slot k here.
  std::vector<std::uint32_t> par_origin;
};

/// The reduction detected a definitive failure. `switching` is a switching of
/// the original sequent whose graph is not a tree.
struct SwitchingFailure {
  Switching switching;
  std::string detail;
};

/// How copies of an expanded positive leaf are handed to its incoming edges.
enum class CopyOrder { AscendingSource, DescendingSource };

/// Precondition: check_matching(f, g).
std::variant<UnitFreeStructure, SwitchingFailure> reduce_to_unit_free(
    const LeafFunction& f, const CutSequent& g, CopyOrder order = CopyOrder::AscendingSource);

LinkGraph structure_link_graph(const UnitFreeStructure& s);

/// Witness switchings refer to the structure's own pars.
Verdict check_contractible(const UnitFreeStructure& s);

/// Same verdict as check_oracle, in near-linear time. Witnesses refer to `g`.
Verdict check_fast(const LeafFunction& f, const CutSequent& g,
                   CopyOrder order = CopyOrder::AscendingSource);

/// Classical net: bot leaves may jump to any vertex, and axiom links join
/// complementary leaves (P with P^, or 1 with bot).
struct OldNet {
  CutSequent sequent;
  std::vector<std::pair<LeafIndex, VertexId>> jumps;
  std::vector<std::pair<LeafIndex, LeafIndex>> axioms;
};

struct ConvertedNet {
  CutSequent sequent;
  LeafFunction function;
};

/// Each compound or negative target A of a jump becomes A * 1 and its jumps
/// move to the new 1. A cut pair containing such a target is first turned
/// into the single tree A * A^, which changes no switching's shape.
/// Throws PreconditionError on malformed links.
ConvertedNet old_to_new(const OldNet& o);

Verdict check_old_net(const OldNet& o);

class NotAProofNet : public Error {
 public:
  explicit NotAProofNet(Witness w)
      : Error("not a proof net: " + w.detail), witness_(std::move(w)) {}
  const Witness& witness() const noexcept { return witness_; }

 private:
  Witness witness_;
};

/// A leaf function known to be a proof net on its cut sequent.
class ProofNet {
 public:
  /// Validates with check_fast; throws NotAProofNet.
  static ProofNet make(CutSequent sequent, LeafFunction function);
  static ProofNet make(CutSequent sequent, const std::vector<LeafEdge>& edges);

  /// Skips validation. For producers whose output is correct by construction,
  /// such as cut elimination; tests re-check these independently.
  static ProofNet assume_valid(CutSequent sequent, LeafFunction function);

  const CutSequent& sequent() const noexcept { return sequent_; }
  const LeafFunction& function() const noexcept { return function_; }
  std::vector<LeafEdge> edges() const { return function_.edges(); }

  friend bool operator==(const ProofNet&, const ProofNet&) = default;

 private:
  ProofNet(CutSequent s, LeafFunction f) : sequent_(std::move(s)), function_(std::move(f)) {}

  CutSequent sequent_;
  LeafFunction function_;
};

}  // namespace mll
