#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mll/checker.hpp"

namespace mll {

/// Raised by turbo_normalize when following edges through cut pairs loops.
class CyclicChain : public PreconditionError {
 public:
  explicit CyclicChain(LeafIndex start)
      : PreconditionError("edge chain from leaf " + std::to_string(start) +
                          " cycles through the cut pairs"),
        start_(start) {}
  LeafIndex start() const noexcept { return start_; }

 private:
  LeafIndex start_;
};

struct EliminationStep {
  enum class Case { Atom, Compound };
  std::size_t cut = 0;   ///< position in the sorted cut list before the step
  Cut trees;             ///< the cut's tree indices before the step
  Formula formula;       ///< the cut's first formula
  Case kind = Case::Atom;
};

struct CutElimination {
  CutSequent sequent;
  LeafFunction function;
  EliminationStep step;
};

/// One step on an arbitrary leaf function. Atom cuts delete both trees and
/// send edges into the positive atom to wherever its dual pointed; compound
/// cuts split each tree into its two children in place, so leaf indices and
/// edges stay put. Throws PreconditionError for a missing cut or when the
/// atom's dual points straight back at it.
CutElimination eliminate_cut(const LeafFunction& f, const CutSequent& g, std::size_t cut);

ProofNet eliminate_cut(const ProofNet& net, std::size_t cut);

struct Normalisation {
  ProofNet net;
  std::vector<EliminationStep> trace;
};

/// Eliminates the lowest cut until none remain.
Normalisation normalize_stepwise(const ProofNet& net);

struct NormalForm {
  CutSequent sequent;
  LeafFunction function;
};

/// Removes all cut pairs at once, replacing each edge chain through them by
/// its endpoints. Throws CyclicChain.
NormalForm turbo_normalize(const LeafFunction& f, const CutSequent& g);

ProofNet turbo_normalize(const ProofNet& net);

}  // namespace mll
