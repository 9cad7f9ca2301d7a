#pragma once

#include <vector>

#include "mll/checker.hpp"
#include "mll/goi.hpp"

namespace mll {

/// A cut-free proof net on [negate(source), target].
class NetMorphism {
 public:
  /// Throws PreconditionError if the net's sequent is not [negate(source),
  /// target] without cuts.
  NetMorphism(Formula source, Formula target, ProofNet net);

  /// Validates the edges with check_fast (NotAProofNet).
  static NetMorphism make(Formula source, Formula target, const std::vector<LeafEdge>& edges);

  const Formula& source() const noexcept { return source_; }
  const Formula& target() const noexcept { return target_; }
  const ProofNet& net() const noexcept { return net_; }
  std::vector<LeafEdge> edges() const { return net_.edges(); }

  friend bool operator==(const NetMorphism&, const NetMorphism&) = default;

 private:
  Formula source_;
  Formula target_;
  ProofNet net_;
};

NetMorphism identity_net(const Formula& a);

/// Cuts g against f along the shared object and normalises.
/// Throws PreconditionError if f.target() != g.source().
NetMorphism compose_nets(const NetMorphism& f, const NetMorphism& g);

/// The leaf polarities of a formula, as a signed set.
SignedSet signed_set(const Formula& a);

GoiMorphism underlying_goi(const NetMorphism& m);

}  // namespace mll
