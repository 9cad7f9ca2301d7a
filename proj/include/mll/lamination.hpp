#pragma once

#include <vector>

#include "mll/goi.hpp"

namespace mll {

/// A set of GoI morphisms S -> T, kept sorted and duplicate-free.
class LaminatedMorphism {
 public:
  LaminatedMorphism() = default;
  /// Throws PreconditionError if a member has other endpoints.
  LaminatedMorphism(SignedSet source, SignedSet target, std::vector<GoiMorphism> members);

  const SignedSet& source() const noexcept { return source_; }
  const SignedSet& target() const noexcept { return target_; }
  const std::vector<GoiMorphism>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  friend bool operator==(const LaminatedMorphism&, const LaminatedMorphism&) = default;

 private:
  SignedSet source_;
  SignedSet target_;
  std::vector<GoiMorphism> members_;
};

/// Composes exactly the synchronising pairs.
LaminatedMorphism compose_lam(const LaminatedMorphism& l, const LaminatedMorphism& m);

/// Every restriction of the identity on s.
LaminatedMorphism identity_lam(const SignedSet& s);

/// Downward closure: every restriction of f. Throws PreconditionError above
/// 24 pairs.
LaminatedMorphism embed(const GoiMorphism& f);

}  // namespace mll
