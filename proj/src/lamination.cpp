#include "mll/lamination.hpp"

#include <algorithm>

#include "mll/errors.hpp"

namespace mll {

LaminatedMorphism::LaminatedMorphism(SignedSet source, SignedSet target,
                                     std::vector<GoiMorphism> members)
    : source_(std::move(source)), target_(std::move(target)), members_(std::move(members)) {
  for (const GoiMorphism& f : members_)
    if (f.source() != source_ || f.target() != target_)
      throw PreconditionError("laminated member has different endpoints");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

LaminatedMorphism compose_lam(const LaminatedMorphism& l, const LaminatedMorphism& m) {
  if (l.target() != m.source()) throw PreconditionError("lamination composition: middle objects differ");
  std::vector<GoiMorphism> out;
  for (const GoiMorphism& f : l.members())
    for (const GoiMorphism& g : m.members())
      if (synchronises(f, g)) out.push_back(compose_goi(f, g));
  return LaminatedMorphism(l.source(), m.target(), std::move(out));
}

LaminatedMorphism embed(const GoiMorphism& f) {
  const std::size_t n = f.size();
  if (n > 24) throw PreconditionError("embed: map too large to close downward");
  std::vector<GoiMorphism> members;
  members.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<PortPair> sub;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) sub.push_back(f.map()[i]);
    members.emplace_back(f.source(), f.target(), std::move(sub));
  }
  return LaminatedMorphism(f.source(), f.target(), std::move(members));
}

LaminatedMorphism identity_lam(const SignedSet& s) { return embed(identity_goi(s)); }

}  // namespace mll
