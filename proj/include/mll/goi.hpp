#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mll/formula.hpp"

namespace mll {

/// Finite signed set; element i has sign signs[i].
struct SignedSet {
  std::vector<Polarity> signs;

  std::size_t size() const noexcept { return signs.size(); }
  Polarity operator[](std::size_t i) const { return signs[i]; }

  friend bool operator==(const SignedSet&, const SignedSet&) = default;
};

/// Which side of a morphism S -> T an element lives on.
enum class End : std::uint8_t { Source, Target };

struct Port {
  End end = End::Source;
  std::uint32_t index = 0;

  friend auto operator<=>(const Port&, const Port&) = default;
};

using PortPair = std::pair<Port, Port>;

/// Partial function from S+ + T- to S- + T+, stored as pairs sorted by input.
class GoiMorphism {
 public:
  GoiMorphism() = default;

  /// Throws PreconditionError on ports outside the polarity partition or on
  /// two pairs with the same input.
  GoiMorphism(SignedSet source, SignedSet target, std::vector<PortPair> map);

  const SignedSet& source() const noexcept { return source_; }
  const SignedSet& target() const noexcept { return target_; }
  const std::vector<PortPair>& map() const noexcept { return map_; }
  std::size_t size() const noexcept { return map_.size(); }

  std::optional<Port> operator()(Port in) const;

  /// Is `p` a legal input (S+ + T-)?
  bool is_input(Port p) const;
  /// Is `p` a legal output (S- + T+)?
  bool is_output(Port p) const;

  friend bool operator==(const GoiMorphism&, const GoiMorphism&) = default;
  friend auto operator<=>(const GoiMorphism& a, const GoiMorphism& b) {
    return a.map_ <=> b.map_;
  }

 private:
  SignedSet source_;
  SignedSet target_;
  std::vector<PortPair> map_;
};

/// Path composition. Throws PreconditionError if f.target() != g.source().
GoiMorphism compose_goi(const GoiMorphism& f, const GoiMorphism& g);

GoiMorphism identity_goi(const SignedSet& s);

/// Inputs and outputs of f lying on the given end, sorted by index.
std::vector<std::uint32_t> domain_on(const GoiMorphism& f, End end);
std::vector<std::uint32_t> image_on(const GoiMorphism& f, End end);

/// f and g agree on which middle elements carry edges in and out.
bool synchronises(const GoiMorphism& f, const GoiMorphism& g);

}  // namespace mll
