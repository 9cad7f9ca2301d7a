#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mll {

enum class Kind : std::uint8_t { Var, DualVar, One, Bot, Tensor, Par };

enum class Polarity : std::uint8_t { Positive, Negative };

constexpr bool is_atom(Kind k) noexcept { return k != Kind::Tensor && k != Kind::Par; }

/// Var and One are positive, DualVar and Bot negative. Undefined on connectives.
constexpr Polarity polarity(Kind atom) noexcept {
  return (atom == Kind::Var || atom == Kind::One) ? Polarity::Positive : Polarity::Negative;
}

constexpr Polarity flip(Polarity p) noexcept {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}

constexpr Kind dual(Kind k) noexcept {
  switch (k) {
    case Kind::Var: return Kind::DualVar;
    case Kind::DualVar: return Kind::Var;
    case Kind::One: return Kind::Bot;
    case Kind::Bot: return Kind::One;
    case Kind::Tensor: return Kind::Par;
    case Kind::Par: return Kind::Tensor;
  }
  return k;
}

/// A literal or unit. `name` is empty for 1 and bot.
struct Atom {
  Kind kind = Kind::One;
  std::string name;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// An MLL formula stored as its parse tree in pre-order.
///
/// Node 0 is the root. A binary node at offset i has its left child at i + 1
/// and its right child at i + 1 + size(left). Leaves therefore appear in
/// left-to-right order, and every subformula occupies a contiguous range.
/// The flat layout keeps traversals iterative, so arbitrarily deep formulas
/// (left-bracketed tensors of many units, say) never exhaust the stack.
class Formula {
 public:
  struct Node {
    Kind kind = Kind::One;
    std::uint32_t size = 1;  ///< nodes in this subtree, including itself
    std::string name;        ///< variable name, atoms only

    friend bool operator==(const Node&, const Node&) = default;
  };

  Formula() : nodes_{Node{}} {}  // the formula 1

  static Formula var(std::string name);
  static Formula dual_var(std::string name);
  static Formula one();
  static Formula bot();
  static Formula atom(const Atom& a);
  static Formula tensor(const Formula& left, const Formula& right);
  static Formula par(const Formula& left, const Formula& right);
  static Formula binary(Kind connective, const Formula& left, const Formula& right);

  /// Adopts a pre-order node list; throws PreconditionError if sizes or
  /// atom names are inconsistent.
  static Formula from_nodes(std::vector<Node> nodes);

  Kind kind() const noexcept { return nodes_.front().kind; }
  bool is_atom() const noexcept { return mll::is_atom(kind()); }
  const std::string& name() const noexcept { return nodes_.front().name; }
  Atom atom() const { return Atom{kind(), name()}; }

  Formula left() const;
  Formula right() const;
  /// The subformula rooted at pre-order offset `node`.
  Formula subformula(std::size_t node) const;

  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t leaf_count() const noexcept;
  std::size_t par_count() const noexcept;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  explicit Formula(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  std::vector<Node> nodes_;
};

/// De Morgan dual: swaps Var/DualVar, One/Bot and Tensor/Par node by node.
Formula negate(const Formula& f);

/// Reads the ASCII grammar
///   formula := atom | "1" | "bot" | "(" formula "*" formula ")" | "(" formula "@" formula ")"
///   atom    := IDENT | IDENT "^"
/// Whitespace is ignored. Throws ParseError.
Formula parse_formula(std::string_view text);

/// Inverse of parse_formula, with single spaces around binary operators.
std::string print_formula(const Formula& f);

std::string print_atom(const Atom& a);

}  // namespace mll
