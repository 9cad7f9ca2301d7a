#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mll/checker.hpp"

namespace mll {

enum class Rule { Ax, One, Bot, Tensor, Par, Cut };

const char* rule_name(Rule r) noexcept;

/// Where a conclusion formula comes from: formula `index` of premise
/// `premise`, or the rule's principal formula when premise == kPrincipal.
struct Slot {
  static constexpr int kPrincipal = -1;
  int premise = kPrincipal;
  std::size_t index = 0;

  friend bool operator==(const Slot&, const Slot&) = default;
};

/// A derivation. Every node records its conclusion as an ordered list.
///
/// Ax and One have no premises and no layout. The other rules read:
///   Bot     one premise; principal is bot
///   Par     one premise; pos = {i, j}, principal is premise[i] @ premise[j]
///   Tensor  two premises; pos = {i, j}, principal is p0[i] * p1[j]
///   Cut     two premises; pos = {i, j}, p1[j] is the negation of p0[i]; no principal
/// `layout[k]` says where conclusion formula k comes from. Every premise
/// formula not consumed by `pos` appears exactly once, and so does the
/// principal formula if the rule has one.
///
/// `mark` (Bot only) is a positive leaf of the conclusion, counted left to
/// right over the whole conclusion. It may be omitted when the conclusion has
/// exactly one positive leaf.
struct Proof {
  Rule rule = Rule::One;
  std::vector<Proof> premises;
  std::vector<Formula> conclusion;
  std::vector<std::size_t> pos;
  std::vector<Slot> layout;
  std::optional<LeafIndex> mark;

  friend bool operator==(const Proof&, const Proof&) = default;
};

class RuleViolation : public Error {
 public:
  RuleViolation(std::string path, Rule rule, const std::string& why)
      : Error(std::string(rule_name(rule)) + " rule at " + (path.empty() ? "root" : path) + ": " + why),
        path_(std::move(path)),
        rule_(rule) {}
  /// Premise indices from the root, like "0.1".
  const std::string& path() const noexcept { return path_; }
  Rule rule() const noexcept { return rule_; }

 private:
  std::string path_;
  Rule rule_;
};

/// The layout a rule gets when none is given: Bot appends the bot; Par puts
/// the principal where premise[i] was; Tensor puts it where p0[i] was and
/// appends the rest of p1; Cut concatenates what is left of both premises.
std::vector<Slot> default_layout(Rule rule, const std::vector<Proof>& premises,
                                 const std::vector<std::size_t>& pos);

/// Throws RuleViolation at the first bad node (premises before conclusions).
void check_proof(const Proof& p);

bool has_positive_atom(const std::vector<Formula>& sequent);

/// The conclusion followed by one pair of trees A, negate(A) per cut rule, in
/// post-order; each ax contributes an axiom edge and each bot rule an edge to
/// its mark. Checks the proof first.
ProofNet translate(const Proof& p);

/// A proof whose translation is `net`. Cut pairs are split like tensors.
/// Throws NotAProofNet.
Proof sequentialize(const ProofNet& net);

// Builders that fill in the conclusion (using default layouts unless given).
Proof make_ax(const std::string& var, bool positive_first = true);
Proof make_one();
Proof make_bot(Proof premise, std::optional<LeafIndex> mark = std::nullopt,
               std::optional<std::vector<Slot>> layout = std::nullopt);
Proof make_par(Proof premise, std::size_t i, std::size_t j,
               std::optional<std::vector<Slot>> layout = std::nullopt);
Proof make_tensor(Proof left, Proof right, std::size_t i, std::size_t j,
                  std::optional<std::vector<Slot>> layout = std::nullopt);
Proof make_cut(Proof left, Proof right, std::size_t i, std::size_t j,
               std::optional<std::vector<Slot>> layout = std::nullopt);

/// The conclusion that a node's layout produces from its premises; throws
/// RuleViolation on malformed positions or layouts.
std::vector<Formula> derive_conclusion(const Proof& p, const std::string& path = {});

}  // namespace mll
