#pragma once

#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mll/formula.hpp"

namespace mll {

using LeafIndex = std::uint32_t;
using VertexId = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

/// An undirected cut edge between the roots of trees `first < second`.
struct Cut {
  std::size_t first = 0;
  std::size_t second = 0;

  friend auto operator<=>(const Cut&, const Cut&) = default;
};

/// Flattened view of a list of formula trees.
///
/// Vertices are numbered in pre-order across the forest (tree 0 first), so the
/// vertex id of node k of tree t is `tree_root(t) + k`. Leaves are numbered
/// left to right in the same order. Cuts are recorded but not validated here.
class Forest {
 public:
  struct Vertex {
    Kind kind;
    std::uint32_t tree;
    VertexId parent = kNone;  ///< kNone for roots
    VertexId left = kNone;
    VertexId right = kNone;
    LeafIndex leaf = kNone;       ///< leaf index, atoms only
    std::uint32_t par = kNone;    ///< position among par vertices, pars only
    std::uint32_t offset = 0;     ///< node offset inside the tree's formula
  };

  Forest() = default;
  Forest(std::vector<Formula> trees, std::vector<Cut> cuts);

  const std::vector<Formula>& trees() const noexcept { return trees_; }
  const std::vector<Cut>& cuts() const noexcept { return cuts_; }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t leaf_count() const noexcept { return leaf_vertex_.size(); }
  std::size_t par_count() const noexcept { return par_vertex_.size(); }

  const Vertex& vertex(VertexId v) const { return vertices_[v]; }
  VertexId leaf_vertex(LeafIndex l) const { return leaf_vertex_[l]; }
  VertexId par_vertex(std::size_t slot) const { return par_vertex_[slot]; }
  VertexId tree_root(std::size_t tree) const { return tree_root_[tree]; }
  LeafIndex first_leaf(std::size_t tree) const { return tree_first_leaf_[tree]; }
  std::size_t tree_leaf_count(std::size_t tree) const { return trees_[tree].leaf_count(); }

  Kind leaf_kind(LeafIndex l) const { return leaf_kind_[l]; }
  Polarity leaf_polarity(LeafIndex l) const { return polarity(leaf_kind(l)); }
  const std::string& leaf_name(LeafIndex l) const;
  Atom leaf_atom(LeafIndex l) const { return Atom{leaf_kind(l), leaf_name(l)}; }
  std::size_t tree_of_leaf(LeafIndex l) const { return vertices_[leaf_vertex_[l]].tree; }
  /// Leaves have equal symbols iff they carry the same variable name (units
  /// share one symbol with the empty name).
  std::uint32_t leaf_symbol(LeafIndex l) const { return leaf_symbol_[l]; }
  std::size_t symbol_count() const noexcept { return symbol_name_.size(); }
  const std::string& symbol_name(std::uint32_t s) const { return symbol_name_[s]; }

  /// Partner tree of `tree` if it belongs to a cut pair.
  std::optional<std::size_t> cut_partner(std::size_t tree) const;

 private:
  std::vector<Formula> trees_;
  std::vector<Cut> cuts_;
  std::vector<Vertex> vertices_;
  std::vector<VertexId> leaf_vertex_;
  std::vector<Kind> leaf_kind_;
  std::vector<std::uint32_t> leaf_symbol_;
  std::vector<std::string> symbol_name_;
  std::vector<VertexId> par_vertex_;
  std::vector<VertexId> tree_root_;
  std::vector<LeafIndex> tree_first_leaf_;
  std::vector<std::uint32_t> partner_;  // kNone when not cut
};

/// A sequent together with zero or more cut pairs.
///
/// Invariants, checked on construction (PreconditionError otherwise): at least
/// one tree lies outside every cut pair; each tree is in at most one cut; and
/// the two trees of every cut are mutually dual.
class CutSequent {
 public:
  explicit CutSequent(std::vector<Formula> trees, std::vector<Cut> cuts = {});

  const Forest& forest() const noexcept { return forest_; }
  const std::vector<Formula>& trees() const noexcept { return forest_.trees(); }
  const std::vector<Cut>& cuts() const noexcept { return forest_.cuts(); }
  std::size_t leaf_count() const noexcept { return forest_.leaf_count(); }
  std::size_t vertex_count() const noexcept { return forest_.vertex_count(); }
  std::size_t par_count() const noexcept { return forest_.par_count(); }

  friend bool operator==(const CutSequent& a, const CutSequent& b) {
    return a.trees() == b.trees() && a.cuts() == b.cuts();
  }

 private:
  Forest forest_;
};

struct LeafInfo {
  LeafIndex index;
  Atom atom;
  Polarity polarity;

  friend bool operator==(const LeafInfo&, const LeafInfo&) = default;
};

std::vector<LeafInfo> leaves(const CutSequent& g);

/// Leaves of a single formula, indexed from 0.
std::vector<LeafInfo> leaves(const Formula& f);

/// The leaf at the same position in the partner formula of a cut pair.
/// Throws PreconditionError if `l` is not inside a cut pair.
LeafIndex dual_leaf(const CutSequent& g, LeafIndex l);

enum class Side : std::uint8_t { Left, Right };

/// One retained argument edge per par vertex, in pre-order of the pars.
struct Switching {
  std::vector<Side> choices;

  friend bool operator==(const Switching&, const Switching&) = default;
};

/// Lazily enumerates all 2^p switchings of a forest with p pars.
class SwitchingRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Switching;
    using difference_type = std::ptrdiff_t;
    using reference = Switching;

    iterator() = default;
    iterator(std::size_t pars, std::uint64_t code) : pars_(pars), code_(code) {}

    Switching operator*() const;
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++code_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.code_ == b.code_; }

   private:
    std::size_t pars_ = 0;
    std::uint64_t code_ = 0;
  };

  explicit SwitchingRange(std::size_t pars);

  iterator begin() const { return {pars_, 0}; }
  iterator end() const { return {pars_, std::uint64_t{1} << pars_}; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << pars_; }

 private:
  std::size_t pars_;
};

/// Throws PreconditionError beyond 62 pars.
SwitchingRange enumerate_switchings(const CutSequent& g);

}  // namespace mll
