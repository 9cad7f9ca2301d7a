#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mll/calculus.hpp"
#include "mll/checker.hpp"

namespace th {

inline mll::CutSequent seq(std::initializer_list<const char*> trees, std::vector<mll::Cut> cuts = {}) {
  std::vector<mll::Formula> fs;
  for (const char* t : trees) fs.push_back(mll::parse_formula(t));
  return mll::CutSequent(std::move(fs), std::move(cuts));
}

inline mll::LeafFunction fn(const mll::CutSequent& g, std::vector<mll::LeafEdge> edges) {
  return mll::LeafFunction::from_edges(g, edges);
}

// The running example: four roots, two pars, seven leaves.
inline mll::CutSequent example_sequent() { return seq({"bot", "(P @ (P^ * 1))", "bot", "(bot @ bot)"}); }

inline mll::LeafFunction example_function() {
  return fn(example_sequent(), {{0, 1}, {2, 1}, {4, 3}, {5, 3}, {6, 1}});
}

inline std::vector<mll::Slot> principal_first(std::size_t premise_size) {
  std::vector<mll::Slot> out{mll::Slot{}};
  for (std::size_t k = 0; k < premise_size; ++k) out.push_back(mll::Slot{0, k});
  return out;
}

// Two marked proofs of the running example.
inline mll::Proof marked_proof_one() {
  using namespace mll;
  Proof ax = make_ax("P");
  Proof b = make_bot(ax, std::nullopt, principal_first(2));
  Proof unit = make_bot(make_one());
  Proof t = make_tensor(b, unit, 2, 0);
  Proof b2 = make_bot(t, 3);
  Proof p = make_par(b2, 1, 2);
  Proof b3 = make_bot(p, 1);
  return make_par(b3, 3, 4);
}

// Here the 1 carries two bots from the start.
inline mll::Proof marked_proof_two() {
  using namespace mll;
  Proof ax = make_ax("P");
  Proof units = make_bot(make_bot(make_one()));
  Proof t = make_tensor(ax, units, 1, 0);
  Proof b = make_bot(t, 0);
  Proof p = make_par(b, 3, 4);
  Proof q = make_par(p, 0, 1);
  return make_bot(q, 1, principal_first(3));
}

}  // namespace th
