#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "mll/calculus.hpp"
#include "mll/category.hpp"
#include "mll/lamination.hpp"
#include "mll/rewrite.hpp"

// JSON formats. Leaf indices are global and left to right; vertex ids are
// pre-order positions over the whole forest (tree 0 first).
//
//   net       {"sequent": [formula], "cuts": [[i, j]], "edges": [[neg, pos]]}
//   old net   {"sequent": [formula], "cuts": [[i, j]], "jumps": [[neg, vertex]],
//              "axioms": [[leaf, leaf]]}
//   morphism  {"source": formula, "target": formula, "edges": [[neg, pos]]}
//             over the leaves of [negate(source), target]
//   goi       {"source": ["+" | "-"], "target": [...], "map": [[tag, i, tag, j]]}
//             tags "s+" "t-" on the input side, "s-" "t+" on the output side
//   lam       {"source": [...], "target": [...], "members": [map]}
//   proof     {"rule": "ax" | "one" | "bot" | "tensor" | "par" | "cut",
//              "conclusion": [formula], "premises": [proof], "pos": [i, j],
//              "layout": [[premise, index]], "mark": leaf}
//             [-1, 0] in a layout is the principal formula. On input,
//             "conclusion" and "layout" may be omitted (derived, default
//             layout), and an axiom may give "var" instead.
//
// "cuts" may be omitted on input. Output uses sorted keys and sorted edges.

namespace mll::io {

using Json = nlohmann::json;

/// Throws FormatError.
Json parse_json(std::string_view text);

/// Compact form followed by a newline.
std::string dump(const Json& j);

struct NetData {
  CutSequent sequent;
  LeafFunction function;
};

Json net_to_json(const CutSequent& g, const LeafFunction& f);
Json net_to_json(const ProofNet& net);
NetData net_from_json(const Json& j);

Json old_net_to_json(const OldNet& o);
OldNet old_net_from_json(const Json& j);

Json morphism_to_json(const NetMorphism& m);
/// Validates the net (NotAProofNet).
NetMorphism morphism_from_json(const Json& j);

Json signed_set_to_json(const SignedSet& s);
SignedSet signed_set_from_json(const Json& j);

Json goi_to_json(const GoiMorphism& f);
GoiMorphism goi_from_json(const Json& j);

Json lam_to_json(const LaminatedMorphism& l);
LaminatedMorphism lam_from_json(const Json& j);

Json proof_to_json(const Proof& p);
Proof proof_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Json step_to_json(const EliminationStep& s);

/// DOT drawing: every vertex is a node, parse edges are plain lines, f-edges
/// are curved arrows and cut edges are dashed.
std::string render_dot(const CutSequent& g, const LeafFunction& f);

/// As above, with jumps drawn to their target vertices and axiom links as
/// undirected edges.
std::string render_dot(const OldNet& o);

}  // namespace mll::io
