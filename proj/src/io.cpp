#include "mll/io.hpp"

#include <algorithm>

namespace mll::io {

namespace {

// Runs a decoder, reporting shape problems as FormatError.
template <class F>
auto decoding(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  } catch (const PreconditionError& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint32_t index_value(const Json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0 ||
      j.get<std::int64_t>() > std::int64_t{0xFFFFFFFE})
    throw FormatError("expected a non-negative index, got " + j.dump());
  return static_cast<std::uint32_t>(j.get<std::int64_t>());
}

std::pair<std::uint32_t, std::uint32_t> index_pair(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("expected a pair, got " + j.dump());
  return {index_value(j[0]), index_value(j[1])};
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of pairs");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const Json& x : j) out.push_back(index_pair(x));
  return out;
}

Formula formula_value(const Json& j) {
  if (!j.is_string()) throw FormatError("expected a formula string, got " + j.dump());
  return parse_formula(j.get<std::string>());
}

std::vector<Formula> formulas(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of formulas");
  std::vector<Formula> out;
  for (const Json& x : j) out.push_back(formula_value(x));
  return out;
}

Json formulas_to_json(const std::vector<Formula>& fs) {
  Json out = Json::array();
  for (const Formula& f : fs) out.push_back(print_formula(f));
  return out;
}

CutSequent sequent_from(const Json& j) {
  std::vector<Formula> trees = formulas(member(j, "sequent"));
  std::vector<Cut> cuts;
  if (j.contains("cuts"))
    for (auto [a, b] : pairs(j["cuts"])) cuts.push_back(Cut{a, b});
  return CutSequent(std::move(trees), std::move(cuts));
}

Json cuts_to_json(const CutSequent& g) {
  Json out = Json::array();
  for (const Cut& c : g.cuts()) out.push_back({c.first, c.second});
  return out;
}

Json edges_to_json(const std::vector<LeafEdge>& edges) {
  Json out = Json::array();
  for (const auto& [a, b] : edges) out.push_back({a, b});
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json net_to_json(const CutSequent& g, const LeafFunction& f) {
  Json out;
  out["sequent"] = formulas_to_json(g.trees());
  out["cuts"] = cuts_to_json(g);
  out["edges"] = edges_to_json(f.edges());
  return out;
}

Json net_to_json(const ProofNet& net) { return net_to_json(net.sequent(), net.function()); }

NetData net_from_json(const Json& j) {
  return decoding("net", [&] {
    CutSequent g = sequent_from(j);
    LeafFunction f = LeafFunction::from_edges(g, pairs(member(j, "edges")));
    return NetData{std::move(g), std::move(f)};
  });
}

Json old_net_to_json(const OldNet& o) {
  Json out;
  out["sequent"] = formulas_to_json(o.sequent.trees());
  out["cuts"] = cuts_to_json(o.sequent);
  auto jumps = o.jumps;
  auto axioms = o.axioms;
  std::sort(jumps.begin(), jumps.end());
  std::sort(axioms.begin(), axioms.end());
  out["jumps"] = Json::array();
  for (auto [l, v] : jumps) out["jumps"].push_back({l, v});
  out["axioms"] = Json::array();
  for (auto [a, b] : axioms) out["axioms"].push_back({a, b});
  return out;
}

OldNet old_net_from_json(const Json& j) {
  return decoding("old net", [&] {
    OldNet o{sequent_from(j), {}, {}};
    if (j.contains("jumps")) o.jumps = pairs(j["jumps"]);
    if (j.contains("axioms")) o.axioms = pairs(j["axioms"]);
    return o;
  });
}

Json morphism_to_json(const NetMorphism& m) {
  Json out;
  out["source"] = print_formula(m.source());
  out["target"] = print_formula(m.target());
  out["edges"] = edges_to_json(m.edges());
  return out;
}

NetMorphism morphism_from_json(const Json& j) {
  Formula source, target;
  std::vector<LeafEdge> edges;
  decoding("morphism", [&] {
    source = formula_value(member(j, "source"));
    target = formula_value(member(j, "target"));
    edges = pairs(member(j, "edges"));
    CutSequent g({negate(source), target});
    (void)LeafFunction::from_edges(g, edges);
    return 0;
  });
  return NetMorphism::make(std::move(source), std::move(target), edges);
}

Json signed_set_to_json(const SignedSet& s) {
  Json out = Json::array();
  for (Polarity p : s.signs) out.push_back(p == Polarity::Positive ? "+" : "-");
  return out;
}

SignedSet signed_set_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of signs");
  SignedSet s;
  for (const Json& x : j) {
    if (x == "+") s.signs.push_back(Polarity::Positive);
    else if (x == "-") s.signs.push_back(Polarity::Negative);
    else throw FormatError("expected \"+\" or \"-\", got " + x.dump());
  }
  return s;
}

namespace {

std::string port_tag(const GoiMorphism& f, Port p) {
  const SignedSet& set = p.end == End::Source ? f.source() : f.target();
  return std::string(p.end == End::Source ? "s" : "t") +
         (set[p.index] == Polarity::Positive ? "+" : "-");
}

Json map_to_json(const GoiMorphism& f) {
  Json out = Json::array();
  for (const auto& [a, b] : f.map())
    out.push_back({port_tag(f, a), a.index, port_tag(f, b), b.index});
  return out;
}

std::vector<PortPair> map_from_json(const Json& j, const SignedSet& s, const SignedSet& t) {
  if (!j.is_array()) throw FormatError("expected a GoI map array");
  auto port = [&](const Json& tag, const Json& index) {
    if (!tag.is_string()) throw FormatError("expected a port tag, got " + tag.dump());
    std::string name = tag.get<std::string>();
    if (name.size() != 2 || (name[0] != 's' && name[0] != 't') || (name[1] != '+' && name[1] != '-'))
      throw FormatError("bad port tag " + tag.dump());
    Port p{name[0] == 's' ? End::Source : End::Target, index_value(index)};
    const SignedSet& set = p.end == End::Source ? s : t;
    if (p.index >= set.size()) throw FormatError("port index out of range: " + std::to_string(p.index));
    Polarity want = name[1] == '+' ? Polarity::Positive : Polarity::Negative;
    if (set[p.index] != want) throw FormatError("port tag " + name + " disagrees with the sign of element " + std::to_string(p.index));
    return p;
  };
  std::vector<PortPair> out;
  for (const Json& x : j) {
    if (!x.is_array() || x.size() != 4) throw FormatError("expected [tag, i, tag, j], got " + x.dump());
    out.emplace_back(port(x[0], x[1]), port(x[2], x[3]));
  }
  return out;
}

}  // namespace

Json goi_to_json(const GoiMorphism& f) {
  Json out;
  out["source"] = signed_set_to_json(f.source());
  out["target"] = signed_set_to_json(f.target());
  out["map"] = map_to_json(f);
  return out;
}

GoiMorphism goi_from_json(const Json& j) {
  return decoding("GoI morphism", [&] {
    SignedSet s = signed_set_from_json(member(j, "source"));
    SignedSet t = signed_set_from_json(member(j, "target"));
    std::vector<PortPair> map = map_from_json(member(j, "map"), s, t);
    return GoiMorphism(std::move(s), std::move(t), std::move(map));
  });
}

Json lam_to_json(const LaminatedMorphism& l) {
  Json out;
  out["source"] = signed_set_to_json(l.source());
  out["target"] = signed_set_to_json(l.target());
  out["members"] = Json::array();
  for (const GoiMorphism& f : l.members()) out["members"].push_back(map_to_json(f));
  return out;
}

LaminatedMorphism lam_from_json(const Json& j) {
  return decoding("laminated morphism", [&] {
    SignedSet s = signed_set_from_json(member(j, "source"));
    SignedSet t = signed_set_from_json(member(j, "target"));
    const Json& ms = member(j, "members");
    if (!ms.is_array()) throw FormatError("expected an array of members");
    std::vector<GoiMorphism> members;
    for (const Json& m : ms) members.emplace_back(s, t, map_from_json(m, s, t));
    return LaminatedMorphism(std::move(s), std::move(t), std::move(members));
  });
}

Json proof_to_json(const Proof& p) {
  Json out;
  out["rule"] = rule_name(p.rule);
  out["conclusion"] = formulas_to_json(p.conclusion);
  if (!p.premises.empty()) {
    out["premises"] = Json::array();
    for (const Proof& q : p.premises) out["premises"].push_back(proof_to_json(q));
  }
  if (!p.pos.empty()) out["pos"] = p.pos;
  if (p.rule != Rule::Ax && p.rule != Rule::One) {
    out["layout"] = Json::array();
    for (const Slot& s : p.layout)
      out["layout"].push_back({s.premise, s.premise == Slot::kPrincipal ? 0 : s.index});
  }
  if (p.mark) out["mark"] = *p.mark;
  return out;
}

namespace {

Rule rule_from(const Json& j) {
  if (!j.is_string()) throw FormatError("expected a rule name");
  const std::string name = j.get<std::string>();
  for (Rule r : {Rule::Ax, Rule::One, Rule::Bot, Rule::Tensor, Rule::Par, Rule::Cut})
    if (name == rule_name(r)) return r;
  throw FormatError("unknown rule \"" + name + "\"");
}

Proof proof_node(const Json& j) {
  Proof p;
  p.rule = rule_from(member(j, "rule"));
  if (j.contains("premises")) {
    if (!j["premises"].is_array()) throw FormatError("premises must be an array");
    for (const Json& q : j["premises"]) p.premises.push_back(proof_node(q));
  }
  if (j.contains("pos")) {
    if (!j["pos"].is_array()) throw FormatError("pos must be an array");
    for (const Json& x : j["pos"]) p.pos.push_back(index_value(x));
  }
  if (j.contains("mark")) p.mark = index_value(j["mark"]);
  if (j.contains("layout")) {
    if (!j["layout"].is_array()) throw FormatError("layout must be an array");
    for (const Json& s : j["layout"]) {
      if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer())
        throw FormatError("bad layout slot " + s.dump());
      int premise = s[0].get<int>();
      if (premise == Slot::kPrincipal) p.layout.push_back(Slot{});
      else p.layout.push_back(Slot{premise, index_value(s[1])});
    }
  } else {
    p.layout = default_layout(p.rule, p.premises, p.pos);
  }

  if (j.contains("conclusion")) {
    p.conclusion = formulas(j["conclusion"]);
  } else if (p.rule == Rule::Ax) {
    const Json& v = member(j, "var");
    if (!v.is_string()) throw FormatError("axiom variable must be a string");
    p.conclusion = {Formula::var(v.get<std::string>()), Formula::dual_var(v.get<std::string>())};
  } else {
    p.conclusion = derive_conclusion(p);
  }
  return p;
}

}  // namespace

Proof proof_from_json(const Json& j) {
  return decoding("proof", [&] { return proof_node(j); });
}

Json witness_to_json(const Witness& w) {
  Json out;
  out["valid"] = false;
  out["detail"] = w.detail;
  switch (w.kind) {
    case Witness::Kind::Matching: out["reason"] = "matching"; break;
    case Witness::Kind::Cycle:
      out["reason"] = "cycle";
      out["cycle"] = w.cycle;
      break;
    case Witness::Kind::Disconnected:
      out["reason"] = "disconnected";
      out["separated"] = {w.separated.first, w.separated.second};
      break;
  }
  if (w.switching) {
    std::string s;
    for (Side side : w.switching->choices) s += side == Side::Left ? 'L' : 'R';
    out["switching"] = s;
  }
  return out;
}

Json step_to_json(const EliminationStep& s) {
  Json out;
  out["cut"] = s.cut;
  out["trees"] = {s.trees.first, s.trees.second};
  out["formula"] = print_formula(s.formula);
  out["case"] = s.kind == EliminationStep::Case::Atom ? "atom" : "compound";
  return out;
}

}  // namespace mll::io
