#include "explore.hpp"

#include <set>

namespace explore {

std::string key(const mll::CutSequent& g, const mll::LeafFunction& f) {
  std::string out;
  for (const mll::Formula& t : g.trees()) out += mll::print_formula(t) + ",";
  out += "|";
  for (const mll::Cut& c : g.cuts()) out += std::to_string(c.first) + "-" + std::to_string(c.second) + ",";
  out += "|";
  for (auto [a, b] : f.edges()) out += std::to_string(a) + ">" + std::to_string(b) + ",";
  return out;
}

namespace {

struct Search {
  Orders result;
  std::set<std::string> seen;
  std::set<std::string> forms;

  void visit(const mll::LeafFunction& f, const mll::CutSequent& g) {
    std::string k = key(g, f);
    if (!seen.insert(k).second) return;
    if (g.cuts().empty()) {
      forms.insert(k);
      return;
    }
    for (std::size_t c = 0; c < g.cuts().size(); ++c) {
      mll::CutElimination e = mll::eliminate_cut(f, g, c);
      if (!mll::check_fast(e.function, e.sequent).valid) result.every_step_valid = false;
      if (e.sequent.vertex_count() >= g.vertex_count()) result.strictly_decreasing = false;
      visit(e.function, e.sequent);
    }
  }
};

}  // namespace

Orders all_orders(const mll::LeafFunction& f, const mll::CutSequent& g) {
  Search s;
  s.visit(f, g);
  s.result.states = s.seen.size();
  s.result.normal_forms.assign(s.forms.begin(), s.forms.end());
  return s.result;
}

}  // namespace explore
