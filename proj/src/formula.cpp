#include "mll/formula.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "mll/errors.hpp"

namespace mll {

Formula Formula::var(std::string name) {
  return Formula({Node{Kind::Var, 1, std::move(name)}});
}

Formula Formula::dual_var(std::string name) {
  return Formula({Node{Kind::DualVar, 1, std::move(name)}});
}

Formula Formula::one() { return Formula({Node{Kind::One, 1, {}}}); }

Formula Formula::bot() { return Formula({Node{Kind::Bot, 1, {}}}); }

Formula Formula::atom(const Atom& a) {
  switch (a.kind) {
    case Kind::Var: return var(a.name);
    case Kind::DualVar: return dual_var(a.name);
    case Kind::One: return one();
    case Kind::Bot: return bot();
    default: throw PreconditionError("Formula::atom: connective given as atom");
  }
}

Formula Formula::binary(Kind connective, const Formula& left, const Formula& right) {
  if (mll::is_atom(connective)) throw PreconditionError("Formula::binary: atom given as connective");
  std::vector<Node> nodes;
  nodes.reserve(1 + left.size() + right.size());
  nodes.push_back(Node{connective, static_cast<std::uint32_t>(1 + left.size() + right.size()), {}});
  nodes.insert(nodes.end(), left.nodes_.begin(), left.nodes_.end());
  nodes.insert(nodes.end(), right.nodes_.begin(), right.nodes_.end());
  return Formula(std::move(nodes));
}

Formula Formula::tensor(const Formula& left, const Formula& right) {
  return binary(Kind::Tensor, left, right);
}

Formula Formula::par(const Formula& left, const Formula& right) {
  return binary(Kind::Par, left, right);
}

Formula Formula::from_nodes(std::vector<Node> nodes) {
  if (nodes.empty()) throw PreconditionError("Formula::from_nodes: empty node list");
  // Every subtree must end exactly where its size says; checked with a stack
  // of pending child counts.
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0 && pending.empty()) throw PreconditionError("Formula::from_nodes: trailing nodes");
    if (!pending.empty()) --pending.back();
    const Node& n = nodes[i];
    if (mll::is_atom(n.kind)) {
      if (n.size != 1) throw PreconditionError("Formula::from_nodes: atom with size != 1");
      bool named = n.kind == Kind::Var || n.kind == Kind::DualVar;
      if (named == n.name.empty()) throw PreconditionError("Formula::from_nodes: bad atom name");
    } else {
      if (n.size < 3) throw PreconditionError("Formula::from_nodes: connective too small");
      pending.push_back(2);
    }
    while (!pending.empty() && pending.back() == 0) pending.pop_back();
  }
  if (!pending.empty()) throw PreconditionError("Formula::from_nodes: truncated node list");
  // Recompute sizes bottom-up and compare.
  std::vector<std::uint32_t> size(nodes.size(), 1);
  for (std::size_t i = nodes.size(); i-- > 0;) {
    if (!mll::is_atom(nodes[i].kind)) {
      std::size_t l = i + 1;
      std::size_t r = l + size[l];
      size[i] = 1 + size[l] + size[r];
    }
    if (size[i] != nodes[i].size) throw PreconditionError("Formula::from_nodes: inconsistent sizes");
  }
  return Formula(std::move(nodes));
}

Formula Formula::subformula(std::size_t node) const {
  if (node >= nodes_.size()) throw PreconditionError("Formula::subformula: offset out of range");
  auto first = nodes_.begin() + static_cast<std::ptrdiff_t>(node);
  return Formula(std::vector<Node>(first, first + nodes_[node].size));
}

Formula Formula::left() const {
  if (is_atom()) throw PreconditionError("Formula::left: atom has no children");
  return subformula(1);
}

Formula Formula::right() const {
  if (is_atom()) throw PreconditionError("Formula::right: atom has no children");
  return subformula(1 + nodes_[1].size);
}

std::size_t Formula::leaf_count() const noexcept {
  // n binary nodes carry n + 1 leaves.
  return (nodes_.size() + 1) / 2;
}

std::size_t Formula::par_count() const noexcept {
  std::size_t n = 0;
  for (const Node& node : nodes_) n += node.kind == Kind::Par;
  return n;
}

Formula negate(const Formula& f) {
  std::vector<Formula::Node> nodes(f.nodes().begin(), f.nodes().end());
  for (Formula::Node& n : nodes) n.kind = dual(n.kind);
  return Formula::from_nodes(std::move(nodes));
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

struct ParsedNode {
  Kind kind;
  std::string name;
  std::size_t left = 0;
  std::size_t right = 0;
  std::uint32_t size = 1;
};

struct Frame {
  std::size_t open;
  std::optional<std::size_t> left;
  std::optional<Kind> op;
  std::optional<std::size_t> right;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  std::vector<ParsedNode> parsed;
  std::vector<Frame> stack;
  std::optional<std::size_t> root;

  auto deliver = [&](std::size_t id, std::size_t pos) {
    if (stack.empty()) {
      if (root) throw ParseError("unexpected trailing formula", pos);
      root = id;
      return;
    }
    Frame& top = stack.back();
    if (!top.left) {
      top.left = id;
    } else if (top.op && !top.right) {
      top.right = id;
    } else {
      throw ParseError(top.op ? "expected ')'" : "expected '*' or '@'", pos);
    }
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    if (c == '(') {
      if (stack.empty() && root) throw ParseError("unexpected trailing formula", pos);
      stack.push_back(Frame{pos, {}, {}, {}});
      ++i;
    } else if (c == '*' || c == '@') {
      if (stack.empty() || !stack.back().left || stack.back().op)
        throw ParseError(std::string("unexpected '") + c + "'", pos);
      stack.back().op = c == '*' ? Kind::Tensor : Kind::Par;
      ++i;
    } else if (c == ')') {
      if (stack.empty()) throw ParseError("unmatched ')'", pos);
      Frame top = stack.back();
      if (!top.right) throw ParseError("incomplete binary formula", pos);
      stack.pop_back();
      ParsedNode n{*top.op, {}, *top.left, *top.right, 0};
      n.size = 1 + parsed[n.left].size + parsed[n.right].size;
      parsed.push_back(std::move(n));
      ++i;
      // A dual marker may not follow a compound formula.
      std::size_t j = i;
      while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
      if (j < text.size() && text[j] == '^')
        throw ParseError("'^' applies to variables only", j);
      deliver(parsed.size() - 1, pos);
    } else if (c == '1') {
      ++i;
      if (i < text.size() && (ident_char(text[i]) || text[i] == '^'))
        throw ParseError(text[i] == '^' ? "'^' applies to variables only" : "unexpected character",
                         i);
      parsed.push_back(ParsedNode{Kind::One, {}, 0, 0, 1});
      deliver(parsed.size() - 1, pos);
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string name(text.substr(i, j - i));
      i = j;
      bool dualised = false;
      std::size_t k = i;
      while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
      if (k < text.size() && text[k] == '^') {
        dualised = true;
        i = k + 1;
      }
      if (name == "bot") {
        if (dualised) throw ParseError("'^' applies to variables only", k);
        parsed.push_back(ParsedNode{Kind::Bot, {}, 0, 0, 1});
      } else {
        parsed.push_back(ParsedNode{dualised ? Kind::DualVar : Kind::Var, std::move(name), 0, 0, 1});
      }
      deliver(parsed.size() - 1, pos);
    } else if (c == '^') {
      throw ParseError("'^' applies to variables only", pos);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
  }
  if (!stack.empty()) throw ParseError("unclosed '('", stack.back().open);
  if (!root) throw ParseError("empty formula", text.size());

  std::vector<Formula::Node> nodes;
  nodes.reserve(parsed[*root].size);
  std::vector<std::size_t> todo{*root};
  while (!todo.empty()) {
    std::size_t id = todo.back();
    todo.pop_back();
    ParsedNode& n = parsed[id];
    nodes.push_back(Formula::Node{n.kind, n.size, std::move(n.name)});
    if (!is_atom(n.kind)) {
      todo.push_back(n.right);
      todo.push_back(n.left);
    }
  }
  return Formula::from_nodes(std::move(nodes));
}

std::string print_atom(const Atom& a) {
  switch (a.kind) {
    case Kind::Var: return a.name;
    case Kind::DualVar: return a.name + "^";
    case Kind::One: return "1";
    case Kind::Bot: return "bot";
    default: return "?";
  }
}

std::string print_formula(const Formula& f) {
  auto nodes = f.nodes();
  std::string out;
  // Entries are node offsets; the sentinel values below emit punctuation.
  constexpr std::size_t kClose = static_cast<std::size_t>(-1);
  constexpr std::size_t kTensor = static_cast<std::size_t>(-2);
  constexpr std::size_t kPar = static_cast<std::size_t>(-3);
  std::vector<std::size_t> todo{0};
  while (!todo.empty()) {
    std::size_t i = todo.back();
    todo.pop_back();
    if (i == kClose) {
      out += ')';
    } else if (i == kTensor) {
      out += " * ";
    } else if (i == kPar) {
      out += " @ ";
    } else if (is_atom(nodes[i].kind)) {
      out += print_atom(Atom{nodes[i].kind, nodes[i].name});
    } else {
      std::size_t l = i + 1;
      std::size_t r = l + nodes[l].size;
      out += '(';
      todo.push_back(kClose);
      todo.push_back(r);
      todo.push_back(nodes[i].kind == Kind::Tensor ? kTensor : kPar);
      todo.push_back(l);
    }
  }
  return out;
}

}  // namespace mll
