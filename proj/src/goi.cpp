#include "mll/goi.hpp"

#include <algorithm>
#include <string>

#include "mll/errors.hpp"

namespace mll {

namespace {

const SignedSet& side(const SignedSet& s, const SignedSet& t, End e) {
  return e == End::Source ? s : t;
}

}  // namespace

bool GoiMorphism::is_input(Port p) const {
  const SignedSet& set = side(source_, target_, p.end);
  if (p.index >= set.size()) return false;
  Polarity want = p.end == End::Source ? Polarity::Positive : Polarity::Negative;
  return set[p.index] == want;
}

bool GoiMorphism::is_output(Port p) const {
  const SignedSet& set = side(source_, target_, p.end);
  if (p.index >= set.size()) return false;
  Polarity want = p.end == End::Source ? Polarity::Negative : Polarity::Positive;
  return set[p.index] == want;
}

GoiMorphism::GoiMorphism(SignedSet source, SignedSet target, std::vector<PortPair> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  std::sort(map_.begin(), map_.end());
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (!is_input(map_[i].first)) throw PreconditionError("GoI map input outside S+ + T-");
    if (!is_output(map_[i].second)) throw PreconditionError("GoI map output outside S- + T+");
    if (i > 0 && map_[i - 1].first == map_[i].first)
      throw PreconditionError("GoI map has two images for one input");
  }
}

std::optional<Port> GoiMorphism::operator()(Port in) const {
  auto it = std::lower_bound(map_.begin(), map_.end(), in,
                             [](const PortPair& p, const Port& x) { return p.first < x; });
  if (it == map_.end() || it->first != in) return std::nullopt;
  return it->second;
}

GoiMorphism compose_goi(const GoiMorphism& f, const GoiMorphism& g) {
  if (f.target() != g.source()) throw PreconditionError("GoI composition: middle objects differ");
  const std::size_t middle = f.target().size();
  std::vector<std::uint32_t> seen(middle, 0);  // stamp of the last walk through each element
  std::uint32_t stamp = 0;

  // Walk from an input of f (in_f) or of g, bouncing across the middle object.
  auto walk = [&](bool in_f, Port p) -> std::optional<Port> {
    ++stamp;
    while (true) {
      std::optional<Port> out = in_f ? f(p) : g(p);
      if (!out) return std::nullopt;
      bool leaves = in_f ? out->end == End::Source : out->end == End::Target;
      if (leaves) return out;
      if (seen[out->index] == stamp) return std::nullopt;
      seen[out->index] = stamp;
      p = Port{in_f ? End::Source : End::Target, out->index};
      in_f = !in_f;
    }
  };

  std::vector<PortPair> map;
  for (std::uint32_t i = 0; i < f.source().size(); ++i) {
    if (f.source()[i] != Polarity::Positive) continue;
    if (auto out = walk(true, Port{End::Source, i})) map.emplace_back(Port{End::Source, i}, *out);
  }
  for (std::uint32_t i = 0; i < g.target().size(); ++i) {
    if (g.target()[i] != Polarity::Negative) continue;
    if (auto out = walk(false, Port{End::Target, i})) map.emplace_back(Port{End::Target, i}, *out);
  }
  return GoiMorphism(f.source(), g.target(), std::move(map));
}

GoiMorphism identity_goi(const SignedSet& s) {
  std::vector<PortPair> map;
  for (std::uint32_t i = 0; i < s.size(); ++i) {
    if (s[i] == Polarity::Positive)
      map.emplace_back(Port{End::Source, i}, Port{End::Target, i});
    else
      map.emplace_back(Port{End::Target, i}, Port{End::Source, i});
  }
  return GoiMorphism(s, s, std::move(map));
}

std::vector<std::uint32_t> domain_on(const GoiMorphism& f, End end) {
  std::vector<std::uint32_t> out;
  for (const auto& [in, _] : f.map())
    if (in.end == end) out.push_back(in.index);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> image_on(const GoiMorphism& f, End end) {
  std::vector<std::uint32_t> out;
  for (const auto& [_, to] : f.map())
    if (to.end == end) out.push_back(to.index);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool synchronises(const GoiMorphism& f, const GoiMorphism& g) {
  if (f.target() != g.source()) throw PreconditionError("synchronises: middle objects differ");
  return image_on(f, End::Target) == domain_on(g, End::Source) &&
         domain_on(f, End::Target) == image_on(g, End::Source);
}

}  // namespace mll
