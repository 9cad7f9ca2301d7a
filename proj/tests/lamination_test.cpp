#include <doctest.h>

#include "generators.hpp"

#include "mll/lamination.hpp"

using namespace mll;

namespace {

SignedSet signs(const char* text) {
  SignedSet s;
  for (const char* c = text; *c; ++c) s.signs.push_back(*c == '+' ? Polarity::Positive : Polarity::Negative);
  return s;
}

Port s(std::uint32_t i) { return {End::Source, i}; }
Port t(std::uint32_t i) { return {End::Target, i}; }

// Every laminated morphism a -> b with at most `members` members.
std::vector<LaminatedMorphism> all_lams(const SignedSet& a, const SignedSet& b, std::size_t members) {
  auto fs = gen::all_goi(a, b);
  std::vector<LaminatedMorphism> out{LaminatedMorphism(a, b, {})};
  for (std::size_t i = 0; i < fs.size(); ++i) {
    out.emplace_back(a, b, std::vector<GoiMorphism>{fs[i]});
    if (members >= 2)
      for (std::size_t j = i + 1; j < fs.size(); ++j) out.emplace_back(a, b, std::vector<GoiMorphism>{fs[i], fs[j]});
  }
  return out;
}

LaminatedMorphism random_lam(gen::Rng& rng, const SignedSet& a, const SignedSet& b, std::size_t members) {
  std::vector<GoiMorphism> ms;
  for (std::size_t k = 0; k < members; ++k) ms.push_back(gen::random_goi(rng, a, b));
  return LaminatedMorphism(a, b, ms);
}

}  // namespace

TEST_SUITE("lamination") {

TEST_CASE("singletons") {
  SignedSet S = signs("+"), T = signs("+"), U = signs("+");
  GoiMorphism f(S, T, {{s(0), t(0)}}), g(T, U, {{s(0), t(0)}});
  LaminatedMorphism l(S, T, {f}), m(T, U, {g});
  CHECK(compose_lam(l, m) == LaminatedMorphism(S, U, {compose_goi(f, g)}));
  LaminatedMorphism e(T, U, {GoiMorphism(T, U, {})});
  CHECK(compose_lam(l, e).size() == 0);
}

TEST_CASE("members are a set") {
  SignedSet S = signs("+-");
  GoiMorphism a = identity_goi(S), b(S, S, {});
  CHECK(LaminatedMorphism(S, S, {a, b, a}) == LaminatedMorphism(S, S, {b, a}));
  CHECK(LaminatedMorphism(S, S, {a, b, a}).size() == 2);
  CHECK_THROWS_AS(LaminatedMorphism(S, signs("+"), {a}), PreconditionError);
}

TEST_CASE("identity sizes and the embedding") {
  CHECK(identity_lam(signs("+")).size() == 2);
  CHECK(identity_lam(signs("+-")).size() == 4);
  CHECK(identity_lam(signs("")).size() == 1);
  SignedSet T = signs("+-");
  CHECK(embed(GoiMorphism(signs("+"), T, {})).size() == 1);
  gen::Rng rng(71);
  for (int k = 0; k < 100; ++k) {
    SignedSet A = gen::random_signed_set(rng, rng() % 6);
    CHECK(identity_lam(A).size() == (std::size_t{1} << A.size()));
    CHECK(embed(identity_goi(A)) == identity_lam(A));
    GoiMorphism f = gen::random_goi(rng, A, gen::random_signed_set(rng, rng() % 5));
    CHECK(embed(f).size() == (std::size_t{1} << f.size()));
  }
}

TEST_CASE("embedding against composition (recorded only)") {
  // Whether embed(f);embed(g) equals embed(f;g) is reported, not required.
  auto objects = gen::signed_sets(2);
  std::size_t pairs = 0, equal = 0;
  for (const SignedSet& A : objects)
    for (const SignedSet& B : objects)
      for (const SignedSet& C : objects)
        for (const GoiMorphism& f : gen::all_goi(A, B))
          for (const GoiMorphism& g : gen::all_goi(B, C)) {
            ++pairs;
            equal += compose_lam(embed(f), embed(g)) == embed(compose_goi(f, g));
          }
  MESSAGE("embed preserves composition on " << equal << " of " << pairs << " pairs");
  CHECK(pairs > 1000);
}

TEST_CASE("a chain through a middle set cut off after k rungs") {
  // S, T, V singletons; U = u1 u1' .. uk uk'. g enters at u1 and steps
  // uj' -> u(j+1); h steps uj -> uj'. With U infinite the chain never comes
  // back out; cut off, the last uj' has no g-edge, so g and h stop
  // synchronising and both bracketings are empty.
  for (std::uint32_t k = 1; k <= 12; ++k) {
    std::string u;
    for (std::uint32_t j = 0; j < k; ++j) u += "+-";
    SignedSet S = signs("+"), T = signs("+"), U = signs(u.c_str()), V = signs("+");
    GoiMorphism f(S, T, {{s(0), t(0)}});
    std::vector<std::pair<Port, Port>> gm{{s(0), t(0)}}, hm;
    for (std::uint32_t j = 0; j < k; ++j) {
      hm.push_back({s(2 * j), s(2 * j + 1)});
      if (j + 1 < k) gm.push_back({t(2 * j + 1), t(2 * j + 2)});
    }
    GoiMorphism g(T, U, gm), h(U, V, hm);
    CHECK(synchronises(f, g));
    CHECK_FALSE(synchronises(g, h));
    CHECK_FALSE(synchronises(compose_goi(f, g), h));
    LaminatedMorphism l(S, T, {f}), m(T, U, {g}), n(U, V, {h});
    CHECK(compose_lam(compose_lam(l, m), n) == compose_lam(l, compose_lam(m, n)));
    CHECK(compose_lam(l, compose_lam(m, n)).size() == 0);
    // Plain composition agrees either way.
    CHECK(compose_goi(compose_goi(f, g), h) == compose_goi(f, compose_goi(g, h)));
  }
}

TEST_CASE("identity laws") {
  auto objects = gen::signed_sets(2);
  std::size_t checked = 0;
  for (const SignedSet& A : objects)
    for (const SignedSet& B : objects)
      for (const LaminatedMorphism& l : all_lams(A, B, 2)) {
        ++checked;
        CHECK(compose_lam(identity_lam(A), l) == l);
        CHECK(compose_lam(l, identity_lam(B)) == l);
      }
  CHECK(checked > 100);
}

TEST_CASE("associativity on singleton laminations") {
  auto objects = gen::signed_sets(2);
  std::size_t failures = 0, triples = 0;
  for (const SignedSet& A : objects)
    for (const SignedSet& B : objects)
      for (const SignedSet& C : objects)
        for (const SignedSet& D : objects) {
          auto ls = all_lams(A, B, 1), ms = all_lams(B, C, 1), ns = all_lams(C, D, 1);
          for (const auto& l : ls)
            for (const auto& m : ms) {
              LaminatedMorphism lm = compose_lam(l, m);
              for (const auto& n : ns) {
                ++triples;
                failures += compose_lam(lm, n) != compose_lam(l, compose_lam(m, n));
              }
            }
        }
  INFO(failures << " of " << triples << " triples are not associative");
  CHECK(failures == 0);
}

TEST_CASE("associativity on random two-member laminations") {
  gen::Rng rng(72);
  std::size_t failures = 0;
  for (int k = 0; k < 20000; ++k) {
    SignedSet A = gen::random_signed_set(rng, rng() % 3), B = gen::random_signed_set(rng, rng() % 3),
              C = gen::random_signed_set(rng, rng() % 3), D = gen::random_signed_set(rng, rng() % 3);
    auto l = random_lam(rng, A, B, 2), m = random_lam(rng, B, C, 2), n = random_lam(rng, C, D, 2);
    failures += compose_lam(compose_lam(l, m), n) != compose_lam(l, compose_lam(m, n));
  }
  INFO(failures << " of 20000 random triples are not associative");
  CHECK(failures == 0);
}

}  // TEST_SUITE
