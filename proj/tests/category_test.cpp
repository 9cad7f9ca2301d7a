#include <doctest.h>

#include "generators.hpp"
#include "helpers.hpp"

#include "mll/rewrite.hpp"

using namespace mll;

namespace {

Formula intro_a() { return parse_formula("(((1 * 1) * (P * P^)) * (1 * bot))"); }
Formula intro_b() { return parse_formula("((P * P^) * ((Q @ Q^) * bot))"); }
Formula intro_c() { return parse_formula("(((bot * Q) @ Q^) * (bot @ bot))"); }

NetMorphism intro_f() {
  return NetMorphism::make(intro_a(), intro_b(), {{0, 6}, {1, 8}, {2, 6}, {4, 5}, {7, 3}, {9, 8}, {10, 5}});
}

NetMorphism intro_g() {
  return NetMorphism::make(intro_b(), intro_c(), {{0, 1}, {2, 6}, {5, 1}, {7, 3}, {8, 4}, {9, 4}});
}

struct Triple {
  NetMorphism f, g, h;
};

std::vector<Triple> triples(std::uint64_t seed, int count) {
  gen::Rng rng(seed);
  gen::ProofOptions opt;
  opt.cut_rate = 0.2;
  std::vector<Triple> out;
  for (int k = 0; k < count; ++k) {
    NetMorphism f = gen::random_morphism(rng, 1 + k % 6, opt);
    NetMorphism g = gen::morphism_from(rng, f.target(), opt);
    NetMorphism h = gen::morphism_from(rng, g.target(), opt);
    out.push_back({f, g, h});
  }
  return out;
}

}  // namespace

TEST_SUITE("category") {

TEST_CASE("identities") {
  NetMorphism id = identity_net(parse_formula("(bot * P)"));
  CHECK(id.net().sequent() == th::seq({"(1 @ P^)", "(bot * P)"}));
  CHECK(id.edges() == std::vector<LeafEdge>{{1, 3}, {2, 0}});
  CHECK(identity_net(Formula::var("P")).edges() == std::vector<LeafEdge>{{0, 1}});
  NetMorphism unit = identity_net(Formula::one());
  CHECK(unit.net().sequent() == th::seq({"bot", "1"}));
  CHECK(unit.edges() == std::vector<LeafEdge>{{0, 1}});
}

TEST_CASE("composing with an identity") {
  NetMorphism h = NetMorphism::make(parse_formula("((P * Q^) * Q)"), parse_formula("(bot * P)"),
                                    {{0, 4}, {2, 1}, {3, 1}});
  NetMorphism c = compose_nets(h, identity_net(h.target()));
  CHECK(c == h);
  CHECK(compose_nets(identity_net(h.source()), h) == h);
}

TEST_CASE("the introductory composite") {
  NetMorphism c = compose_nets(intro_f(), intro_g());
  CHECK(c.source() == intro_a());
  CHECK(c.target() == intro_c());
  CHECK(c.edges() == std::vector<LeafEdge>{{0, 3}, {1, 7}, {2, 3}, {4, 5}, {6, 3}, {8, 7}, {9, 5}, {10, 5}});

  // The same result through the stepwise route.
  std::vector<Formula> trees{negate(intro_a()), intro_b(), negate(intro_b()), intro_c()};
  CutSequent g(trees, {{1, 2}});
  std::vector<LeafEdge> edges = intro_f().edges();
  for (auto [a, b] : intro_g().edges()) edges.emplace_back(a + 11, b + 11);
  Normalisation n = normalize_stepwise(ProofNet::make(g, edges));
  CHECK(n.net.sequent() == CutSequent({negate(intro_a()), intro_c()}));
  CHECK(n.net.edges() == c.edges());
}

TEST_CASE("underlying GoI morphisms") {
  GoiMorphism u = underlying_goi(intro_f());
  CHECK(u.source().size() == 6);
  CHECK(u.target().size() == 5);
  CHECK(u.size() == 7);
  using P = Polarity;
  CHECK(u.source() == SignedSet{{P::Positive, P::Positive, P::Positive, P::Negative, P::Positive, P::Negative}});
  CHECK(u(Port{End::Target, 1}) == Port{End::Source, 3});
  CHECK(u(Port{End::Source, 4}) == Port{End::Source, 5});
  CHECK(underlying_goi(identity_net(intro_b())) == identity_goi(signed_set(intro_b())));
  CHECK(underlying_goi(compose_nets(intro_f(), intro_g())) ==
        compose_goi(underlying_goi(intro_f()), underlying_goi(intro_g())));
}

TEST_CASE("endpoint mismatch") {
  CHECK_THROWS_AS(compose_nets(intro_f(), intro_f()), PreconditionError);
  CutSequent g = th::seq({"P^", "P"});
  CHECK_THROWS_AS(NetMorphism(Formula::var("Q"), Formula::var("P"), ProofNet::make(g, th::fn(g, {{0, 1}}))),
                  PreconditionError);
}

TEST_CASE("laws on generated morphisms") {
  for (const Triple& t : triples(51, 150)) {
    CHECK(compose_nets(identity_net(t.f.source()), t.f) == t.f);
    CHECK(compose_nets(t.f, identity_net(t.f.target())) == t.f);
    NetMorphism fg = compose_nets(t.f, t.g);
    CHECK(check_fast(fg.net().function(), fg.net().sequent()).valid);
    CHECK(compose_nets(fg, t.h) == compose_nets(t.f, compose_nets(t.g, t.h)));
    CHECK(underlying_goi(fg) == compose_goi(underlying_goi(t.f), underlying_goi(t.g)));
  }
}

TEST_CASE("identity composed with itself") {
  gen::Rng rng(52);
  for (int k = 0; k < 20; ++k) {
    Formula a = gen::random_formula(rng, 1 + k);
    CHECK(compose_nets(identity_net(a), identity_net(a)) == identity_net(a));
  }
}

}  // TEST_SUITE
