#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace mingen;
using namespace mingen::test;

TEST_CASE("decompose examples", "[components]") {
  const auto& G = table1();
  auto none = decompose(G, {});
  CHECK(none.count() == 12);
  for (const auto& b : none.blocks) CHECK(b.size() == 1);

  auto db = decompose(G, set_of(G, {"b"}));
  REQUIRE(db.count() == 6);
  for (const auto& b : db.blocks) CHECK(b.size() == 2);
  CHECK(names_of(G, db.rep) ==
        std::set<std::string>{"e", "a", "c", "ac", "cc", "bcc"});

  CHECK(decompose(G, set_of(G, {"b", "a", "c"})).count() == 1);
}

TEST_CASE("component count equals the index", "[components]") {
  const auto& G = table1();
  CHECK(component_count(G, set_of(G, {"b", "a"})) == 3);
  CHECK(component_count(G, set_of(G, {"c"})) == 4);
  CHECK(component_count(G, set_of(G, {"b", "c"})) == 1);
  CHECK(is_connected(G, set_of(G, {"b", "c"})));
}

TEST_CASE("decompose agrees with a DFS oracle", "[components][property]") {
  std::mt19937_64 rng(5);
  for (const auto& [label, G] : medium_corpus()) {
    for (int trial = 0; trial < 15; ++trial) {
      auto A = random_subset(G, rng);
      auto d = decompose(G, A);
      auto naive = naive_components(G.table(), A);
      INFO(label);
      for (auto u : G.elements())
        for (auto v : G.elements())
          REQUIRE(d.same_block(u, v) == (naive[u.id()] == naive[v.id()]));
      for (std::size_t i = 0; i < d.count(); ++i) {
        REQUIRE(d.rep[i] == d.blocks[i].front());
        REQUIRE(std::is_sorted(d.blocks[i].begin(), d.blocks[i].end()));
        if (i) REQUIRE(d.rep[i - 1] < d.rep[i]);
      }
    }
  }
}

TEST_CASE("identity component is <A>", "[components]") {
  const auto& G = table1();
  CHECK(names_of(G, identity_component(decompose(G, {}))) == std::set<std::string>{"e"});
  CHECK(names_of(G, identity_component(decompose(G, set_of(G, {"b"})))) ==
        std::set<std::string>{"e", "b"});
  CHECK(names_of(G, identity_component(decompose(G, set_of(G, {"c"})))) ==
        std::set<std::string>{"e", "c", "cc"});
}

TEST_CASE("components coincide for A and <A>", "[components][property]") {
  std::mt19937_64 rng(13);
  for (const auto& [label, G] : medium_corpus()) {
    for (int trial = 0; trial < 10; ++trial) {
      auto A = random_subset(G, rng);
      auto H = closure(G, A);
      auto d1 = decompose(G, A);
      auto d2 = decompose(G, GeneratorSet(std::span<const Element>(H.elements())));
      REQUIRE(d1.blocks == d2.blocks);
    }
  }
}

TEST_CASE("coset structure", "[components]") {
  const auto& G = table1();
  for (auto A : {set_of(G, {"b"}), set_of(G, {"b", "c"}), GeneratorSet{}}) {
    auto d = decompose(G, A);
    auto check = verify_coset_structure(G, A, d);
    CHECK(check.holds);
    CHECK(d.blocks == left_cosets(G, closure(G, A)));
  }
  // A decomposition of a different generator set is caught.
  auto wrong = decompose(G, set_of(G, {"c"}));
  auto bad = verify_coset_structure(G, set_of(G, {"b"}), wrong);
  CHECK_FALSE(bad.holds);
}

TEST_CASE("translation isomorphism", "[components]") {
  const auto& G = table1();
  auto gb = build_graph(G, set_of(G, {"b"}));
  auto db = decompose(gb);
  CHECK(translation_isomorphism(gb, db, 2, 2).translator == kIdentity);
  auto w = translation_isomorphism(gb, db, 0, 1);  // {e,b} -> {a,ab}
  CHECK(G.name(w.translator) == "a");
  CHECK(G.name(G.multiply(w.translator, el(G, "b"))) == "ab");

  auto gc = build_graph(G, set_of(G, {"c"}));
  auto dc = decompose(gc);
  for (std::size_t i = 0; i < dc.count(); ++i)
    for (std::size_t j = 0; j < dc.count(); ++j) {
      auto t = translation_isomorphism(gc, dc, i, j).translator;
      for (auto u : dc.blocks[i])
        for (auto v : gc.neighbours(u)) CHECK(gc.has_edge(G.multiply(t, u), G.multiply(t, v)));
    }
  CHECK_THROWS_AS(translation_isomorphism(gc, dc, 0, 4), UsageError);
}

TEST_CASE("translation isomorphism checks are not vacuous", "[components]") {
  const auto& G = table1();
  auto g = build_graph(G, set_of(G, {"b"}));
  auto d = decompose(g);
  std::swap(d.blocks[1], d.blocks[2]);  // blocks no longer match representatives
  CHECK_THROWS_AS(translation_isomorphism(g, d, 0, 1), DefectError);
}

TEST_CASE("path witness", "[components]") {
  const auto& G = table1();
  auto gbc = build_graph(G, set_of(G, {"b", "c"}));
  auto self = path_witness(gbc, el(G, "ac"), el(G, "ac"));
  REQUIRE(self);
  CHECK(self->empty());
  CHECK(evaluate(G, *self) == kIdentity);

  auto to_c = path_witness(gbc, kIdentity, el(G, "c"));
  REQUIRE(to_c);
  CHECK(*to_c == PathWord{{el(G, "c"), +1}});

  auto gb = build_graph(G, set_of(G, {"b"}));
  CHECK_FALSE(path_witness(gb, kIdentity, el(G, "a")));
}

TEST_CASE("path witness matches components and evaluates to u^-1 v", "[components][property]") {
  std::mt19937_64 rng(17);
  for (const auto& [label, G] : small_corpus()) {
    for (int trial = 0; trial < 10; ++trial) {
      auto A = random_subset(G, rng);
      auto g = build_graph(G, A);
      auto d = decompose(g);
      for (auto u : G.elements())
        for (auto v : G.elements()) {
          auto w = path_witness(g, u, v);
          REQUIRE(w.has_value() == d.same_block(u, v));
          if (!w) continue;
          REQUIRE(evaluate(G, *w) == G.multiply(G.inverse(u), v));
          for (const auto& [a, e] : *w) {
            REQUIRE(A.contains(a));
            REQUIRE_FALSE(a.is_identity());
            REQUIRE((e == 1 || e == -1));
          }
        }
    }
  }
}

TEST_CASE("subgroup graph stats", "[components]") {
  const auto& G = table1();
  auto trivial = subgroup_graph_stats(G, closure(G, {}));
  CHECK(trivial.components == 12);
  CHECK(trivial.each_complete);
  CHECK(trivial.edge_total == 0);

  auto k4 = subgroup_graph_stats(G, closure(G, set_of(G, {"b", "a"})));
  CHECK(k4.components == 3);
  CHECK(k4.edge_total == 18);

  auto k3 = subgroup_graph_stats(G, closure(G, set_of(G, {"c"})));
  CHECK(k3.components == 4);
  CHECK(k3.edge_total == 12);
}

TEST_CASE("disjoint union of components reproduces the edge set", "[components][property]") {
  std::mt19937_64 rng(19);
  for (const auto& [label, G] : medium_corpus()) {
    auto A = random_subset(G, rng);
    auto g = build_graph(G, A);
    auto d = decompose(g);
    std::size_t inside = 0;
    for (const auto& [u, v] : g.edges()) {
      REQUIRE(d.same_block(u, v));
      ++inside;
    }
    std::size_t per_block = 0;
    for (const auto& b : d.blocks)
      for (auto u : b) per_block += g.degree(u);
    REQUIRE(per_block == 2 * inside);
  }
}
