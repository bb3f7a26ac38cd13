#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace mingen;
using namespace mingen::test;

TEST_CASE("is_generating examples", "[oracle]") {
  const auto& G = table1();
  CHECK(is_generating(G, GeneratorSet(std::span<const Element>(G.elements()))));
  CHECK(is_generating(G, set_of(G, {"b", "c"})));
  CHECK_FALSE(is_generating(G, set_of(G, {"b", "a"})));
}

TEST_CASE("generation agrees with connectivity on every subset", "[oracle][property]") {
  for (const auto& [label, G] : small_corpus()) {
    const auto n = G.order();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
      auto A = subset_from_mask(mask, n);
      INFO(label << " mask " << mask);
      REQUIRE(is_generating(G, A) == (component_count(G, A) == 1));
      REQUIRE(is_generating(G, A) == (naive_component_count(G.table(), A) == 1));
    }
  }
}

TEST_CASE("generation agrees with connectivity on random subsets", "[oracle][property]") {
  std::mt19937_64 rng(29);
  auto corpus = medium_corpus();
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& G = corpus[rng() % corpus.size()].group;
    auto A = random_subset(G, rng);
    REQUIRE(is_generating(G, A) == is_connected(G, A));
  }
}

TEST_CASE("brute-force rank", "[oracle]") {
  auto trivial = min_generating_set_bruteforce(cyclic(1));
  CHECK(trivial.rank == 0);
  CHECK(trivial.witness.empty());

  auto c6 = min_generating_set_bruteforce(cyclic(6));
  CHECK(c6.rank == 1);
  CHECK(c6.witness.members() == std::vector<Element>{Element(1)});
  CHECK(c6.exhausted_below);

  const auto& G = table1();
  auto a4 = min_generating_set_bruteforce(G);
  CHECK(a4.rank == 2);
  CHECK(generates(G, a4.witness));
  for (auto g : G.elements()) CHECK_FALSE(generates(G, GeneratorSet{g}));

  CHECK(min_generating_set_bruteforce(klein4()).rank == 2);
  CHECK(min_generating_set_bruteforce(direct_product(cyclic(2), klein4())).rank == 3);
  CHECK(min_generating_set_bruteforce(symmetric(4)).rank == 2);
}

TEST_CASE("brute-force witness is the lexicographically first", "[oracle]") {
  // In S3 the first generating pair of {1..5} is {1, 2}: (2 3) and (1 2).
  auto S3 = symmetric(3);
  auto cert = min_generating_set_bruteforce(S3);
  CHECK(cert.witness.members() == std::vector<Element>{Element(1), Element(2)});
}

TEST_CASE("brute-force guards", "[oracle]") {
  CHECK_THROWS_AS(min_generating_set_bruteforce(direct_product(cyclic(2), klein4()), {.size_cap = 2}),
                  ResourceError);
  CHECK_THROWS_AS(min_generating_set_bruteforce(symmetric(5), {.size_cap = 8, .max_work = 1e4}),
                  ResourceError);
}

TEST_CASE("oracle bounds the heuristics", "[oracle][property]") {
  for (const auto& [label, G] : small_corpus()) {
    const auto rank = min_generating_set_bruteforce(G).rank;
    for (auto s : G.elements()) {
      if (s.is_identity()) continue;
      REQUIRE(rank <= minimal_generating_set(G, s).generators.size());
    }
    const auto n = G.order();
    for (std::uint64_t mask = 0; mask < (1ull << n); mask += 2)  // e not in A
      REQUIRE(rank <= rank_upper_bound(G, subset_from_mask(mask, n)).value);
  }
}

TEST_CASE("adding the identity never changes the rank", "[oracle]") {
  for (const auto& [label, G] : small_corpus()) {
    auto cert = min_generating_set_bruteforce(G);
    auto with_e = cert.witness;
    with_e.insert(kIdentity);
    CHECK(generates(G, with_e));
    if (cert.rank > 0) {
      // a set of size rank-1 plus e still fails
      auto smaller = cert.witness.without(cert.witness[0]);
      smaller.insert(kIdentity);
      CHECK_FALSE(generates(G, smaller));
    }
  }
}
