#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mingen/error.hpp"
#include "mingen/group.hpp"

namespace mingen {

inline bool is_generating(const FiniteGroup& G, const GeneratorSet& A) {
  return generates(G, A);
}

struct RankCertificate {
  std::size_t rank = 0;
  GeneratorSet witness;
  bool exhausted_below = false;
};

struct BruteForceOptions {
  std::size_t size_cap = 8;
  // Estimated closure work (subsets * n * |subset|) allowed before refusing.
  double max_work = 1e8;
};

namespace detail {

inline double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace detail

// Smallest generating subset of G \ {e}: sizes increase from 0, subsets of one
// size are visited in lexicographic order of element index, and the first hit
// is returned. Throws ResourceError if size_cap is reached or the next size
// would exceed the work budget.
inline RankCertificate min_generating_set_bruteforce(const FiniteGroup& G,
                                                     BruteForceOptions opts = {}) {
  const auto n = G.order();
  const auto pool = n - 1;  // candidates are 1..n-1
  double work = 0;
  for (std::size_t r = 0; r <= pool; ++r) {
    if (r > opts.size_cap)
      throw ResourceError("no generating set of size <= " + std::to_string(opts.size_cap) +
                          " (searched up to size " + std::to_string(r - 1) + ")");
    work += detail::binomial(pool, r) * static_cast<double>(n) * static_cast<double>(r ? r : 1);
    if (work > opts.max_work)
      throw ResourceError("brute-force search refused at size " + std::to_string(r) +
                          ": estimated work exceeds budget");

    std::vector<std::uint32_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = static_cast<std::uint32_t>(i + 1);
    for (;;) {
      GeneratorSet A;
      for (auto p : pick) A.insert(Element(p));
      if (generates(G, A)) return {r, std::move(A), true};
      // next combination of {1..pool} in lexicographic order
      std::size_t i = r;
      while (i > 0 && pick[i - 1] == pool - (r - i)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw DefectError("G \\ {e} does not generate G");
}

}  // namespace mingen
