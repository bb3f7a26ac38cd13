#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mingen/error.hpp"

namespace mingen {

// Dense multiplication table: table[g][h] is the index of g*h.
using Table = std::vector<std::vector<std::uint32_t>>;

enum class Law { identity, latin_row, latin_col, inverse, associativity };

inline std::string_view to_string(Law law) {
  switch (law) {
    case Law::identity: return "identity";
    case Law::latin_row: return "latin-row";
    case Law::latin_col: return "latin-col";
    case Law::inverse: return "inverse";
    case Law::associativity: return "associativity";
  }
  return "?";
}

struct Violation {
  Law law;
  std::vector<std::uint32_t> witness;  // at most 3 element indices
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  bool has(Law law) const {
    for (const auto& v : violations)
      if (v.law == law) return true;
    return false;
  }

  std::string describe() const {
    if (ok) return "ok";
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += std::string(to_string(v.law));
      out += " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v.witness[i]);
      }
      out += ")";
    }
    return out;
  }
};

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error("group axioms violated: " + report.describe()),
        report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

struct ValidateOptions {
  // Associativity is O(n^3). Skipping is only honoured above this order.
  bool skip_associativity = false;
  static constexpr std::size_t kTrustedOrder = 512;
};

namespace detail {

// Index of the first element whose row is the identity permutation, or n.
inline std::uint32_t find_left_identity(const Table& t) {
  const auto n = static_cast<std::uint32_t>(t.size());
  for (std::uint32_t x = 0; x < n; ++x) {
    bool is_id = true;
    for (std::uint32_t g = 0; g < n && is_id; ++g) is_id = t[x][g] == g;
    if (is_id) return x;
  }
  return n;
}

}  // namespace detail

// Checks the group axioms on a candidate table. Up to three violations are
// reported per law. A table that is not square, or holds out-of-range entries,
// is reported under latin-row and the algebraic checks are skipped.
inline ValidationReport validate(const Table& t, ValidateOptions opts = {}) {
  constexpr std::size_t kPerLaw = 3;
  ValidationReport report;
  const auto n = static_cast<std::uint32_t>(t.size());
  std::size_t counts[5] = {};
  auto add = [&](Law law, std::vector<std::uint32_t> witness) {
    auto& c = counts[static_cast<int>(law)];
    if (c < kPerLaw) report.violations.push_back({law, std::move(witness)});
    ++c;
  };

  bool in_range = n > 0;
  for (std::uint32_t g = 0; g < n; ++g) {
    if (t[g].size() != n) {
      add(Law::latin_row, {g});
      in_range = false;
      continue;
    }
    for (std::uint32_t h = 0; h < n; ++h) {
      if (t[g][h] >= n) {
        add(Law::latin_row, {g, h});
        in_range = false;
      }
    }
  }
  if (!in_range) {
    report.ok = false;
    if (n == 0) add(Law::identity, {});
    return report;
  }

  std::vector<std::uint32_t> seen(n);
  for (std::uint32_t g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::uint32_t h = 0; h < n; ++h) {
      auto v = t[g][h];
      if (seen[v] != n) {
        add(Law::latin_row, {g, seen[v], h});
        break;
      }
      seen[v] = h;
    }
  }
  for (std::uint32_t h = 0; h < n; ++h) {
    std::fill(seen.begin(), seen.end(), n);
    for (std::uint32_t g = 0; g < n; ++g) {
      auto v = t[g][h];
      if (seen[v] != n) {
        add(Law::latin_col, {h, seen[v], g});
        break;
      }
      seen[v] = g;
    }
  }

  // A two-sided identity must exist; the left identity is the candidate.
  const auto e = detail::find_left_identity(t);
  if (e == n) {
    add(Law::identity, {});
  } else {
    for (std::uint32_t g = 0; g < n; ++g)
      if (t[g][e] != g) add(Law::identity, {e, g});
  }

  // Every row holds the identity exactly once, at a column h with h*g = e.
  const auto id = e == n ? 0u : e;
  for (std::uint32_t g = 0; g < n; ++g) {
    std::uint32_t hits = 0, at = n;
    for (std::uint32_t h = 0; h < n; ++h) {
      if (t[g][h] == id) {
        ++hits;
        at = h;
      }
    }
    if (hits != 1) {
      add(Law::inverse, {g});
    } else if (t[at][g] != id) {
      add(Law::inverse, {g, at});
    }
  }

  const bool skip = opts.skip_associativity && n > ValidateOptions::kTrustedOrder;
  auto associativity = [&] {
    for (std::uint32_t g = 0; g < n; ++g) {
      const auto& rg = t[g];
      for (std::uint32_t h = 0; h < n; ++h) {
        const auto& rgh = t[rg[h]];
        const auto& rh = t[h];
        for (std::uint32_t k = 0; k < n; ++k) {
          if (rgh[k] != rg[rh[k]]) {
            add(Law::associativity, {g, h, k});
            if (counts[static_cast<int>(Law::associativity)] >= kPerLaw) return;
          }
        }
      }
    }
  };
  if (!skip) associativity();
  report.ok = report.violations.empty();
  return report;
}

}  // namespace mingen
