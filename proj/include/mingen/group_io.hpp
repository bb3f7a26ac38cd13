#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mingen/error.hpp"
#include "mingen/group.hpp"
#include "mingen/validation.hpp"

namespace mingen {

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline bool is_blank_or_comment(std::string_view line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

// Splits on '\n', numbering lines from 1. Carriage returns are stripped.
inline std::vector<std::pair<std::size_t, std::string>> numbered_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::size_t no = 1, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!is_blank_or_comment(line)) out.emplace_back(no, std::move(line));
    ++no;
    start = end + 1;
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Cayley-table text format
//
//   # comment
//   e a b ...          header: n unique names
//   e a b ...          row i: products (element i)*(element j)
//
// Blank lines and lines starting with '#' are ignored.
// ---------------------------------------------------------------------------

inline FiniteGroup parse_cayley_table(std::string_view text, ValidateOptions opts = {}) {
  auto lines = detail::numbered_lines(text);
  if (lines.empty()) throw ParseError(1, "empty table");

  const auto& [hdr_no, hdr] = lines.front();
  auto names = detail::split_ws(hdr);
  std::unordered_map<std::string, std::uint32_t> lookup;
  for (std::uint32_t i = 0; i < names.size(); ++i)
    if (!lookup.emplace(names[i], i).second)
      throw ParseError(hdr_no, "duplicate element name '" + names[i] + "'");

  const auto n = names.size();
  if (lines.size() != n + 1)
    throw ParseError(lines.back().first, "expected " + std::to_string(n) + " rows, found " +
                                             std::to_string(lines.size() - 1));

  Table table(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [no, line] = lines[i + 1];
    auto cells = detail::split_ws(line);
    if (cells.size() != n)
      throw ParseError(no, "expected " + std::to_string(n) + " cells, found " +
                               std::to_string(cells.size()));
    for (std::size_t j = 0; j < n; ++j) {
      auto it = lookup.find(cells[j]);
      if (it == lookup.end()) throw ParseError(no, "unknown element '" + cells[j] + "'");
      table[i][j] = it->second;
    }
  }
  return FiniteGroup::from_table(std::move(names), std::move(table), opts);
}

inline std::string serialize_cayley_table(const FiniteGroup& G) {
  std::string out;
  auto row = [&](auto&& name_of) {
    for (std::size_t j = 0; j < G.order(); ++j) {
      if (j) out += ' ';
      out += name_of(j);
    }
    out += '\n';
  };
  row([&](std::size_t j) { return G.names()[j]; });
  for (std::size_t i = 0; i < G.order(); ++i)
    row([&](std::size_t j) { return G.names()[G.table()[i][j]]; });
  return out;
}

// ---------------------------------------------------------------------------
// Permutations
// ---------------------------------------------------------------------------

// Permutation of {0..degree-1} in image form. Products compose left to right:
// x^(p*q) = (x^p)^q.
class Permutation {
 public:
  explicit Permutation(std::size_t degree = 0) : images_(degree) {
    for (std::uint32_t i = 0; i < degree; ++i) images_[i] = i;
  }
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    std::vector<std::uint32_t> img(p.degree());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = q(p(static_cast<std::uint32_t>(i)));
    return Permutation(std::move(img));
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  // Cycle notation over points 1..degree with comma-separated points, e.g.
  // "(1,2)(3,4)"; "()" for the identity. Contains no whitespace.
  std::string cycle_string() const {
    std::string out;
    std::vector<char> done(degree(), 0);
    for (std::uint32_t s = 0; s < degree(); ++s) {
      if (done[s] || images_[s] == s) continue;
      out += '(';
      for (auto x = s; !done[x]; x = images_[x]) {
        if (x != s) out += ',';
        out += std::to_string(x + 1);
        done[x] = 1;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  std::vector<std::uint32_t> images_;
};

// Disjoint cycles over points 1..degree, as read from input.
struct PermutationGen {
  std::size_t degree = 0;
  std::vector<std::vector<std::uint32_t>> cycles;

  Permutation to_permutation() const {
    Permutation p(degree);
    auto img = p.images();
    for (const auto& c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) img[c[i] - 1] = c[(i + 1) % c.size()] - 1;
    return Permutation(std::move(img));
  }
};

namespace detail {

inline PermutationGen parse_cycles(std::size_t line_no, std::string_view s) {
  PermutationGen gen;
  std::vector<char> used;
  std::size_t i = 0;
  // Points may be separated by spaces or commas, so element names round-trip.
  auto skip_ws = [&](bool commas) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || (commas && s[i] == ','))) ++i;
  };
  skip_ws(false);
  if (i == s.size()) throw ParseError(line_no, "empty permutation");
  while (i < s.size()) {
    if (s[i] != '(') throw ParseError(line_no, "expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip_ws(true);
      if (i == s.size()) throw ParseError(line_no, "unterminated cycle");
      if (s[i] == ')') {
        ++i;
        break;
      }
      if (s[i] < '0' || s[i] > '9') throw ParseError(line_no, "expected a point number");
      std::uint64_t v = 0;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(s[i++] - '0');
        if (v > 1'000'000) throw ParseError(line_no, "point number too large");
      }
      if (v == 0) throw ParseError(line_no, "points are numbered from 1");
      const auto pt = static_cast<std::uint32_t>(v);
      if (used.size() < pt) used.resize(pt, 0);
      if (used[pt - 1]) throw ParseError(line_no, "point " + std::to_string(pt) + " repeated");
      used[pt - 1] = 1;
      cycle.push_back(pt);
      gen.degree = std::max<std::size_t>(gen.degree, pt);
    }
    if (cycle.size() > 1) gen.cycles.push_back(std::move(cycle));
    skip_ws(false);
  }
  return gen;
}

}  // namespace detail

struct PermutationOptions {
  std::size_t max_order = 100000;
};

// Realizes a permutation group as a table. Element 0 is the identity; the rest
// are numbered in breadth-first discovery order, applying generators in the
// given order on the right.
inline FiniteGroup group_from_permutations(const std::vector<Permutation>& gens,
                                           std::size_t degree, PermutationOptions opts = {}) {
  std::vector<Permutation> elems{Permutation(degree)};
  std::map<Permutation, std::uint32_t> where{{elems[0], 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      auto y = elems[i] * s;
      if (where.contains(y)) continue;
      if (elems.size() >= opts.max_order)
        throw ResourceError("permutation group exceeds " + std::to_string(opts.max_order) +
                            " elements");
      where.emplace(y, static_cast<std::uint32_t>(elems.size()));
      elems.push_back(std::move(y));
    }
  }
  const auto n = elems.size();
  Table t(n, std::vector<std::uint32_t>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) t[g][h] = where.at(elems[g] * elems[h]);
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& p : elems) names.push_back(p.cycle_string());
  return FiniteGroup::from_table(std::move(names), std::move(t), {.skip_associativity = true});
}

// Optional "degree N" line, then one permutation per line in cycle notation,
// e.g. "(1 2 3)(4 5)" or "(1,2,3)(4,5)".
inline FiniteGroup parse_permutation_generators(std::string_view text,
                                                PermutationOptions opts = {}) {
  auto lines = detail::numbered_lines(text);
  std::size_t degree = 0;
  bool explicit_degree = false;
  std::size_t first = 0;
  if (!lines.empty()) {
    auto toks = detail::split_ws(lines[0].second);
    if (!toks.empty() && toks[0] == "degree") {
      if (toks.size() != 2) throw ParseError(lines[0].first, "expected 'degree N'");
      try {
        std::size_t used = 0;
        degree = std::stoul(toks[1], &used);
        if (used != toks[1].size() || degree == 0) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError(lines[0].first, "bad degree '" + toks[1] + "'");
      }
      explicit_degree = true;
      first = 1;
    }
  }
  std::vector<PermutationGen> parsed;
  for (std::size_t i = first; i < lines.size(); ++i) {
    auto gen = detail::parse_cycles(lines[i].first, lines[i].second);
    if (explicit_degree && gen.degree > degree)
      throw ParseError(lines[i].first, "point exceeds degree " + std::to_string(degree));
    if (!explicit_degree) degree = std::max(degree, gen.degree);
    parsed.push_back(std::move(gen));
  }
  std::vector<Permutation> gens;
  for (auto& g : parsed) {
    g.degree = degree;
    gens.push_back(g.to_permutation());
  }
  return group_from_permutations(gens, degree, opts);
}

// ---------------------------------------------------------------------------
// Standard families
// ---------------------------------------------------------------------------

namespace detail {

inline std::string power_name(std::string_view base, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return std::string(base);
  return std::string(base) + "^" + std::to_string(k);
}

inline FiniteGroup trusted(std::vector<std::string> names, Table t) {
  return FiniteGroup::from_table(std::move(names), std::move(t), {.skip_associativity = true});
}

}  // namespace detail

// Powers of a generator g: e, g, g^2, ...
inline FiniteGroup cyclic(std::size_t n) {
  if (n < 1) throw UsageError("cyclic: n must be at least 1");
  Table t(n, std::vector<std::uint32_t>(n));
  std::vector<std::string> names{"e"};
  for (std::size_t k = 1; k < n; ++k) names.push_back(detail::power_name("g", k));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<std::uint32_t>((a + b) % n);
  return detail::trusted(std::move(names), std::move(t));
}

// Order 2n. Index k is r^k, index n+k is r^k s, with s r s = r^-1.
inline FiniteGroup dihedral(std::size_t n) {
  if (n < 3) throw UsageError("dihedral: n must be at least 3");
  const auto N = 2 * n;
  Table t(N, std::vector<std::uint32_t>(N));
  std::vector<std::string> names(N);
  for (std::size_t k = 0; k < n; ++k) {
    names[k] = k == 0 ? "e" : detail::power_name("r", k);
    names[n + k] = detail::power_name("r", k) + "s";
  }
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < N; ++y) {
      const auto a = x % n, f = x / n, b = y % n, g = y / n;
      // r^a s^f r^b s^g = r^(a + (-1)^f b) s^(f+g)
      const auto rot = f == 0 ? (a + b) % n : (a + n - b) % n;
      t[x][y] = static_cast<std::uint32_t>(((f + g) % 2) * n + rot);
    }
  }
  return detail::trusted(std::move(names), std::move(t));
}

// All permutations of n points in lexicographic order of their image lists.
inline FiniteGroup symmetric(std::size_t n) {
  if (n < 1 || n > 6) throw UsageError("symmetric: n must be in [1, 6]");
  std::vector<std::uint32_t> img(n);
  for (std::uint32_t i = 0; i < n; ++i) img[i] = i;
  std::vector<Permutation> elems;
  do elems.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  std::map<Permutation, std::uint32_t> where;
  for (std::uint32_t i = 0; i < elems.size(); ++i) where.emplace(elems[i], i);
  const auto N = elems.size();
  Table t(N, std::vector<std::uint32_t>(N));
  for (std::size_t g = 0; g < N; ++g)
    for (std::size_t h = 0; h < N; ++h) t[g][h] = where.at(elems[g] * elems[h]);
  std::vector<std::string> names;
  for (const auto& p : elems) names.push_back(p.cycle_string());
  return detail::trusted(std::move(names), std::move(t));
}

// Pairs (g, h) in lexicographic order; index = g * |H| + h.
inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  const auto m = H.order(), N = G.order() * m;
  Table t(N, std::vector<std::uint32_t>(N));
  std::vector<std::string> names(N);
  for (std::size_t x = 0; x < N; ++x) {
    names[x] = "(" + G.names()[x / m] + "," + H.names()[x % m] + ")";
    for (std::size_t y = 0; y < N; ++y)
      t[x][y] = static_cast<std::uint32_t>(G.table()[x / m][y / m] * m + H.table()[x % m][y % m]);
  }
  return detail::trusted(std::move(names), std::move(t));
}

inline FiniteGroup klein4() {
  return FiniteGroup::from_table({"e", "x", "y", "xy"},
                                 {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

// Parses "cyclic:N", "dihedral:N", "symmetric:N", "klein4" and
// "product:F1,F2" where F1 and F2 are any of the others.
inline FiniteGroup build_standard(std::string_view spec) {
  auto colon = spec.find(':');
  auto family = spec.substr(0, colon);
  auto arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  auto number = [&]() -> std::size_t {
    if (arg.empty()) throw UsageError("family '" + std::string(family) + "' needs a parameter");
    std::size_t v = 0;
    for (char c : arg) {
      if (c < '0' || c > '9' || v > 100000)
        throw UsageError("bad parameter '" + std::string(arg) + "'");
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
  };
  if (family == "cyclic") return cyclic(number());
  if (family == "dihedral") return dihedral(number());
  if (family == "symmetric") return symmetric(number());
  if (family == "klein4") {
    if (!arg.empty()) throw UsageError("klein4 takes no parameter");
    return klein4();
  }
  if (family == "product") {
    auto comma = arg.find(',');
    if (comma == std::string_view::npos) throw UsageError("product needs two factors: A,B");
    auto left = arg.substr(0, comma), right = arg.substr(comma + 1);
    if (left.starts_with("product") || right.starts_with("product"))
      throw UsageError("nested products are not supported here");
    return direct_product(build_standard(left), build_standard(right));
  }
  throw UsageError("unknown group family '" + std::string(family) + "'");
}

}  // namespace mingen
