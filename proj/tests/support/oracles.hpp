#pragma once

// Test-only reference computations. Nothing here calls the search engine or
// the library's strictness predicate.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "mhg/hypergraph.hpp"

namespace mhg::testing {

// S(n, k) by the recurrence S(n, k) = k S(n-1, k) + S(n-1, k-1).
inline std::vector<std::vector<std::uint64_t>> stirling_table(std::size_t max_n) {
  std::vector<std::vector<std::uint64_t>> s(max_n + 1, std::vector<std::uint64_t>(max_n + 1, 0));
  s[0][0] = 1;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 1; k <= n; ++k) s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
  }
  return s;
}

inline std::uint64_t stirling2(std::size_t n, std::size_t k) { return stirling_table(n)[n][k]; }

// Distinct colors on an edge under a block assignment.
inline std::size_t colors_on(const Edge& e, const std::vector<int>& block) {
  std::set<int> seen;
  for (auto v : e) seen.insert(block[v]);
  return seen.size();
}

inline bool strict_by_definition(const MixedHypergraph& h, const std::vector<int>& block) {
  for (const auto& e : h.c_edges()) {
    if (colors_on(e, block) == e.size()) return false;
  }
  for (const auto& e : h.d_edges()) {
    if (colors_on(e, block) == 1) return false;
  }
  return true;
}

// Counts strict colorings per class count by growing set partitions one
// vertex at a time (join an existing block or open a new one). Index k holds
// the count for k classes; trailing zeros trimmed and index 0 dropped, to
// match ChromaticSpectrum::counts.
inline std::vector<std::uint64_t> reference_spectrum(const MixedHypergraph& h) {
  const auto n = h.vertex_count();
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<int> block(n, -1);
  auto grow = [&](auto&& self, std::size_t v, int blocks) -> void {
    if (v == n) {
      if (strict_by_definition(h, block)) ++counts[static_cast<std::size_t>(blocks)];
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[v] = b;
      self(self, v + 1, std::max(blocks, b + 1));
    }
    block[v] = -1;
  };
  grow(grow, 0, 0);
  std::vector<std::uint64_t> out(counts.begin() + 1, counts.end());
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace mhg::testing
