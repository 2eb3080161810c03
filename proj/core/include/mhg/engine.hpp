#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mhg/hypergraph.hpp"

namespace mhg {

/// Chromatic spectrum (r_1, ..., r_chibar).
///
/// counts[k-1] is the number of feasible partitions into exactly k classes;
/// trailing zeros are trimmed, so counts is empty when no strict coloring
/// exists. exact is false when a count limit was reached or the class cap
/// cut a branch that would have opened another class.
struct ChromaticSpectrum {
  std::vector<std::uint64_t> counts;
  bool exact = true;

  std::uint64_t r(std::size_t k) const noexcept {
    return k >= 1 && k <= counts.size() ? counts[k - 1] : 0;
  }
  std::vector<std::size_t> feasible_set() const;
  /// chi: least k with r_k > 0.
  std::optional<std::size_t> lower_chromatic_number() const;
  /// chi-bar: greatest k with r_k > 0.
  std::optional<std::size_t> upper_chromatic_number() const;

  bool operator==(const ChromaticSpectrum&) const = default;
};

/// How the next vertex to assign is chosen.
enum class Branching {
  /// vertex_order, position by position; streams in restricted-growth order.
  fixed_order,
  /// The unassigned vertex with the fewest admissible classes (ties by
  /// vertex_order). Same partitions and counts, different emission order.
  smallest_domain,
};

struct SearchOptions {
  /// Never open more than this many classes.
  std::optional<std::size_t> max_classes;
  /// Stop counting (and emitting) k-class partitions once this many were found.
  std::optional<std::uint64_t> per_k_count_limit;
  /// Abort the whole search as soon as some k reaches per_k_count_limit.
  bool stop_at_limit = false;
  /// Order in which vertices are assigned; empty means 0, 1, ..., n-1.
  std::vector<Vertex> vertex_order;
  /// Forward checking on edges with one unassigned vertex. Does not change
  /// results. smallest_domain always propagates.
  bool propagate = true;
  Branching branching = Branching::fixed_order;
  /// Worker threads; work is split on the first assigned vertices.
  unsigned workers = 1;
  /// Called roughly every 2^20 search nodes with the node count so far.
  std::function<void(std::uint64_t)> heartbeat;
};

/// Vertices sorted by descending number of incident edges (ties by index).
std::vector<Vertex> degree_descending_order(const MixedHypergraph& h);

/// Visitor for streamed partitions; return false to stop the search.
using PartitionVisitor = std::function<bool(const Partition&)>;

/// Emits every strict coloring of h exactly once as a canonical partition
/// of the original vertex indices. With one worker and fixed_order
/// branching, partitions arrive in lexicographic restricted-growth order of
/// the assignment along vertex_order; otherwise the visitor is serialized
/// but unordered. Returns the counts of what was visited.
ChromaticSpectrum enumerate_strict_partitions(const MixedHypergraph& h, const SearchOptions& opts,
                                              const PartitionVisitor& visit);

/// Collects the stream above.
std::vector<Partition> enumerate_strict_partitions(const MixedHypergraph& h, const SearchOptions& opts = {});

/// Strict colorings with exactly k classes.
std::vector<Partition> strict_partitions_with_classes(const MixedHypergraph& h, std::size_t k,
                                                      SearchOptions opts = {});

ChromaticSpectrum chromatic_spectrum(const MixedHypergraph& h, const SearchOptions& opts = {});

struct FeasibleSet {
  std::vector<std::size_t> values;

  std::optional<std::size_t> lower() const {
    return values.empty() ? std::nullopt : std::optional(values.front());
  }
  std::optional<std::size_t> upper() const {
    return values.empty() ? std::nullopt : std::optional(values.back());
  }
};

FeasibleSet feasible_set(const MixedHypergraph& h, const SearchOptions& opts = {});

struct RealizationReport {
  std::vector<std::size_t> target_set;    // ascending
  std::vector<std::size_t> feasible_set;  // ascending
  ChromaticSpectrum spectrum;
  bool is_one_realization = false;
  /// One strict coloring per feasible k, in ascending k.
  std::vector<Partition> witness_colorings;
};

/// Checks F(h) == target and r_k <= 1 for all k. Counts are capped at 2 and
/// the search stops at the first r_k reaching 2, in which case the report's
/// spectrum and feasible set are partial (spectrum.exact is false).
/// Throws InputError on an empty target or a non-positive value.
RealizationReport is_one_realization(const MixedHypergraph& h, const std::vector<std::size_t>& target,
                                     SearchOptions opts = {});

struct BruteForceOptions {
  std::size_t guard = 14;
  bool force = false;
};

/// Independent oracle: walks every restricted-growth string of length n and
/// tests each with is_strict_assignment. No pruning; always exact.
/// Throws RefusalError when n > guard and force is not set.
ChromaticSpectrum spectrum_bruteforce(const MixedHypergraph& h, const BruteForceOptions& opts = {});

}  // namespace mhg
