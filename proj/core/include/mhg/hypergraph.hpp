#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mhg/errors.hpp"

namespace mhg {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;
using ClassIndex = std::uint32_t;

/// Mixed hypergraph (X, C, D) on vertices {0, ..., n-1}.
///
/// Every edge is stored sorted ascending and each edge list is kept in
/// lexicographic order, so two instances with the same edge sets compare
/// equal regardless of insertion order. A bi-edge is an edge present in
/// both lists.
class MixedHypergraph {
 public:
  /// Throws InputError if n == 0, an index is out of range, an edge has
  /// fewer than two distinct vertices, or an edge repeats within a list.
  MixedHypergraph(std::size_t n, std::vector<Edge> c_edges, std::vector<Edge> d_edges);

  /// Bi-hypergraph: every edge goes into both lists.
  static MixedHypergraph bi(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& c_edges() const noexcept { return c_edges_; }
  const std::vector<Edge>& d_edges() const noexcept { return d_edges_; }

  bool is_bi_hypergraph() const noexcept { return c_edges_ == d_edges_; }

  /// Common edge size, or 0 if edges differ in size or there are none.
  std::size_t uniformity() const noexcept;

  bool operator==(const MixedHypergraph&) const = default;

 private:
  std::size_t n_;
  std::vector<Edge> c_edges_;
  std::vector<Edge> d_edges_;
};

/// Tuple naming a construction vertex, e.g. (n_1-1, n_2, t, t). Entries are >= 1.
struct VertexLabel {
  std::vector<int> entries;

  std::size_t size() const noexcept { return entries.size(); }
  int operator[](std::size_t j) const { return entries[j]; }

  auto operator<=>(const VertexLabel&) const = default;
};

std::string to_string(const VertexLabel& label);

/// Which generator produced an instance. Carried so that canonical
/// colorings can be reconstructed; not serialized.
struct Provenance {
  std::string tag;
  std::vector<int> target;
  int r = 0;

  bool operator==(const Provenance&) const = default;
};

/// A mixed hypergraph together with per-vertex labels and its uniformity.
///
/// labels is either empty (unlabeled) or has one label per vertex; labels
/// are pairwise distinct and of equal length. uniformity is 0 for a
/// non-uniform instance, otherwise every edge has exactly that many vertices.
class LabeledHypergraph {
 public:
  LabeledHypergraph(MixedHypergraph graph, std::vector<VertexLabel> labels, std::size_t uniformity,
                    std::optional<Provenance> provenance = std::nullopt);

  const MixedHypergraph& graph() const noexcept { return graph_; }
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
  bool has_labels() const noexcept { return !labels_.empty(); }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t uniformity() const noexcept { return uniformity_; }
  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }

  /// Index of the vertex carrying `label`, if any.
  std::optional<Vertex> find(const VertexLabel& label) const;

  /// Structural equality: graph, labels and uniformity. Provenance is ignored.
  bool operator==(const LabeledHypergraph& other) const {
    return graph_ == other.graph_ && labels_ == other.labels_ && uniformity_ == other.uniformity_;
  }

 private:
  MixedHypergraph graph_;
  std::vector<VertexLabel> labels_;
  std::size_t uniformity_;
  std::optional<Provenance> provenance_;
  std::map<VertexLabel, Vertex> index_;
};

/// Set partition in restricted-growth form: assignment[0] == 0 and each
/// value is at most one more than the maximum of all earlier values.
class Partition {
 public:
  /// Throws InputError unless `assignment` is a non-empty restricted-growth string.
  explicit Partition(std::vector<ClassIndex> assignment);

  std::size_t size() const noexcept { return assignment_.size(); }
  std::size_t class_count() const noexcept { return classes_; }
  ClassIndex operator[](std::size_t v) const { return assignment_[v]; }
  std::span<const ClassIndex> assignment() const noexcept { return assignment_; }

  /// Vertices of each class, classes in index order.
  std::vector<std::vector<Vertex>> classes() const;

  auto operator<=>(const Partition& other) const { return assignment_ <=> other.assignment_; }
  bool operator==(const Partition& other) const { return assignment_ == other.assignment_; }

  static bool is_restricted_growth(std::span<const ClassIndex> assignment) noexcept;

 private:
  std::vector<ClassIndex> assignment_;
  std::size_t classes_ = 0;
};

std::string to_string(const Partition& p);

/// Relabels arbitrary class tokens by order of first appearance.
template <class Token>
Partition canonical_form(std::span<const Token> tokens) {
  if (tokens.empty()) throw InputError("canonical_form: empty assignment");
  std::map<Token, ClassIndex> seen;
  std::vector<ClassIndex> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    auto [it, inserted] = seen.try_emplace(t, static_cast<ClassIndex>(seen.size()));
    out.push_back(it->second);
  }
  return Partition(std::move(out));
}

template <class Token>
Partition canonical_form(const std::vector<Token>& tokens) {
  return canonical_form(std::span<const Token>(tokens));
}

enum class EdgeColorStatus { monochromatic, polychromatic, mixed };

const char* to_string(EdgeColorStatus s) noexcept;

/// Throws InputError if an edge index is outside the partition or the edge
/// has fewer than two vertices.
EdgeColorStatus edge_color_status(const Partition& p, std::span<const Vertex> edge);

/// True iff no C-edge is polychromatic and no D-edge is monochromatic.
/// Throws InputError if p does not cover exactly h.vertex_count() vertices.
bool is_strict_coloring(const MixedHypergraph& h, const Partition& p);

/// Same predicate over a raw class assignment (any labels, not necessarily
/// canonical). Used by the brute-force oracle to avoid rebuilding partitions.
bool is_strict_assignment(const MixedHypergraph& h, std::span<const ClassIndex> classes);

/// H[keep]: vertices reindexed densely in ascending original order; keeps
/// exactly the edges contained in `keep`. Duplicates in `keep` are ignored.
/// Throws InputError on an empty or out-of-range `keep`.
LabeledHypergraph induced_subhypergraph(const LabeledHypergraph& h, std::span<const Vertex> keep);
MixedHypergraph induced_subhypergraph(const MixedHypergraph& h, std::span<const Vertex> keep);

}  // namespace mhg
