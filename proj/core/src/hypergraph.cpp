#include "mhg/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mhg {
namespace {

std::vector<Edge> normalize_edges(std::size_t n, std::vector<Edge> edges, const char* list_name) {
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InputError(std::string(list_name) + ": edge repeats a vertex");
    }
    if (e.size() < 2) throw InputError(std::string(list_name) + ": edge needs at least 2 vertices");
    if (e.back() >= n) {
      throw InputError(std::string(list_name) + ": vertex index " + std::to_string(e.back()) +
                       " out of range for n=" + std::to_string(n));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError(std::string(list_name) + ": duplicate edge");
  }
  return edges;
}

}  // namespace

MixedHypergraph::MixedHypergraph(std::size_t n, std::vector<Edge> c_edges, std::vector<Edge> d_edges)
    : n_(n) {
  if (n == 0) throw InputError("hypergraph needs at least one vertex");
  c_edges_ = normalize_edges(n, std::move(c_edges), "C-edges");
  d_edges_ = normalize_edges(n, std::move(d_edges), "D-edges");
}

MixedHypergraph MixedHypergraph::bi(std::size_t n, std::vector<Edge> edges) {
  auto copy = edges;
  return MixedHypergraph(n, std::move(copy), std::move(edges));
}

std::size_t MixedHypergraph::uniformity() const noexcept {
  std::size_t size = 0;
  for (const auto* list : {&c_edges_, &d_edges_}) {
    for (const auto& e : *list) {
      if (size == 0) size = e.size();
      if (e.size() != size) return 0;
    }
  }
  return size;
}

std::string to_string(const VertexLabel& label) {
  std::string out;
  for (std::size_t j = 0; j < label.entries.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(label.entries[j]);
  }
  return out;
}

LabeledHypergraph::LabeledHypergraph(MixedHypergraph graph, std::vector<VertexLabel> labels,
                                     std::size_t uniformity, std::optional<Provenance> provenance)
    : graph_(std::move(graph)),
      labels_(std::move(labels)),
      uniformity_(uniformity),
      provenance_(std::move(provenance)) {
  if (!labels_.empty()) {
    if (labels_.size() != graph_.vertex_count()) {
      throw InputError("label count " + std::to_string(labels_.size()) + " != vertex count " +
                       std::to_string(graph_.vertex_count()));
    }
    const auto width = labels_.front().size();
    for (Vertex v = 0; v < labels_.size(); ++v) {
      const auto& l = labels_[v];
      if (l.size() == 0 || l.size() != width) throw InputError("labels must share one non-zero length");
      if (std::any_of(l.entries.begin(), l.entries.end(), [](int x) { return x < 1; })) {
        throw InputError("label (" + to_string(l) + ") has an entry < 1");
      }
      if (!index_.emplace(l, v).second) throw InputError("duplicate label (" + to_string(l) + ")");
    }
  }
  if (uniformity_ > 0) {
    for (const auto* list : {&graph_.c_edges(), &graph_.d_edges()}) {
      for (const auto& e : *list) {
        if (e.size() != uniformity_) {
          throw InputError("edge of size " + std::to_string(e.size()) + " in a " +
                           std::to_string(uniformity_) + "-uniform hypergraph");
        }
      }
    }
  }
}

std::optional<Vertex> LabeledHypergraph::find(const VertexLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Partition::is_restricted_growth(std::span<const ClassIndex> assignment) noexcept {
  ClassIndex next = 0;
  for (auto c : assignment) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return !assignment.empty();
}

Partition::Partition(std::vector<ClassIndex> assignment) : assignment_(std::move(assignment)) {
  if (!is_restricted_growth(assignment_)) {
    throw InputError("assignment is not a non-empty restricted-growth string");
  }
  classes_ = 1 + *std::max_element(assignment_.begin(), assignment_.end());
}

std::vector<std::vector<Vertex>> Partition::classes() const {
  std::vector<std::vector<Vertex>> out(classes_);
  for (Vertex v = 0; v < assignment_.size(); ++v) out[assignment_[v]].push_back(v);
  return out;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (v) out += ',';
    out += std::to_string(p[v]);
  }
  return out;
}

const char* to_string(EdgeColorStatus s) noexcept {
  switch (s) {
    case EdgeColorStatus::monochromatic: return "monochromatic";
    case EdgeColorStatus::polychromatic: return "polychromatic";
    case EdgeColorStatus::mixed: return "mixed";
  }
  return "?";
}

namespace {

// Status of an edge under an arbitrary class assignment.
EdgeColorStatus status_of(std::span<const ClassIndex> classes, std::span<const Vertex> edge) {
  bool all_same = true;
  bool all_distinct = true;
  for (std::size_t i = 0; i < edge.size() && (all_same || all_distinct); ++i) {
    const auto ci = classes[edge[i]];
    if (ci != classes[edge[0]]) all_same = false;
    for (std::size_t j = 0; j < i; ++j) {
      if (classes[edge[j]] == ci) {
        all_distinct = false;
        break;
      }
    }
  }
  if (all_same) return EdgeColorStatus::monochromatic;
  if (all_distinct) return EdgeColorStatus::polychromatic;
  return EdgeColorStatus::mixed;
}

}  // namespace

EdgeColorStatus edge_color_status(const Partition& p, std::span<const Vertex> edge) {
  if (edge.size() < 2) throw InputError("edge_color_status: edge needs at least 2 vertices");
  for (auto v : edge) {
    if (v >= p.size()) {
      throw InputError("edge_color_status: vertex " + std::to_string(v) + " outside partition of size " +
                       std::to_string(p.size()));
    }
  }
  return status_of(p.assignment(), edge);
}

bool is_strict_assignment(const MixedHypergraph& h, std::span<const ClassIndex> classes) {
  if (classes.size() != h.vertex_count()) {
    throw InputError("assignment covers " + std::to_string(classes.size()) + " vertices, hypergraph has " +
                     std::to_string(h.vertex_count()));
  }
  for (const auto& e : h.c_edges()) {
    if (status_of(classes, e) == EdgeColorStatus::polychromatic) return false;
  }
  for (const auto& e : h.d_edges()) {
    if (status_of(classes, e) == EdgeColorStatus::monochromatic) return false;
  }
  return true;
}

bool is_strict_coloring(const MixedHypergraph& h, const Partition& p) {
  return is_strict_assignment(h, p.assignment());
}

namespace {

struct Reindex {
  std::vector<Vertex> kept;                 // new index -> old index
  std::vector<std::optional<Vertex>> remap;  // old index -> new index
};

Reindex make_reindex(std::size_t n, std::span<const Vertex> keep) {
  if (keep.empty()) throw InputError("induced_subhypergraph: empty vertex set");
  std::set<Vertex> sorted(keep.begin(), keep.end());
  if (*sorted.rbegin() >= n) throw InputError("induced_subhypergraph: vertex index out of range");
  Reindex r{{sorted.begin(), sorted.end()}, std::vector<std::optional<Vertex>>(n)};
  for (Vertex i = 0; i < r.kept.size(); ++i) r.remap[r.kept[i]] = i;
  return r;
}

std::vector<Edge> restrict_edges(const std::vector<Edge>& edges, const Reindex& r) {
  std::vector<Edge> out;
  for (const auto& e : edges) {
    Edge mapped;
    mapped.reserve(e.size());
    for (auto v : e) {
      if (!r.remap[v]) break;
      mapped.push_back(*r.remap[v]);
    }
    if (mapped.size() == e.size()) out.push_back(std::move(mapped));
  }
  return out;
}

}  // namespace

MixedHypergraph induced_subhypergraph(const MixedHypergraph& h, std::span<const Vertex> keep) {
  const auto r = make_reindex(h.vertex_count(), keep);
  return MixedHypergraph(r.kept.size(), restrict_edges(h.c_edges(), r), restrict_edges(h.d_edges(), r));
}

LabeledHypergraph induced_subhypergraph(const LabeledHypergraph& h, std::span<const Vertex> keep) {
  const auto r = make_reindex(h.vertex_count(), keep);
  MixedHypergraph g(r.kept.size(), restrict_edges(h.graph().c_edges(), r),
                    restrict_edges(h.graph().d_edges(), r));
  std::vector<VertexLabel> labels;
  if (h.has_labels()) {
    labels.reserve(r.kept.size());
    for (auto old : r.kept) labels.push_back(h.labels()[old]);
  }
  return LabeledHypergraph(std::move(g), std::move(labels), h.uniformity());
}

}  // namespace mhg
