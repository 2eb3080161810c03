#include "mhg/engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

namespace mhg {

std::vector<std::size_t> ChromaticSpectrum::feasible_set() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= counts.size(); ++k) {
    if (counts[k - 1] > 0) out.push_back(k);
  }
  return out;
}

std::optional<std::size_t> ChromaticSpectrum::lower_chromatic_number() const {
  for (std::size_t k = 1; k <= counts.size(); ++k) {
    if (counts[k - 1] > 0) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> ChromaticSpectrum::upper_chromatic_number() const {
  for (std::size_t k = counts.size(); k >= 1; --k) {
    if (counts[k - 1] > 0) return k;
  }
  return std::nullopt;
}

std::vector<Vertex> degree_descending_order(const MixedHypergraph& h) {
  std::vector<std::size_t> degree(h.vertex_count(), 0);
  for (const auto* list : {&h.c_edges(), &h.d_edges()}) {
    for (const auto& e : *list) {
      for (auto v : e) ++degree[v];
    }
  }
  std::vector<Vertex> order(h.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
  return order;
}

namespace {

constexpr std::size_t kMaxVertices = 64;
using Mask = std::uint64_t;

struct Constraint {
  std::vector<std::uint32_t> positions;  // ascending search positions
  Mask head = 0;                         // all positions but the last
  bool c = false;                        // must not be polychromatic
  bool d = false;                        // must not be monochromatic
};

// The instance rewritten in search-position space.
struct Compiled {
  std::size_t n = 0;
  std::vector<Vertex> order;         // position -> vertex
  std::vector<std::uint32_t> pos;    // vertex -> position
  std::vector<Constraint> constraints;
  std::vector<std::vector<std::uint32_t>> by_last;    // constraints whose last position is p
  std::vector<std::vector<std::uint32_t>> by_second;  // constraints whose second-to-last position is p
  std::vector<std::vector<std::uint32_t>> incident;   // constraints containing position p
};

Compiled compile(const MixedHypergraph& h, const SearchOptions& opts) {
  Compiled c;
  c.n = h.vertex_count();
  if (c.n > kMaxVertices) {
    throw InputError("search engine supports at most 64 vertices, got " + std::to_string(c.n));
  }
  if (opts.max_classes && *opts.max_classes == 0) throw InputError("max_classes must be >= 1");
  if (opts.vertex_order.empty()) {
    c.order.resize(c.n);
    std::iota(c.order.begin(), c.order.end(), Vertex{0});
  } else {
    c.order = opts.vertex_order;
    auto sorted = c.order;
    std::sort(sorted.begin(), sorted.end());
    bool is_perm = sorted.size() == c.n;
    for (std::size_t i = 0; is_perm && i < c.n; ++i) is_perm = sorted[i] == i;
    if (!is_perm) throw InputError("vertex_order is not a permutation of the vertices");
  }
  c.pos.resize(c.n);
  for (std::uint32_t p = 0; p < c.n; ++p) c.pos[c.order[p]] = p;

  std::map<Edge, Constraint> merged;
  auto add = [&](const Edge& e, bool is_c) {
    auto& con = merged[e];
    (is_c ? con.c : con.d) = true;
  };
  for (const auto& e : h.c_edges()) add(e, true);
  for (const auto& e : h.d_edges()) add(e, false);

  c.by_last.resize(c.n);
  c.by_second.resize(c.n);
  c.incident.resize(c.n);
  for (auto& [edge, con] : merged) {
    for (auto v : edge) con.positions.push_back(c.pos[v]);
    std::sort(con.positions.begin(), con.positions.end());
    for (std::size_t i = 0; i + 1 < con.positions.size(); ++i) con.head |= Mask{1} << con.positions[i];
    const auto id = static_cast<std::uint32_t>(c.constraints.size());
    c.by_last[con.positions.back()].push_back(id);
    c.by_second[con.positions[con.positions.size() - 2]].push_back(id);
    for (auto q : con.positions) c.incident[q].push_back(id);
    c.constraints.push_back(std::move(con));
  }
  // Edges sharing a head become adjacent so propagate() can reuse the class mask.
  for (auto& list : c.by_second) {
    std::stable_sort(list.begin(), list.end(),
                     [&](auto a, auto b) { return c.constraints[a].head < c.constraints[b].head; });
  }
  return c;
}

struct Shared {
  std::atomic<bool> stop{false};
  std::mutex mutex;  // serializes the visitor and heartbeat across workers
};

class Searcher {
 public:
  Searcher(const Compiled& c, const SearchOptions& opts, const PartitionVisitor* visit, Shared& shared)
      : c_(c),
        opts_(opts),
        visit_(visit),
        shared_(shared),
        cap_(opts.max_classes ? std::min(*opts.max_classes, c.n) : c.n),
        counts_(c.n + 1, 0) {
    cls_.fill(0);
    reset_allowed();
  }

  // Explores the subtree below a forced prefix of class choices.
  void run(std::span<const ClassIndex> prefix) {
    prefix_ = prefix;
    reset_allowed();
    start();
  }

  // Collects every consistent assignment of the first `depth` positions.
  std::vector<std::vector<ClassIndex>> prefixes(std::size_t depth) {
    collect_depth_ = depth;
    collected_.clear();
    prefix_ = {};
    reset_allowed();
    start();
    collect_depth_ = 0;
    return std::move(collected_);
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }
  bool truncated() const { return truncated_; }

 private:
  void reset_allowed() {
    allowed_.fill(~Mask{0});
    assigned_.fill(0);
    members_.fill(0);
    filled_.assign(c_.constraints.size(), 0);
  }

  void start() {
    if (opts_.branching == Branching::smallest_domain) {
      dfs_domain(0, 0);
    } else {
      dfs(0, 0);
    }
  }

  bool tick() {
    if (shared_.stop.load(std::memory_order_relaxed)) return false;
    if (opts_.heartbeat && (++nodes_ & ((1u << 20) - 1)) == 0) {
      std::lock_guard lock(shared_.mutex);
      opts_.heartbeat(nodes_);
    }
    return true;
  }

  void restore(std::size_t mark) {
    while (undo_.size() > mark) {
      allowed_[undo_.back().first] = undo_.back().second;
      undo_.pop_back();
    }
  }

  void narrow(std::uint32_t q, Mask next) {
    if (next != allowed_[q]) {
      undo_.emplace_back(q, allowed_[q]);
      allowed_[q] = next;
    }
  }

  // Returns false if an assignment of position p violates an edge that
  // becomes fully colored at p.
  bool check_last(std::uint32_t p) const {
    for (auto id : c_.by_last[p]) {
      const auto& con = c_.constraints[id];
      Mask m = 0;
      for (auto q : con.positions) m |= Mask{1} << cls_[q];
      const auto distinct = static_cast<std::size_t>(std::popcount(m));
      if (con.d && distinct == 1) return false;
      if (con.c && distinct == con.positions.size()) return false;
    }
    return true;
  }

  // Narrows the domains of vertices that are the last unassigned member of
  // an edge. Returns false on an empty domain.
  bool propagate(std::uint32_t p, std::size_t k) {
    Mask head = 0;
    Mask m = 0;
    for (auto id : c_.by_second[p]) {
      const auto& con = c_.constraints[id];
      const auto last = con.positions.back();
      if (con.head != head) {
        head = con.head;
        m = 0;
        for (std::size_t cl = 0; cl < k; ++cl) {
          if (members_[cl] & head) m |= Mask{1} << cl;
        }
      }
      const auto distinct = static_cast<std::size_t>(std::popcount(m));
      Mask next = allowed_[last];
      if (con.d && distinct == 1) next &= ~m;
      if (con.c && distinct + 1 == con.positions.size()) next &= m;
      if (next != allowed_[last]) {
        undo_.emplace_back(last, allowed_[last]);
        allowed_[last] = next;
        if (next == 0) return false;
      }
    }
    return true;
  }

  void leaf(std::size_t k) {
    auto& count = counts_[k];
    if (opts_.per_k_count_limit) {
      if (count >= *opts_.per_k_count_limit) return;
      ++count;
      if (count == *opts_.per_k_count_limit && opts_.stop_at_limit) shared_.stop = true;
    } else {
      ++count;
    }
    if (visit_) {
      std::vector<ClassIndex> raw(c_.n);
      for (Vertex v = 0; v < c_.n; ++v) raw[v] = cls_[c_.pos[v]];
      auto part = canonical_form(std::span<const ClassIndex>(raw));
      std::lock_guard lock(shared_.mutex);
      if (!shared_.stop && !(*visit_)(part)) shared_.stop = true;
    }
  }

  void dfs(std::uint32_t p, std::size_t k) {
    if (!tick()) return;
    if (collect_depth_ && p == collect_depth_) {
      collected_.emplace_back(path_.begin(), path_.begin() + p);
      return;
    }
    if (p == c_.n) {
      leaf(k);
      return;
    }
    Mask choices = allowed_[p];
    note_cap(choices, k);
    choices &= usable(k);
    if (p < prefix_.size()) choices &= Mask{1} << prefix_[p];

    while (choices) {
      const auto cl = static_cast<ClassIndex>(std::countr_zero(choices));
      choices &= choices - 1;
      cls_[p] = cl;
      path_[p] = cl;
      members_[cl] |= Mask{1} << p;
      const auto next_k = std::max<std::size_t>(k, cl + 1);
      const auto mark = undo_.size();
      const bool ok = opts_.propagate ? propagate(p, next_k) : check_last(p);
      if (ok) dfs(p + 1, next_k);
      restore(mark);
      members_[cl] &= ~(Mask{1} << p);
      if (shared_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  // Records that the cap cut a branch which would have opened class k.
  void note_cap(Mask allowed, std::size_t k) {
    if (k >= cap_ && k < kMaxVertices && ((allowed >> k) & 1)) truncated_ = true;
  }

  // Classes 0..min(k, cap-1) may be used once k classes are open.
  Mask usable(std::size_t k) const {
    const std::size_t top = std::min(k + 1, cap_);
    return top >= 64 ? ~Mask{0} : (Mask{1} << top) - 1;
  }

  // Marks position q assigned and narrows every edge left with one
  // unassigned member. Returns the number of incident edges processed and
  // whether all domains stayed nonempty.
  std::pair<std::size_t, bool> assign(std::uint32_t q) {
    assigned_[q] = 1;
    const auto& inc = c_.incident[q];
    for (std::size_t i = 0; i < inc.size(); ++i) {
      const auto& con = c_.constraints[inc[i]];
      if (++filled_[inc[i]] + 1 != con.positions.size()) continue;
      std::uint32_t free = 0;
      Mask m = 0;
      for (auto x : con.positions) {
        if (assigned_[x]) {
          m |= Mask{1} << cls_[x];
        } else {
          free = x;
        }
      }
      const auto distinct = static_cast<std::size_t>(std::popcount(m));
      Mask next = allowed_[free];
      if (con.d && distinct == 1) next &= ~m;
      if (con.c && distinct + 1 == con.positions.size()) next &= m;
      narrow(free, next);
      if (next == 0) return {i + 1, false};
    }
    return {inc.size(), true};
  }

  void unassign(std::uint32_t q, std::size_t processed) {
    const auto& inc = c_.incident[q];
    for (std::size_t i = 0; i < processed; ++i) --filled_[inc[i]];
    assigned_[q] = 0;
  }

  void dfs_domain(std::size_t depth, std::size_t k) {
    if (!tick()) return;
    if (collect_depth_ && depth == collect_depth_) {
      collected_.emplace_back(path_.begin(), path_.begin() + depth);
      return;
    }
    if (depth == c_.n) {
      leaf(k);
      return;
    }
    const Mask open = usable(k);
    std::uint32_t best = 0;
    int best_size = 65;
    for (std::uint32_t q = 0; q < c_.n; ++q) {
      if (assigned_[q]) continue;
      const int size = std::popcount(allowed_[q] & open);
      if (size < best_size) {
        best = q;
        best_size = size;
        if (size <= 1) break;
      }
    }
    note_cap(allowed_[best], k);
    if (best_size == 0) return;
    Mask choices = allowed_[best] & open;
    if (depth < prefix_.size()) choices &= Mask{1} << prefix_[depth];

    while (choices) {
      const auto cl = static_cast<ClassIndex>(std::countr_zero(choices));
      choices &= choices - 1;
      cls_[best] = cl;
      path_[depth] = cl;
      const auto mark = undo_.size();
      const auto [processed, ok] = assign(best);
      if (ok) dfs_domain(depth + 1, std::max<std::size_t>(k, cl + 1));
      unassign(best, processed);
      restore(mark);
      if (shared_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  const Compiled& c_;
  const SearchOptions& opts_;
  const PartitionVisitor* visit_;
  Shared& shared_;
  std::size_t cap_;
  std::array<ClassIndex, kMaxVertices> cls_{};
  std::array<Mask, kMaxVertices> allowed_{};
  std::array<ClassIndex, kMaxVertices> path_{};  // class chosen at each depth
  std::array<char, kMaxVertices> assigned_{};
  std::array<Mask, kMaxVertices> members_{};     // positions per class (fixed order)
  std::vector<std::uint32_t> filled_;            // assigned members per constraint
  std::vector<std::pair<std::uint32_t, Mask>> undo_;
  std::vector<std::uint64_t> counts_;
  std::span<const ClassIndex> prefix_;
  std::size_t collect_depth_ = 0;
  std::vector<std::vector<ClassIndex>> collected_;
  std::uint64_t nodes_ = 0;
  bool truncated_ = false;
};

ChromaticSpectrum finish(std::vector<std::uint64_t> counts, bool truncated, const SearchOptions& opts) {
  ChromaticSpectrum s;
  bool limit_hit = false;
  if (opts.per_k_count_limit) {
    for (auto& c : counts) {
      c = std::min(c, *opts.per_k_count_limit);
      if (c == *opts.per_k_count_limit) limit_hit = true;
    }
  }
  // counts[0] (zero classes) is always 0.
  s.counts.assign(counts.begin() + 1, counts.end());
  while (!s.counts.empty() && s.counts.back() == 0) s.counts.pop_back();
  s.exact = !limit_hit && !truncated;
  return s;
}

ChromaticSpectrum search(const MixedHypergraph& h, const SearchOptions& opts, const PartitionVisitor* visit) {
  const auto compiled = compile(h, opts);
  Shared shared;
  if (opts.workers <= 1) {
    Searcher s(compiled, opts, visit, shared);
    s.run({});
    return finish(s.counts(), s.truncated(), opts);
  }

  // Split on the first vertices until there is enough work to share.
  std::vector<std::vector<ClassIndex>> work;
  std::atomic<bool> truncated{false};
  {
    Searcher splitter(compiled, opts, nullptr, shared);
    const std::size_t wanted = 32 * static_cast<std::size_t>(opts.workers);
    for (std::size_t depth = 1; depth <= compiled.n; ++depth) {
      work = splitter.prefixes(depth);
      if (work.size() >= wanted || work.empty()) break;
    }
    truncated = splitter.truncated();
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::vector<std::uint64_t>> counts(opts.workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < opts.workers; ++w) {
      threads.emplace_back([&, w] {
        Searcher s(compiled, opts, visit, shared);
        for (auto i = next++; i < work.size(); i = next++) s.run(work[i]);
        counts[w] = s.counts();
        if (s.truncated()) truncated = true;
      });
    }
  }
  std::vector<std::uint64_t> total(compiled.n + 1, 0);
  for (const auto& c : counts) {
    for (std::size_t k = 0; k < c.size(); ++k) total[k] += c[k];
  }
  return finish(std::move(total), truncated, opts);
}

}  // namespace

ChromaticSpectrum enumerate_strict_partitions(const MixedHypergraph& h, const SearchOptions& opts,
                                              const PartitionVisitor& visit) {
  return search(h, opts, &visit);
}

std::vector<Partition> enumerate_strict_partitions(const MixedHypergraph& h, const SearchOptions& opts) {
  std::vector<Partition> out;
  enumerate_strict_partitions(h, opts, [&](const Partition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<Partition> strict_partitions_with_classes(const MixedHypergraph& h, std::size_t k,
                                                      SearchOptions opts) {
  if (k == 0) throw InputError("class count must be >= 1");
  std::vector<Partition> out;
  if (k > h.vertex_count()) return out;
  opts.max_classes = k;
  enumerate_strict_partitions(h, opts, [&](const Partition& p) {
    if (p.class_count() == k) out.push_back(p);
    return true;
  });
  return out;
}

ChromaticSpectrum chromatic_spectrum(const MixedHypergraph& h, const SearchOptions& opts) {
  return search(h, opts, nullptr);
}

FeasibleSet feasible_set(const MixedHypergraph& h, const SearchOptions& opts) {
  auto capped = opts;
  // Any single partition per k is enough to decide membership.
  capped.per_k_count_limit = 1;
  capped.stop_at_limit = false;
  return FeasibleSet{search(h, capped, nullptr).feasible_set()};
}

RealizationReport is_one_realization(const MixedHypergraph& h, const std::vector<std::size_t>& target,
                                     SearchOptions opts) {
  if (target.empty()) throw InputError("target set is empty");
  RealizationReport report;
  report.target_set = target;
  std::sort(report.target_set.begin(), report.target_set.end());
  report.target_set.erase(std::unique(report.target_set.begin(), report.target_set.end()),
                          report.target_set.end());
  if (report.target_set.front() == 0) throw InputError("target set values must be positive");

  opts.per_k_count_limit = 2;
  opts.stop_at_limit = true;
  std::map<std::size_t, Partition> witnesses;
  report.spectrum = enumerate_strict_partitions(h, opts, [&](const Partition& p) {
    witnesses.try_emplace(p.class_count(), p);
    return true;
  });
  report.feasible_set = report.spectrum.feasible_set();
  for (auto& [k, p] : witnesses) report.witness_colorings.push_back(p);

  const auto& counts = report.spectrum.counts;
  report.is_one_realization = report.spectrum.exact && report.feasible_set == report.target_set &&
                              std::all_of(counts.begin(), counts.end(), [](auto c) { return c <= 1; });
  return report;
}

ChromaticSpectrum spectrum_bruteforce(const MixedHypergraph& h, const BruteForceOptions& opts) {
  const auto n = h.vertex_count();
  if (n > opts.guard && !opts.force) {
    throw RefusalError("brute force refused: " + std::to_string(n) + " vertices exceeds guard of " +
                       std::to_string(opts.guard) + " (use force)");
  }
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<ClassIndex> a(n, 0);
  // prefix_max[i] = max(a[0..i-1]) + 1, the largest value a[i] may take.
  std::vector<ClassIndex> prefix_max(n, 0);
  for (;;) {
    ClassIndex top = 0;
    for (std::size_t i = 0; i < n; ++i) {
      prefix_max[i] = top;
      top = std::max<ClassIndex>(top, a[i] + 1);
    }
    if (is_strict_assignment(h, a)) ++counts[top];
    std::size_t i = n;
    while (i-- > 1 && a[i] >= prefix_max[i]) {}
    if (i == 0 || i >= n) break;
    ++a[i];
    std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
  }
  ChromaticSpectrum s;
  s.counts.assign(counts.begin() + 1, counts.end());
  while (!s.counts.empty() && s.counts.back() == 0) s.counts.pop_back();
  return s;
}

}  // namespace mhg
