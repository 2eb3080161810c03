#include "mhg/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace mhg {

TargetSet validate_target(std::span<const int> values, int r) {
  if (r < 4) throw ValidationError("uniformity r must be >= 4 (got " + std::to_string(r) + ")");
  if (values.size() < 2) throw ValidationError("target set needs s >= 2 values");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] >= values[i - 1]) {
      throw ValidationError("target set must be strictly decreasing (n_1 > n_2 > ... > n_s)");
    }
  }
  if (values.back() < r - 1) {
    throw ValidationError("n_s >= r-1 violated: n_s=" + std::to_string(values.back()) +
                          " < r-1=" + std::to_string(r - 1));
  }
  return TargetSet({values.begin(), values.end()}, r);
}

bool bujtas_tuza_feasible(std::span<const int> values, int r) {
  if (values.empty()) return false;
  const std::set<int> s(values.begin(), values.end());
  const int lo = *s.begin();
  if (lo >= r) return true;
  if (lo < 2) return false;
  for (int k = lo; k <= r - 1; ++k) {
    if (!s.contains(k)) return false;
  }
  return true;
}

char to_char(FormulaCase f) noexcept { return static_cast<char>('a' + static_cast<int>(f)); }

DeltaResult delta(const TargetSet& t) {
  const int r = t.r();
  const int n1 = t.n(1);
  const int n2 = t.n(2);
  const int half = r / 2;
  if (n1 > n2 + 1) return {(n1 - 2) * r - (n1 - r - 1) * half + 2, FormulaCase::a};
  if (n1 > r + 2) return {(n1 - 3) * r - (n1 - r - 3) * half + 2, FormulaCase::b};
  const bool top_three = t.size() == 3 && n1 == r + 1 && t.n(3) == r - 1 && r > 4;
  if (n1 == r || top_three) return {r * (r - 1) - 1, FormulaCase::c};
  return {(n1 - 2) * (r - 1) + 3, FormulaCase::d};
}

std::string to_string(ConstructionTag tag) {
  switch (tag) {
    case ConstructionTag::I: return "I";
    case ConstructionTag::IInducedX: return "I-induced-X'";
    case ConstructionTag::IIG: return "II-G";
    case ConstructionTag::IIGPrime: return "II-G'";
    case ConstructionTag::H1: return "H1";
    case ConstructionTag::H2: return "H2";
    case ConstructionTag::H3: return "H3";
    case ConstructionTag::H4: return "H4";
    case ConstructionTag::H5: return "H5";
    case ConstructionTag::H6: return "H6";
    case ConstructionTag::H7: return "H7";
    case ConstructionTag::H8: return "H8";
    case ConstructionTag::H9: return "H9";
  }
  throw std::logic_error("unknown construction tag");
}

std::optional<ConstructionTag> parse_construction_tag(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(ConstructionTag::H9); ++i) {
    const auto tag = static_cast<ConstructionTag>(i);
    if (to_string(tag) == s) return tag;
  }
  return std::nullopt;
}

ConstructionCase classify(const TargetSet& t) {
  const auto [count, formula] = delta(t);
  const int r = t.r();
  const int n1 = t.n(1);
  const int n2 = t.n(2);
  const auto s = t.size();
  auto with = [&](ConstructionTag tag) { return ConstructionCase{tag, count, formula}; };

  if (n1 > n2 + 1) return with(ConstructionTag::I);
  // From here on n_1 = n_2 + 1.
  if (n1 > r + 2) {
    if (s == 2) return with(r % 2 == 0 ? ConstructionTag::IIG : ConstructionTag::IIGPrime);
    return with(r % 2 == 0 ? ConstructionTag::I : ConstructionTag::IInducedX);
  }
  if (n1 == r + 2) {
    if (s == 2) return with(ConstructionTag::H1);
    if (s == 3) return with(t.n(3) == r ? ConstructionTag::H2 : ConstructionTag::H3);
    if (s == 4) return with(ConstructionTag::H4);
  }
  if (n1 == r + 1) {
    if (s == 2) return with(ConstructionTag::H5);
    if (s == 3) {
      if (r >= 6) return with(ConstructionTag::H6);
      return with(r == 5 ? ConstructionTag::H7 : ConstructionTag::H8);
    }
  }
  if (n1 == r && s == 2) return with(ConstructionTag::H9);
  throw std::logic_error("classify: no construction for a validated target set (internal error)");
}

namespace {

using Label = std::vector<int>;

// Accumulates labels (set semantics, first occurrence wins) and explicit
// edges, then materializes every r-subset satisfying the coordinate rule.
class Builder {
 public:
  explicit Builder(int r) : r_(r) {}

  void add(Label l) {
    if (seen_.insert(l).second) labels_.push_back(std::move(l));
  }
  void add_edge(std::vector<Label> e) { explicit_.push_back(std::move(e)); }
  std::size_t size() const { return labels_.size(); }

  LabeledHypergraph build(Provenance prov) const;

 private:
  int r_;
  std::vector<Label> labels_;
  std::set<Label> seen_;
  std::vector<std::vector<Label>> explicit_;
};

// Coordinate rule: in every coordinate the r labels take between 2 and r-1 values.
void rule_edges(const std::vector<Label>& labels, int r, std::set<Edge>& out) {
  const auto n = labels.size();
  const auto width = labels.front().size();
  const auto ur = static_cast<std::size_t>(r);
  if (n < ur) return;
  for (const auto& l : labels) {
    for (int x : l) {
      if (x >= 64) throw ValidationError("label entries must be < 64 for edge generation");
    }
  }
  // masks[d][j]: values seen in coordinate j among the first d chosen vertices.
  std::vector<std::vector<std::uint64_t>> masks(ur + 1, std::vector<std::uint64_t>(width, 0));
  Edge chosen(ur);
  auto rec = [&](auto&& self, std::size_t depth, Vertex from) -> void {
    if (depth == ur) {
      for (std::size_t j = 0; j < width; ++j) {
        const int distinct = std::popcount(masks[depth][j]);
        if (distinct < 2 || distinct > r - 1) return;
      }
      out.insert(chosen);
      return;
    }
    for (Vertex v = from; v + (ur - depth) <= n; ++v) {
      chosen[depth] = v;
      for (std::size_t j = 0; j < width; ++j) {
        masks[depth + 1][j] = masks[depth][j] | (std::uint64_t{1} << labels[v][j]);
      }
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
}

LabeledHypergraph Builder::build(Provenance prov) const {
  std::map<Label, Vertex> index;
  for (Vertex v = 0; v < labels_.size(); ++v) index.emplace(labels_[v], v);

  std::set<Edge> edges;
  rule_edges(labels_, r_, edges);
  for (const auto& e : explicit_) {
    Edge mapped;
    for (const auto& l : e) {
      auto it = index.find(l);
      if (it == index.end()) throw std::logic_error("explicit edge uses a label outside the vertex set");
      mapped.push_back(it->second);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped.size() != static_cast<std::size_t>(r_) ||
        std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end()) {
      throw std::logic_error("explicit edge is not an r-set");
    }
    edges.insert(std::move(mapped));
  }

  std::vector<VertexLabel> vl;
  vl.reserve(labels_.size());
  for (const auto& l : labels_) vl.push_back(VertexLabel{l});
  return LabeledHypergraph(MixedHypergraph::bi(labels_.size(), {edges.begin(), edges.end()}), std::move(vl),
                           static_cast<std::size_t>(r_), std::move(prov));
}

Label repeat(int value, std::size_t times) { return Label(times, value); }

Label concat(Label a, const Label& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void expect_count(const char* what, std::size_t got, long expected, const std::string& detail = {}) {
  if (static_cast<long>(got) != expected) {
    throw std::logic_error(std::string(what) + ": generated " + std::to_string(got) + " vertices, expected " +
                           std::to_string(expected) + (detail.empty() ? "" : " [" + detail + "]"));
  }
}

LabeledHypergraph with_provenance(const LabeledHypergraph& g, Provenance prov) {
  return LabeledHypergraph(g.graph(), g.labels(), g.uniformity(), std::move(prov));
}

LabeledHypergraph remove_labels(const LabeledHypergraph& g, const std::vector<Label>& drop) {
  std::set<Vertex> removed;
  for (const auto& l : drop) {
    auto v = g.find(VertexLabel{l});
    if (!v) throw std::logic_error("label to remove is not a vertex");
    removed.insert(*v);
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!removed.contains(v)) keep.push_back(v);
  }
  return induced_subhypergraph(g, keep);
}

// The explicit edges shared by Constructions II, III and VII:
// {(r-1,1,1), (1,1,1), ..., (r-1,r-1,1)} and {(r-1,1,1), (1,1,1), ..., (1,1,r-1)}.
void add_corner_edges(Builder& b, int r) {
  std::vector<Label> diagonal{{r - 1, 1, 1}};
  for (int i = 1; i <= r - 1; ++i) diagonal.push_back({i, i, 1});
  std::vector<Label> column{{r - 1, 1, 1}};
  for (int t = 1; t <= r - 1; ++t) column.push_back({1, 1, t});
  b.add_edge(std::move(diagonal));
  b.add_edge(std::move(column));
}

}  // namespace

LabeledHypergraph gen_construction_I(const TargetSet& t) {
  const int r = t.r();
  const auto s = t.size();
  const int ns = t.n(s);
  if (s == 2 && !(t.n(1) > t.n(2) + 1)) {
    throw ValidationError("construction I with s=2 requires n_1 > n_2+1");
  }
  const int l = (r + 1) / 2;
  // tail(p) = (n_p, n_{p+1}, ..., n_s)
  auto tail = [&](std::size_t p) { return Label(t.values().begin() + static_cast<long>(p - 1), t.values().end()); };
  // mid = (n_2, ..., n_{s-1})
  const Label mid(t.values().begin() + 1, t.values().end() - 1);

  Builder b(r);
  std::map<std::string, std::size_t> family;
  auto add = [&](const char* fam, Label lab) {
    const auto before = b.size();
    b.add(std::move(lab));
    family[fam] += b.size() - before;
  };

  std::vector<int> m_s;
  for (int i = 1; i <= r - 2; ++i) m_s.push_back(i);
  m_s.push_back(ns);

  for (int i : m_s) {
    for (int x = 1; x <= r - 1; ++x) add("V", concat(repeat(i, s), {x}));
  }
  for (int j = r - 1; j <= ns - 1; ++j) {
    for (int x = 1; x <= l; ++x) add("U", concat(repeat(j, s), {x}));
  }
  for (std::size_t p = 3; p <= s; ++p) {
    for (int k = 0; k <= t.n(p - 1) - t.n(p) - 1; ++k) {
      for (int x = 2; x <= l; ++x) add("W_pk", concat(concat(repeat(t.n(p) + k, p - 1), tail(p)), {x}));
    }
  }
  for (int h = 0; h <= std::max(0, t.n(1) - t.n(2) - 2); ++h) {
    for (int x = 2; x <= l; ++x) add("W_2h", concat(concat({t.n(2) + h}, tail(2)), {x}));
  }
  std::vector<int> t1;
  if (r > 4) {
    for (int x = 2; x <= l - 1; ++x) t1.push_back(x);
  }
  t1.push_back(ns);
  for (int x : t1) add("T1", concat(concat({t.n(1) - 1}, mid), {x, x}));
  std::vector<int> t2;
  for (int x = l; x <= r - 2; ++x) t2.push_back(x);
  t2.push_back(ns);
  for (int x : t2) add("T2", concat(concat({t.n(1)}, mid), {x, x}));
  for (std::size_t p = 2; p <= s; ++p) {
    for (int k = 0; k <= t.n(p - 1) - t.n(p) - 1; ++k) {
      add("K", concat(repeat(t.n(p) + k, p - 1), repeat(1, s + 2 - p)));
    }
  }

  // {(n_s,...,n_s,1,1), (1,...,1), ..., (r-2,...,r-2,1), (n_s,...,n_s,1)}
  std::vector<Label> special{concat(repeat(ns, s - 1), {1, 1})};
  for (int i : m_s) special.push_back(concat(repeat(i, s), {1}));
  b.add_edge(std::move(special));

  const int n1 = t.n(1);
  std::string detail;
  for (const auto& [name, count] : family) detail += name + "=" + std::to_string(count) + " ";
  // W_20 exists even when n_1 = n_2+1; the closed form counts it only for n_1 > n_2+1.
  const int extra = n1 == t.n(2) + 1 ? l - 1 : 0;
  expect_count("construction I", b.size(), (n1 - 2) * r - (n1 - r - 1) * (r / 2) + 2 + extra, detail);

  return b.build(Provenance{to_string(ConstructionTag::I), t.values(), r});
}

LabeledHypergraph gen_construction_II(int n1, int n2, int r, bool induced) {
  if (r < 4) throw ValidationError("construction II requires r >= 4");
  if (!(n1 == n2 + 1 && n1 > r + 2)) throw ValidationError("construction II requires n_1 = n_2+1 > r+2");
  if (induced && r % 2 == 0) throw ValidationError("the induced variant G' requires odd r");
  const int l = (r + 1) / 2;

  Builder b(r);
  for (int i = 1; i <= r - 1; ++i) {
    for (int x = 1; x <= r - 1; ++x) b.add({i, i, x});
  }
  for (int j = r; j <= n2; ++j) {
    for (int x = 1; x <= l; ++x) b.add({j, j, x});
  }
  for (int x = 1; x <= l; ++x) b.add({n1, n2, x});
  b.add({r - 1, 1, 1});
  add_corner_edges(b, r);

  const long delta2 = static_cast<long>(n1 - 3) * r - static_cast<long>(n1 - r - 3) * (r / 2) + 2;
  const Provenance g_prov{to_string(ConstructionTag::IIG), {n1, n2}, r};
  auto g = b.build(g_prov);
  if (!induced) {
    if (r % 2 == 0) expect_count("construction II (G)", g.vertex_count(), delta2);
    return g;
  }
  auto reduced = remove_labels(g, {{n2, n2, 1}, {n1, n2, 1}});
  expect_count("construction II (G')", reduced.vertex_count(), delta2);
  return with_provenance(reduced, Provenance{to_string(ConstructionTag::IIGPrime), {n1, n2}, r});
}

std::vector<int> target_for(ConstructionTag tag, int r) {
  switch (tag) {
    case ConstructionTag::H1: return {r + 2, r + 1};
    case ConstructionTag::H2: return {r + 2, r + 1, r};
    case ConstructionTag::H3: return {r + 2, r + 1, r - 1};
    case ConstructionTag::H4: return {r + 2, r + 1, r, r - 1};
    case ConstructionTag::H5: return {r + 1, r};
    case ConstructionTag::H6: return {r + 1, r, r - 1};
    case ConstructionTag::H7: return {6, 5, 4};
    case ConstructionTag::H8: return {5, 4, 3};
    case ConstructionTag::H9: return {r, r - 1};
    default: throw InputError("target_for: " + to_string(tag) + " is parameterized by S, not by r alone");
  }
}

LabeledHypergraph gen_small_case(ConstructionTag tag, int r) {
  if (r < 4) throw ValidationError("small-case constructions require r >= 4");
  if (tag == ConstructionTag::H6 && r < 6) throw ValidationError("H6 requires r >= 6");
  if (tag == ConstructionTag::H7 && r != 5) throw ValidationError("H7 is defined for r = 5 only");
  if (tag == ConstructionTag::H8 && r != 4) throw ValidationError("H8 is defined for r = 4 only");

  Builder b(r);
  long expected = 0;
  const int n1 = r + 2;
  const int n2 = r + 1;
  switch (tag) {
    case ConstructionTag::H1: {
      for (int i = 1; i <= r; ++i) {
        for (int x = 1; x <= r - 1; ++x) b.add({i, i, x});
      }
      b.add({r - 1, 1, 1});
      b.add({r + 1, r + 1, 2});
      b.add({r + 2, r + 1, 2});
      add_corner_edges(b, r);
      expected = r * (r - 1) + 3;
      break;
    }
    case ConstructionTag::H2: {
      for (int i = 1; i <= r; ++i) {
        for (int x = 1; x <= r - 1; ++x) b.add({i, i, i, x});
      }
      b.add({r, r, 1, 1});
      b.add({n2, n2, r, 2});
      b.add({n1, n2, r, 2});
      std::vector<Label> e{{r, r, 1, 1}};
      for (int i = 1; i <= r - 2; ++i) e.push_back({i, i, i, 1});
      e.push_back({r, r, r, 1});
      b.add_edge(std::move(e));
      expected = r * (r - 1) + 3;
      break;
    }
    case ConstructionTag::H3: {
      for (int i = 1; i <= r - 1; ++i) {
        for (int x = 1; x <= r - 1; ++x) b.add({i, i, i, x});
      }
      for (int x = 1; x <= r - 1; ++x) b.add({r, r, x, x});
      b.add({r - 1, r - 1, 1, 1});
      b.add({n2, n2, r - 1, 2});
      b.add({n1, n2, r - 1, 2});
      std::vector<Label> e{{r - 1, r - 1, 1, 1}};
      for (int i = 1; i <= r - 1; ++i) e.push_back({i, i, i, 1});
      b.add_edge(std::move(e));
      expected = r * (r - 1) + 3;
      break;
    }
    case ConstructionTag::H4: {
      for (int i = 1; i <= r - 1; ++i) {
        for (int x = 1; x <= r - 1; ++x) b.add({i, i, i, i, x});
      }
      for (int x = 2; x <= r - 1; ++x) b.add({r, r, r, x, x});
      b.add({r - 1, r - 1, r - 1, 1, 1});
      b.add({r, r, 1, 1, 1});
      b.add({n2, n2, r, r - 1, 2});
      b.add({n1, n2, r, r - 1, 2});
      std::vector<Label> e{{r - 1, r - 1, r - 1, 1, 1}};
      for (int i = 1; i <= r - 1; ++i) e.push_back({i, i, i, i, 1});
      b.add_edge(std::move(e));
      expected = r * (r - 1) + 3;
      break;
    }
    case ConstructionTag::H5: {
      for (int i = 1; i <= r - 1; ++i) {
        for (int x = 1; x <= r - 1; ++x) b.add({i, i, x});
      }
      b.add({r - 1, 1, 1});
      b.add({r, r, 2});
      b.add({r + 1, r, 2});
      add_corner_edges(b, r);
      expected = (r - 1) * (r - 1) + 3;
      break;
    }
    case ConstructionTag::H6: {
      for (int i = 1; i <= r - 1; ++i) {
        for (int x = 1; x <= r - 1; ++x) b.add({i, i, i, x});
      }
      for (int j = 3; j <= r - 2; ++j) b.add({r, r, j, j});
      b.add({r - 1, r - 1, 1, 1});
      b.add({r + 1, r, r - 1, r - 1});
      std::vector<Label> e{{r - 1, r - 1, 1, 1}};
      for (int i = 1; i <= r - 1; ++i) e.push_back({i, i, i, 1});
      b.add_edge(std::move(e));
      expected = r * (r - 1) - 1;
      break;
    }
    case ConstructionTag::H7: {
      for (int x = 1; x <= 4; ++x) b.add({1, 1, 1, x});
      for (int x = 1; x <= 4; ++x) b.add({3, 3, 3, x});
      for (int x = 1; x <= 3; ++x) b.add({2, 2, 2, x});
      for (const Label& lab : std::vector<Label>{{4, 4, 4, 1}, {4, 4, 4, 3}, {4, 4, 4, 4}, {4, 4, 2, 2},
                                                 {2, 2, 4, 4}, {4, 4, 1, 1}, {5, 5, 2, 2}, {6, 5, 4, 4}}) {
        b.add(lab);
      }
      b.add_edge({{4, 4, 1, 1}, {1, 1, 1, 1}, {2, 2, 2, 1}, {3, 3, 3, 1}, {4, 4, 4, 1}});
      expected = r * (r - 1) - 1;
      break;
    }
    case ConstructionTag::H8: {
      for (int x = 1; x <= 3; ++x) b.add({1, 1, 1, x});
      for (const Label& lab : std::vector<Label>{{2, 2, 2, 1}, {2, 2, 2, 2}, {3, 3, 3, 1}, {3, 3, 3, 3},
                                                 {3, 3, 1, 1}, {2, 2, 3, 3}, {3, 3, 2, 2}, {4, 4, 2, 2},
                                                 {5, 4, 3, 3}}) {
        b.add(lab);
      }
      b.add_edge({{3, 3, 1, 1}, {1, 1, 1, 1}, {2, 2, 2, 1}, {3, 3, 3, 1}});
      expected = (r - 1) * (r - 1) + 3;
      break;
    }
    case ConstructionTag::H9: {
      for (int i = 1; i <= r - 1; ++i) {
        for (int x = 1; x <= r - 1; ++x) b.add({i, i, x});
      }
      for (int j = 3; j <= r - 1; ++j) b.add({r, j, j});
      b.add({r - 1, 1, 1});
      std::vector<Label> e{{r - 1, 1, 1}};
      for (int i = 1; i <= r - 1; ++i) e.push_back({i, i, 1});
      b.add_edge(std::move(e));
      expected = r * (r - 1) - 1;
      break;
    }
    default:
      throw ValidationError("gen_small_case: " + to_string(tag) + " is not one of H1..H9");
  }
  expect_count(to_string(tag).c_str(), b.size(), expected);
  return b.build(Provenance{to_string(tag), target_for(tag, r), r});
}

LabeledHypergraph generate(const TargetSet& t) {
  const auto cc = classify(t);
  const int r = t.r();
  auto result = [&]() -> LabeledHypergraph {
    switch (cc.tag) {
      case ConstructionTag::I: return gen_construction_I(t);
      case ConstructionTag::IInducedX: {
        auto full = gen_construction_I(t);
        auto reduced = remove_labels(full, {concat({t.n(2)}, repeat(1, t.size()))});
        return with_provenance(reduced, Provenance{to_string(cc.tag), t.values(), r});
      }
      case ConstructionTag::IIG: return gen_construction_II(t.n(1), t.n(2), r, false);
      case ConstructionTag::IIGPrime: return gen_construction_II(t.n(1), t.n(2), r, true);
      default: {
        if (target_for(cc.tag, r) != t.values()) {
          throw std::logic_error("classify picked " + to_string(cc.tag) + " for a different target set");
        }
        return gen_small_case(cc.tag, r);
      }
    }
  }();
  expect_count(("generate " + to_string(cc.tag)).c_str(), result.vertex_count(), construction_vertex_count(t));
  return result;
}

int construction_vertex_count(const TargetSet& t) {
  const int delta_value = classify(t).delta;
  if (t.size() >= 3 && t.n(1) == t.n(2) + 1 && t.n(1) > t.r() + 2) return delta_value + (t.r() + 1) / 2 - 1;
  return delta_value;
}

std::vector<Partition> canonical_colorings(const LabeledHypergraph& g) {
  if (!g.provenance() || !g.has_labels()) {
    throw InputError("canonical_colorings: instance was not produced by a construction generator");
  }
  const auto& prov = *g.provenance();
  const auto tag = parse_construction_tag(prov.tag);
  if (!tag) throw InputError("canonical_colorings: unknown construction tag '" + prov.tag + "'");
  const int r = prov.r;

  // Groups vertices by one label coordinate, optionally folding value `from` into `to`.
  auto by_coordinate = [&](std::size_t j, std::optional<std::pair<int, int>> fold = std::nullopt) {
    std::vector<int> key;
    key.reserve(g.vertex_count());
    for (const auto& lab : g.labels()) {
      int v = lab[j];
      if (fold && v == fold->first) v = fold->second;
      key.push_back(v);
    }
    return canonical_form(key);
  };

  std::vector<Partition> out;
  switch (*tag) {
    case ConstructionTag::IIG:
    case ConstructionTag::IIGPrime:
      // e_1 and e_2: the second merges W into U_{n_2}.
      out.push_back(by_coordinate(0));
      out.push_back(by_coordinate(0, std::pair{prov.target[0], prov.target[1]}));
      break;
    case ConstructionTag::H1:
      out.push_back(by_coordinate(0));
      out.push_back(by_coordinate(0, std::pair{r + 2, r + 1}));
      break;
    case ConstructionTag::H5:
      out.push_back(by_coordinate(0));
      out.push_back(by_coordinate(0, std::pair{r + 1, r}));
      break;
    default:
      for (std::size_t i = 0; i < prov.target.size(); ++i) out.push_back(by_coordinate(i));
      break;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].class_count() != static_cast<std::size_t>(prov.target[i])) {
      throw std::logic_error("canonical coloring " + std::to_string(i + 1) + " of " + prov.tag + " has " +
                             std::to_string(out[i].class_count()) + " classes, expected " +
                             std::to_string(prov.target[i]));
    }
  }
  return out;
}

}  // namespace mhg
