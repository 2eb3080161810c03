#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mhg/hypergraph.hpp"

namespace mhg {

/// S = {n_1 > n_2 > ... > n_s} together with the uniformity r.
class TargetSet {
 public:
  const std::vector<int>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  int r() const noexcept { return r_; }
  /// n_i with 1-based i, as in n_1 > n_2 > ...
  int n(std::size_t i) const { return values_.at(i - 1); }
  int largest() const noexcept { return values_.front(); }
  int smallest() const noexcept { return values_.back(); }

  bool operator==(const TargetSet&) const = default;

 private:
  friend TargetSet validate_target(std::span<const int> values, int r);
  TargetSet(std::vector<int> values, int r) : values_(std::move(values)), r_(r) {}

  std::vector<int> values_;
  int r_;
};

/// Requires r >= 4, s >= 2, strictly decreasing values and n_s >= r-1.
/// Throws ValidationError naming the violated rule.
TargetSet validate_target(std::span<const int> values, int r);

/// Whether S (any order, entries >= 2) is the feasible set of some
/// r-uniform bi-hypergraph with at least one edge: min(S) >= r, or
/// 2 <= min(S) <= r-1 and S contains every integer in [min(S), r-1].
bool bujtas_tuza_feasible(std::span<const int> values, int r);

/// The four branches of the minimum vertex count.
enum class FormulaCase { a, b, c, d };

char to_char(FormulaCase f) noexcept;

struct DeltaResult {
  int count;
  FormulaCase formula;
};

/// Minimum vertex count of an r-uniform bi-hypergraph one-realizing S:
///   (a) n_1 > n_2+1:        (n_1-2)r - (n_1-r-1)floor(r/2) + 2
///   (b) n_1 = n_2+1 > r+2:  (n_1-3)r - (n_1-r-3)floor(r/2) + 2
///   (c) n_1 = r, or S = {r+1, r, r-1} with r >= 5:  r(r-1) - 1
///   (d) otherwise:          (n_1-2)(r-1) + 3
DeltaResult delta(const TargetSet& t);

enum class ConstructionTag { I, IInducedX, IIG, IIGPrime, H1, H2, H3, H4, H5, H6, H7, H8, H9 };

std::string to_string(ConstructionTag tag);
std::optional<ConstructionTag> parse_construction_tag(const std::string& s);

struct ConstructionCase {
  ConstructionTag tag;
  int delta;
  FormulaCase formula;
};

/// Which minimal construction realizes t. Total on valid targets.
ConstructionCase classify(const TargetSet& t);

/// The basic construction H_{n_1,...,n_s}. For s = 2 requires n_1 > n_2+1.
/// Vertex order: V, U, W_pk, W_2h, T_1, T_2, K.
LabeledHypergraph gen_construction_I(const TargetSet& t);

/// G on Y (induced = false) or G' = G[Y'] with Y' = Y minus {(n_2,n_2,1), (n_1,n_2,1)}.
/// Requires n_1 = n_2+1 > r+2; the induced variant requires odd r.
LabeledHypergraph gen_construction_II(int n1, int n2, int r, bool induced);

/// H_1, ..., H_9. H6 needs r >= 6, H7 fixes r = 5, H8 fixes r = 4, the rest r >= 4.
/// The realized set is implied by (tag, r), see target_for.
LabeledHypergraph gen_small_case(ConstructionTag tag, int r);

/// The set an H_i construction realizes at uniformity r.
std::vector<int> target_for(ConstructionTag tag, int r);

/// Vertex count of generate(t). Equals delta(t) except when n_1 = n_2+1 and
/// s >= 3: Construction I keeps W_20 there, adding ceil(r/2)-1 vertices.
int construction_vertex_count(const TargetSet& t);

/// Builds the construction chosen by classify(t).
LabeledHypergraph generate(const TargetSet& t);

/// The strict colorings named alongside each construction, one per element
/// of S in decreasing class count. Throws InputError if g has no provenance.
std::vector<Partition> canonical_colorings(const LabeledHypergraph& g);

}  // namespace mhg
