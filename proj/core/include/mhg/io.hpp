#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "mhg/hypergraph.hpp"

namespace mhg {

/// Line-based .mhg text format, version 1:
///
///   mhg 1
///   uniform <r>            (0 when non-uniform)
///   vertices <n>
///   label <index> <e1,e2,...,ek>     (optional, one per vertex)
///   cedge|dedge|biedge <i1> <i2> ...
///
/// Indices are zero-based; '#' starts a comment line; blank lines are ignored.
/// The writer emits one `biedge` line for an edge in both lists, sorts each
/// edge ascending and orders edge lines lexicographically by index sequence.
inline constexpr int kMhgFormatVersion = 1;

void write_mhg(const LabeledHypergraph& g, std::ostream& out);
std::string write_mhg(const LabeledHypergraph& g);
void write_mhg_file(const LabeledHypergraph& g, const std::string& path);

/// Parses and validates; throws ParseError carrying the offending line.
LabeledHypergraph read_mhg(std::istream& in);
LabeledHypergraph read_mhg(std::string_view text);
LabeledHypergraph read_mhg_file(const std::string& path);

}  // namespace mhg
