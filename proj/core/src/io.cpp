#include "mhg/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace mhg {

void write_mhg(const LabeledHypergraph& g, std::ostream& out) {
  const auto& h = g.graph();
  out << "mhg " << kMhgFormatVersion << '\n';
  out << "uniform " << g.uniformity() << '\n';
  out << "vertices " << h.vertex_count() << '\n';
  for (Vertex v = 0; v < g.labels().size(); ++v) out << "label " << v << ' ' << to_string(g.labels()[v]) << '\n';

  // Edge lists are kept sorted, so a merge gives lexicographic order.
  std::map<Edge, std::pair<bool, bool>> edges;
  for (const auto& e : h.c_edges()) edges[e].first = true;
  for (const auto& e : h.d_edges()) edges[e].second = true;
  for (const auto& [e, kind] : edges) {
    out << (kind.first && kind.second ? "biedge" : kind.first ? "cedge" : "dedge");
    for (auto v : e) out << ' ' << v;
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_mhg: output stream failure");
}

std::string write_mhg(const LabeledHypergraph& g) {
  std::ostringstream out;
  write_mhg(g, out);
  return out.str();
}

void write_mhg_file(const LabeledHypergraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_mhg(g, out);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view tok, std::size_t line, const char* what) {
  Int value{};
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

LabeledHypergraph read_mhg(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  int header = 0;  // number of header lines consumed
  std::size_t uniform = 0;
  std::size_t n = 0;
  std::map<Vertex, std::pair<VertexLabel, std::size_t>> labels;  // value, line
  std::vector<Edge> c_edges;
  std::vector<Edge> d_edges;
  std::set<Edge> c_seen;
  std::set<Edge> d_seen;

  auto expect = [&](const std::vector<std::string_view>& tok, std::string_view key) {
    if (tok.size() != 2 || tok[0] != key) {
      throw ParseError(line_no, "expected '" + std::string(key) + " <value>'");
    }
  };

  while (std::getline(in, raw)) {
    ++line_no;
    const auto tok = split_ws(raw);
    if (tok.empty() || tok[0].front() == '#') continue;

    if (header == 0) {
      expect(tok, "mhg");
      const auto version = parse_int<int>(tok[1], line_no, "format version");
      if (version != kMhgFormatVersion) throw ParseError(line_no, "unsupported format version " + std::to_string(version));
      ++header;
      continue;
    }
    if (header == 1) {
      expect(tok, "uniform");
      uniform = parse_int<std::size_t>(tok[1], line_no, "uniformity");
      ++header;
      continue;
    }
    if (header == 2) {
      expect(tok, "vertices");
      n = parse_int<std::size_t>(tok[1], line_no, "vertex count");
      if (n == 0) throw ParseError(line_no, "vertex count must be positive");
      ++header;
      continue;
    }

    const auto kind = tok[0];
    if (kind == "label") {
      if (tok.size() != 3) throw ParseError(line_no, "expected 'label <index> <e1,...,ek>'");
      const auto v = parse_int<Vertex>(tok[1], line_no, "vertex index");
      if (v >= n) throw ParseError(line_no, "label index " + std::to_string(v) + " out of range");
      VertexLabel label;
      std::string_view rest = tok[2];
      while (true) {
        const auto comma = rest.find(',');
        const auto part = rest.substr(0, comma);
        const int entry = parse_int<int>(part, line_no, "label entry");
        if (entry < 1) throw ParseError(line_no, "label entries must be >= 1");
        label.entries.push_back(entry);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      if (!labels.emplace(v, std::pair{std::move(label), line_no}).second) {
        throw ParseError(line_no, "duplicate label for vertex " + std::to_string(v));
      }
      continue;
    }

    const bool c = kind == "cedge" || kind == "biedge";
    const bool d = kind == "dedge" || kind == "biedge";
    if (!c && !d) throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
    Edge e;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      const auto v = parse_int<Vertex>(tok[i], line_no, "vertex index");
      if (v >= n) {
        throw ParseError(line_no, "vertex index " + std::to_string(v) + " out of range for " + std::to_string(n) +
                                      " vertices");
      }
      e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    if (e.size() < 2) throw ParseError(line_no, "edge needs at least 2 vertices");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw ParseError(line_no, "edge repeats a vertex");
    if (uniform > 0 && e.size() != uniform) {
      throw ParseError(line_no, "edge of size " + std::to_string(e.size()) + " in a " + std::to_string(uniform) +
                                    "-uniform hypergraph");
    }
    if ((c && c_seen.contains(e)) || (d && d_seen.contains(e))) throw ParseError(line_no, "duplicate edge");
    if (c) {
      c_seen.insert(e);
      c_edges.push_back(e);
    }
    if (d) {
      d_seen.insert(e);
      d_edges.push_back(e);
    }
  }
  if (header < 3) throw ParseError(std::max<std::size_t>(line_no, 1), "truncated header (expected mhg, uniform and vertices lines)");

  std::vector<VertexLabel> label_list;
  if (!labels.empty()) {
    if (labels.size() != n) {
      throw ParseError(line_no, "labels given for " + std::to_string(labels.size()) + " of " + std::to_string(n) +
                                    " vertices");
    }
    std::set<VertexLabel> distinct;
    const auto width = labels.begin()->second.first.size();
    for (auto& [v, entry] : labels) {
      auto& [label, at] = entry;
      if (label.size() != width) throw ParseError(at, "label length differs from the first label");
      if (!distinct.insert(label).second) throw ParseError(at, "duplicate label (" + to_string(label) + ")");
      label_list.push_back(std::move(label));
    }
  }
  try {
    return LabeledHypergraph(MixedHypergraph(n, std::move(c_edges), std::move(d_edges)), std::move(label_list),
                             uniform);
  } catch (const InputError& e) {
    throw ParseError(line_no, e.what());
  }
}

LabeledHypergraph read_mhg(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_mhg(in);
}

LabeledHypergraph read_mhg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_mhg(in);
}

}  // namespace mhg
