#include "mhg_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "mhg/constructions.hpp"
#include "mhg/engine.hpp"
#include "mhg/errors.hpp"
#include "mhg/io.hpp"

namespace mhg::cli {
namespace {

using nlohmann::json;

enum class Level { error = 0, info = 1, debug = 2 };

class Log {
 public:
  explicit Log(std::ostream& err) : err_(err) {
    const char* env = std::getenv("MHG_LOG");
    if (!env || !*env) return;
    const std::string v = env;
    if (v == "error") {
      level_ = Level::error;
    } else if (v == "info") {
      level_ = Level::info;
    } else if (v == "debug") {
      level_ = Level::debug;
    } else {
      err_ << "warning: ignoring MHG_LOG=" << v << " (expected error, info or debug)\n";
    }
  }

  bool enabled(Level l) const { return l <= level_; }
  void info(const std::string& msg) const { write(Level::info, "info", msg); }
  void debug(const std::string& msg) const { write(Level::debug, "debug", msg); }
  void error(const std::string& msg) const { err_ << "error: " << msg << '\n'; }

 private:
  void write(Level l, const char* tag, const std::string& msg) const {
    if (enabled(l)) err_ << tag << ": " << msg << '\n';
  }

  std::ostream& err_;
  Level level_ = Level::error;
};

struct Flags {
  std::string command;
  std::optional<int> r;
  std::optional<std::string> set;
  std::optional<std::string> in;
  std::optional<std::string> out;
  std::optional<int> k;
  std::optional<int> max_k;
  std::optional<std::uint64_t> limit;
  bool force = false;
  bool json = false;
};

const std::vector<std::string> kCommands = {"construct", "delta", "spectrum", "verify", "enumerate", "oracle"};

std::vector<int> parse_set(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw InputError("invalid --set entry '" + item + "'");
    values.push_back(v);
  }
  if (values.empty() || text.back() == ',') throw InputError("--set must list comma-separated integers");
  return values;
}

// Sets are unordered on the command line; the target is n_1 > n_2 > ...
TargetSet target_from(const Flags& f) {
  auto values = parse_set(*f.set);
  std::sort(values.begin(), values.end(), std::greater<>());
  return validate_target(values, *f.r);
}

std::string braces(const std::vector<std::size_t>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s + "}";
}

std::string joined(const std::vector<std::uint64_t>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

std::size_t edge_count(const MixedHypergraph& h) {
  std::size_t n = h.c_edges().size();
  for (const auto& e : h.d_edges()) {
    if (!std::binary_search(h.c_edges().begin(), h.c_edges().end(), e)) ++n;
  }
  return n;
}

// Flags each command accepts beyond --json.
struct Allowed {
  bool r = false, set = false, in = false, out = false, k = false, max_k = false, limit = false, force = false;
};

Allowed allowed_for(const std::string& command) {
  Allowed a;
  if (command == "construct") {
    a.r = a.set = a.out = true;
  } else if (command == "delta") {
    a.r = a.set = true;
  } else if (command == "spectrum") {
    a.r = a.set = a.in = a.max_k = a.limit = true;
  } else if (command == "verify") {
    a.r = a.set = a.in = true;
  } else if (command == "enumerate") {
    a.r = a.set = a.in = a.k = a.limit = true;
  } else if (command == "oracle") {
    a.r = a.set = a.in = a.force = true;
  }
  return a;
}

void check_flags(const Flags& f) {
  const auto a = allowed_for(f.command);
  auto reject = [&](bool given, bool ok, const char* name) {
    if (given && !ok) throw InputError(std::string(name) + " is not valid for '" + f.command + "'");
  };
  reject(f.r.has_value(), a.r, "--r");
  reject(f.set.has_value(), a.set, "--set");
  reject(f.in.has_value(), a.in, "--in");
  reject(f.out.has_value(), a.out, "--out");
  reject(f.k.has_value(), a.k, "--k");
  reject(f.max_k.has_value(), a.max_k, "--max-k");
  reject(f.limit.has_value(), a.limit, "--limit");
  reject(f.force, a.force, "--force");

  const bool generates = f.command == "construct" || f.command == "delta" || !f.in;
  if (f.in && f.r) throw InputError("--r cannot be combined with --in");
  if (f.command == "verify" && !f.set) throw InputError("verify requires --set");
  if (generates) {
    if (!f.r || !f.set) {
      throw InputError(f.command + " requires --r and --set" +
                       (a.in ? std::string(" (or --in)") : std::string()));
    }
  } else if (f.set && f.command != "verify") {
    throw InputError("--set cannot be combined with --in");
  }
  if (f.command == "enumerate" && !f.k) throw InputError("enumerate requires --k");
  if (f.k && *f.k < 1) throw InputError("--k must be >= 1");
  if (f.max_k && *f.max_k < 1) throw InputError("--max-k must be >= 1");
  if (f.limit && *f.limit < 1) throw InputError("--limit must be >= 1");
}

class Runner {
 public:
  Runner(const Flags& f, std::ostream& out, std::ostream& err, const Log& log)
      : f_(f), out_(out), err_(err), log_(log) {}

  int dispatch() {
    const auto& c = f_.command;
    if (c == "construct") return construct();
    if (c == "delta") return delta_cmd();
    if (c == "spectrum") return spectrum();
    if (c == "verify") return verify();
    if (c == "enumerate") return enumerate();
    return oracle();
  }

 private:
  struct Instance {
    LabeledHypergraph graph;
    std::optional<ConstructionCase> dispatched;
  };

  Instance load() {
    if (f_.in) {
      auto g = read_mhg_file(*f_.in);
      log_.info("read " + *f_.in + ": " + std::to_string(g.vertex_count()) + " vertices, " +
                std::to_string(edge_count(g.graph())) + " edges");
      return {std::move(g), std::nullopt};
    }
    const auto t = target_from(f_);
    const auto kase = classify(t);
    auto g = generate(t);
    log_.info("generated " + to_string(kase.tag) + ": " + std::to_string(g.vertex_count()) + " vertices, " +
              std::to_string(edge_count(g.graph())) + " edges");
    return {std::move(g), kase};
  }

  SearchOptions search_options() const {
    SearchOptions o;
    if (log_.enabled(Level::debug)) {
      o.heartbeat = [this](std::uint64_t nodes) { log_.debug("search nodes=" + std::to_string(nodes)); };
    }
    return o;
  }

  template <class F>
  auto timed(const char* what, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    auto result = body();
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    log_.info(std::string(what) + " took " + std::to_string(took.count()) + " s");
    return result;
  }

  void print_json(const json& j, std::ostream& os) const { os << j.dump(2) << '\n'; }

  int construct() {
    const auto t = target_from(f_);
    const auto kase = classify(t);
    const auto g = generate(t);
    // The summary shares stdout only when the instance goes to a file.
    std::ostream& report = f_.out ? out_ : err_;
    if (f_.out) {
      write_mhg_file(g, *f_.out);
    } else {
      write_mhg(g, out_);
    }
    const auto edges = edge_count(g.graph());
    if (f_.json) {
      print_json({{"construction", to_string(kase.tag)},
                  {"case", std::string(1, to_char(kase.formula))},
                  {"delta", kase.delta},
                  {"vertices", g.vertex_count()},
                  {"edges", edges}},
                 report);
    } else {
      report << "construction=" << to_string(kase.tag) << " case=" << to_char(kase.formula)
             << " delta=" << kase.delta << " vertices=" << g.vertex_count() << " edges=" << edges << '\n';
    }
    return kExitOk;
  }

  int delta_cmd() {
    const auto kase = classify(target_from(f_));
    if (f_.json) {
      print_json({{"delta", kase.delta},
                  {"case", std::string(1, to_char(kase.formula))},
                  {"construction", to_string(kase.tag)}},
                 out_);
    } else {
      out_ << "delta=" << kase.delta << " case=" << to_char(kase.formula) << " construction=" << to_string(kase.tag)
           << '\n';
    }
    return kExitOk;
  }

  void spectrum_report(const Instance& inst, const ChromaticSpectrum& s) {
    const auto& g = inst.graph;
    const auto feasible = s.feasible_set();
    const auto chi = s.lower_chromatic_number();
    const auto chibar = s.upper_chromatic_number();
    if (f_.json) {
      json j = {{"vertices", g.vertex_count()},
                {"edges", edge_count(g.graph())},
                {"spectrum", s.counts},
                {"feasible_set", feasible},
                {"exact", s.exact}};
      j["chi"] = chi ? json(*chi) : json(nullptr);
      j["chibar"] = chibar ? json(*chibar) : json(nullptr);
      print_json(j, out_);
      return;
    }
    out_ << "vertices=" << g.vertex_count() << " edges=" << edge_count(g.graph()) << '\n';
    out_ << "k r_k\n";
    for (std::size_t k = 1; k <= s.counts.size(); ++k) out_ << k << ' ' << s.counts[k - 1] << '\n';
    out_ << "feasible_set=" << braces(feasible) << '\n';
    out_ << "chi=" << (chi ? std::to_string(*chi) : "none") << " chibar=" << (chibar ? std::to_string(*chibar) : "none")
         << '\n';
    out_ << "exact=" << (s.exact ? "yes" : "no") << '\n';
  }

  int spectrum() {
    const auto inst = load();
    auto opts = search_options();
    if (f_.max_k) opts.max_classes = static_cast<std::size_t>(*f_.max_k);
    if (f_.limit) opts.per_k_count_limit = *f_.limit;
    const auto s = timed("search", [&] { return chromatic_spectrum(inst.graph.graph(), opts); });
    spectrum_report(inst, s);
    return kExitOk;
  }

  int verify() {
    const auto inst = load();
    std::vector<std::size_t> target;
    for (int v : parse_set(*f_.set)) {
      if (v < 1) throw InputError("--set values must be positive");
      target.push_back(static_cast<std::size_t>(v));
    }
    const auto report =
        timed("verification", [&] { return is_one_realization(inst.graph.graph(), target, search_options()); });
    const auto& g = inst.graph;
    const auto edges = edge_count(g.graph());
    if (f_.json) {
      json j;
      if (inst.dispatched) {
        j["construction"] = to_string(inst.dispatched->tag);
        j["case"] = std::string(1, to_char(inst.dispatched->formula));
        j["delta"] = inst.dispatched->delta;
      }
      j["vertices"] = g.vertex_count();
      j["edges"] = edges;
      j["target_set"] = report.target_set;
      j["spectrum"] = report.spectrum.counts;
      j["feasible_set"] = report.feasible_set;
      j["exact"] = report.spectrum.exact;
      j["one_realization"] = report.is_one_realization;
      json w = json::array();
      for (const auto& p : report.witness_colorings) {
        w.push_back({{"k", p.class_count()}, {"partition", p.assignment()}});
      }
      j["witnesses"] = w;
      print_json(j, out_);
    } else {
      if (inst.dispatched) {
        out_ << "construction=" << to_string(inst.dispatched->tag) << " case=" << to_char(inst.dispatched->formula)
             << " delta=" << inst.dispatched->delta << '\n';
      }
      out_ << "vertices=" << g.vertex_count() << " edges=" << edges << '\n';
      out_ << "target_set=" << braces(report.target_set) << '\n';
      out_ << "spectrum=" << joined(report.spectrum.counts) << (report.spectrum.exact ? "" : " (partial)") << '\n';
      out_ << "feasible_set=" << braces(report.feasible_set) << '\n';
      for (const auto& p : report.witness_colorings) {
        out_ << "witness k=" << p.class_count() << ' ' << to_string(p) << '\n';
      }
      out_ << "one_realization=" << (report.is_one_realization ? "yes" : "no") << '\n';
    }
    return report.is_one_realization ? kExitOk : kExitFailed;
  }

  int enumerate() {
    const auto inst = load();
    const auto k = static_cast<std::size_t>(*f_.k);
    auto opts = search_options();
    opts.max_classes = k;
    std::uint64_t count = 0;
    json parts = json::array();
    if (k <= inst.graph.vertex_count()) {
      enumerate_strict_partitions(inst.graph.graph(), opts, [&](const Partition& p) {
        if (p.class_count() != k) return true;
        ++count;
        if (f_.json) {
          parts.push_back(p.assignment());
        } else {
          out_ << to_string(p) << '\n';
        }
        return !(f_.limit && count >= *f_.limit);
      });
    }
    if (f_.json) {
      print_json({{"k", k}, {"count", count}, {"partitions", parts}}, out_);
    } else {
      out_ << "count=" << count << '\n';
    }
    return kExitOk;
  }

  int oracle() {
    const auto inst = load();
    BruteForceOptions o;
    o.force = f_.force;
    const auto s = timed("brute force", [&] { return spectrum_bruteforce(inst.graph.graph(), o); });
    spectrum_report(inst, s);
    return kExitOk;
  }

  const Flags& f_;
  std::ostream& out_;
  std::ostream& err_;
  const Log& log_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mixed hypergraph coloring: constructions, spectra and one-realization checks", "mhg"};
  Flags f;
  app.add_option("command", f.command, "construct | delta | spectrum | verify | enumerate | oracle")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("--r", f.r, "Uniformity r");
  app.add_option("--set", f.set, "Target set, e.g. 7,5");
  app.add_option("--in", f.in, "Read the instance from a .mhg file");
  app.add_option("--out", f.out, "Write the instance to a .mhg file instead of stdout");
  app.add_option("--k", f.k, "Class count for enumerate");
  app.add_option("--max-k", f.max_k, "Never open more than this many classes");
  app.add_option("--limit", f.limit, "Stop after this many partitions per class count");
  app.add_flag("--force", f.force, "Run the brute-force oracle beyond its size guard");
  app.add_flag("--json", f.json, "Machine-readable report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  Log log(err);
  try {
    check_flags(f);
    return Runner(f, out, err, log).dispatch();
  } catch (const std::exception& e) {
    // Input, parse, refusal and I/O errors alike; no other exit codes exist.
    log.error(e.what());
    return kExitInvalid;
  }
}

}  // namespace mhg::cli
