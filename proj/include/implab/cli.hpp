#pragma once

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "implab/implab.hpp"
#include "implab/serialize.hpp"

namespace implab::cli {

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2 };

/// Raised for anything the caller got wrong: unreadable input, bad graph text, bad spec.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "text";
  int jobs = 1;
  bool guard_override = false;
  std::string output;

  int enumeration_guard() const { return guard_override ? 10 : kEnumerationGuard; }
  int bal_guard() const { return guard_override ? Graph::kMaxVertices : 16; }
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline bool looks_like_graph6(std::string_view text) {
  if (text.substr(0, graph6::kHeader.size()) == graph6::kHeader) return true;
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(), [](char c) { return c >= 63 && c <= 126; });
}

inline std::string trim(std::string s) {
  const auto ws = " \t\r\n";
  s.erase(0, s.find_first_not_of(ws));
  s.erase(s.find_last_not_of(ws) + 1);
  return s;
}

/// Graph text: a graph6 stream (optionally "graph6 name" per line, '#' comments) or one
/// adjacency list.
inline std::vector<NamedGraph> parse_graph_text(const std::string& text, const std::string& label) {
  std::istringstream lines(text);
  std::string line;
  std::string first;
  while (std::getline(lines, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (!line.empty()) {
      first = line.substr(0, line.find_first_of(" \t"));
      break;
    }
  }
  if (looks_like_graph6(first)) {
    auto set = parse_fixture_set(text);
    if (set.size() == 1 && set.front().name == "#1") set.front().name = label;
    return set;
  }
  return {{label, adjacency_list::decode(text)}};
}

inline std::optional<NamedGraph> find_fixture_graph(const std::string& name) {
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(fixture_dir(), ec)) {
    if (entry.path().extension() != ".g6") continue;
    try {
      for (auto& ng : load_fixture_set(entry.path().stem().string(), entry.path().parent_path()))
        if (ng.name == name) return ng;
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

/// "-" reads stdin; then named primitives ("K1,3", "P5"), fixture names ("Skew-One"),
/// files, and finally inline graph6 or adjacency-list text.
inline std::vector<NamedGraph> resolve_input(const std::string& source, std::istream& in) {
  if (source == "-") {
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str(), "stdin");
  }
  Graph g;
  if (named::try_parse(source, g)) return {{source, g}};
  if (auto ng = find_fixture_graph(source)) return {*ng};
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream file(source);
    std::stringstream buf;
    buf << file.rdbuf();
    return parse_graph_text(buf.str(), std::filesystem::path(source).filename().string());
  }
  if (looks_like_graph6(source)) return {{source, graph6::decode(source)}};
  if (source.find_first_of("-,") != std::string::npos) return {{source, adjacency_list::decode(source)}};
  throw UsageError("cannot resolve graph input '" + source + "' (not a named graph, fixture, file or graph text)");
}

/// Short human name when g is a familiar primitive, else its graph6.
inline std::string describe(const Graph& g) {
  const int n = g.order();
  if (n > 0 && g.is_clique(g.vertices())) return "K" + std::to_string(n);
  if (!is_connected(g)) return graph6::encode(g);
  if (isomorphic(g, named::path(n))) return "P" + std::to_string(n);
  if (n >= 3 && isomorphic(g, named::cycle(n))) return "C" + std::to_string(n);
  if (n >= 4 && isomorphic(g, named::star(n - 1))) return "K1," + std::to_string(n - 1);
  return graph6::encode(g);
}

inline std::string describe(const BalSpec& s) {
  std::string out = "k=" + std::to_string(s.k) + " parts=[";
  for (std::size_t i = 0; i < s.parts.size(); ++i) out += (i ? "," : "") + describe(s.parts[i]);
  return out + "]";
}

/// Splits "K2,K1,3,P3" into parts, re-joining "K<a>,<b>" names.
inline std::vector<Graph> parse_parts(const std::string& list) {
  std::vector<std::string> tokens;
  std::stringstream ss(list);
  for (std::string t; std::getline(ss, t, ',');) {
    t = trim(t);
    static const std::regex k_prefix("K[0-9]+");
    static const std::regex digits("[0-9]+");
    if (!tokens.empty() && std::regex_match(t, digits) && std::regex_match(tokens.back(), k_prefix))
      tokens.back() += "," + t;
    else if (!t.empty())
      tokens.push_back(t);
  }
  std::vector<Graph> parts;
  for (const auto& t : tokens) {
    Graph g;
    if (named::try_parse(t, g)) {
      parts.push_back(g);
    } else if (looks_like_graph6(t)) {
      parts.push_back(graph6::decode(t));
    } else {
      throw UsageError("unknown part '" + t + "'");
    }
  }
  if (parts.empty()) throw UsageError("--parts is empty");
  return parts;
}

inline std::string members_text(VertexSet s) {
  if (s == 0) return "-";
  std::string out;
  for (int v : vset::members(s)) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

inline std::string join(const std::vector<int>& xs) {
  std::string out;
  for (int x : xs) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

inline void print_classification_text(std::ostream& out, const std::string& label, const Classification& c) {
  const Graph& g = c.graph;
  out << label << ": " << graph6::encode(g) << " (" << g.order() << " vertices, " << g.edge_count() << " edges)\n";
  if (!c.interval) {
    out << "  interval    no\n";
    out << "  witness     " << to_string(c.witness->kind) << " " << join(c.witness->vertices) << "\n";
    if (c.witness->kind == NonIntervalWitness::Kind::AsteroidalTriple)
      for (const auto& p : c.witness->paths) out << "    path      " << join(p) << "\n";
    return;
  }
  out << "  interval    yes" << (c.connected ? "" : " (disconnected)") << "\n";
  out << "  imp         " << c.imp << " (lower bound: " << to_string(c.certificate->lower_bound_kind) << ")\n";
  out << "  wt          " << c.wt << "\n";
  out << "  balanced    " << (c.balanced ? "yes" : "no") << "\n";
  out << "  critical    " << (c.critical ? "yes, p = " + std::to_string(c.p) : std::string("no")) << "\n";
  out << "  basepoints  " << members_text(c.basepoints) << "\n";
  out << "  types       " << join(c.types) << "\n";
  if (!c.deletion_imps.empty()) out << "  deletions   " << join(c.deletion_imps) << "\n";
  if (c.bal_form) {
    if (const auto* s = std::get_if<BalSpec>(&*c.bal_form))
      out << "  bal form    " << describe(*s) << "\n";
    else
      out << "  bal form    no (clause " << std::get<BalRejection>(*c.bal_form).clause << ")\n";
  }
  out << "  model\n";
  std::istringstream diagram(ascii_diagram(c.certificate->witness_model));
  for (std::string line; std::getline(diagram, line);) out << "    " << line << "\n";
}

class Runner {
 public:
  Runner(Streams io, RunConfig cfg) : io_(io), cfg_(std::move(cfg)) {}

  int classify_cmd(const std::vector<std::string>& inputs) {
    std::vector<NamedGraph> graphs;
    for (const auto& src : inputs) {
      auto got = resolve_input(src, io_.in);
      graphs.insert(graphs.end(), got.begin(), got.end());
    }
    auto results = parallel_map(graphs.size(), cfg_.jobs, [&](std::size_t i) { return classify(graphs[i].graph); });
    if (cfg_.format == "svg") {
      if (results.size() != 1) throw UsageError("--format svg takes exactly one graph");
      if (!results.front().interval) {
        io_.err << "implab: graph is not interval; no interval diagram exists\n";
        return kViolation;
      }
      write_output(svg_diagram(results.front().certificate->witness_model));
      return kOk;
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (cfg_.format == "json") {
        json j = results[i];
        j["name"] = graphs[i].name;
        out << j.dump() << "\n";
      } else {
        print_classification_text(out, graphs[i].name, results[i]);
      }
    }
    write_output(out.str());
    return kOk;
  }

  int mfisg_cmd(int p, int n_max, const std::string& fixtures) {
    if (p < 0 || n_max < 1) throw UsageError("--p must be >= 0 and --max-n >= 1");
    auto records = mfisg_enumerate(p, n_max, cfg_.jobs, cfg_.enumeration_guard());
    std::ostringstream out;
    for (const auto& r : records) {
      if (cfg_.format == "json")
        out << json(r).dump() << "\n";
      else if (cfg_.format == "graph6")
        out << graph6::encode(r.graph) << "\n";
      else
        out << "n=" << r.n << " imp=" << r.imp << " wt=" << r.wt << " " << std::left << std::setw(8)
            << to_string(r.classification) << " " << graph6::encode(r.graph) << "  " << adjacency_list::encode(r.graph)
            << "\n";
    }
    int code = kOk;
    if (!fixtures.empty()) {
      const auto set = load_fixture_set(fixtures);
      std::vector<Graph> found;
      for (const auto& r : records) found.push_back(r.graph);
      const auto d = diff_fixtures(found, set);
      if (cfg_.format == "json") {
        json j = d;
        j["schema"] = kSchema;
        j["fixtures"] = fixtures;
        j["records"] = records.size();
        out << j.dump() << "\n";
      } else {
        out << d.matched.size() << "/" << set.size() << " matched";
        if (!d.missing.empty()) {
          out << "; missing:";
          for (const auto& m : d.missing) out << " " << m;
        }
        if (!d.unmatched.empty()) {
          out << "; unmatched:";
          for (auto i : d.unmatched) out << " " << graph6::encode(records[i].graph);
        }
        out << "\n";
      }
      if (!d.exact()) code = kViolation;
    } else if (cfg_.format == "text") {
      out << records.size() << " graph" << (records.size() == 1 ? "" : "s") << "\n";
    }
    write_output(out.str());
    return code;
  }

  int bal_build_cmd(int k, const std::string& parts) {
    const BalSpec spec = normalized(BalSpec{k, parse_parts(parts)});
    const auto built = bal_build(spec);
    if (cfg_.format == "json") {
      write_output(json{{"schema", kSchema}, {"spec", spec}, {"graph", built.graph}, {"center", built.center},
                        {"predicted_imp", predicted_imp(spec)}}
                       .dump() +
                   "\n");
    } else {
      write_output(graph6::encode(built.graph) + "\n");
    }
    return kOk;
  }

  int bal_check_cmd(const std::string& input) {
    auto graphs = resolve_input(input, io_.in);
    bool all_bal = true;
    std::ostringstream out;
    for (const auto& ng : graphs) {
      const auto rec = is_bal_form(ng.graph);
      const auto* spec = std::get_if<BalSpec>(&rec);
      all_bal = all_bal && spec;
      if (cfg_.format == "json") {
        json j = rec;
        j["schema"] = kSchema;
        j["name"] = ng.name;
        out << j.dump() << "\n";
      } else if (spec) {
        out << ng.name << ": " << describe(*spec) << "\n";
      } else {
        const auto& rej = std::get<BalRejection>(rec);
        out << ng.name << ": not-bal (clause " << rej.clause << ": " << rej.reason << ")\n";
      }
    }
    write_output(out.str());
    return all_bal ? kOk : kViolation;
  }

  int bal_verify_cmd(int k, const std::string& parts) {
    const BalSpec spec = normalized(BalSpec{k, parse_parts(parts)});
    const auto c = verify_bal_spec(spec, cfg_.bal_guard());
    if (cfg_.format == "json") {
      write_output(json{{"schema", kSchema}, {"spec", spec}, {"result", c}}.dump() + "\n");
    } else if (c.passed()) {
      write_output("balanced, " + std::to_string(predicted_imp(spec)) + "-critical\n");
    } else {
      write_output("FAILED: " + c.detail + "\n");
    }
    return c.passed() ? kOk : kViolation;
  }

  int verify_cmd(int n_max) {
    if (n_max < 1) throw UsageError("--max-n must be >= 1");
    const auto s = verify_theorems(n_max, cfg_.jobs, cfg_.enumeration_guard());
    std::ostringstream out;
    if (cfg_.format == "json") {
      json j{{"schema", kSchema}, {"max_n", n_max}, {"graphs", s.graphs}, {"checks", json::object()}};
      for (const auto& name : theorem_checks()) {
        const auto& t = s.tallies.at(name);
        json f = json::array();
        for (const auto& [g, c] : t.failures) f.push_back({{"graph6", graph6::encode(g)}, {"result", c}});
        j["checks"][name] = {{"pass", t.pass}, {"fail", t.fail}, {"vacuous", t.vacuous}, {"failures", f}};
      }
      out << j.dump() << "\n";
    } else {
      out << "connected interval graphs with n <= " << n_max << ": " << s.graphs << "\n";
      out << std::left << std::setw(24) << "check" << std::right << std::setw(8) << "pass" << std::setw(8) << "fail"
          << std::setw(9) << "vacuous" << "\n";
      for (const auto& name : theorem_checks()) {
        const auto& t = s.tallies.at(name);
        out << std::left << std::setw(24) << name << std::right << std::setw(8) << t.pass << std::setw(8) << t.fail
            << std::setw(9) << t.vacuous << "\n";
        for (const auto& [g, c] : t.failures) out << "  counterexample " << graph6::encode(g) << ": " << c.detail << "\n";
      }
      out << (s.failures() == 0 ? "all checks passed or vacuous\n" : "FAILURES: " + std::to_string(s.failures()) + "\n");
    }
    write_output(out.str());
    return s.failures() == 0 ? kOk : kViolation;
  }

 private:
  void write_output(const std::string& text) {
    if (cfg_.output.empty()) {
      io_.out << text;
      return;
    }
    std::ofstream file(cfg_.output);
    if (!file) throw UsageError("cannot write " + cfg_.output);
    file << text;
  }

  Streams io_;
  RunConfig cfg_;
};

inline void report_error(const Streams& io, const RunConfig& cfg, const std::string& kind, const std::string& message) {
  if (cfg.format == "json")
    io.err << json{{"schema", kSchema}, {"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
  else
    io.err << "implab: " << kind << ": " << message << "\n";
}

/// Entry point shared by the binary and the tests.
inline int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Impropriety of interval graphs: recognition, exact impropriety, balance, BAL graphs and "
               "minimal forbidden subgraph enumeration."};
  app.name("implab");
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(std::move(formats)));
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));
    sub->add_flag("--guard-override", cfg.guard_override, "Lift size guards (enumeration to 10 vertices)");
    sub->add_option("-o,--output", cfg.output, "Write output to a file instead of stdout");
  };

  std::vector<std::string> inputs;
  auto* classify_sub = app.add_subcommand("classify", "Classify graphs (named, fixture name, file, '-', graph6 or edge list)");
  classify_sub->add_option("input", inputs, "Graph sources")->required();
  common(classify_sub, {"text", "json", "svg"});

  int p = 0;
  int n_max = 0;
  std::string fixtures;
  auto* mfisg_sub = app.add_subcommand("mfisg", "Enumerate minimal forbidden interval subgraphs for imp <= p");
  mfisg_sub->add_option("--p", p, "Impropriety bound p")->required();
  mfisg_sub->add_option("--max-n", n_max, "Largest order to enumerate")->required();
  mfisg_sub->add_option("--fixtures", fixtures, "Compare against a fixture set (e.g. fig1)");
  common(mfisg_sub, {"text", "json", "graph6"});

  auto* bal_sub = app.add_subcommand("bal", "Build, recognize and verify BAL graphs");
  bal_sub->require_subcommand(1);
  int k = 0;
  std::string parts;
  std::string bal_input;
  auto* build_sub = bal_sub->add_subcommand("build", "Build BAL_k of the given parts");
  build_sub->add_option("--k", k, "Number of pendant paths")->required()->check(CLI::Range(0, 2));
  build_sub->add_option("--parts", parts, "Comma-separated parts: K2, P3, K1,3 or graph6")->required();
  common(build_sub, {"text", "json"});
  auto* check_sub = bal_sub->add_subcommand("check", "Recover the BAL spec of a graph");
  check_sub->add_option("input", bal_input, "Graph source")->required();
  common(check_sub, {"text", "json"});
  auto* verify_bal_sub = bal_sub->add_subcommand("verify", "Build and confirm balanced and critical");
  verify_bal_sub->add_option("--k", k, "Number of pendant paths")->required()->check(CLI::Range(0, 2));
  verify_bal_sub->add_option("--parts", parts, "Comma-separated parts")->required();
  common(verify_bal_sub, {"text", "json"});

  auto* verify_sub = app.add_subcommand("verify-theorems", "Run every structural check over all small interval graphs");
  verify_sub->add_option("--max-n", n_max, "Largest order")->required();
  common(verify_sub, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    const auto* failed = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    io.err << "implab: " << e.what() << "\n" << failed->help();
    return kUsage;
  }

  Runner runner(io, cfg);
  try {
    if (classify_sub->parsed()) return runner.classify_cmd(inputs);
    if (mfisg_sub->parsed()) return runner.mfisg_cmd(p, n_max, fixtures);
    if (build_sub->parsed()) return runner.bal_build_cmd(k, parts);
    if (check_sub->parsed()) return runner.bal_check_cmd(bal_input);
    if (verify_bal_sub->parsed()) return runner.bal_verify_cmd(k, parts);
    if (verify_sub->parsed()) return runner.verify_cmd(n_max);
  } catch (const ParseError& e) {
    report_error(io, cfg, "parse-error", e.what());
    return kUsage;
  } catch (const GuardError& e) {
    report_error(io, cfg, "guard", e.what());
    return kUsage;
  } catch (const SpecError& e) {
    report_error(io, cfg, "spec-error", e.what());
    return kUsage;
  } catch (const UsageError& e) {
    report_error(io, cfg, "usage", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    report_error(io, cfg, "invalid-input", e.what());
    return kUsage;
  } catch (const std::runtime_error& e) {
    report_error(io, cfg, "error", e.what());
    return kUsage;
  }
  return kUsage;
}

}  // namespace implab::cli
