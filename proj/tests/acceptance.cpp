// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                     exit 1 if any criterion fails
//   acceptance --known-failure N   criterion N may fail, but only with its recorded
//                                  diagnosis; every other criterion must pass

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "implab/cli.hpp"
#include "test_support.hpp"

using namespace implab;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
  bool matches_known_diagnosis = false;
};

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "implab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), {in, out, err});
  return {code, out.str() + err.str()};
}

std::vector<Graph> graph6_lines(const std::string& text) { return graph6::decode_stream(text); }

Verdict proper_class() {
  auto r = run_cli({"mfisg", "--p", "0", "--max-n", "6", "--format", "graph6"});
  auto gs = graph6_lines(r.out);
  const bool ok = r.code == 0 && gs.size() == 1 && isomorphic(gs[0], named::star(3));
  return {ok, std::to_string(gs.size()) + " graph(s)" + (ok ? ", the claw" : "")};
}

Verdict drawn_figure() {
  auto r = run_cli({"mfisg", "--p", "1", "--max-n", "7", "--format", "graph6", "--jobs", "2"});
  auto gs = graph6_lines(r.out);
  const auto fig = load_fixture_set("fig1");
  const auto d = diff_fixtures(gs, fig);
  std::ostringstream detail;
  detail << gs.size() << " graphs, " << d.matched.size() << "/" << fig.size() << " drawn graphs matched";
  if (!d.missing.empty()) {
    detail << "; not found:";
    for (const auto& m : d.missing) detail << " " << m;
  }
  if (!d.unmatched.empty()) {
    detail << "; not drawn:";
    for (auto i : d.unmatched) detail << " " << graph6::encode(gs[i]);
  }

  // Recorded diagnosis: the drawn Connected-Two has Skew-Four as a one-vertex deletion, so
  // it is not minimal, and two minimal graphs are absent from the drawing.
  bool diagnosis = gs.size() == 11 && d.matched.size() == 9 && d.missing == std::vector<std::string>{"Connected-Two"} &&
                   d.unmatched.size() == 2;
  if (diagnosis) {
    const Graph* two = nullptr;
    const Graph* skew_four = nullptr;
    for (const auto& ng : fig) {
      if (ng.name == "Connected-Two") two = &ng.graph;
      if (ng.name == "Skew-Four") skew_four = &ng.graph;
    }
    bool contains = false;
    for (int v = 0; two && skew_four && v < two->order(); ++v)
      contains = contains || isomorphic(delete_vertex(*two, v), *skew_four);
    diagnosis = contains;
    for (auto i : d.unmatched) diagnosis = diagnosis && is_mfisg(gs[i], 1);
    if (contains) detail << "; Connected-Two minus one vertex is Skew-Four";
  }

  // Stretch, informational: look for minimal graphs on eight vertices.
  const auto start = std::chrono::steady_clock::now();
  std::size_t at_eight = 0;
  for (const auto& rec : mfisg_enumerate(1, 8, 2))
    if (rec.n == 8) ++at_eight;
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail << "; n = 8 adds " << at_eight << " (" << static_cast<int>(secs) << " s)";
  return {r.code == 0 && d.exact() && gs.size() == fig.size(), detail.str(), diagnosis};
}

Verdict weight_tables() {
  struct Row {
    int exterior;
    std::vector<int> orders;
    int weight;
  };
  const std::vector<Row> rows{
      {2, {5, 5}, 10},         {2, {5, 2}, 7}, {1, {5, 5}, 5}, {1, {5, 2}, 2}, {0, {5, 5, 5, 4, 2}, 11},
      {0, {5, 4, 2}, 2},       {2, {5, 5, 5, 4, 2}, 21},       {2, {5, 2}, 7}, {2, {}, 0},
      {1, {5, 5, 5}, 10},      {1, {5, 2}, 2},                 {0, {5, 5, 5, 4, 2}, 11},
      {0, {5, 4, 2}, 2},       {0, {5, 2}, 0},                 {0, {4}, 0}};
  std::string got;
  bool ok = true;
  for (const auto& r : rows) {
    const int w = weight_of_vertex(testkit::profile_graph(r.exterior, r.orders), 0);
    ok = ok && w == r.weight;
    got += (got.empty() ? "" : " ") + std::to_string(w);
  }
  return {ok, "weights " + got};
}

Verdict star_family() {
  bool ok = true;
  std::string detail;
  for (int p = 0; p <= 3; ++p) {
    const auto star = named::star(p + 3);
    const int imp = impropriety(star).p;
    int worst = 0;
    for (int v = 0; v < star.order(); ++v) worst = std::max(worst, impropriety(delete_vertex(star, v)).p);
    ok = ok && imp == p + 1 && worst <= p;
    detail += (detail.empty() ? "" : ", ") + std::string("p=") + std::to_string(p) + ": imp " + std::to_string(imp) +
              ", deletions <= " + std::to_string(worst);
  }
  return {ok, detail};
}

Verdict oracle_equivalence() {
  int graphs = 0;
  int mismatches = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : enumerate_interval_graphs(n)) {
      ++graphs;
      if (impropriety(g).p != impropriety_bruteforce(g)) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(graphs) + " graphs, " + std::to_string(mismatches) + " mismatches"};
}

Verdict weight_bound_sweep() {
  const auto catalog = interval_catalog(7);
  int violations = 0;
  for (const auto& g : catalog)
    if (impropriety(g).p < weight_of_graph(g)) ++violations;
  return {violations == 0, std::to_string(catalog.size()) + " graphs, " + std::to_string(violations) + " violations"};
}

Verdict theorem_harness() {
  auto r = run_cli({"verify-theorems", "--max-n", "7", "--format", "json", "--jobs", "2"});
  auto j = json::parse(r.out);
  std::string detail = std::to_string(j["graphs"].get<int>()) + " graphs;";
  int fails = 0;
  for (const auto& name : theorem_checks()) {
    const auto& c = j["checks"][name];
    fails += c["fail"].get<int>();
    detail += " " + name + " " + std::to_string(c["pass"].get<int>()) + "/" + std::to_string(c["fail"].get<int>()) +
              "/" + std::to_string(c["vacuous"].get<int>());
  }
  detail += " (pass/fail/vacuous)";
  return {r.code == 0 && fails == 0, detail};
}

Verdict bal_forward() {
  std::mt19937 rng(4104);
  testkit::PartPool pool(5);
  int failures = 0;
  std::set<int> orders;
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = testkit::random_valid_spec(rng, pool, 9);
    orders.insert(spec.order());
    if (!verify_bal_spec(spec).passed()) ++failures;
  }
  return {failures == 0, "200 specs, orders " + std::to_string(*orders.begin()) + ".." +
                             std::to_string(*orders.rbegin()) + ", " + std::to_string(failures) + " failures"};
}

}  // namespace

int main(int argc, char** argv) {
  int known_failure = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--known-failure") == 0 && i + 1 < argc) {
      known_failure = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--known-failure N]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"imp <= 0 forbids only the claw (n <= 6)", proper_class},
      {"imp <= 1 minimal forbidden graphs equal the drawn ten (n <= 7)", drawn_figure},
      {"weight tables reproduce all fifteen values", weight_tables},
      {"K1,p+3 is minimal forbidden for imp <= p, p = 0..3", star_family},
      {"clique-order engine equals endpoint brute force (n <= 6)", oracle_equivalence},
      {"imp >= wt on every connected interval graph (n <= 7)", weight_bound_sweep},
      {"structural checks report zero failures (n <= 7)", theorem_harness},
      {"200 random BAL specs build balanced critical graphs", bal_forward},
  };

  bool gate = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << id << "] " << criteria[i].first << " (" << std::fixed
              << std::setprecision(2) << secs << " s): " << v.detail;
    if (!v.pass && id == known_failure)
      std::cout << (v.matches_known_diagnosis ? " [known failure, diagnosis confirmed]"
                                              : " [known failure, diagnosis NOT confirmed]");
    std::cout << "\n" << std::flush;
    if (!v.pass && !(id == known_failure && v.matches_known_diagnosis)) gate = false;
  }

  const auto g = testkit::bridged_clusters();
  const int before = impropriety(g).p;
  int after = before;
  int at = -1;
  for (int v = 0; v < g.order(); ++v) {
    const int q = impropriety(delete_vertex(g, v)).p;
    if (q < after) {
      after = q;
      at = v;
    }
  }
  std::cout << "INFO instability: " << g.order() << "-vertex bridged clusters have imp " << before
            << "; deleting vertex " << at << " leaves " << after << (before - after >= 3 ? " (drop >= 3)" : "")
            << "; bridge vertex 15 alone leaves " << impropriety(delete_vertex(g, 15)).p << "\n";
  return gate ? 0 : 1;
}
